#include "obstrukt/steenrod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "obstrukt/errors.hpp"

namespace obk {

bool binom2(long long m, long long n) {
    if (n < 0 || m < n) return false;
    return (n & (m - n)) == 0;
}

SqWord normalize_word(const std::vector<long long>& raw) {
    SqWord w;
    w.reserve(raw.size());
    for (long long v : raw) {
        if (v < 0)
            throw rejection_error("malformed word: negative exponent " + std::to_string(v));
        if (v > 0) w.push_back(static_cast<unsigned>(v)); // Sq^0 is the identity
    }
    return w;
}

bool is_admissible(const SqWord& w) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] < 2 * w[j + 1]) return false;
    return true;
}

unsigned dimension(const SqWord& w) {
    unsigned d = 0;
    for (unsigned i : w) d += i;
    return d;
}

unsigned excess(const SqWord& w) {
    return excess_and_dimension(w).first;
}

std::pair<unsigned, unsigned> excess_and_dimension(const SqWord& w) {
    if (!is_admissible(w))
        throw rejection_error("excess is defined on admissible words only");
    unsigned d = dimension(w);
    if (w.empty()) return {0u, 0u};
    return {2 * w[0] - d, d}; // equals the telescoped sum of i_j - 2 i_{j+1}
}

void toggle_term(std::vector<SqWord>& terms, const SqWord& w) {
    auto it = std::lower_bound(terms.begin(), terms.end(), w);
    if (it != terms.end() && *it == w)
        terms.erase(it);
    else
        terms.insert(it, w);
}

namespace {

std::map<SqWord, SteenrodElement> adem_memo;
std::mutex adem_memo_mutex;

bool memo_lookup(const SqWord& w, SteenrodElement& out) {
    std::lock_guard<std::mutex> lock(adem_memo_mutex);
    auto it = adem_memo.find(w);
    if (it == adem_memo.end()) return false;
    out = it->second;
    return true;
}

void memo_store(const SqWord& w, const SteenrodElement& e) {
    std::lock_guard<std::mutex> lock(adem_memo_mutex);
    adem_memo.emplace(w, e);
}

SteenrodElement reduce_rec(const SqWord& w, unsigned depth, unsigned limit) {
    if (depth > limit)
        throw limit_error("Adem rewriting exceeded the depth guard; implementation bug");

    SteenrodElement cached;
    if (memo_lookup(w, cached)) return cached;

    std::size_t p = 0;
    while (p + 1 < w.size() && w[p] >= 2 * w[p + 1]) ++p;
    if (p + 1 >= w.size()) { // admissible
        SteenrodElement r{{w}};
        memo_store(w, r);
        return r;
    }

    const unsigned a = w[p], b = w[p + 1];
    SteenrodElement acc;
    for (unsigned c = 0; 2 * c <= a; ++c) {
        if (!binom2(static_cast<long long>(b) - c - 1, static_cast<long long>(a) - 2 * c))
            continue;
        SqWord next(w.begin(), w.begin() + p);
        next.push_back(a + b - c);
        if (c > 0) next.push_back(c);
        next.insert(next.end(), w.begin() + p + 2, w.end());
        SteenrodElement part = reduce_rec(next, depth + 1, limit);
        for (const SqWord& t : part.terms) toggle_term(acc.terms, t);
    }
    memo_store(w, acc);
    return acc;
}

} // namespace

SteenrodElement adem_reduce(const SqWord& w, unsigned depth_factor) {
    for (unsigned i : w)
        if (i == 0) throw rejection_error("adem_reduce expects a normalized word (no Sq^0)");
    unsigned limit = depth_factor * std::max(1u, dimension(w));
    return reduce_rec(w, 0, limit);
}

SteenrodElement add(const SteenrodElement& a, const SteenrodElement& b) {
    SteenrodElement r = a;
    for (const SqWord& t : b.terms) toggle_term(r.terms, t);
    return r;
}

SteenrodElement product(const SteenrodElement& a, const SteenrodElement& b) {
    SteenrodElement r;
    for (const SqWord& wa : a.terms)
        for (const SqWord& wb : b.terms) {
            SqWord cat = wa;
            cat.insert(cat.end(), wb.begin(), wb.end());
            SteenrodElement red = adem_reduce(cat);
            for (const SqWord& t : red.terms) toggle_term(r.terms, t);
        }
    return r;
}

namespace {

void extend_admissible(const SqWord& w, unsigned max_dim,
                       std::optional<unsigned> excess_below, std::vector<SqWord>& out) {
    unsigned d = dimension(w);
    unsigned lo = w.empty() ? 1 : 2 * w[0];
    unsigned hi = max_dim >= d ? max_dim - d : 0;
    // prepending p gives excess p - d, and excess never decreases under
    // further prepends, so the bound prunes the whole branch
    if (excess_below) hi = std::min(hi, d + *excess_below - 1);
    for (unsigned p = lo; p <= hi; ++p) {
        SqWord nw;
        nw.reserve(w.size() + 1);
        nw.push_back(p);
        nw.insert(nw.end(), w.begin(), w.end());
        out.push_back(nw);
        extend_admissible(nw, max_dim, excess_below, out);
    }
}

} // namespace

std::vector<SqWord> admissible_words(unsigned max_dim, std::optional<unsigned> excess_below) {
    std::vector<SqWord> all;
    if (excess_below && *excess_below == 0) return all; // no word has negative excess
    all.push_back({});
    extend_admissible({}, max_dim, excess_below, all);
    std::sort(all.begin(), all.end(), [](const SqWord& x, const SqWord& y) {
        unsigned dx = dimension(x), dy = dimension(y);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    return all;
}

}
