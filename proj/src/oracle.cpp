#include "obstrukt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "obstrukt/errors.hpp"

namespace obk {

namespace {

void check_vars(unsigned m) {
    if (m == 0 || m > oracle_max_vars)
        throw rejection_error("oracle variable count must be in 1.." +
                              std::to_string(oracle_max_vars));
}

// sort + cancel equal pairs (mod 2)
void canonical(std::vector<OMono>& ms) {
    std::sort(ms.begin(), ms.end());
    std::vector<OMono> out;
    out.reserve(ms.size());
    for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if ((j - i) % 2) out.push_back(ms[i]);
        i = j;
    }
    ms.swap(out);
}

unsigned mono_degree(const OMono& m) {
    unsigned d = 0;
    for (std::uint8_t e : m.e) d += e;
    return d;
}

} // namespace

OPoly zero_poly(unsigned m) {
    check_vars(m);
    return OPoly{m, {}};
}

OPoly one_poly(unsigned m) {
    check_vars(m);
    return OPoly{m, {OMono{}}};
}

OPoly var_monomial(unsigned m, const std::vector<unsigned>& exps) {
    check_vars(m);
    if (exps.size() > m) throw rejection_error("monomial has more exponents than variables");
    OMono mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > 255) throw rejection_error("oracle exponent too large");
        mono.e[i] = static_cast<std::uint8_t>(exps[i]);
    }
    return OPoly{m, {mono}};
}

OPoly product_of_all_vars(unsigned m) {
    check_vars(m);
    OMono mono;
    for (unsigned i = 0; i < m; ++i) mono.e[i] = 1;
    return OPoly{m, {mono}};
}

OPoly elementary_symmetric(unsigned j, unsigned m) {
    check_vars(m);
    if (j > m) return zero_poly(m);
    OPoly p{m, {}};
    // all 0/1 exponent vectors with j ones
    std::vector<unsigned> idx(j);
    std::iota(idx.begin(), idx.end(), 0u);
    while (true) {
        OMono mono;
        for (unsigned v : idx) mono.e[v] = 1;
        p.monos.push_back(mono);
        if (j == 0) break;
        // next combination
        long long t = static_cast<long long>(j) - 1;
        while (t >= 0 && idx[t] == m - j + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (std::size_t s = t + 1; s < j; ++s) idx[s] = idx[s - 1] + 1;
    }
    canonical(p.monos);
    return p;
}

unsigned poly_degree(const OPoly& p) {
    unsigned d = 0;
    for (const OMono& m : p.monos) d = std::max(d, mono_degree(m));
    return d;
}

OPoly poly_add(const OPoly& a, const OPoly& b) {
    if (a.vars != b.vars) throw rejection_error("oracle polynomials over different variable counts");
    OPoly r{a.vars, a.monos};
    r.monos.insert(r.monos.end(), b.monos.begin(), b.monos.end());
    canonical(r.monos);
    return r;
}

OPoly poly_mul(const OPoly& a, const OPoly& b) {
    if (a.vars != b.vars) throw rejection_error("oracle polynomials over different variable counts");
    OPoly r{a.vars, {}};
    r.monos.reserve(a.monos.size() * b.monos.size());
    for (const OMono& x : a.monos)
        for (const OMono& y : b.monos) {
            OMono z;
            for (unsigned v = 0; v < a.vars; ++v)
                z.e[v] = static_cast<std::uint8_t>(x.e[v] + y.e[v]);
            r.monos.push_back(z);
        }
    canonical(r.monos);
    return r;
}

namespace {

// Distribute Sq^a over one monomial: per variable Sq^j(t^e) = C(e,j) t^{e+j},
// C(e,j) odd iff j is a binary submask of e.
void distribute(const OMono& in, unsigned vars, unsigned v, unsigned rem,
                const std::vector<unsigned>& suffix, OMono& cur, std::vector<OMono>& out) {
    if (rem == 0) {
        OMono done = cur;
        for (unsigned w = v; w < vars; ++w) done.e[w] = in.e[w];
        out.push_back(done);
        return;
    }
    if (v >= vars || suffix[v] < rem) return;
    const unsigned e = in.e[v];
    unsigned jmax = std::min(rem, e);
    for (unsigned j = 0; j <= jmax; ++j) {
        if ((j & (e - j)) != 0) continue; // even binomial
        cur.e[v] = static_cast<std::uint8_t>(e + j);
        distribute(in, vars, v + 1, rem - j, suffix, cur, out);
    }
    cur.e[v] = static_cast<std::uint8_t>(e);
}

} // namespace

OPoly oracle_sq(unsigned a, const OPoly& p) {
    if (a == 0) return p;
    std::vector<OMono> acc;
    for (const OMono& m : p.monos) {
        std::vector<unsigned> suffix(p.vars + 1, 0);
        for (unsigned v = p.vars; v-- > 0;) suffix[v] = suffix[v + 1] + m.e[v];
        if (suffix[0] < a) continue; // Sq^a vanishes above the degree
        OMono cur = m;
        distribute(m, p.vars, 0, a, suffix, cur, acc);
    }
    canonical(acc);
    return OPoly{p.vars, std::move(acc)};
}

OPoly word_action(const SqWord& w, OPoly p) {
    for (std::size_t i = w.size(); i-- > 0;) p = oracle_sq(w[i], p);
    return p;
}

OPoly element_action(const SteenrodElement& el, const OPoly& p) {
    OPoly acc = zero_poly(p.vars);
    for (const SqWord& w : el.terms) acc = poly_add(acc, word_action(w, p));
    return acc;
}

std::vector<EMono> to_elementary(OPoly p) {
    const unsigned m = p.vars;
    std::vector<EMono> result;
    while (!p.is_zero()) {
        const OMono lead = p.monos.back(); // lex-greatest
        // symmetric polynomials have weakly decreasing leading exponents
        for (unsigned v = 0; v + 1 < m; ++v)
            if (lead.e[v] < lead.e[v + 1])
                throw verify_error("to_elementary: polynomial is not symmetric");
        EMono em;
        OPoly prod = one_poly(m);
        for (unsigned v = 0; v < m; ++v) {
            unsigned next = (v + 1 < m) ? lead.e[v + 1] : 0u;
            unsigned f = lead.e[v] - next;
            if (f == 0) continue;
            em.push_back({v + 1, f});
            OPoly ev = elementary_symmetric(v + 1, m);
            for (unsigned t = 0; t < f; ++t) prod = poly_mul(prod, ev);
        }
        result.push_back(em);
        p = poly_add(p, prod); // subtract = add over F2
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool oracle_equivalent(const SqWord& w, const SteenrodElement& el, const OPoly& input) {
    unsigned d = poly_degree(input);
    if (input.vars < d)
        throw rejection_error(
            "oracle faithfulness requires at least as many variables as the input degree (" +
            std::to_string(input.vars) + " < " + std::to_string(d) + ")");
    return word_action(w, input) == element_action(el, input);
}

}
