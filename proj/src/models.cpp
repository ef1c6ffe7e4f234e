#include "obstrukt/models.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "obstrukt/errors.hpp"
#include "obstrukt/text.hpp"

namespace obk {

/*************************** K(Z2,k) model ***************************/

std::vector<SerreGenerator> serre_generators(unsigned k, unsigned D) {
    if (k < 1) throw rejection_error("k must be at least 1");
    if (D < k) throw rejection_error("truncation " + std::to_string(D) +
                                     " lies below the fundamental class degree " + std::to_string(k));
    std::vector<SerreGenerator> out;
    for (const SqWord& J : admissible_words(D - k, k)) {
        SerreGenerator g;
        g.word = J;
        g.degree = k + dimension(J);
        g.name = J.empty() ? "i_" + std::to_string(k)
                           : word_brackets(J) + "(i_" + std::to_string(k) + ")";
        out.push_back(std::move(g));
    }
    return out; // admissible_words is (dimension, lex) sorted, so degrees ascend
}

namespace {

AlgebraElement raw_square(const AlgebraElement& x, const std::vector<unsigned>& gen_degrees,
                          unsigned D) {
    AlgebraElement r;
    r.truncated = x.truncated;
    for (const Monomial& m : x.monos) {
        Monomial s = m;
        unsigned d = 0;
        for (auto& [g, e] : s.factors) {
            e *= 2;
            d += gen_degrees[g] * e;
        }
        if (d > D) {
            r.truncated = true;
            continue;
        }
        r.monos.push_back(std::move(s));
    }
    canonicalize(r.monos);
    return r;
}

// Value of an admissible word on iota_k: generator below excess k, square of
// the tail's value at excess k, zero above.
AlgebraElement admissible_value(const SqWord& I, unsigned k, unsigned D,
                                const std::map<SqWord, std::uint32_t>& index_of,
                                const std::vector<unsigned>& gen_degrees) {
    auto [e, d] = excess_and_dimension(I);
    if (e > k) return zero_element();
    if (e < k) {
        if (k + d > D) return AlgebraElement{{}, true};
        return generator_element(index_of.at(I));
    }
    SqWord tail(I.begin() + 1, I.end());
    return raw_square(admissible_value(tail, k, D, index_of, gen_degrees), gen_degrees, D);
}

std::map<SqWord, std::uint32_t> word_index(const std::vector<SerreGenerator>& serre) {
    std::map<SqWord, std::uint32_t> m;
    for (std::size_t i = 0; i < serre.size(); ++i) m[serre[i].word] = static_cast<std::uint32_t>(i);
    return m;
}

} // namespace

EmModel em_algebra(unsigned k, unsigned D) {
    std::vector<SerreGenerator> serre = serre_generators(k, D);
    std::map<SqWord, std::uint32_t> index_of = word_index(serre);
    std::vector<unsigned> gen_degrees;
    for (const SerreGenerator& g : serre) gen_degrees.push_back(g.degree);

    std::vector<GeneratorSpec> gens;
    for (const SerreGenerator& g : serre) {
        GeneratorSpec spec;
        spec.name = g.name;
        spec.degree = g.degree;
        spec.sq.resize(g.degree);
        for (unsigned a = 1; a <= g.degree; ++a) {
            if (g.degree + a > D) {
                spec.sq[a - 1] = AlgebraElement{{}, true};
                continue;
            }
            SqWord w;
            w.push_back(a);
            w.insert(w.end(), g.word.begin(), g.word.end());
            AlgebraElement img;
            for (const SqWord& I : adem_reduce(w).terms)
                img = element_add(img, admissible_value(I, k, D, index_of, gen_degrees));
            spec.sq[a - 1] = std::move(img);
        }
        gens.push_back(std::move(spec));
    }
    return EmModel{k, std::move(serre), PresentedAlgebra(std::move(gens), D)};
}

AlgebraElement EmModel::admissible_to_element(const SqWord& I) const {
    std::map<SqWord, std::uint32_t> index_of = word_index(serre);
    std::vector<unsigned> gen_degrees;
    for (const SerreGenerator& g : serre) gen_degrees.push_back(g.degree);
    return admissible_value(I, k, algebra.truncation(), index_of, gen_degrees);
}

AlgebraElement EmModel::straighten(unsigned a, const SqWord& J) const {
    if (a == 0) return admissible_to_element(J);
    SqWord w;
    w.push_back(a);
    w.insert(w.end(), J.begin(), J.end());
    AlgebraElement img;
    for (const SqWord& I : adem_reduce(w).terms) img = element_add(img, admissible_to_element(I));
    return img;
}

AlgebraElement EmModel::word_action_on_iota(const SqWord& w) const {
    int iota = -1;
    for (std::size_t i = 0; i < serre.size(); ++i)
        if (serre[i].word.empty()) iota = static_cast<int>(i);
    if (iota < 0) throw verify_error("model has no fundamental class");
    AlgebraElement x = generator_element(static_cast<std::uint32_t>(iota));
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = algebra.sq(*it, x);
    return x;
}

/*************************** BO(k) and MO(k) ***************************/

AlgebraElement wu_sq(unsigned i, unsigned j, unsigned k) {
    if (j < 1 || j > k) throw rejection_error("wu_sq: w_" + std::to_string(j) +
                                              " is not a generator for k = " + std::to_string(k));
    if (i == 0) return generator_element(j - 1);
    if (i > j) return zero_element();
    if (i == j) return monomial_element(Monomial{{{j - 1, 2}}});
    AlgebraElement r;
    for (unsigned t = 0; t <= i; ++t) {
        if (j + t > k) break; // w_{j+t} = 0 beyond the rank
        if (!binom2(static_cast<long long>(j - i) + t - 1, t)) continue;
        Monomial m;
        if (t < i) m.factors.push_back({i - t - 1, 1}); // w_{i-t}; at t = i it is w_0 = 1
        m.factors.push_back({j + t - 1, 1});
        r.monos.push_back(std::move(m));
    }
    canonicalize(r.monos);
    return r;
}

PresentedAlgebra bo_algebra(unsigned k, unsigned D) {
    if (k < 1) throw rejection_error("k must be at least 1");
    std::vector<GeneratorSpec> gens;
    for (unsigned m = 1; m <= k; ++m) {
        GeneratorSpec spec;
        spec.name = "w" + std::to_string(m);
        spec.degree = m;
        spec.sq.resize(m);
        for (unsigned a = 1; a <= m; ++a)
            spec.sq[a - 1] = (m + a > D) ? AlgebraElement{{}, true} : wu_sq(a, m, k);
        gens.push_back(std::move(spec));
    }
    return PresentedAlgebra(std::move(gens), D);
}

ThomElement thom_sq(const SqWord& I, unsigned k, const PresentedAlgebra& bo) {
    ThomElement t{one_element(), k};
    for (auto it = I.rbegin(); it != I.rend(); ++it) {
        unsigned a = *it;
        AlgebraElement next;
        for (unsigned j = 0; j <= std::min(a, k); ++j) {
            AlgebraElement part = bo.sq(a - j, t.coeff);
            if (j > 0) part = bo.multiply(part, generator_element(j - 1));
            next = element_add(next, part);
        }
        t.coeff = std::move(next);
    }
    return t;
}

MoCheckReport mo_vanishing_check(unsigned k, unsigned dim_bound) {
    if (k < 2) throw rejection_error("mo-check requires k >= 2");
    MoCheckReport report;
    report.k = k;
    report.dim_bound = dim_bound;
    if (dim_bound < 2 * k + 1) return report; // no admissible word of excess k fits
    unsigned max_tail = (dim_bound - 2 * k - 1) / 2;
    PresentedAlgebra bo = bo_algebra(k, dim_bound - k);
    // admissible I of excess k are exactly (|J|+k, J) with J admissible of excess <= k
    for (const SqWord& J : admissible_words(max_tail, k + 1)) {
        SqWord I;
        I.push_back(dimension(J) + k);
        I.insert(I.end(), J.begin(), J.end());
        if (!is_admissible(I) || excess(I) != k)
            throw verify_error("head-word construction produced a non-qualifying word");
        AlgebraElement P = thom_sq(I, k, bo).coeff;
        AlgebraElement Q = thom_sq(J, k, bo).coeff;
        MoCheckEntry entry;
        entry.head = I;
        entry.tail = J;
        entry.class_degree = k + dimension(I);
        entry.sq1_vanishes =
            element_add(bo.sq(1, P), bo.multiply(P, generator_element(0))).is_zero();
        entry.square_identity = P == bo.multiply(bo.square(Q), generator_element(k - 1));
        report.all_passed = report.all_passed && entry.sq1_vanishes && entry.square_identity;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}
