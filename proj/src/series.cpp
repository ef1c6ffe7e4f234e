#include "obstrukt/series.hpp"

#include <algorithm>

#include "obstrukt/errors.hpp"
#include "obstrukt/models.hpp"

namespace obk {

PoincareSeries poly_series(const std::vector<unsigned>& generator_degrees, unsigned D) {
    PoincareSeries s;
    s.c.assign(D + 1, BigInt(0));
    s.c[0] = 1;
    for (unsigned d : generator_degrees) {
        if (d < 1) throw rejection_error("generator degrees must be positive");
        if (d > D) continue; // contributes nothing below the cap
        // multiply by 1/(1 - t^d): prefix-sum with stride d
        for (unsigned n = d; n <= D; ++n) s.c[n] += s.c[n - d];
    }
    return s;
}

PoincareSeries graded_free_series(const std::vector<unsigned>& polynomial_degrees,
                                  const std::vector<unsigned>& exterior_degrees, unsigned D) {
    PoincareSeries s = poly_series(polynomial_degrees, D);
    for (unsigned d : exterior_degrees) {
        if (d < 1) throw rejection_error("generator degrees must be positive");
        if (d > D) continue;
        // multiply by (1 + t^d): downward so each coefficient is used once
        for (unsigned n = D; n >= d; --n) s.c[n] += s.c[n - d];
    }
    return s;
}

PoincareSeries series_mul(const PoincareSeries& a, const PoincareSeries& b) {
    unsigned D = std::min(a.D(), b.D());
    PoincareSeries s;
    s.c.assign(D + 1, BigInt(0));
    for (unsigned i = 0; i <= D; ++i)
        for (unsigned j = 0; i + j <= D; ++j) s.c[i + j] += a.c[i] * b.c[j];
    return s;
}

PoincareSeries series_add(const PoincareSeries& a, const PoincareSeries& b) {
    unsigned D = std::min(a.D(), b.D());
    PoincareSeries s;
    s.c.assign(D + 1, BigInt(0));
    for (unsigned n = 0; n <= D; ++n) s.c[n] = a.c[n] + b.c[n];
    return s;
}

PoincareSeries em_series(unsigned k, unsigned D) {
    std::vector<unsigned> degs;
    for (const SerreGenerator& g : serre_generators(k, D)) degs.push_back(g.degree);
    PoincareSeries s = poly_series(degs, D);
    s.label = "K(Z2," + std::to_string(k) + ")";
    return s;
}

PoincareSeries mo_series(unsigned k, unsigned D) {
    if (k < 1) throw rejection_error("k must be at least 1");
    PoincareSeries s;
    s.c.assign(D + 1, BigInt(0));
    s.label = "MO(" + std::to_string(k) + ")";
    if (D < k) return s;
    std::vector<unsigned> degs;
    for (unsigned m = 1; m <= k; ++m) degs.push_back(m);
    PoincareSeries w = poly_series(degs, D - k);
    for (unsigned n = 0; n <= D - k; ++n) s.c[n + k] = w.c[n];
    return s;
}

namespace {

std::optional<unsigned> first_excess(const PoincareSeries& a, const PoincareSeries& b,
                                     unsigned from) {
    unsigned D = std::min(a.D(), b.D());
    for (unsigned n = from; n <= D; ++n)
        if (a.c[n] > b.c[n]) return n;
    return std::nullopt;
}

} // namespace

std::optional<unsigned> crossing_degree(const PoincareSeries& a, const PoincareSeries& b) {
    return first_excess(a, b, 0);
}

std::optional<unsigned> positive_crossing_degree(const PoincareSeries& a,
                                                 const PoincareSeries& b) {
    return first_excess(a, b, 1);
}

std::optional<unsigned> fg_bound_crossing(unsigned k, const std::vector<unsigned>& bound_degrees,
                                          unsigned D) {
    if (k < 2) throw rejection_error("growth comparison requires k >= 2; K(Z2,1) has polynomial growth");
    return crossing_degree(em_series(k, D), poly_series(bound_degrees, D));
}

}
