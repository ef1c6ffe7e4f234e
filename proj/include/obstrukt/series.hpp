#pragma once
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace obk {

using BigInt = boost::multiprecision::cpp_int;

// Graded dimension counts, degrees 0..D. Arbitrary precision: the counts
// grow superpolynomially within feasible D.
struct PoincareSeries {
    std::vector<BigInt> c;
    std::string label;

    unsigned D() const { return c.empty() ? 0 : unsigned(c.size() - 1); }
    bool operator==(const PoincareSeries& o) const { return c == o.c; }
};

// Polynomial algebra on one generator per listed degree (multiset), i.e.
// the coefficients of prod 1/(1 - t^d) through degree D.
PoincareSeries poly_series(const std::vector<unsigned>& generator_degrees, unsigned D);

// Free graded-commutative algebra: polynomial factors 1/(1 - t^d) for the
// first list, exterior factors (1 + t^d) for the second.
PoincareSeries graded_free_series(const std::vector<unsigned>& polynomial_degrees,
                                  const std::vector<unsigned>& exterior_degrees, unsigned D);

PoincareSeries series_mul(const PoincareSeries& a, const PoincareSeries& b);
PoincareSeries series_add(const PoincareSeries& a, const PoincareSeries& b);

// Dimension series of the K(Z2,k) model: free algebra on the Serre
// generator degrees within D.
PoincareSeries em_series(unsigned k, unsigned D);
// Dimension series of the reduced MO(k) model: the w-algebra series shifted
// up by the Thom class degree k; zero below k (reduced cohomology).
PoincareSeries mo_series(unsigned k, unsigned D);

// Least N <= D with a[N] > b[N], or nothing within the truncation.
std::optional<unsigned> crossing_degree(const PoincareSeries& a, const PoincareSeries& b);
// Same comparison restricted to N >= 1 (skips the degree-0 unit artifact
// that appears when an unreduced algebra meets a reduced module).
std::optional<unsigned> positive_crossing_degree(const PoincareSeries& a, const PoincareSeries& b);

// First degree where the K(Z2,k) dimensions exceed the free algebra on the
// supplied generator degrees. Relations only shrink dimensions, so the free
// algebra bounds every quotient from above and a crossing here certifies a
// crossing against any finitely generated algebra with those generators.
std::optional<unsigned> fg_bound_crossing(unsigned k, const std::vector<unsigned>& bound_degrees,
                                          unsigned D);

}
