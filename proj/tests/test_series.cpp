#include <doctest.h>

#include <optional>
#include <vector>

#include "obstrukt/errors.hpp"
#include "obstrukt/models.hpp"
#include "obstrukt/series.hpp"

using namespace obk;

TEST_CASE("poly_series basics") {
    PoincareSeries one_gen = poly_series({1}, 6);
    for (unsigned n = 0; n <= 6; ++n) CHECK(one_gen.c[n] == 1);

    PoincareSeries even = poly_series({2}, 7);
    for (unsigned n = 0; n <= 7; ++n) CHECK(even.c[n] == (n % 2 ? 0 : 1));

    // partitions into parts 1,2,3
    PoincareSeries p123 = poly_series({1, 2, 3}, 8);
    std::vector<BigInt> expect = {1, 1, 2, 3, 4, 5, 7, 8, 10};
    CHECK(p123.c == expect);

    // duplicate degrees count as independent generators
    PoincareSeries dup = poly_series({2, 2}, 6);
    std::vector<BigInt> dup_expect = {1, 0, 2, 0, 3, 0, 4};
    CHECK(dup.c == dup_expect);

    // generators above the cap contribute nothing
    CHECK(poly_series({9}, 5).c == poly_series({}, 5).c);
    CHECK_THROWS_AS((void)poly_series({0}, 5), rejection_error);
}

TEST_CASE("graded_free_series mixes polynomial and exterior factors") {
    // pure exterior on one degree-5 class: 1 + t^5
    PoincareSeries ext = graded_free_series({}, {5}, 12);
    for (unsigned n = 0; n <= 12; ++n) CHECK(ext.c[n] == ((n == 0 || n == 5) ? 1 : 0));

    // Z2[u] (x) Lambda(B), |u| = 4, |B| = 5
    PoincareSeries mixed = graded_free_series({4}, {5}, 13);
    std::vector<BigInt> expect = {1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1};
    CHECK(mixed.c == expect);

    // agrees with the product of the two pure series
    PoincareSeries poly = poly_series({4}, 13);
    CHECK(series_mul(poly, graded_free_series({}, {5}, 13)).c == mixed.c);

    // two exterior classes multiply freely but never square
    PoincareSeries two = graded_free_series({}, {3, 5}, 8);
    CHECK(two.c[3] == 1);
    CHECK(two.c[5] == 1);
    CHECK(two.c[8] == 1); // the product class
    CHECK(two.c[6] == 0); // no B^2
}

TEST_CASE("series arithmetic") {
    PoincareSeries a = poly_series({1}, 5);
    PoincareSeries b = poly_series({2}, 5);
    PoincareSeries sum = series_add(a, b);
    for (unsigned n = 0; n <= 5; ++n) CHECK(sum.c[n] == a.c[n] + b.c[n]);
    PoincareSeries prod = series_mul(a, b);
    // 1/((1-t)(1-t^2)): 1,1,2,2,3,3
    std::vector<BigInt> expect = {1, 1, 2, 2, 3, 3};
    CHECK(prod.c == expect);
    CHECK(prod.c == poly_series({1, 2}, 5).c);
}

TEST_CASE("em_series matches the model and carries its label") {
    PoincareSeries s = em_series(2, 12);
    std::vector<BigInt> expect = {1, 0, 1, 1, 1, 2, 2, 2, 3, 4, 4, 5, 6};
    CHECK(s.c == expect);
    CHECK(s.label == "K(Z2,2)");
    // k = 1 is the polynomial algebra on one degree-1 class
    PoincareSeries s1 = em_series(1, 10);
    for (unsigned n = 0; n <= 10; ++n) CHECK(s1.c[n] == 1);
}

TEST_CASE("mo_series is the shifted w-algebra series") {
    PoincareSeries mo = mo_series(2, 12);
    PoincareSeries w = poly_series({1, 2}, 10);
    CHECK(mo.label == "MO(2)");
    CHECK(mo.c[0] == 0);
    CHECK(mo.c[1] == 0);
    for (unsigned n = 2; n <= 12; ++n) CHECK(mo.c[n] == w.c[n - 2]);
    // reduced below the Thom class, one class at the Thom class degree
    for (unsigned k = 1; k <= 5; ++k) {
        PoincareSeries s = mo_series(k, 12);
        for (unsigned n = 0; n < k; ++n) CHECK(s.c[n] == 0);
        CHECK(s.c[k] == 1);
    }
    // D below k: all zero
    PoincareSeries tiny = mo_series(5, 3);
    for (const BigInt& c : tiny.c) CHECK(c == 0);
}

TEST_CASE("Thom shift matches the model dimensions") {
    for (unsigned k : {2u, 3u, 4u}) {
        unsigned D = 16;
        PoincareSeries mo = mo_series(k, D);
        PresentedAlgebra bo = bo_algebra(k, D - k);
        for (unsigned n = k; n <= D; ++n)
            CHECK(BigInt(bo.basis(n - k).monomials.size()) == mo.c[n]);
    }
}

TEST_CASE("crossing detection") {
    PoincareSeries em = em_series(2, 60);
    PoincareSeries mo = mo_series(2, 60);
    // the unit against a reduced module: literal crossing at zero
    auto c = crossing_degree(em, mo);
    REQUIRE(c.has_value());
    CHECK(*c == 0);
    // first positive-degree crossing, the meaningful comparison
    auto cp = positive_crossing_degree(em, mo);
    REQUIRE(cp.has_value());
    CHECK(*cp == 14);
    CHECK(em.c[14] == 8);
    CHECK(mo.c[14] == 7);

    PoincareSeries em3 = em_series(3, 60);
    PoincareSeries mo3 = mo_series(3, 60);
    auto cp3 = positive_crossing_degree(em3, mo3);
    REQUIRE(cp3.has_value());
    CHECK(*cp3 == 21);
    CHECK(em3.c[21] == 41);
    CHECK(mo3.c[21] == 37);

    // equal series never cross
    CHECK(!crossing_degree(em, em).has_value());
    CHECK(!positive_crossing_degree(em, em).has_value());
}

TEST_CASE("finitely generated bound crossings") {
    // the five-generator bound is not crossed within degree 80
    CHECK(!fg_bound_crossing(2, {1, 2, 3, 4, 5}, 80).has_value());
    // it is crossed at 935: pinned against an independent computation
    auto far = fg_bound_crossing(2, {1, 2, 3, 4, 5}, 1000);
    REQUIRE(far.has_value());
    CHECK(*far == 935);
    PoincareSeries em = em_series(2, 935);
    PoincareSeries bound = poly_series({1, 2, 3, 4, 5}, 935);
    CHECK(em.c[935] == 274686151);
    CHECK(bound.c[935] == 273980390);

    // small bounds cross quickly
    auto one = fg_bound_crossing(2, {1}, 40);
    REQUIRE(one.has_value());
    CHECK(*one == 5);
    auto empty = fg_bound_crossing(2, {}, 40);
    REQUIRE(empty.has_value());
    CHECK(*empty == 2);

    CHECK_THROWS_AS((void)fg_bound_crossing(1, {1}, 40), rejection_error);
}

TEST_CASE("coefficients hold arbitrary precision") {
    // partition numbers: p(1000) overflows 64 bits; the classical value is pinned
    std::vector<unsigned> degs;
    for (unsigned d = 1; d <= 1000; ++d) degs.push_back(d);
    PoincareSeries p = poly_series(degs, 1000);
    CHECK(p.c[100] == BigInt("190569292"));
    CHECK(p.c[1000] == BigInt("24061467864032622473692149727991"));
}
