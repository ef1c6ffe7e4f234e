#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "obstrukt/algebra.hpp"
#include "obstrukt/errors.hpp"
#include "obstrukt/models.hpp"
#include "obstrukt/series.hpp"
#include "obstrukt/text.hpp"

using namespace obk;

namespace {

Monomial mono(std::vector<std::pair<std::uint32_t, std::uint32_t>> f) { return Monomial{std::move(f)}; }

// Z2[x1, x2] with degrees 1 and 2 and the forced unstable action:
// Sq^1(x1) = x1^2; Sq^1(x2) = 0, Sq^2(x2) = x2^2.
PresentedAlgebra tiny(unsigned D) {
    GeneratorSpec x1{"x1", 1, {}}, x2{"x2", 2, {}};
    x1.sq = {monomial_element(mono({{0, 2}}))};
    x2.sq = {zero_element(), monomial_element(mono({{1, 2}}))};
    return PresentedAlgebra({x1, x2}, D);
}

} // namespace

TEST_CASE("monomial comparison is graded lex-descending") {
    PresentedAlgebra A = bo_algebra(2, 8); // Z2[w1, w2]
    const DegreeBasis& b4 = A.basis(4);
    REQUIRE(b4.monomials.size() == 3);
    CHECK(mono_string(b4.monomials[0], A, false) == "w1^4");
    CHECK(mono_string(b4.monomials[1], A, false) == "w1^2*w2");
    CHECK(mono_string(b4.monomials[2], A, false) == "w2^2");
    for (std::size_t i = 1; i < b4.monomials.size(); ++i)
        CHECK(mono_cmp(b4.monomials[i - 1], b4.monomials[i]) < 0);

    CHECK(mono_cmp(mono({}), mono({})) == 0);
    CHECK(mono_cmp(mono({{0, 1}}), mono({{1, 1}})) < 0); // earlier generator first
    CHECK(mono_cmp(mono({{0, 2}}), mono({{0, 1}})) < 0); // higher power first
}

TEST_CASE("presentation validation rejects malformed input") {
    GeneratorSpec good{"g", 2, {zero_element(), monomial_element(mono({{0, 2}}))}};

    // duplicate names
    CHECK_THROWS_AS(PresentedAlgebra({good, good}, 8), rejection_error);

    // reserved character in a name
    GeneratorSpec bad_name = good;
    bad_name.name = "g h";
    CHECK_THROWS_AS(PresentedAlgebra({bad_name}, 8), rejection_error);

    // degree zero
    GeneratorSpec zero_deg{"z", 0, {}};
    CHECK_THROWS_AS(PresentedAlgebra({zero_deg}, 8), rejection_error);

    // action table of the wrong length
    GeneratorSpec short_table{"s", 2, {zero_element()}};
    CHECK_THROWS_AS(PresentedAlgebra({short_table}, 8), rejection_error);

    // top square differs from the Frobenius square
    GeneratorSpec bad_top{"t", 2, {zero_element(), zero_element()}};
    CHECK_THROWS_AS(PresentedAlgebra({bad_top}, 8), rejection_error);

    // inhomogeneous image: Sq^1(g) mixing degrees 3 and 2
    GeneratorSpec mixed{"m", 2, {}};
    AlgebraElement bad = element_add(monomial_element(mono({{0, 1}})), one_element());
    mixed.sq = {bad, monomial_element(mono({{0, 2}}))};
    CHECK_THROWS_AS(PresentedAlgebra({mixed}, 8), rejection_error);

    // truncation below 1
    CHECK_THROWS_AS(PresentedAlgebra({good}, 0), rejection_error);
}

TEST_CASE("degree bases enumerate the polynomial algebra") {
    PresentedAlgebra A = bo_algebra(3, 12); // Z2[w1, w2, w3]
    PoincareSeries s = poly_series({1, 2, 3}, 12);
    for (unsigned n = 0; n <= 12; ++n) {
        const DegreeBasis& b = A.basis(n);
        CHECK(BigInt(b.monomials.size()) == s.c[n]);
        for (std::size_t i = 0; i < b.monomials.size(); ++i) {
            CHECK(A.mono_degree(b.monomials[i]) == n);
            if (i) CHECK(mono_cmp(b.monomials[i - 1], b.monomials[i]) < 0);
        }
    }
    CHECK(A.basis(0).monomials.size() == 1); // the empty monomial
}

TEST_CASE("multiplication, squares and the truncation flag") {
    PresentedAlgebra A = tiny(6);
    AlgebraElement x1 = generator_element(0), x2 = generator_element(1);
    AlgebraElement sum = element_add(x1, x2);

    // (x1 + x2)^2 = x1^2 + x2^2 over F2
    AlgebraElement sq = A.square(sum);
    AlgebraElement expect = element_add(A.multiply(x1, x1), A.multiply(x2, x2));
    CHECK(sq == expect);
    CHECK(!sq.truncated);

    // commutativity and associativity
    CHECK(A.multiply(x1, x2) == A.multiply(x2, x1));
    CHECK(A.multiply(A.multiply(x1, x2), x2) == A.multiply(x1, A.multiply(x2, x2)));

    // beyond the cap: x2^3 in degree 6 stays, x2^3 * x2 flags and drops
    AlgebraElement x2cubed = A.multiply(A.multiply(x2, x2), x2);
    CHECK(!x2cubed.is_zero());
    AlgebraElement over = A.multiply(x2cubed, x2);
    CHECK(over.is_zero());
    CHECK(over.truncated);

    // mixed product where only part of the result survives
    AlgebraElement mixed = A.multiply(sum, x2cubed); // degrees 7 and 8, both beyond 6
    CHECK(mixed.is_zero());
    CHECK(mixed.truncated);
}

TEST_CASE("unstable axioms of the stored action") {
    PresentedAlgebra A = em_algebra(2, 14).algebra;
    std::mt19937_64 rng(7);
    for (unsigned n = 2; n <= 10; ++n) {
        const DegreeBasis& b = A.basis(n);
        for (std::size_t i = 0; i < b.monomials.size(); ++i) {
            AlgebraElement x = monomial_element(b.monomials[i]);
            CHECK(A.sq(0, x) == x);
            CHECK(A.sq(n, x) == A.square(x));            // top = Frobenius
            CHECK(A.sq(n + 1 + rng() % 3, x).is_zero()); // above the degree
        }
    }
}

TEST_CASE("Cartan formula for the stored action") {
    PresentedAlgebra A = bo_algebra(3, 14);
    AlgebraElement w1 = generator_element(0), w2 = generator_element(1), w3 = generator_element(2);
    std::vector<AlgebraElement> xs = {w1, w2, w3, A.multiply(w1, w2), element_add(w2, A.multiply(w1, w1))};
    for (const AlgebraElement& x : xs)
        for (const AlgebraElement& y : xs) {
            AlgebraElement xy = A.multiply(x, y);
            for (unsigned a = 0; a <= 5; ++a) {
                AlgebraElement direct = A.sq(a, xy);
                AlgebraElement cartan = zero_element();
                for (unsigned i = 0; i <= a; ++i)
                    cartan = element_add(cartan, A.multiply(A.sq(i, x), A.sq(a - i, y)));
                CHECK(direct == cartan);
            }
        }
}

TEST_CASE("coordinates round-trip through the basis") {
    PresentedAlgebra A = bo_algebra(3, 10);
    std::mt19937_64 rng(13);
    for (unsigned n = 1; n <= 9; ++n) {
        const DegreeBasis& b = A.basis(n);
        std::vector<std::uint8_t> v(b.monomials.size());
        for (auto& bit : v) bit = rng() & 1;
        AlgebraElement x = A.from_coordinates(v, b);
        CHECK(A.coordinates(x, b) == v);
        for (std::size_t i = 0; i < b.monomials.size(); ++i) {
            auto idx = A.basis_index(b.monomials[i], b);
            REQUIRE(idx.has_value());
            CHECK(*idx == i);
        }
    }
    // a monomial of the wrong degree is not in the basis
    CHECK(!A.basis_index(A.basis(3).monomials[0], A.basis(4)).has_value());
}

TEST_CASE("element degree bookkeeping") {
    PresentedAlgebra A = tiny(8);
    AlgebraElement x1 = generator_element(0), x2 = generator_element(1);
    CHECK(A.element_degree(zero_element()) == 0);
    CHECK(A.element_degree(one_element()) == 0);
    CHECK(A.element_degree(x2) == 2);
    CHECK(A.homogeneous(element_add(A.multiply(x1, x1), x2)));
    CHECK(!A.homogeneous(element_add(x1, x2)));
    CHECK_THROWS_AS((void)A.element_degree(element_add(x1, x2)), rejection_error);
}

TEST_CASE("linear map data from the Sq1 action") {
    PresentedAlgebra A = em_algebra(2, 8).algebra;
    // Sq^1 out of degree 2: basis {i_2}, image Sq[1](i_2) nonzero
    const DegreeBasis& d2 = A.basis(2);
    const DegreeBasis& d3 = A.basis(3);
    std::vector<AlgebraElement> images;
    for (const Monomial& m : d2.monomials) images.push_back(A.sq(1, monomial_element(m)));
    LinearMapData lm = linear_map_data(images, A, d3);
    CHECK(lm.domain_dim == 1);
    CHECK(lm.target_dim == 1);
    CHECK(lm.rank == 1);
    CHECK(lm.kernel_dim == 0);
    CHECK(lm.image_dim == 1);

    // Sq^1 out of degree 4: basis {i_2^2}, Sq^1 kills the square
    const DegreeBasis& d4 = A.basis(4);
    images.clear();
    for (const Monomial& m : d4.monomials) images.push_back(A.sq(1, monomial_element(m)));
    LinearMapData lm4 = linear_map_data(images, A, A.basis(5));
    CHECK(lm4.rank == 0);
    CHECK(lm4.kernel_dim == 1);
}

TEST_CASE("canonicalize cancels duplicate monomials") {
    std::vector<Monomial> monos = {mono({{1, 1}}), mono({{0, 2}}), mono({{1, 1}})};
    canonicalize(monos);
    REQUIRE(monos.size() == 1);
    CHECK(monos[0] == mono({{0, 2}}));
}
