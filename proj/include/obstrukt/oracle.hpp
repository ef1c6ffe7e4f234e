#pragma once
#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "obstrukt/steenrod.hpp"

namespace obk {

// Splitting-principle oracle: the Steenrod action on Z2[t1..tm] with
// deg(t_i) = 1, Sq^1(t) = t^2, extended by the Cartan formula. Used as an
// independent referee for the Adem rewriting and the Wu formula.

inline constexpr unsigned oracle_max_vars = 24;

// Dense exponent vector; entries beyond the variable count stay zero so
// ordering and equality are plain byte comparisons.
struct OMono {
    std::array<std::uint8_t, oracle_max_vars> e{};
    auto operator<=>(const OMono&) const = default;
};

// Monomials sorted ascending, XOR semantics (presence = coefficient 1).
struct OPoly {
    unsigned vars = 0;
    std::vector<OMono> monos;

    bool is_zero() const { return monos.empty(); }
    bool operator==(const OPoly&) const = default;
};

OPoly zero_poly(unsigned m);
OPoly one_poly(unsigned m);
OPoly var_monomial(unsigned m, const std::vector<unsigned>& exps);
OPoly product_of_all_vars(unsigned m); // t1 t2 ... tm
OPoly elementary_symmetric(unsigned j, unsigned m);
unsigned poly_degree(const OPoly& p); // max total degree, 0 for the zero poly

OPoly poly_add(const OPoly& a, const OPoly& b);
OPoly poly_mul(const OPoly& a, const OPoly& b);

// Sq^a termwise: distribute a over the variables of each monomial,
// Sq^j(t^e) = C(e,j) t^{e+j}.
OPoly oracle_sq(unsigned a, const OPoly& p);
// Composite action of a word, rightmost factor applied first.
OPoly word_action(const SqWord& w, OPoly p);
OPoly element_action(const SteenrodElement& el, const OPoly& p);

// Sparse monomial in the elementary symmetric generators: (index, exponent)
// pairs with 1-based ascending indices.
using EMono = std::vector<std::pair<unsigned, unsigned>>;

// Rewrite a symmetric polynomial in the elementary basis (greedy on the
// lex-leading term). Exact: symmetric polynomials in m variables are a free
// polynomial algebra on e_1..e_m. Throws verify_error if p is not symmetric.
std::vector<EMono> to_elementary(OPoly p);

// Guarded equivalence of a word and an element as operations, judged by
// their action on the given input. Faithful only when the variable count
// is at least the input degree; refuses (rejection_error) below that.
bool oracle_equivalent(const SqWord& w, const SteenrodElement& el, const OPoly& input);

}
