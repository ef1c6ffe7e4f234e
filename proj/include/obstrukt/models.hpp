#pragma once
#include <string>
#include <vector>

#include "obstrukt/algebra.hpp"
#include "obstrukt/steenrod.hpp"

namespace obk {

// One polynomial generator Sq^J(iota_k) of the mod-2 cohomology of the
// Eilenberg-MacLane space K(Z2,k): J admissible with excess(J) < k.
struct SerreGenerator {
    SqWord word;
    unsigned degree = 0; // k + dim(J)
    std::string name;    // "i_k" or "Sq[j1,...](i_k)"
};

// All Serre generators with degree <= D, ordered by (degree, lex on word).
std::vector<SerreGenerator> serre_generators(unsigned k, unsigned D);

// The cohomology model of K(Z2,k) truncated at D, with the Sq-action on
// generators obtained by straightening: reduce the composed word to the
// admissible basis, then send each admissible I to the generator (excess < k),
// to the square of the straightened tail (excess = k, the unstable squaring
// identity on a degree-k class), or to zero (excess > k).
struct EmModel {
    unsigned k = 0;
    std::vector<SerreGenerator> serre; // parallel to algebra.generators()
    PresentedAlgebra algebra;

    // Value of the admissible word I on iota_k under the rules above.
    AlgebraElement admissible_to_element(const SqWord& I) const;
    // Sq^a applied to the generator named by admissible J.
    AlgebraElement straighten(unsigned a, const SqWord& J) const;
    // Apply a word one factor at a time through the algebra's Cartan action
    // (independent route, used to cross-check straightening).
    AlgebraElement word_action_on_iota(const SqWord& w) const;
};

EmModel em_algebra(unsigned k, unsigned D);

// Wu formula: Sq^i(w_j) in Z2[w1..wk], with w_m = 0 for m > k.
//   i > j: zero (instability);  i = j: w_j^2;
//   i < j: sum_t C(j-i+t-1, t) w_{i-t} w_{j+t}, t = 0..i, w_0 = 1.
AlgebraElement wu_sq(unsigned i, unsigned j, unsigned k);

// Z2[w1..wk] truncated at D with the Wu action.
PresentedAlgebra bo_algebra(unsigned k, unsigned D);

// Element of the reduced cohomology of the Thom space MO(k): a free rank-1
// module over the w-algebra on the Thom class U_k, deg U_k = k.
struct ThomElement {
    AlgebraElement coeff; // polynomial P with the element P * U_k
    unsigned k = 0;
};

// Sq^I(U_k) via the module action Sq^i(U_k) = w_i U_k (zero above k) and the
// Cartan formula over the module structure. U_k^2 is identified with w_k U_k.
ThomElement thom_sq(const SqWord& I, unsigned k, const PresentedAlgebra& bo);

struct MoCheckEntry {
    SqWord head;            // admissible I with excess k
    SqWord tail;            // J with I = (|J|+k, J)
    unsigned class_degree;  // k + dim(I)
    bool sq1_vanishes;      // Sq^1 Sq^I(U_k) = 0
    bool square_identity;   // Sq^I(U_k) = (Sq^J(U_k))^2 as module elements
};

struct MoCheckReport {
    unsigned k = 0, dim_bound = 0;
    std::vector<MoCheckEntry> entries;
    bool all_passed = true;
};

// For every admissible I with excess(I) = k and k + dim(I) + 1 <= dim_bound:
// check Sq^1 Sq^I(U_k) = 0 and the squaring identity. Each such Sq^I(U_k) is
// therefore killed by the first Bockstein differential.
MoCheckReport mo_vanishing_check(unsigned k, unsigned dim_bound);

}
