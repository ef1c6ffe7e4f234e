#pragma once
#include <string>
#include <vector>

#include "obstrukt/algebra.hpp"
#include "obstrukt/models.hpp"
#include "obstrukt/series.hpp"
#include "obstrukt/steenrod.hpp"

namespace obk {

// The matrix of the derivation Sq^1 from degree n to degree n+1, rows
// indexed by the degree-n basis (row j = coordinates of Sq^1 of monomial j).
BitMatrix sq1_matrix(const PresentedAlgebra& A, unsigned n);

struct E2DegreeRecord {
    unsigned degree = 0;
    std::size_t dim = 0;        // full dimension at this degree
    std::size_t cycles = 0;     // ker(Sq^1 at n)
    std::size_t boundaries = 0; // im(Sq^1 from n-1)
    std::size_t e2 = 0;         // cycles - boundaries
    std::vector<AlgebraElement> representatives; // filled on request
};

// The second Bockstein page as Sq^1-cohomology, degrees 0..top.
struct E2Page {
    std::vector<E2DegreeRecord> records;
};

// Requires top + 1 <= truncation (the boundary count at `top` needs the
// Sq^1 matrix into degree top + 1).
E2Page e2_dimensions(const PresentedAlgebra& A, unsigned top,
                     bool with_representatives = false, bool parallel = true);

// Browder's description of the page for K(Z2,k): the free graded-commutative
// algebra on the squares G^2 (polynomial, even degree) and their partners
// dG^2 (exterior, one degree up), where G = Sq^J(iota_k) runs over the
// even-degree Serre generators with leading entry j1 != 1. Returns its
// dimension series through degree top. (The j1 != 1 filter subsumes the
// special exclusion of Sq^1(iota_k): (1) is the only admissible word
// starting with 1.)
PoincareSeries browder_prediction(unsigned k, unsigned top);

// Machine-checked non-realizability certificate. The class
// y = Sq^I(iota_k) = (Sq^J(iota_k))^2 with I = (|J|+k, J) is a Sq^1-cycle
// and not a Sq^1-boundary; the cited page structure then forces its
// integral Bockstein to be nonzero, which obstructs realizing a degree-k
// class by a codimension-k immersion in the stated ambient dimension.
struct ObstructionCertificate {
    unsigned k = 0;
    SqWord tail;                    // J
    SqWord head_word;               // I = (|J|+k, J)
    unsigned class_degree = 0;      // 2(k+|J|)
    unsigned obstruction_degree = 0; // class_degree + 1 = k + |I| + 1
    unsigned ambient_bound = 0;     // 2*obstruction_degree + 1 = 4(k+|J|) + 3
    AlgebraElement the_class;       // y in the K(Z2,k) model
    std::vector<std::string> verified; // facts this run checked
    std::vector<std::string> cited;    // external inputs, not recomputed here
};

// Preconditions (rejected with the failing filter named): J admissible,
// excess(J) < k, j1 != 1, |J| + k even, D >= 2(k+|J|) + 2.
// Verification failures throw verify_error; no certificate is emitted.
ObstructionCertificate beta_certificate(unsigned k, const SqWord& J, unsigned D);

}
