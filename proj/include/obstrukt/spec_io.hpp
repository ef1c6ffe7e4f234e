#pragma once
#include <string>

#include <nlohmann/json.hpp>

#include "obstrukt/algebra.hpp"

namespace obk {

using ordered_json = nlohmann::ordered_json;

// Algebra-spec JSON:
//   { "truncation": D,
//     "generators": [ { "name": "...", "degree": d,
//                       "sq": { "1": "<expr>", ... } } ] }
// Expressions use + for sum, * for product, ^ for power, generator names as
// declared (longest match, so bracketed names like "Sq[2,1](i_3)" work),
// and the literals 0 and 1. Entries are listed for 1 <= a <= degree when
// the image is nonzero and within the truncation; missing entries are zero
// (flagged truncated when degree + a exceeds the truncation).
ordered_json algebra_to_json(const PresentedAlgebra& A);
PresentedAlgebra algebra_from_json(const nlohmann::json& j);
PresentedAlgebra load_algebra_spec(const std::string& path);

// Element expression parser against a fixed generator list.
AlgebraElement parse_element_expr(const std::string& expr,
                                  const std::vector<GeneratorSpec>& gens,
                                  unsigned truncation, const std::string& where);
std::string element_expr(const AlgebraElement& x, const PresentedAlgebra& A);

// Structural equality: same truncation, generator names, degrees and
// stored action tables (the round-trip invariant).
bool same_presentation(const PresentedAlgebra& a, const PresentedAlgebra& b);

}
