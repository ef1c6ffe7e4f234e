#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obstrukt/f2.hpp"

namespace obk {

// Monomial in the generators of a PresentedAlgebra: sparse exponent vector,
// generator indices ascending, exponents positive. The empty monomial is 1.
struct Monomial {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    bool operator==(const Monomial&) const = default;
};

// Basis precedence inside a fixed degree: lexicographic-descending on the
// dense exponent vector (generator order = construction order).
// Returns <0 if a precedes b, 0 if equal, >0 otherwise.
int mono_cmp(const Monomial& a, const Monomial& b);

struct AlgebraElement {
    std::vector<Monomial> monos; // canonical order, XOR semantics
    bool truncated = false;      // a monomial above the cap was dropped somewhere upstream

    bool is_zero() const { return monos.empty(); }
    bool operator==(const AlgebraElement& o) const { return monos == o.monos; }
};

AlgebraElement zero_element();
AlgebraElement one_element();
AlgebraElement monomial_element(Monomial m);
AlgebraElement generator_element(std::uint32_t gen_index);

struct GeneratorSpec {
    std::string name;
    unsigned degree = 0;
    // sq[a-1] = Sq^a(g) for a in 1..degree. Sq^0 is the identity, Sq^a for
    // a > degree is zero (instability); sq[degree-1] must equal g^2.
    std::vector<AlgebraElement> sq;
};

struct DegreeBasis {
    unsigned degree = 0;
    std::vector<Monomial> monomials; // complete, canonical order
};

// Free graded-commutative polynomial algebra over F2 with named generators,
// a stored unstable Sq-action on generators, and a hard truncation degree.
// Immutable after construction; bases for all degrees are precomputed so
// concurrent reads need no locking.
class PresentedAlgebra {
public:
    PresentedAlgebra(std::vector<GeneratorSpec> gens, unsigned truncation);

    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    unsigned truncation() const { return truncation_; }
    int find_generator(const std::string& name) const; // -1 if absent

    unsigned mono_degree(const Monomial& m) const;
    bool homogeneous(const AlgebraElement& x) const;
    // Degree of a homogeneous element (0 for the zero element); throws on mixed degrees.
    unsigned element_degree(const AlgebraElement& x) const;

    const DegreeBasis& basis(unsigned n) const; // 0 <= n <= truncation

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    // Frobenius: squaring doubles exponents, no cross terms over F2.
    AlgebraElement square(const AlgebraElement& x) const;
    // Total Sq^a via the Cartan formula from the generator tables.
    AlgebraElement sq(unsigned a, const AlgebraElement& x) const;
    // All components Sq^0(x)..Sq^deg(x) of a homogeneous x.
    std::vector<AlgebraElement> total_sq(const AlgebraElement& x) const;

    std::vector<std::uint8_t> coordinates(const AlgebraElement& x, const DegreeBasis& b) const;
    AlgebraElement from_coordinates(const std::vector<std::uint8_t>& v, const DegreeBasis& b) const;
    std::optional<std::size_t> basis_index(const Monomial& m, const DegreeBasis& b) const;

private:
    std::vector<GeneratorSpec> gens_;
    unsigned truncation_ = 0;
    std::vector<DegreeBasis> bases_;

    void validate() const;
    void build_bases();
    std::vector<AlgebraElement> total_sq_monomial(const Monomial& m) const;
    std::vector<AlgebraElement> gen_power_components(std::uint32_t gi, std::uint32_t e) const;
};

// XOR of two elements (no algebra context needed beyond canonical order).
AlgebraElement element_add(const AlgebraElement& x, const AlgebraElement& y);
// Canonicalize in place: sort by mono_cmp and cancel equal pairs.
void canonicalize(std::vector<Monomial>& monos);

struct LinearMapData {
    BitMatrix images_as_rows; // row j = coordinates of images[j] in the target basis
    std::size_t domain_dim = 0, target_dim = 0;
    std::size_t rank = 0, kernel_dim = 0, image_dim = 0;
};

// images[j] must be homogeneous of the target degree (or zero).
LinearMapData linear_map_data(const std::vector<AlgebraElement>& images,
                              const PresentedAlgebra& A, const DegreeBasis& target,
                              bool parallel = false);

}
