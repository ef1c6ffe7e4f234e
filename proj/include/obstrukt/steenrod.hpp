#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace obk {

// A word Sq^{i1}...Sq^{ir} stored as its exponent sequence (i1,...,ir).
// The empty word is the identity Sq^0.
using SqWord = std::vector<unsigned>;

// F2-sum of admissible words; presence = coefficient 1. Terms are kept
// sorted lexicographically so serialization is canonical.
struct SteenrodElement {
    std::vector<SqWord> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const SteenrodElement&) const = default;
};

// C(m, n) mod 2 via Lucas: odd iff the binary digits of n sit inside m.
bool binom2(long long m, long long n);

// Drops Sq^0 entries; rejects negative entries.
SqWord normalize_word(const std::vector<long long>& raw);

// i_j >= 2*i_{j+1} for all consecutive pairs; empty and length 1 pass.
bool is_admissible(const SqWord& w);

unsigned dimension(const SqWord& w);

// 2*i1 - |w| for admissible w (0 for the empty word). Throws on
// non-admissible input, where the two defining formulas disagree.
unsigned excess(const SqWord& w);
std::pair<unsigned, unsigned> excess_and_dimension(const SqWord& w);

// XOR a word into a sorted term list (mod-2 cancellation).
void toggle_term(std::vector<SqWord>& terms, const SqWord& w);

// Rewrites w to the admissible basis by resolving the leftmost
// inadmissible pair with the Adem relation
//   Sq^a Sq^b = sum_c C(b-c-1, a-2c) Sq^{a+b-c} Sq^c   (a < 2b)
// until every term is admissible. Each rewrite strictly decreases the
// moment sum(position * entry), so chains are bounded by |w|*dim(w); the
// guard depth_factor*dim(w) trips only on an implementation bug.
SteenrodElement adem_reduce(const SqWord& w, unsigned depth_factor = 10);

SteenrodElement add(const SteenrodElement& a, const SteenrodElement& b);
SteenrodElement product(const SteenrodElement& a, const SteenrodElement& b);

// All admissible words of dimension <= max_dim, sorted by (dimension, lex);
// includes the empty word. Optionally only words of excess < excess_below.
std::vector<SqWord> admissible_words(unsigned max_dim,
                                     std::optional<unsigned> excess_below = {});

}
