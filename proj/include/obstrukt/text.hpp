#pragma once
#include <string>

#include "obstrukt/algebra.hpp"
#include "obstrukt/steenrod.hpp"

namespace obk {

// Word grammar: whitespace-separated factors "Sq3" and bracket runs
// "Sq[3,1]", freely mixed; all factors concatenate into one word.
// "" , "1" and Sq0 entries denote the identity. Rejects anything else.
SqWord parse_word(const std::string& s);
// Element grammar: '+'-separated words, or "0" for the empty sum.
SteenrodElement parse_element(const std::string& s);

std::string word_brackets(const SqWord& w);           // "Sq[3,1]", "Sq[]"
std::string element_brackets(const SteenrodElement& e); // "Sq[3,1] + Sq[4]", "0"

std::string superscript(unsigned n); // UTF-8 digits
std::string subscript(unsigned n);

std::string word_unicode(const SqWord& w);                 // "Sq³Sq¹", "1"
std::string element_unicode(const SteenrodElement& e);
std::string iota_name(unsigned k);                         // "ι₂"
std::string class_unicode(const SqWord& w, unsigned k);    // "Sq³Sq¹(ι₂)"

// Monomials and elements of a presented algebra.
// ascii: "w1^2*w2", "1", "0"  unicode: "w₁²w₂" (names like i_2 render as ι₂)
std::string mono_string(const Monomial& m, const PresentedAlgebra& A, bool unicode);
std::string element_string(const AlgebraElement& x, const PresentedAlgebra& A, bool unicode);
std::string generator_display(const std::string& name, bool unicode);

}
