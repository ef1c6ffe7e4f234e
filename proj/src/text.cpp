#include "obstrukt/text.hpp"

#include <cctype>

#include "obstrukt/errors.hpp"

namespace obk {

/*************************** parsing ***************************/

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long long parse_int(const std::string& s, std::size_t& i, const char* what) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw rejection_error(std::string("expected ") + what + " in \"" + s + "\" at position " +
                                          std::to_string(start));
    long long v = 0;
    for (std::size_t j = start; j < i; ++j) {
        v = v * 10 + (s[j] - '0');
        if (v > 1'000'000'000) throw rejection_error("exponent out of range in \"" + s + "\"");
    }
    return v;
}

} // namespace

SqWord parse_word(const std::string& s) {
    std::vector<long long> entries;
    std::size_t i = 0;
    skip_ws(s, i);
    if (i >= s.size()) return {};
    if (s[i] == '1' && (i + 1 >= s.size() || std::isspace(static_cast<unsigned char>(s[i + 1])))) {
        std::size_t j = i + 1;
        skip_ws(s, j);
        if (j >= s.size()) return {};
    }
    while (true) {
        skip_ws(s, i);
        if (i >= s.size()) break;
        if (s.compare(i, 2, "Sq") != 0)
            throw rejection_error("expected 'Sq' in \"" + s + "\" at position " + std::to_string(i));
        i += 2;
        if (i < s.size() && s[i] == '[') {
            ++i;
            skip_ws(s, i);
            if (i < s.size() && s[i] == ']') {
                ++i;
                continue; // Sq[] is the identity
            }
            while (true) {
                entries.push_back(parse_int(s, i, "an exponent"));
                skip_ws(s, i);
                if (i < s.size() && s[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < s.size() && s[i] == ']') {
                    ++i;
                    break;
                }
                throw rejection_error("expected ',' or ']' in \"" + s + "\" at position " +
                                      std::to_string(i));
            }
        } else {
            entries.push_back(parse_int(s, i, "an exponent after Sq"));
        }
    }
    return normalize_word(entries);
}

SteenrodElement parse_element(const std::string& s) {
    std::size_t i = 0;
    skip_ws(s, i);
    if (i >= s.size()) throw rejection_error("empty element expression");
    SteenrodElement e;
    std::size_t start = 0;
    auto take = [&](std::size_t from, std::size_t to) {
        std::string term = s.substr(from, to - from);
        std::size_t j = 0;
        skip_ws(term, j);
        std::size_t end = term.size();
        while (end > j && std::isspace(static_cast<unsigned char>(term[end - 1]))) --end;
        term = term.substr(j, end - j);
        if (term.empty()) throw rejection_error("empty summand in \"" + s + "\"");
        if (term == "0") return; // zero summand
        toggle_term(e.terms, parse_word(term));
    };
    for (std::size_t p = 0; p < s.size(); ++p)
        if (s[p] == '+') {
            take(start, p);
            start = p + 1;
        }
    take(start, s.size());
    return e;
}

/*************************** formatting ***************************/

std::string word_brackets(const SqWord& w) {
    std::string s = "Sq[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + "]";
}

std::string element_brackets(const SteenrodElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i) s += " + ";
        s += word_brackets(e.terms[i]);
    }
    return s;
}

namespace {

const char* kSuper[10] = {"⁰", "¹", "²", "³", "⁴",
                          "⁵", "⁶", "⁷", "⁸", "⁹"};
const char* kSub[10] = {"₀", "₁", "₂", "₃", "₄",
                        "₅", "₆", "₇", "₈", "₉"};

std::string digit_map(unsigned n, const char* const table[10]) {
    std::string d = std::to_string(n), out;
    for (char c : d) out += table[c - '0'];
    return out;
}

} // namespace

std::string superscript(unsigned n) { return digit_map(n, kSuper); }
std::string subscript(unsigned n) { return digit_map(n, kSub); }

std::string word_unicode(const SqWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (unsigned i : w) s += "Sq" + superscript(i);
    return s;
}

std::string element_unicode(const SteenrodElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i) s += " + ";
        s += word_unicode(e.terms[i]);
    }
    return s;
}

std::string iota_name(unsigned k) { return "ι" + subscript(k); }

std::string class_unicode(const SqWord& w, unsigned k) {
    if (w.empty()) return iota_name(k);
    return word_unicode(w) + "(" + iota_name(k) + ")";
}

std::string generator_display(const std::string& name, bool unicode) {
    if (!unicode) return name;
    // "Sq[a,b](inner)" renders the word as superscripts around the inner name
    if (name.rfind("Sq[", 0) == 0) {
        std::size_t close = name.find(']');
        if (close != std::string::npos && close + 1 < name.size() && name[close + 1] == '(' &&
            name.back() == ')') {
            SqWord w = parse_word(name.substr(0, close + 1));
            std::string inner = name.substr(close + 2, name.size() - close - 3);
            return word_unicode(w) + "(" + generator_display(inner, true) + ")";
        }
    }
    // "i_7" is a fundamental class
    if (name.rfind("i_", 0) == 0) {
        bool digits = name.size() > 2;
        for (std::size_t i = 2; i < name.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
        if (digits) return iota_name(static_cast<unsigned>(std::stoul(name.substr(2))));
    }
    // trailing digits after an alphabetic stem become a subscript: w2 -> w₂
    std::size_t cut = name.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
    if (cut > 0 && cut < name.size()) {
        bool alpha = true;
        for (std::size_t i = 0; i < cut; ++i)
            alpha = alpha && std::isalpha(static_cast<unsigned char>(name[i]));
        if (alpha) {
            std::string out = name.substr(0, cut);
            for (std::size_t i = cut; i < name.size(); ++i) out += kSub[name[i] - '0'];
            return out;
        }
    }
    return name;
}

std::string mono_string(const Monomial& m, const PresentedAlgebra& A, bool unicode) {
    if (m.factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        const auto& [g, e] = m.factors[i];
        std::string name = A.generators()[g].name;
        if (unicode) {
            std::string disp = generator_display(name, true);
            bool wrap = disp.find('(') != std::string::npos && e > 1;
            s += wrap ? "(" + disp + ")" : disp;
            if (e > 1) s += superscript(e);
        } else {
            if (i) s += "*";
            s += name;
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

std::string element_string(const AlgebraElement& x, const PresentedAlgebra& A, bool unicode) {
    if (x.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < x.monos.size(); ++i) {
        if (i) s += " + ";
        s += mono_string(x.monos[i], A, unicode);
    }
    return s;
}

}
