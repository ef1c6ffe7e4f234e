#include "obstrukt/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>

#include "obstrukt/errors.hpp"

namespace obk {

namespace {

std::string mono_expr(const Monomial& m, const std::vector<GeneratorSpec>& gens) {
    if (m.factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        const auto& [g, e] = m.factors[i];
        if (i) s += "*";
        s += gens[g].name;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string element_expr_impl(const AlgebraElement& x, const std::vector<GeneratorSpec>& gens) {
    if (x.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < x.monos.size(); ++i) {
        if (i) s += " + ";
        s += mono_expr(x.monos[i], gens);
    }
    return s;
}

} // namespace

std::string element_expr(const AlgebraElement& x, const PresentedAlgebra& A) {
    return element_expr_impl(x, A.generators());
}

ordered_json algebra_to_json(const PresentedAlgebra& A) {
    ordered_json j;
    j["truncation"] = A.truncation();
    j["generators"] = ordered_json::array();
    for (const GeneratorSpec& g : A.generators()) {
        ordered_json gj;
        gj["name"] = g.name;
        gj["degree"] = g.degree;
        ordered_json sq = ordered_json::object();
        for (unsigned a = 1; a <= g.degree; ++a) {
            if (g.degree + a > A.truncation()) continue;
            if (g.sq[a - 1].is_zero()) continue;
            sq[std::to_string(a)] = element_expr_impl(g.sq[a - 1], A.generators());
        }
        gj["sq"] = std::move(sq);
        j["generators"].push_back(std::move(gj));
    }
    return j;
}

/*************************** expression parser ***************************/

AlgebraElement parse_element_expr(const std::string& expr, const std::vector<GeneratorSpec>& gens,
                                  unsigned truncation, const std::string& where) {
    // generator indices sorted by descending name length for longest match
    std::vector<std::size_t> by_len(gens.size());
    std::iota(by_len.begin(), by_len.end(), 0);
    std::sort(by_len.begin(), by_len.end(), [&](std::size_t a, std::size_t b) {
        return gens[a].name.size() > gens[b].name.size();
    });

    auto fail = [&](const std::string& msg) -> rejection_error {
        return rejection_error(where + ": " + msg + " in \"" + expr + "\"");
    };

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    auto parse_uint = [&]() -> unsigned long long {
        std::size_t start = i;
        unsigned long long v = 0;
        while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
            v = v * 10 + static_cast<unsigned long long>(expr[i] - '0');
            if (v > 1'000'000'000ull) throw fail("number out of range");
            ++i;
        }
        if (i == start) throw fail("expected a number at position " + std::to_string(i));
        return v;
    };

    std::vector<Monomial> monos;
    while (true) {
        // one term: '*'-separated factors, each NAME[^exp] or a literal 0/1
        std::vector<std::uint32_t> exps(gens.size(), 0);
        bool term_zero = false;
        while (true) {
            skip_ws();
            int matched = -1;
            for (std::size_t idx : by_len)
                if (expr.compare(i, gens[idx].name.size(), gens[idx].name) == 0) {
                    matched = static_cast<int>(idx);
                    break;
                }
            unsigned long long power = 1;
            if (matched >= 0) {
                i += gens[matched].name.size();
                skip_ws();
                if (i < expr.size() && expr[i] == '^') {
                    ++i;
                    skip_ws();
                    power = parse_uint();
                }
                exps[static_cast<std::size_t>(matched)] += static_cast<std::uint32_t>(power);
            } else if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
                unsigned long long lit = parse_uint();
                if (lit == 0)
                    term_zero = true;
                else if (lit != 1)
                    throw fail("coefficient " + std::to_string(lit) +
                               " is not a mod-2 coefficient; write repeated summands instead");
            } else {
                throw fail("expected a generator name or literal at position " + std::to_string(i));
            }
            skip_ws();
            if (i < expr.size() && expr[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!term_zero) {
            Monomial m;
            unsigned degree = 0;
            for (std::size_t g = 0; g < gens.size(); ++g)
                if (exps[g]) {
                    m.factors.push_back({static_cast<std::uint32_t>(g), exps[g]});
                    degree += gens[g].degree * exps[g];
                }
            if (degree > truncation)
                throw fail("monomial of degree " + std::to_string(degree) +
                           " exceeds the truncation " + std::to_string(truncation));
            monos.push_back(std::move(m));
        }
        skip_ws();
        if (i < expr.size() && expr[i] == '+') {
            ++i;
            continue;
        }
        if (i < expr.size()) throw fail("unexpected character at position " + std::to_string(i));
        break;
    }
    canonicalize(monos);
    return AlgebraElement{std::move(monos), false};
}

/*************************** deserialization ***************************/

namespace {

unsigned require_uint(const nlohmann::json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw rejection_error(where + ": missing \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() || v.get<unsigned long long>() == 0 ||
        v.get<unsigned long long>() > 1'000'000'000ull)
        throw rejection_error(where + ": \"" + key + "\" must be a positive integer");
    return v.get<unsigned>();
}

} // namespace

PresentedAlgebra algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw rejection_error("algebra spec: top level must be an object");
    unsigned truncation = require_uint(j, "truncation", "algebra spec");
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw rejection_error("algebra spec: \"generators\" must be an array");

    std::vector<GeneratorSpec> gens;
    for (std::size_t g = 0; g < j.at("generators").size(); ++g) {
        const auto& gj = j.at("generators")[g];
        std::string where = "generators[" + std::to_string(g) + "]";
        if (!gj.is_object()) throw rejection_error(where + ": must be an object");
        if (!gj.contains("name") || !gj.at("name").is_string() ||
            gj.at("name").get<std::string>().empty())
            throw rejection_error(where + ": \"name\" must be a nonempty string");
        GeneratorSpec spec;
        spec.name = gj.at("name").get<std::string>();
        spec.degree = require_uint(gj, "degree", where);
        spec.sq.resize(spec.degree);
        gens.push_back(std::move(spec));
    }

    // second pass: expressions may reference any generator, so parse after
    // the full name list is known
    for (std::size_t g = 0; g < j.at("generators").size(); ++g) {
        const auto& gj = j.at("generators")[g];
        std::string where = "generators[" + std::to_string(g) + "]";
        if (!gj.contains("sq")) continue;
        if (!gj.at("sq").is_object()) throw rejection_error(where + ": \"sq\" must be an object");
        for (const auto& [key, value] : gj.at("sq").items()) {
            unsigned a = 0;
            for (char c : key) {
                if (!std::isdigit(static_cast<unsigned char>(c)) || a > 100'000'000)
                    throw rejection_error(where + ".sq: key \"" + key +
                                          "\" is not an exponent");
                a = a * 10 + static_cast<unsigned>(c - '0');
            }
            if (a < 1 || a > gens[g].degree)
                throw rejection_error(where + ".sq: exponent " + key + " outside 1.." +
                                      std::to_string(gens[g].degree));
            if (gens[g].degree + a > truncation)
                throw rejection_error(where + ".sq." + key +
                                      ": image degree exceeds the truncation; omit the entry");
            if (!value.is_string())
                throw rejection_error(where + ".sq." + key + ": image must be an expression string");
            gens[g].sq[a - 1] = parse_element_expr(value.get<std::string>(), gens, truncation,
                                                   where + ".sq." + key);
        }
        for (unsigned a = 1; a <= gens[g].degree; ++a)
            if (gens[g].degree + a > truncation) gens[g].sq[a - 1] = AlgebraElement{{}, true};
    }
    return PresentedAlgebra(std::move(gens), truncation);
}

PresentedAlgebra load_algebra_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rejection_error("cannot open \"" + path + "\"");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw rejection_error("invalid JSON in \"" + path + "\": " + e.what());
    }
    return algebra_from_json(j);
}

bool same_presentation(const PresentedAlgebra& a, const PresentedAlgebra& b) {
    if (a.truncation() != b.truncation()) return false;
    if (a.generators().size() != b.generators().size()) return false;
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const GeneratorSpec& x = a.generators()[i];
        const GeneratorSpec& y = b.generators()[i];
        if (x.name != y.name || x.degree != y.degree) return false;
        for (unsigned aa = 1; aa <= x.degree; ++aa)
            if (!(x.sq[aa - 1] == y.sq[aa - 1])) return false;
    }
    return true;
}

}
