#include "obstrukt/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "obstrukt/bockstein.hpp"
#include "obstrukt/errors.hpp"
#include "obstrukt/models.hpp"
#include "obstrukt/oracle.hpp"
#include "obstrukt/series.hpp"
#include "obstrukt/spec_io.hpp"
#include "obstrukt/steenrod.hpp"
#include "obstrukt/text.hpp"
#include "obstrukt/version.hpp"

namespace obk {

namespace {

/*************************** shared plumbing ***************************/

ordered_json args_echo(const std::vector<std::string>& args) {
    ordered_json a = ordered_json::array();
    for (const std::string& s : args) a.push_back(s);
    return a;
}

void emit_ok(std::ostream& out, const std::string& cmd, const std::vector<std::string>& args,
             ordered_json result) {
    ordered_json env;
    env["command"] = cmd;
    env["version"] = OBSTRUKT_VERSION;
    env["arguments"] = args_echo(args);
    env["status"] = "ok";
    env["result"] = std::move(result);
    out << env.dump(2) << "\n";
}

int emit_error(bool json_mode, std::ostream& out, std::ostream& err, const std::string& cmd,
               const std::vector<std::string>& args, const std::string& status,
               const std::string& reason, int code) {
    if (json_mode) {
        ordered_json env;
        env["command"] = cmd.empty() ? "obstrukt" : cmd;
        env["version"] = OBSTRUKT_VERSION;
        env["arguments"] = args_echo(args);
        env["status"] = status;
        env["reasons"] = ordered_json::array({reason});
        out << env.dump(2) << "\n";
    } else {
        err << status << ": " << reason << "\n";
    }
    return code;
}

unsigned env_default(unsigned fallback) {
    const char* v = std::getenv("OBSTRUKT_MAX_DEGREE");
    if (!v || !*v) return fallback;
    unsigned long long n = 0;
    for (const char* p = v; *p; ++p) {
        if (*p < '0' || *p > '9' || n > 1'000'000'000ull)
            throw usage_error("OBSTRUKT_MAX_DEGREE must be a positive integer, got \"" +
                              std::string(v) + "\"");
        n = n * 10 + static_cast<unsigned long long>(*p - '0');
    }
    if (n == 0) throw usage_error("OBSTRUKT_MAX_DEGREE must be positive");
    return static_cast<unsigned>(n);
}

void cap(unsigned value, unsigned limit, const std::string& what) {
    if (value > limit)
        throw rejection_error(what + " = " + std::to_string(value) +
                              " is beyond the supported range (max " + std::to_string(limit) + ")");
}

std::vector<std::string> series_strings(const PoincareSeries& s) {
    std::vector<std::string> v;
    for (const BigInt& c : s.c) v.push_back(c.str());
    return v;
}

ordered_json word_json(const SqWord& w) {
    ordered_json a = ordered_json::array();
    for (unsigned i : w) a.push_back(i);
    return a;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void print_dimensions(std::ostream& out, const PresentedAlgebra& A) {
    out << "dimensions by degree:\n";
    unsigned D = A.truncation();
    for (unsigned row = 0; row <= D; row += 16) {
        unsigned end = std::min(D, row + 15);
        out << "  n  ";
        for (unsigned n = row; n <= end; ++n) out << pad(std::to_string(n), 6);
        out << "\n  dim";
        for (unsigned n = row; n <= end; ++n)
            out << pad(std::to_string(A.basis(n).monomials.size()), 6);
        out << "\n";
    }
}

void print_actions(std::ostream& out, const PresentedAlgebra& A) {
    out << "action on generators (nonzero, within the truncation):\n";
    for (const GeneratorSpec& g : A.generators())
        for (unsigned a = 1; a <= g.degree; ++a) {
            if (g.degree + a > A.truncation() || g.sq[a - 1].is_zero()) continue;
            out << "  Sq^" << a << "(" << g.name << ") = " << element_expr(g.sq[a - 1], A) << "\n";
        }
}

ordered_json dims_json(const PresentedAlgebra& A) {
    ordered_json a = ordered_json::array();
    for (unsigned n = 0; n <= A.truncation(); ++n) a.push_back(A.basis(n).monomials.size());
    return a;
}

void maybe_export(const std::string& path, const PresentedAlgebra& A, std::ostream& out,
                  bool json_mode) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw rejection_error("cannot write \"" + path + "\"");
    f << algebra_to_json(A).dump(2) << "\n";
    if (!json_mode) out << "algebra spec written to " << path << "\n";
}

/*************************** subcommands ***************************/

int cmd_adem(const std::string& word_arg, bool json, const std::vector<std::string>& args,
             std::ostream& out) {
    SqWord w = parse_word(word_arg);
    SteenrodElement red = adem_reduce(w);
    if (json) {
        ordered_json r;
        r["input"] = word_arg;
        r["word"] = word_brackets(w);
        r["admissible_input"] = is_admissible(w);
        r["dimension"] = dimension(w);
        r["reduced"] = element_brackets(red);
        r["terms"] = ordered_json::array();
        for (const SqWord& t : red.terms) r["terms"].push_back(word_json(t));
        emit_ok(out, "adem", args, std::move(r));
    } else {
        out << element_brackets(red) << "\n";
    }
    return 0;
}

int cmd_serre_gens(unsigned k, unsigned D, bool json, const std::vector<std::string>& args,
                   std::ostream& out) {
    cap(k, 16, "k");
    cap(D, 4096, "--max-degree");
    std::vector<SerreGenerator> gens = serre_generators(k, D);
    if (json) {
        ordered_json r;
        r["k"] = k;
        r["max_degree"] = D;
        r["count"] = gens.size();
        r["generators"] = ordered_json::array();
        for (const SerreGenerator& g : gens) {
            ordered_json gj;
            gj["word"] = word_json(g.word);
            gj["degree"] = g.degree;
            gj["name"] = g.name;
            r["generators"].push_back(std::move(gj));
        }
        emit_ok(out, "serre-gens", args, std::move(r));
    } else {
        out << "polynomial generators of the K(Z2," << k << ") cohomology through degree " << D
            << ":\n";
        for (const SerreGenerator& g : gens)
            out << "  degree " << pad(std::to_string(g.degree), 3) << "   "
                << pad_right(g.name, 24) << generator_display(g.name, true) << "\n";
        out << gens.size() << " generators\n";
    }
    return 0;
}

int cmd_em(unsigned k, unsigned D, const std::string& export_path, bool json,
           const std::vector<std::string>& args, std::ostream& out) {
    cap(k, 16, "k");
    cap(D, 64, "--max-degree");
    EmModel em = em_algebra(k, D);
    maybe_export(export_path, em.algebra, out, json);
    if (json) {
        ordered_json r;
        r["k"] = k;
        r["max_degree"] = D;
        r["generator_count"] = em.serre.size();
        r["dimensions"] = dims_json(em.algebra);
        r["algebra"] = algebra_to_json(em.algebra);
        if (!export_path.empty()) r["export"] = export_path;
        emit_ok(out, "em", args, std::move(r));
    } else {
        out << "K(Z2," << k << ") cohomology as an unstable algebra, truncated at degree " << D
            << "\n";
        out << "generators (" << em.serre.size() << "):\n";
        for (const SerreGenerator& g : em.serre)
            out << "  degree " << pad(std::to_string(g.degree), 3) << "   "
                << pad_right(g.name, 24) << generator_display(g.name, true) << "\n";
        print_dimensions(out, em.algebra);
        print_actions(out, em.algebra);
    }
    return 0;
}

int cmd_bo(unsigned k, unsigned D, const std::string& export_path, bool json,
           const std::vector<std::string>& args, std::ostream& out) {
    cap(k, 16, "k");
    cap(D, 64, "--max-degree");
    PresentedAlgebra bo = bo_algebra(k, D);
    maybe_export(export_path, bo, out, json);
    if (json) {
        ordered_json r;
        r["k"] = k;
        r["max_degree"] = D;
        r["dimensions"] = dims_json(bo);
        r["algebra"] = algebra_to_json(bo);
        if (!export_path.empty()) r["export"] = export_path;
        emit_ok(out, "bo", args, std::move(r));
    } else {
        out << "H*(BO(" << k << ")) = Z2[w1..w" << k << "] with the Wu action, truncated at degree "
            << D << "\n";
        print_dimensions(out, bo);
        print_actions(out, bo);
    }
    return 0;
}

int cmd_mo_check(unsigned k, unsigned dim_bound, bool json, const std::vector<std::string>& args,
                 std::ostream& out) {
    cap(k, 16, "k");
    cap(dim_bound, 64, "--dim-bound");
    MoCheckReport report = mo_vanishing_check(k, dim_bound);
    if (!report.all_passed) {
        std::string bad;
        for (const MoCheckEntry& e : report.entries)
            if (!e.sq1_vanishes || !e.square_identity) bad += " " + word_brackets(e.head);
        throw verify_error("Sq^1-vanishing or the squaring identity fails for:" + bad);
    }
    if (json) {
        ordered_json r;
        r["k"] = k;
        r["dim_bound"] = dim_bound;
        r["checked"] = report.entries.size();
        r["all_passed"] = report.all_passed;
        r["entries"] = ordered_json::array();
        for (const MoCheckEntry& e : report.entries) {
            ordered_json ej;
            ej["head"] = word_brackets(e.head);
            ej["tail"] = word_brackets(e.tail);
            ej["class_degree"] = e.class_degree;
            ej["sq1_vanishes"] = e.sq1_vanishes;
            ej["square_identity"] = e.square_identity;
            r["entries"].push_back(std::move(ej));
        }
        emit_ok(out, "mo-check", args, std::move(r));
    } else {
        out << "Sq^1-vanishing in the Thom module of MO(" << k
            << "), classes with ambient dimension bound " << dim_bound << "\n";
        for (const MoCheckEntry& e : report.entries)
            out << "  I = " << pad_right(word_brackets(e.head), 16) << " class degree "
                << pad(std::to_string(e.class_degree), 3) << "   Sq1: "
                << (e.sq1_vanishes ? "ok" : "FAIL") << "   square: "
                << (e.square_identity ? "ok" : "FAIL") << "\n";
        out << "all " << report.entries.size() << " excess-" << k << " words pass\n";
    }
    return 0;
}

int cmd_e2(unsigned k, unsigned top, bool reps, bool json, const std::vector<std::string>& args,
           std::ostream& out) {
    cap(k, 16, "k");
    cap(top, 63, "--max-degree");
    EmModel em = em_algebra(k, top + 1);
    E2Page page = e2_dimensions(em.algebra, top, reps);
    PoincareSeries predicted = browder_prediction(k, top);
    // The closed-form page model is asserted for k <= 3; beyond that the
    // generator recipe can overcount (a listed G may itself be a Sq^1
    // boundary, e.g. Sq^3 Sq^1 iota_4 = Sq^1(Sq^2 Sq^1 iota_4), killing G^2),
    // so larger k gets an honest report instead of a hard failure.
    bool match = true;
    unsigned first_off = 0;
    for (unsigned n = 0; n <= top; ++n)
        if (BigInt(page.records[n].e2) != predicted.c[n]) {
            if (k <= 3)
                throw verify_error("Sq^1-cohomology at degree " + std::to_string(n) +
                                   " has dimension " + std::to_string(page.records[n].e2) +
                                   ", predicted page has " + predicted.c[n].str());
            match = false;
            first_off = n;
            break;
        }
    if (json) {
        ordered_json r;
        r["k"] = k;
        r["max_degree"] = top;
        r["records"] = ordered_json::array();
        for (const E2DegreeRecord& rec : page.records) {
            ordered_json rj;
            rj["degree"] = rec.degree;
            rj["dim"] = rec.dim;
            rj["cycles"] = rec.cycles;
            rj["boundaries"] = rec.boundaries;
            rj["e2"] = rec.e2;
            if (reps) {
                rj["representatives"] = ordered_json::array();
                for (const AlgebraElement& x : rec.representatives)
                    rj["representatives"].push_back(element_expr(x, em.algebra));
            }
            r["records"].push_back(std::move(rj));
        }
        r["predicted"] = ordered_json::array();
        for (const BigInt& c : predicted.c) r["predicted"].push_back(c.str());
        r["match"] = match;
        emit_ok(out, "e2", args, std::move(r));
    } else {
        out << "Bockstein second page of K(Z2," << k << "), degrees 0.." << top << "\n";
        out << "  n     dim  cycles  bounds      E2  predicted\n";
        for (const E2DegreeRecord& rec : page.records) {
            out << pad(std::to_string(rec.degree), 3) << pad(std::to_string(rec.dim), 8)
                << pad(std::to_string(rec.cycles), 8) << pad(std::to_string(rec.boundaries), 8)
                << pad(std::to_string(rec.e2), 8) << pad(predicted.c[rec.degree].str(), 11) << "\n";
            if (reps && !rec.representatives.empty()) {
                out << "      representatives:";
                for (const AlgebraElement& x : rec.representatives)
                    out << "  " << element_string(x, em.algebra, true);
                out << "\n";
            }
        }
        if (match)
            out << "matches the predicted page: polynomial on the squares, exterior on their partners\n";
        else
            out << "diverges from the closed-form model from degree " << first_off
                << " on (the model is only asserted for k <= 3)\n";
    }
    return 0;
}

int cmd_certify(unsigned k, const std::string& tail_arg, unsigned D_opt, bool json,
                const std::vector<std::string>& args, std::ostream& out) {
    cap(k, 16, "k");
    SqWord J = parse_word(tail_arg);
    unsigned m = k + dimension(J);
    unsigned D = D_opt ? D_opt : std::max(env_default(24), 2 * m + 2);
    cap(D, 64, "--max-degree");
    ObstructionCertificate cert = beta_certificate(k, J, D);
    if (json) {
        ordered_json r;
        r["k"] = cert.k;
        r["tail"] = word_brackets(cert.tail);
        r["head_word"] = word_brackets(cert.head_word);
        r["class_degree"] = cert.class_degree;
        r["obstruction_degree"] = cert.obstruction_degree;
        r["ambient_bound"] = cert.ambient_bound;
        r["class"] = word_brackets(cert.head_word) + "(i_" + std::to_string(k) + ")";
        r["verified"] = ordered_json::array();
        for (const std::string& s : cert.verified) r["verified"].push_back(s);
        r["cited"] = ordered_json::array();
        for (const std::string& s : cert.cited) r["cited"].push_back(s);
        emit_ok(out, "certify", args, std::move(r));
    } else {
        EmModel em = em_algebra(k, D);
        out << "non-realizability certificate\n";
        out << "  k = " << k << "   tail J = " << word_brackets(cert.tail) << "   head word I = "
            << word_brackets(cert.head_word) << "\n";
        out << "  class y = " << class_unicode(cert.head_word, k) << " = "
            << element_string(cert.the_class, em.algebra, true) << ", degree "
            << cert.class_degree << "\n";
        out << "  obstruction: β " << class_unicode(cert.head_word, k)
            << " ≠ 0 in degree " << cert.obstruction_degree
            << " (the integral Bockstein of y is nonzero)\n";
        out << "  ambient bound " << cert.ambient_bound << ": a closed " << cert.ambient_bound
            << "-manifold carries a degree-" << k
            << " class that no codimension-" << k << " immersion realizes\n";
        out << "verified:\n";
        for (const std::string& s : cert.verified) out << "  - " << s << "\n";
        out << "cited:\n";
        for (const std::string& s : cert.cited) out << "  - " << s << "\n";
    }
    return 0;
}

int cmd_growth(unsigned k, const std::string& against, const std::string& degrees_csv,
               bool degrees_given, unsigned D, bool json, const std::vector<std::string>& args,
               std::ostream& out) {
    cap(k, 9, "k");
    cap(D, 2000, "--max-degree");
    PoincareSeries a = em_series(k, D);
    PoincareSeries b;
    std::vector<unsigned> bound_degrees;
    if (against == "mo") {
        if (degrees_given) throw usage_error("--degrees only applies with --against degrees");
        b = mo_series(k, D);
    } else if (against == "degrees") {
        if (k < 2)
            throw rejection_error("growth comparison requires k >= 2; K(Z2,1) has polynomial growth");
        if (!degrees_given) throw usage_error("--against degrees needs --degrees d1,d2,...");
        std::stringstream ss(degrees_csv);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            std::size_t i = 0;
            while (i < piece.size() && std::isspace(static_cast<unsigned char>(piece[i]))) ++i;
            std::size_t e = piece.size();
            while (e > i && std::isspace(static_cast<unsigned char>(piece[e - 1]))) --e;
            piece = piece.substr(i, e - i);
            if (piece.empty()) continue;
            unsigned long long v = 0;
            for (char c : piece) {
                if (c < '0' || c > '9' || v > 1'000'000ull)
                    throw usage_error("--degrees entries must be positive integers, got \"" +
                                      piece + "\"");
                v = v * 10 + static_cast<unsigned long long>(c - '0');
            }
            if (v == 0) throw usage_error("--degrees entries must be positive");
            bound_degrees.push_back(static_cast<unsigned>(v));
        }
        b = poly_series(bound_degrees, D);
        std::string lbl = "free algebra on degrees {";
        for (std::size_t i = 0; i < bound_degrees.size(); ++i)
            lbl += (i ? "," : "") + std::to_string(bound_degrees[i]);
        b.label = lbl + "}";
    } else {
        throw usage_error("--against must be 'mo' or 'degrees'");
    }
    std::optional<unsigned> crossing = crossing_degree(a, b);
    std::optional<unsigned> positive = positive_crossing_degree(a, b);
    if (json) {
        ordered_json r;
        r["k"] = k;
        r["against"] = against;
        if (against == "degrees") {
            r["degrees"] = ordered_json::array();
            for (unsigned d : bound_degrees) r["degrees"].push_back(d);
        }
        r["max_degree"] = D;
        r["crossing"] = crossing ? ordered_json(*crossing) : ordered_json(nullptr);
        r["crossing_positive"] = positive ? ordered_json(*positive) : ordered_json(nullptr);
        r["label_a"] = a.label;
        r["label_b"] = b.label;
        r["series_a"] = series_strings(a);
        r["series_b"] = series_strings(b);
        emit_ok(out, "growth", args, std::move(r));
    } else {
        out << "growth comparison through degree " << D << "\n";
        out << "  series a: " << a.label << "\n";
        out << "  series b: " << b.label << "\n";
        if (against == "degrees")
            out << "  a free algebra dominates every quotient sharing its generator degrees, so a\n"
                   "  crossing here rules out all finitely generated algebras on these degrees\n";
        if (crossing)
            out << "  first crossing a[N] > b[N]: N = " << *crossing << " (" << a.c[*crossing].str()
                << " > " << b.c[*crossing].str() << ")\n";
        else
            out << "  no crossing through degree " << D << "\n";
        if (positive != crossing) {
            if (positive)
                out << "  first positive-degree crossing: N = " << *positive << " ("
                    << a.c[*positive].str() << " > " << b.c[*positive].str() << ")\n";
            else
                out << "  no positive-degree crossing through degree " << D
                    << " (the degree-0 crossing is the unit against a reduced module)\n";
        }
        unsigned show = std::min(D, positive ? *positive + 2 : (crossing ? *crossing + 2 : 16u));
        show = std::min(show, 40u);
        out << "    n" << pad("a[n]", 14) << pad("b[n]", 14) << "\n";
        for (unsigned n = 0; n <= show; ++n)
            out << pad(std::to_string(n), 5) << pad(a.c[n].str(), 14) << pad(b.c[n].str(), 14)
                << (crossing && *crossing == n ? "   <- crossing" : "") << "\n";
        if (show < D) out << "  (coefficients continue to degree " << D << "; full lists in --json)\n";
    }
    return 0;
}

struct OnFactor {
    bool elementary = false; // t_i power vs e_j power
    unsigned index = 0;
    unsigned exp = 1;
};

std::vector<OnFactor> parse_on(const std::string& s) {
    std::vector<OnFactor> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto number = [&]() -> unsigned {
        std::size_t start = i;
        unsigned long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<unsigned long long>(s[i] - '0');
            if (v > 1000) throw rejection_error("--on: index or exponent out of range in \"" + s + "\"");
            ++i;
        }
        if (i == start)
            throw rejection_error("--on: expected a number at position " + std::to_string(i) +
                                  " in \"" + s + "\"");
        return static_cast<unsigned>(v);
    };
    while (true) {
        skip_ws();
        OnFactor f;
        if (i < s.size() && (s[i] == 't' || s[i] == 'e')) {
            f.elementary = s[i] == 'e';
            ++i;
            f.index = number();
            if (f.index < 1) throw rejection_error("--on: indices are 1-based");
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                f.exp = number();
            }
        } else {
            throw rejection_error("--on: expected t<i> or e<j> at position " + std::to_string(i) +
                                  " in \"" + s + "\"");
        }
        out.push_back(f);
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            continue;
        }
        if (i < s.size())
            throw rejection_error("--on: unexpected character at position " + std::to_string(i) +
                                  " in \"" + s + "\"");
        break;
    }
    return out;
}

std::string omono_string(const OMono& m, unsigned vars) {
    std::string s;
    for (unsigned v = 0; v < vars; ++v) {
        if (!m.e[v]) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(v + 1);
        if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
    }
    return s.empty() ? "1" : s;
}

int cmd_oracle(const std::string& element_arg, const std::string& against_arg,
               const std::string& on_arg, unsigned vars_opt, bool json,
               const std::vector<std::string>& args, std::ostream& out) {
    SteenrodElement lhs = parse_element(element_arg);
    std::vector<OnFactor> factors;
    unsigned need_index = 0, on_degree = 0;
    if (!on_arg.empty()) {
        factors = parse_on(on_arg);
        for (const OnFactor& f : factors) {
            need_index = std::max(need_index, f.index);
            on_degree += (f.elementary ? f.index : 1) * f.exp;
        }
    }
    unsigned m = vars_opt;
    if (m == 0) {
        // faithful default: at least as many variables as the input degree
        m = on_arg.empty() ? 12 : std::max({need_index, on_degree, 1u});
    } else if (!on_arg.empty() && m < need_index) {
        throw rejection_error("--vars " + std::to_string(m) + " but the input references index " +
                              std::to_string(need_index));
    }
    cap(m, oracle_max_vars, "--vars");

    OPoly input = one_poly(m);
    if (on_arg.empty()) {
        input = product_of_all_vars(m);
        on_degree = m;
    } else {
        std::vector<unsigned> texp(m, 0);
        for (const OnFactor& f : factors) {
            if (f.elementary) {
                for (unsigned r = 0; r < f.exp; ++r)
                    input = poly_mul(input, elementary_symmetric(f.index, m));
            } else {
                texp[f.index - 1] += f.exp;
            }
        }
        input = poly_mul(input, var_monomial(m, texp));
    }
    unsigned input_degree = poly_degree(input);
    if (m < input_degree)
        throw rejection_error("the oracle is faithful only with at least " +
                              std::to_string(input_degree) + " variables for a degree-" +
                              std::to_string(input_degree) + " input; pass a larger --vars");

    std::string on_shown = on_arg.empty() ? "t1*...*t" + std::to_string(m) : on_arg;
    if (against_arg.empty()) {
        OPoly result = element_action(lhs, input);
        if (json) {
            ordered_json r;
            r["element"] = element_brackets(lhs);
            r["vars"] = m;
            r["on"] = on_shown;
            r["result_degree"] = poly_degree(result);
            r["result_terms"] = ordered_json::array();
            for (const OMono& mono : result.monos)
                r["result_terms"].push_back(omono_string(mono, m));
            emit_ok(out, "oracle", args, std::move(r));
        } else {
            out << "action of " << element_brackets(lhs) << " on " << on_shown << " in Z2[t1..t"
                << m << "]\n";
            out << "  " << result.monos.size() << " monomials";
            if (!result.is_zero()) out << ", degree " << poly_degree(result);
            out << "\n";
            std::size_t shown = std::min<std::size_t>(result.monos.size(), 40);
            for (std::size_t i = 0; i < shown; ++i)
                out << "  " << omono_string(result.monos[i], m) << "\n";
            if (shown < result.monos.size())
                out << "  ... (" << result.monos.size() - shown << " more)\n";
        }
    } else {
        SteenrodElement rhs = parse_element(against_arg);
        OPoly la = element_action(lhs, input);
        OPoly ra = element_action(rhs, input);
        bool equal = la == ra;
        if (json) {
            ordered_json r;
            r["element"] = element_brackets(lhs);
            r["against"] = element_brackets(rhs);
            r["vars"] = m;
            r["on"] = on_shown;
            r["equal"] = equal;
            r["lhs_terms"] = la.monos.size();
            r["rhs_terms"] = ra.monos.size();
            emit_ok(out, "oracle", args, std::move(r));
        } else {
            out << "comparing " << element_brackets(lhs) << " with " << element_brackets(rhs)
                << " on " << on_shown << " in Z2[t1..t" << m << "]\n";
            if (equal)
                out << "  actions agree (" << la.monos.size() << " monomials)\n";
            else
                out << "  actions differ: " << la.monos.size() << " vs " << ra.monos.size()
                    << " monomials\n";
        }
    }
    return 0;
}

} // namespace

/*************************** dispatcher ***************************/

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();
    std::string active;
    try {
        CLI::App app{"mod-2 Steenrod algebra obstruction calculator"};
        app.name("obstrukt");
        app.set_version_flag("--version", OBSTRUKT_VERSION);
        app.require_subcommand(0, 1);
        int exit_code = 0;

        auto* adem = app.add_subcommand("adem", "reduce a Sq word to the admissible basis");
        std::string adem_word;
        bool adem_json = false;
        adem->add_option("word", adem_word, "word like \"Sq1 Sq2\" or \"Sq[3,1]\"")->required();
        adem->add_flag("--json", adem_json, "machine-readable report");
        adem->callback([&] {
            active = "adem";
            exit_code = cmd_adem(adem_word, adem_json, args, out);
        });

        auto* sg = app.add_subcommand("serre-gens",
                                      "polynomial generators of the K(Z2,k) cohomology");
        unsigned sg_k = 0, sg_d = 0;
        bool sg_json = false;
        sg->add_option("--k", sg_k, "fundamental class degree")->required()
            ->check(CLI::PositiveNumber);
        sg->add_option("--max-degree", sg_d, "truncation degree")->check(CLI::PositiveNumber);
        sg->add_flag("--json", sg_json, "machine-readable report");
        sg->callback([&] {
            active = "serre-gens";
            if (sg_d == 0) sg_d = env_default(24);
            exit_code = cmd_serre_gens(sg_k, sg_d, sg_json, args, out);
        });

        auto* em = app.add_subcommand("em", "the K(Z2,k) cohomology as an unstable algebra");
        unsigned em_k = 0, em_d = 0;
        std::string em_export;
        bool em_json = false;
        em->add_option("--k", em_k, "fundamental class degree")->required()
            ->check(CLI::PositiveNumber);
        em->add_option("--max-degree", em_d, "truncation degree")->check(CLI::PositiveNumber);
        em->add_option("--export", em_export, "write the algebra spec to this file");
        em->add_flag("--json", em_json, "machine-readable report");
        em->callback([&] {
            active = "em";
            if (em_d == 0) em_d = env_default(24);
            exit_code = cmd_em(em_k, em_d, em_export, em_json, args, out);
        });

        auto* bo = app.add_subcommand("bo", "Z2[w1..wk] with the Wu action");
        unsigned bo_k = 0, bo_d = 0;
        std::string bo_export;
        bool bo_json = false;
        bo->add_option("--k", bo_k, "bundle rank")->required()->check(CLI::PositiveNumber);
        bo->add_option("--max-degree", bo_d, "truncation degree")->check(CLI::PositiveNumber);
        bo->add_option("--export", bo_export, "write the algebra spec to this file");
        bo->add_flag("--json", bo_json, "machine-readable report");
        bo->callback([&] {
            active = "bo";
            if (bo_d == 0) bo_d = env_default(24);
            exit_code = cmd_bo(bo_k, bo_d, bo_export, bo_json, args, out);
        });

        auto* mo = app.add_subcommand("mo-check",
                                      "Sq^1-vanishing of the excess-k classes in the Thom module");
        unsigned mo_k = 0, mo_bound = 25;
        bool mo_json = false;
        mo->add_option("--k", mo_k, "codimension")->required()->check(CLI::PositiveNumber);
        mo->add_option("--dim-bound", mo_bound, "ambient dimension bound (default 25)")
            ->check(CLI::PositiveNumber);
        mo->add_flag("--json", mo_json, "machine-readable report");
        mo->callback([&] {
            active = "mo-check";
            exit_code = cmd_mo_check(mo_k, mo_bound, mo_json, args, out);
        });

        auto* e2 = app.add_subcommand("e2", "Sq^1-cohomology of the K(Z2,k) model");
        unsigned e2_k = 0, e2_top = 0;
        bool e2_json = false, e2_reps = false;
        e2->add_option("--k", e2_k, "fundamental class degree")->required()
            ->check(CLI::PositiveNumber);
        e2->add_option("--max-degree", e2_top, "top degree of the page")
            ->check(CLI::PositiveNumber);
        e2->add_flag("--reps", e2_reps, "list cycle representatives");
        e2->add_flag("--json", e2_json, "machine-readable report");
        e2->callback([&] {
            active = "e2";
            if (e2_top == 0) e2_top = env_default(24);
            exit_code = cmd_e2(e2_k, e2_top, e2_reps, e2_json, args, out);
        });

        auto* certify = app.add_subcommand("certify", "non-realizability certificate for a class");
        unsigned ct_k = 0, ct_d = 0;
        std::string ct_tail;
        bool ct_json = false;
        certify->add_option("--k", ct_k, "class degree")->required()->check(CLI::PositiveNumber);
        certify->add_option("--tail", ct_tail, "tail word J, e.g. \"Sq[2,1]\" (default empty)");
        certify->add_option("--max-degree", ct_d, "model truncation (default: as needed)")
            ->check(CLI::PositiveNumber);
        certify->add_flag("--json", ct_json, "machine-readable certificate");
        certify->callback([&] {
            active = "certify";
            exit_code = cmd_certify(ct_k, ct_tail, ct_d, ct_json, args, out);
        });

        auto* growth = app.add_subcommand("growth", "Poincare series comparison");
        unsigned gr_k = 0, gr_d = 0;
        std::string gr_against = "mo", gr_degrees;
        bool gr_json = false;
        growth->add_option("--k", gr_k, "fundamental class degree")->required()
            ->check(CLI::PositiveNumber);
        growth->add_option("--against", gr_against, "mo (default) or degrees");
        auto* gr_deg_opt = growth->add_option("--degrees", gr_degrees,
                                              "generator degrees d1,d2,... for --against degrees");
        growth->add_option("--max-degree", gr_d, "comparison range")->check(CLI::PositiveNumber);
        growth->add_flag("--json", gr_json, "machine-readable report");
        growth->callback([&] {
            active = "growth";
            if (gr_d == 0) gr_d = env_default(60);
            exit_code = cmd_growth(gr_k, gr_against, gr_degrees, gr_deg_opt->count() > 0, gr_d,
                                   gr_json, args, out);
        });

        auto* oracle = app.add_subcommand("oracle",
                                          "independent splitting-principle referee for Sq actions");
        std::string or_element, or_against, or_on;
        unsigned or_vars = 0;
        bool or_json = false;
        oracle->add_option("element", or_element, "Steenrod element, e.g. \"Sq1 Sq2 + Sq3\"")
            ->required();
        oracle->add_option("--against", or_against, "second element to compare as an operation");
        oracle->add_option("--on", or_on, "input monomial, e.g. \"t1*t2^2\" or \"e2^3\" "
                                          "(default t1*...*tm)");
        oracle->add_option("--vars", or_vars, "variable count m (default: chosen faithfully)");
        oracle->add_flag("--json", or_json, "machine-readable report");
        oracle->callback([&] {
            active = "oracle";
            exit_code = cmd_oracle(or_element, or_against, or_on, or_vars, or_json, args, out);
        });

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            CLI::App* where = &app;
            while (!where->get_subcommands().empty()) where = where->get_subcommands().front();
            out << where->help();
            return 0;
        } catch (const CLI::CallForVersion&) {
            out << OBSTRUKT_VERSION << "\n";
            return 0;
        } catch (const CLI::ParseError& e) {
            return emit_error(json_mode, out, err, active, args, "usage", e.what(), 3);
        }
        if (app.get_subcommands().empty()) {
            out << app.help();
            return 0;
        }
        return exit_code;
    } catch (const usage_error& e) {
        return emit_error(json_mode, out, err, active, args, "usage", e.what(), 3);
    } catch (const limit_error& e) {
        return emit_error(json_mode, out, err, active, args, "failed", e.what(), 2);
    } catch (const verify_error& e) {
        return emit_error(json_mode, out, err, active, args, "failed", e.what(), 2);
    } catch (const rejection_error& e) {
        return emit_error(json_mode, out, err, active, args, "rejected", e.what(), 1);
    } catch (const std::exception& e) {
        return emit_error(json_mode, out, err, active, args, "failed",
                          std::string("internal error: ") + e.what(), 2);
    }
}

}
