#include "obstrukt/algebra.hpp"

#include <algorithm>
#include <string>

#include "obstrukt/errors.hpp"

namespace obk {

/******************************* elements *******************************/

int mono_cmp(const Monomial& a, const Monomial& b) {
    // lex-descending on the dense exponent vector: a nonzero exponent at an
    // earlier generator slot wins, then the larger exponent wins
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const auto& [ga, ea] = a.factors[i];
        const auto& [gb, eb] = b.factors[j];
        if (ga != gb) return ga < gb ? -1 : 1;
        if (ea != eb) return ea > eb ? -1 : 1;
        ++i;
        ++j;
    }
    if (i < a.factors.size()) return -1;
    if (j < b.factors.size()) return 1;
    return 0;
}

namespace {

bool mono_less(const Monomial& a, const Monomial& b) { return mono_cmp(a, b) < 0; }

} // namespace

void canonicalize(std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end(), mono_less);
    std::vector<Monomial> out;
    out.reserve(ms.size());
    for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if ((j - i) % 2) out.push_back(ms[i]);
        i = j;
    }
    ms.swap(out);
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j >= b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first))
            r.factors.push_back(a.factors[i++]);
        else if (i >= a.factors.size() || b.factors[j].first < a.factors[i].first)
            r.factors.push_back(b.factors[j++]);
        else {
            r.factors.push_back({a.factors[i].first, a.factors[i].second + b.factors[j].second});
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

AlgebraElement zero_element() { return {}; }

AlgebraElement one_element() { return AlgebraElement{{Monomial{}}, false}; }

AlgebraElement monomial_element(Monomial m) { return AlgebraElement{{std::move(m)}, false}; }

AlgebraElement generator_element(std::uint32_t gen_index) {
    return monomial_element(Monomial{{{gen_index, 1}}});
}

AlgebraElement element_add(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    r.monos = x.monos;
    r.monos.insert(r.monos.end(), y.monos.begin(), y.monos.end());
    canonicalize(r.monos);
    r.truncated = x.truncated || y.truncated;
    return r;
}

/*************************** presented algebra ***************************/

PresentedAlgebra::PresentedAlgebra(std::vector<GeneratorSpec> gens, unsigned truncation)
    : gens_(std::move(gens)), truncation_(truncation) {
    validate();
    build_bases();
}

int PresentedAlgebra::find_generator(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

unsigned PresentedAlgebra::mono_degree(const Monomial& m) const {
    unsigned d = 0;
    for (const auto& [g, e] : m.factors) d += gens_[g].degree * e;
    return d;
}

bool PresentedAlgebra::homogeneous(const AlgebraElement& x) const {
    for (const Monomial& m : x.monos)
        if (mono_degree(m) != mono_degree(x.monos.front())) return false;
    return true;
}

unsigned PresentedAlgebra::element_degree(const AlgebraElement& x) const {
    if (x.is_zero()) return 0;
    if (!homogeneous(x)) throw rejection_error("element is not homogeneous");
    return mono_degree(x.monos.front());
}

void PresentedAlgebra::validate() const {
    if (truncation_ < 1) throw rejection_error("truncation degree must be positive");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const GeneratorSpec& g = gens_[i];
        if (g.name.empty()) throw rejection_error("generator names must be nonempty");
        for (char c : g.name)
            if (c == ' ' || c == '\t' || c == '+' || c == '*' || c == '^')
                throw rejection_error("generator '" + g.name + "': name contains a reserved character");
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[j].name == g.name)
                throw rejection_error("duplicate generator name '" + g.name + "'");
        if (g.degree < 1) throw rejection_error("generator '" + g.name + "': degree must be positive");
        if (g.sq.size() != g.degree)
            throw rejection_error("generator '" + g.name + "': action table must have one entry per exponent 1.." +
                                  std::to_string(g.degree));
        for (unsigned a = 1; a <= g.degree; ++a) {
            const AlgebraElement& img = g.sq[a - 1];
            for (const Monomial& m : img.monos) {
                unsigned d = 0;
                for (const auto& [gi, e] : m.factors) {
                    if (gi >= gens_.size())
                        throw rejection_error("generator '" + g.name + "': Sq^" + std::to_string(a) +
                                              " image uses an unknown generator index");
                    if (e == 0)
                        throw rejection_error("generator '" + g.name + "': zero exponent stored in a monomial");
                    d += gens_[gi].degree * e;
                }
                if (d != g.degree + a)
                    throw rejection_error("generator '" + g.name + "': Sq^" + std::to_string(a) +
                                          " image is not homogeneous of degree " +
                                          std::to_string(g.degree + a));
                if (d > truncation_)
                    throw rejection_error("generator '" + g.name + "': Sq^" + std::to_string(a) +
                                          " image exceeds the truncation degree");
            }
        }
        // instability top condition: the stored Sq^degree must be the square
        if (2 * g.degree <= truncation_) {
            Monomial sq_mono{{{static_cast<std::uint32_t>(i), 2}}};
            const AlgebraElement& top = g.sq[g.degree - 1];
            if (!(top.monos.size() == 1 && top.monos[0] == sq_mono))
                throw rejection_error("generator '" + g.name + "': Sq^" + std::to_string(g.degree) +
                                      " must equal the generator's square");
        } else if (!g.sq[g.degree - 1].is_zero()) {
            throw rejection_error("generator '" + g.name + "': top square lies above the truncation and must be stored as (flagged) zero");
        }
    }
}

namespace {

void enumerate_degree(const std::vector<GeneratorSpec>& gens, unsigned n, std::uint32_t gi,
                      Monomial& cur, std::vector<Monomial>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (gi >= gens.size()) return;
    unsigned d = gens[gi].degree;
    // highest exponent first yields the canonical lex-descending order
    for (unsigned e = n / d;; --e) {
        if (e == 0) {
            enumerate_degree(gens, n, gi + 1, cur, out);
            break;
        }
        cur.factors.push_back({gi, e});
        enumerate_degree(gens, n - e * d, gi + 1, cur, out);
        cur.factors.pop_back();
    }
}

} // namespace

void PresentedAlgebra::build_bases() {
    bases_.resize(truncation_ + 1);
    for (unsigned n = 0; n <= truncation_; ++n) {
        bases_[n].degree = n;
        Monomial cur;
        enumerate_degree(gens_, n, 0, cur, bases_[n].monomials);
    }
}

const DegreeBasis& PresentedAlgebra::basis(unsigned n) const {
    if (n > truncation_)
        throw rejection_error("degree " + std::to_string(n) + " exceeds the truncation " +
                              std::to_string(truncation_));
    return bases_[n];
}

AlgebraElement PresentedAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement r;
    r.truncated = x.truncated || y.truncated;
    for (const Monomial& a : x.monos)
        for (const Monomial& b : y.monos) {
            Monomial m = mono_mul(a, b);
            if (mono_degree(m) > truncation_) {
                r.truncated = true;
                continue;
            }
            r.monos.push_back(std::move(m));
        }
    canonicalize(r.monos);
    return r;
}

AlgebraElement PresentedAlgebra::square(const AlgebraElement& x) const {
    // Frobenius over F2: no cross terms
    AlgebraElement r;
    r.truncated = x.truncated;
    for (const Monomial& m : x.monos) {
        Monomial s = m;
        for (auto& [g, e] : s.factors) e *= 2;
        if (mono_degree(s) > truncation_) {
            r.truncated = true;
            continue;
        }
        r.monos.push_back(std::move(s));
    }
    canonicalize(r.monos);
    return r;
}

std::vector<AlgebraElement> PresentedAlgebra::gen_power_components(std::uint32_t gi,
                                                                   std::uint32_t e) const {
    const GeneratorSpec& g = gens_[gi];
    if (e == 1) {
        std::vector<AlgebraElement> t(g.degree + 1);
        t[0] = generator_element(gi);
        for (unsigned a = 1; a <= g.degree; ++a) t[a] = g.sq[a - 1];
        return t;
    }
    if (e % 2 == 0) {
        // total square of a sum is the sum of squares over F2
        std::vector<AlgebraElement> h = gen_power_components(gi, e / 2);
        std::vector<AlgebraElement> t(2 * h.size() - 1);
        for (std::size_t j = 0; j < h.size(); ++j) t[2 * j] = square(h[j]);
        return t;
    }
    std::vector<AlgebraElement> h = gen_power_components(gi, e - 1);
    std::vector<AlgebraElement> one = gen_power_components(gi, 1);
    std::vector<AlgebraElement> t(h.size() + one.size() - 1);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < one.size(); ++j)
            t[i + j] = element_add(t[i + j], multiply(h[i], one[j]));
    return t;
}

std::vector<AlgebraElement> PresentedAlgebra::total_sq_monomial(const Monomial& m) const {
    std::vector<AlgebraElement> acc{one_element()};
    for (const auto& [gi, e] : m.factors) {
        std::vector<AlgebraElement> f = gen_power_components(gi, e);
        std::vector<AlgebraElement> next(acc.size() + f.size() - 1);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j)
                next[i + j] = element_add(next[i + j], multiply(acc[i], f[j]));
        acc.swap(next);
    }
    return acc; // component a = Sq^a(m), length deg(m)+1
}

AlgebraElement PresentedAlgebra::sq(unsigned a, const AlgebraElement& x) const {
    if (a == 0) return x;
    AlgebraElement r;
    r.truncated = x.truncated;
    for (const Monomial& m : x.monos) {
        if (a > mono_degree(m)) continue; // instability
        std::vector<AlgebraElement> comps = total_sq_monomial(m);
        r = element_add(r, comps[a]);
    }
    return r;
}

std::vector<AlgebraElement> PresentedAlgebra::total_sq(const AlgebraElement& x) const {
    std::size_t len = 1;
    for (const Monomial& m : x.monos) len = std::max<std::size_t>(len, mono_degree(m) + 1);
    std::vector<AlgebraElement> out(len);
    for (const Monomial& m : x.monos) {
        std::vector<AlgebraElement> comps = total_sq_monomial(m);
        for (std::size_t a = 0; a < comps.size(); ++a) out[a] = element_add(out[a], comps[a]);
    }
    return out;
}

std::optional<std::size_t> PresentedAlgebra::basis_index(const Monomial& m,
                                                         const DegreeBasis& b) const {
    auto it = std::lower_bound(b.monomials.begin(), b.monomials.end(), m, mono_less);
    if (it != b.monomials.end() && *it == m)
        return static_cast<std::size_t>(it - b.monomials.begin());
    return std::nullopt;
}

std::vector<std::uint8_t> PresentedAlgebra::coordinates(const AlgebraElement& x,
                                                        const DegreeBasis& b) const {
    std::vector<std::uint8_t> v(b.monomials.size(), 0);
    for (const Monomial& m : x.monos) {
        if (mono_degree(m) != b.degree)
            throw rejection_error("coordinates: element has a monomial of degree " +
                                  std::to_string(mono_degree(m)) + ", basis degree is " +
                                  std::to_string(b.degree));
        auto idx = basis_index(m, b);
        if (!idx) throw verify_error("coordinates: monomial missing from the complete basis");
        v[*idx] ^= 1;
    }
    return v;
}

AlgebraElement PresentedAlgebra::from_coordinates(const std::vector<std::uint8_t>& v,
                                                  const DegreeBasis& b) const {
    if (v.size() != b.monomials.size())
        throw rejection_error("from_coordinates: length mismatch");
    AlgebraElement x;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) x.monos.push_back(b.monomials[i]);
    canonicalize(x.monos);
    return x;
}

LinearMapData linear_map_data(const std::vector<AlgebraElement>& images, const PresentedAlgebra& A,
                              const DegreeBasis& target, bool parallel) {
    BitMatrix m(images.size(), target.monomials.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (!images[j].is_zero() && !A.homogeneous(images[j]))
            throw rejection_error("linear_map_data: image " + std::to_string(j) +
                                  " is not homogeneous");
        std::vector<std::uint8_t> v = A.coordinates(images[j], target);
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c]) m.set(j, c, true);
    }
    LinearMapData d{std::move(m), images.size(), target.monomials.size(), 0, 0, 0};
    d.rank = f2_rank(d.images_as_rows, parallel);
    d.image_dim = d.rank;
    d.kernel_dim = d.domain_dim - d.rank;
    return d;
}

}
