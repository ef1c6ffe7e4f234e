#include "obstrukt/f2.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace obk {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (words_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = words_[r * wpr_ + c / 64];
    std::uint64_t bit = std::uint64_t(1) << (c % 64);
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = words_.data() + dst * wpr_;
    const std::uint64_t* s = words_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(words_.begin() + a * wpr_, words_.begin() + (a + 1) * wpr_,
                     words_.begin() + b * wpr_);
}

bool BitMatrix::row_zero(std::size_t r) const {
    const std::uint64_t* d = words_.data() + r * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i)
        if (d[i]) return false;
    return true;
}

EchelonForm echelonize(BitMatrix m, bool parallel) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !m.get(p, c)) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
#ifdef _OPENMP
        if (parallel) {
            const long long n = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
            for (long long i = static_cast<long long>(r) + 1; i < n; ++i)
                if (m.get(static_cast<std::size_t>(i), c))
                    m.xor_rows(static_cast<std::size_t>(i), r);
        } else
#else
        (void)parallel;
#endif
        {
            for (std::size_t i = r + 1; i < rows; ++i)
                if (m.get(i, c)) m.xor_rows(i, r);
        }
        pivots.push_back(c);
        ++r;
    }
    // trim zero rows
    BitMatrix kept(pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t w = 0; w < m.words_per_row(); ++w)
            kept.row_data(i)[w] = m.row_data(i)[w];
    return EchelonForm{std::move(kept), std::move(pivots)};
}

std::size_t f2_rank(const BitMatrix& m, bool parallel) {
    return echelonize(m, parallel).rank();
}

std::vector<std::uint8_t> reduce_by_rows(const EchelonForm& e, std::vector<std::uint8_t> v) {
    if (v.size() != e.mat.cols())
        throw std::invalid_argument("reduce_by_rows: length mismatch");
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (v[e.pivot_cols[i]]) {
            for (std::size_t c = 0; c < v.size(); ++c)
                v[c] ^= static_cast<std::uint8_t>(e.mat.get(i, c));
        }
    }
    return v;
}

bool in_row_span(const EchelonForm& e, const std::vector<std::uint8_t>& v) {
    std::vector<std::uint8_t> r = reduce_by_rows(e, v);
    return std::all_of(r.begin(), r.end(), [](std::uint8_t x) { return x == 0; });
}

std::vector<std::vector<std::uint8_t>> left_kernel(const BitMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // eliminate on the image columns while dragging an identity block along
    BitMatrix aug(rows, cols + rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug.set(r, c, m.get(r, c));
        aug.set(r, cols + r, true);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !aug.get(p, c)) ++p;
        if (p == rows) continue;
        aug.swap_rows(r, p);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && aug.get(i, c)) aug.xor_rows(i, r);
        ++r;
    }
    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t i = r; i < rows; ++i) {
        std::vector<std::uint8_t> comb(rows, 0);
        for (std::size_t j = 0; j < rows; ++j) comb[j] = aug.get(i, cols + j);
        basis.push_back(std::move(comb));
    }
    return basis;
}

std::size_t naive_rank(NaiveMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !m.at(p, c)) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t cc = 0; cc < cols; ++cc) std::swap(m.at(r, cc), m.at(p, cc));
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m.at(i, c))
                for (std::size_t cc = 0; cc < cols; ++cc) m.at(i, cc) ^= m.at(r, cc);
        ++r;
    }
    return r;
}

NaiveMatrix to_naive(const BitMatrix& m) {
    NaiveMatrix n(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) n.at(r, c) = m.get(r, c);
    return n;
}

}
