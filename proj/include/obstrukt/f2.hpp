#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>

namespace obk {

// Bit-packed matrix over F2, row major. Rows hold images of domain basis
// vectors throughout this codebase (the transpose of the column picture;
// rank and span are unaffected).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    void xor_rows(std::size_t dst, std::size_t src); // row dst ^= row src
    void swap_rows(std::size_t a, std::size_t b);
    bool row_zero(std::size_t r) const;

    const std::uint64_t* row_data(std::size_t r) const { return words_.data() + r * wpr_; }
    std::uint64_t* row_data(std::size_t r) { return words_.data() + r * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

struct EchelonForm {
    BitMatrix mat;                        // rows in echelon order, zero rows trimmed
    std::vector<std::size_t> pivot_cols;  // pivot column of each kept row
    std::size_t rank() const { return pivot_cols.size(); }
};

// Forward elimination. parallel toggles the OpenMP row-elimination loop;
// results are identical either way (independent XORs).
EchelonForm echelonize(BitMatrix m, bool parallel = false);
std::size_t f2_rank(const BitMatrix& m, bool parallel = false);

// Is v (dense 0/1, length cols) in the row span?
bool in_row_span(const EchelonForm& e, const std::vector<std::uint8_t>& v);
// Reduce v against the echelon rows; v is in the span iff the result is zero.
std::vector<std::uint8_t> reduce_by_rows(const EchelonForm& e, std::vector<std::uint8_t> v);

// Basis of { x : sum_i x_i * row_i = 0 } (combinations of rows that vanish).
std::vector<std::vector<std::uint8_t>> left_kernel(const BitMatrix& m);

// Byte-per-entry reference implementation, deliberately naive and serial.
// Kept as the cross-check for the packed kernels.
class NaiveMatrix {
public:
    NaiveMatrix() = default;
    NaiveMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<std::uint8_t>(cols, 0)) {}
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return a_[r][c]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::uint8_t>> a_;
};

std::size_t naive_rank(NaiveMatrix m);
NaiveMatrix to_naive(const BitMatrix& m);

}
