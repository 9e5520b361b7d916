#pragma once
// Exact integer matrices with Smith normal form, determinants, and the
// torus-isotropy order derived from weight columns; plus small matrices
// over Z[i]/2 with kernels found by exhaustive enumeration.
#include "sympquot/exact.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sq {

// Dense matrix of arbitrary-precision integers, row-major storage.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m.at(k, k) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int &at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntMatrix mul(const IntMatrix &o) const;
    IntMatrix transpose() const;
    IntMatrix select_columns(const std::vector<std::size_t> &idx) const;

    bool operator==(const IntMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const IntMatrix &o) const { return !(*this == o); }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);
    // row[dst] += q * row[src], and the column analogue.
    void add_row_multiple(std::size_t dst, std::size_t src, const Int &q);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int &q);

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

struct SmithResult {
    std::vector<Int> diag; // positive invariant factors, d[k] | d[k+1]
    IntMatrix left;        // unimodular, rows x rows
    IntMatrix right;       // unimodular, cols x cols
};

// Diagonalizes an integer matrix by repeated gcd elimination, accumulating
// unimodular row and column transforms: left * m * right is diagonal with
// the entries of diag (padded by zeros), and consecutive entries divide.
SmithResult smith_normal_form(const IntMatrix &m);

// Exact determinant of a square integer matrix (fraction-free elimination).
Int determinant(const IntMatrix &m);

// Order of the kernel of the torus map determined by weight columns: the
// character lattice map Z^rows -> Z^cols dualizes to (C*)^rows -> (C*)^cols,
// and the kernel is finite exactly when the columns have full row rank, in
// which case its order is the product of the invariant factors. Returns
// nullopt when the kernel is infinite (e.g. for an empty column set).
std::optional<Int> isotropy_order(const IntMatrix &weight_columns);

// Dense matrix over Z[i]/2.
class Z2iMatrix {
  public:
    Z2iMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Z2iMatrix identity(std::size_t n) {
        Z2iMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m.at(k, k) = Z2iElem(1, 0);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Z2iElem &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Z2iElem &at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::vector<Z2iElem> apply(const std::vector<Z2iElem> &v) const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Z2iElem> entries_;
};

// All vectors v over Z[i]/2 with m * v = 0, found by enumerating the 4^cols
// candidates in a fixed order. Refuses more than 8 columns.
std::vector<std::vector<Z2iElem>> kernel_over_Z2i(const Z2iMatrix &m);

} // namespace sq
