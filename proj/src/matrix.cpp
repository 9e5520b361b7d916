#include "sympquot/matrix.hpp"

#include <stdexcept>

namespace sq {

IntMatrix IntMatrix::mul(const IntMatrix &o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix::mul: dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int &a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t> &idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_)
            throw std::out_of_range("IntMatrix::select_columns: index out of range");
        for (std::size_t i = 0; i < rows_; ++i)
            out.at(i, j) = at(i, idx[j]);
    }
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j)
        at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int &q) {
    if (q == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        at(dst, j) += q * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int &q) {
    if (q == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, dst) += q * at(i, src);
}

namespace {

Int abs_int(const Int &v) { return v < 0 ? Int(-v) : v; }

// Index (>= t in both coordinates) of a nonzero entry with the smallest
// absolute value, or nothing when the trailing block is zero.
std::optional<std::pair<std::size_t, std::size_t>>
smallest_nonzero(const IntMatrix &a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a.at(i, j) == 0)
                continue;
            Int v = abs_int(a.at(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix &m) {
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(m.rows());
    IntMatrix right = IntMatrix::identity(m.cols());
    std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        auto pivot = smallest_nonzero(a, t);
        if (!pivot)
            break;
        a.swap_rows(t, pivot->first);
        left.swap_rows(t, pivot->first);
        a.swap_cols(t, pivot->second);
        right.swap_cols(t, pivot->second);

        // Clear row t and column t; each swap-back strictly shrinks the
        // pivot's absolute value, so the loop terminates.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0)
                    continue;
                Int q = a.at(i, t) / a.at(t, t);
                a.add_row_multiple(i, t, -q);
                left.add_row_multiple(i, t, -q);
                if (a.at(i, t) != 0) {
                    a.swap_rows(t, i);
                    left.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0)
                    continue;
                Int q = a.at(t, j) / a.at(t, t);
                a.add_col_multiple(j, t, -q);
                right.add_col_multiple(j, t, -q);
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    right.swap_cols(t, j);
                    dirty = true;
                }
            }

            if (dirty)
                continue;

            // Divisibility fix: fold a non-divisible interior entry into
            // row t and re-run the elimination; the pivot drops to a gcd.
            for (std::size_t i = t + 1; i < a.rows() && !dirty; ++i)
                for (std::size_t j = t + 1; j < a.cols() && !dirty; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row_multiple(t, i, Int(1));
                        left.add_row_multiple(t, i, Int(1));
                        dirty = true;
                    }
        }
    }

    SmithResult out;
    for (std::size_t t = 0; t < n; ++t) {
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            left.negate_row(t);
        }
        if (a.at(t, t) != 0)
            out.diag.push_back(a.at(t, t));
    }
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

Int determinant(const IntMatrix &m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;

    // Bareiss fraction-free elimination; every division below is exact.
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_with = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with == n)
                return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::optional<Int> isotropy_order(const IntMatrix &weight_columns) {
    SmithResult snf = smith_normal_form(weight_columns);
    if (snf.diag.size() < weight_columns.rows())
        return std::nullopt;
    Int order = 1;
    for (const Int &d : snf.diag)
        order *= d;
    return order;
}

std::vector<Z2iElem> Z2iMatrix::apply(const std::vector<Z2iElem> &v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("Z2iMatrix::apply: dimension mismatch");
    std::vector<Z2iElem> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Z2iElem acc;
        for (std::size_t j = 0; j < cols_; ++j)
            acc = acc + at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<std::vector<Z2iElem>> kernel_over_Z2i(const Z2iMatrix &m) {
    if (m.cols() > 8)
        throw std::invalid_argument("kernel_over_Z2i: enumeration bound is 8 columns");
    std::vector<std::vector<Z2iElem>> kernel;
    std::uint64_t total = std::uint64_t(1) << (2 * m.cols());
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Z2iElem> v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            unsigned bits = (code >> (2 * j)) & 3u;
            v[j] = Z2iElem(bits & 1u, (bits >> 1) & 1u);
        }
        std::vector<Z2iElem> image = m.apply(v);
        bool zero = true;
        for (const Z2iElem &e : image)
            if (!e.is_zero()) {
                zero = false;
                break;
            }
        if (zero)
            kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace sq
