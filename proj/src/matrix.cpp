#include "grr/matrix.hpp"

#include <algorithm>
#include <optional>

#include "grr/errors.hpp"

namespace grr {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Int>>& rows, size_t cols) {
    Mat m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error("DimensionMismatch", "row length does not match column count");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> Mat::row(size_t i) const {
    std::vector<Int> v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::set_row(size_t i, const std::vector<Int>& v) {
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw Error("DimensionMismatch", "matrix product shape mismatch");
    Mat p(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += x * rhs.at(k, j);
        }
    return p;
}

void Mat::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void Mat::negate_row(size_t i) {
    for (size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void Mat::row_axpy(size_t i, size_t j, const Int& c) {
    for (size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void Mat::col_axpy(size_t i, size_t j, const Int& c) {
    for (size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void Mat::truncate_rows(size_t r) {
    rows_ = r;
    a_.resize(r * cols_);
}

namespace {

// Position of the entry with minimal nonzero absolute value in the trailing
// submatrix a[t.., t..], if any.
std::optional<std::pair<size_t, size_t>> min_nonzero_from(const Mat& a, size_t t) {
    std::optional<std::pair<size_t, size_t>> best;
    Int best_abs;
    for (size_t i = t; i < a.rows(); ++i)
        for (size_t j = t; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Int v = abs(a.at(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

} // namespace

SnfDecomposition smith_normal_form(const Mat& a) {
    SnfDecomposition d{a, Mat::identity(a.rows()), Mat::identity(a.cols())};
    Mat& s = d.s;
    Mat& u = d.u;
    Mat& v = d.v;

    const size_t steps = std::min(s.rows(), s.cols());
    for (size_t t = 0; t < steps; ++t) {
        bool trailing_zero = false;
        for (;;) {
            auto piv = min_nonzero_from(s, t);
            if (!piv) {
                trailing_zero = true;
                break;
            }
            s.swap_rows(t, piv->first);
            u.swap_rows(t, piv->first);
            s.swap_cols(t, piv->second);
            v.swap_cols(t, piv->second);

            // Clear column t below the pivot and row t to its right.  The
            // pivot has minimal absolute value, so remainders shrink and the
            // loop terminates.
            bool clean = true;
            for (size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t);
                s.row_axpy(i, t, -q);
                u.row_axpy(i, t, -q);
                if (s.at(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                s.col_axpy(j, t, -q);
                v.col_axpy(j, t, -q);
                if (s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce the divisibility chain: drag a bad entry into row t.
            bool repaired = false;
            for (size_t i = t + 1; i < s.rows() && !repaired; ++i)
                for (size_t j = t + 1; j < s.cols() && !repaired; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        s.row_axpy(t, i, 1);
                        u.row_axpy(t, i, 1);
                        repaired = true;
                    }
            if (!repaired) break;
        }
        if (trailing_zero) break;
        if (s.at(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return d;
}

std::vector<Int> snf_diagonal(const Mat& a) {
    Mat s = smith_normal_form(a).s;
    std::vector<Int> diag(std::min(s.rows(), s.cols()));
    for (size_t i = 0; i < diag.size(); ++i) diag[i] = s.at(i, i);
    return diag;
}

Mat hermite_normal_form(const Mat& a) {
    Mat h = a;
    size_t r = 0;
    for (size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // Euclid on column c among rows >= r until one nonzero survives.
        for (;;) {
            size_t best = h.rows();
            Int best_abs;
            for (size_t i = r; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Int v = abs(h.at(i, c));
                if (best == h.rows() || v < best_abs) {
                    best = i;
                    best_abs = v;
                }
            }
            if (best == h.rows()) break;
            h.swap_rows(r, best);
            bool clean = true;
            for (size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = h.at(i, c) / h.at(r, c);
                h.row_axpy(i, r, -q);
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) h.negate_row(r);
        // Entries above the pivot land in [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            if (q != 0) h.row_axpy(i, r, -q);
        }
        ++r;
    }
    h.truncate_rows(r);
    return h;
}

size_t lattice_rank(const Mat& a) {
    return hermite_normal_form(a).rows();
}

Mat stack(const Mat& top, const Mat& bottom) {
    if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
        throw Error("DimensionMismatch", "stacked matrices must share column count");
    const size_t cols = top.rows() != 0 || bottom.rows() == 0 ? top.cols() : bottom.cols();
    Mat s(top.rows() + bottom.rows(), cols);
    for (size_t i = 0; i < top.rows(); ++i)
        for (size_t j = 0; j < cols; ++j) s.at(i, j) = top.at(i, j);
    for (size_t i = 0; i < bottom.rows(); ++i)
        for (size_t j = 0; j < cols; ++j) s.at(top.rows() + i, j) = bottom.at(i, j);
    return s;
}

namespace {

size_t snf_rank(const Mat& s) {
    size_t r = 0;
    const size_t n = std::min(s.rows(), s.cols());
    while (r < n && s.at(r, r) != 0) ++r;
    return r;
}

} // namespace

Mat left_kernel(const Mat& m) {
    SnfDecomposition d = smith_normal_form(m);
    const size_t rank = snf_rank(d.s);
    Mat k(m.rows() - rank, m.rows());
    for (size_t i = rank; i < m.rows(); ++i)
        for (size_t j = 0; j < m.rows(); ++j) k.at(i - rank, j) = d.u.at(i, j);
    return k;
}

Mat right_kernel(const Mat& m) {
    SnfDecomposition d = smith_normal_form(m);
    const size_t rank = snf_rank(d.s);
    Mat k(m.cols() - rank, m.cols());
    for (size_t j = rank; j < m.cols(); ++j)
        for (size_t i = 0; i < m.cols(); ++i) k.at(j - rank, i) = d.v.at(i, j);
    return k;
}

Mat saturation(const Mat& a) {
    if (a.rows() == 0) return Mat(0, a.cols());
    // Double orthogonal complement: the kernel rows coming out of a
    // unimodular factor are automatically a saturated lattice.
    return hermite_normal_form(right_kernel(right_kernel(a)));
}

Mat lattice_intersection(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols())
        throw Error("DimensionMismatch", "lattices live in different ambient ranks");
    const size_t k = a.cols();
    if (a.rows() == 0 || b.rows() == 0) return Mat(0, k);
    Mat st = stack(a, b);
    Mat ker = left_kernel(st);
    Mat gens(ker.rows(), k);
    for (size_t w = 0; w < ker.rows(); ++w)
        for (size_t i = 0; i < a.rows(); ++i) {
            const Int& c = ker.at(w, i);
            if (c == 0) continue;
            for (size_t j = 0; j < k; ++j) gens.at(w, j) += c * a.at(i, j);
        }
    return hermite_normal_form(gens);
}

std::optional<std::vector<Int>> coords_in_hnf(const Mat& h, std::vector<Int> v) {
    if (v.size() != h.cols()) throw Error("DimensionMismatch", "vector length mismatch");
    std::vector<Int> coef(h.rows());
    for (size_t r = 0; r < h.rows(); ++r) {
        size_t c = 0;
        while (c < h.cols() && h.at(r, c) == 0) ++c;
        if (c == h.cols()) continue;
        if (v[c] % h.at(r, c) != 0) return std::nullopt;
        Int q = v[c] / h.at(r, c);
        coef[r] = q;
        if (q != 0)
            for (size_t j = 0; j < h.cols(); ++j) v[j] -= q * h.at(r, j);
    }
    for (const Int& x : v)
        if (x != 0) return std::nullopt;
    return coef;
}

Int determinant(const Mat& a) {
    if (a.rows() != a.cols()) throw Error("DimensionMismatch", "determinant of non-square matrix");
    const size_t n = a.rows();
    if (n == 0) return 1;
    Mat m = a;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t swap = k + 1;
            while (swap < n && m.at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev; // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

} // namespace grr
