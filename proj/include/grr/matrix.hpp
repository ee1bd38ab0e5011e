#ifndef GRR_MATRIX_HPP
#define GRR_MATRIX_HPP

#include <optional>
#include <vector>

#include "grr/bigint.hpp"

namespace grr {

// Dense integer matrix, row-major.  A lattice in Z^k is stored as a matrix
// whose rows generate it; the canonical form of a lattice is its row-style
// Hermite normal form (positive pivots strictly moving right, entries above
// each pivot reduced into [0, pivot), zero rows dropped).
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(size_t n);
    static Mat from_rows(const std::vector<std::vector<Int>>& rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Int> row(size_t i) const;
    void set_row(size_t i, const std::vector<Int>& v);

    Mat transpose() const;
    Mat operator*(const Mat& rhs) const;
    bool operator==(const Mat& rhs) const = default;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void negate_row(size_t i);
    // row i += c * row j
    void row_axpy(size_t i, size_t j, const Int& c);
    // col i += c * col j
    void col_axpy(size_t i, size_t j, const Int& c);
    void truncate_rows(size_t r);

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Int> a_;
};

// U * A * V = S with U, V unimodular and S diagonal, nonnegative,
// s_1 | s_2 | ... .  Empty matrices yield empty/identity factors.
struct SnfDecomposition {
    Mat s;
    Mat u;
    Mat v;
};

SnfDecomposition smith_normal_form(const Mat& a);

// Diagonal of the Smith normal form of a (min(rows, cols) entries).
std::vector<Int> snf_diagonal(const Mat& a);

// Canonical basis of the lattice generated by the rows of a.
Mat hermite_normal_form(const Mat& a);

// Rank of the lattice generated by the rows of a.
size_t lattice_rank(const Mat& a);

// Rows of both stacked (same column count required).
Mat stack(const Mat& top, const Mat& bottom);

// Basis (as rows) of { w : w * m = 0 }.
Mat left_kernel(const Mat& m);

// Basis (as rows) of { x : m * x^T = 0 }.
Mat right_kernel(const Mat& m);

// Basis of (Q-span of the rows of a) intersected with Z^k, i.e. the
// saturation of the row lattice.
Mat saturation(const Mat& a);

// Basis of the intersection of the two row lattices, in Hermite form.
// Computed by the kernel-of-stacked-basis method: integer combinations of
// a's rows that also lie in b's span are exactly the left kernel of [a; b]
// projected onto the a-block.
Mat lattice_intersection(const Mat& a, const Mat& b);

// Coordinates of v in the row basis h (h in Hermite form), if v lies in the
// lattice spanned by h.
std::optional<std::vector<Int>> coords_in_hnf(const Mat& h, std::vector<Int> v);

// Exact determinant (Bareiss fraction-free elimination); det of the 0x0
// matrix is 1.
Int determinant(const Mat& a);

} // namespace grr

#endif
