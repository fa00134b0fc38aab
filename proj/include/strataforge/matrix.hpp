#pragma once

#include <optional>
#include <vector>

#include "strataforge/field.hpp"

namespace strataforge {

// Dense matrix over an exact field.  Row-major, immutable by convention:
// operations return new matrices.
class Mat {
public:
    Mat(Field f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

    static Mat identity(Field f, int n);
    static Mat zero(Field f, int rows, int cols) { return Mat(f, rows, cols); }

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, const Scalar& v) { data_[static_cast<size_t>(i) * cols_ + j] = field_.reduce(v); }

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat mul(const Mat& o) const;
    Mat add(const Mat& o) const;
    Mat sub(const Mat& o) const;
    Mat scale(const Scalar& c) const;
    Mat neg() const { return scale(Scalar(-1)); }
    Mat transpose() const;

    Mat hstack(const Mat& o) const;  // side by side, same rows
    Mat vstack(const Mat& o) const;  // stacked, same cols
    Mat submatrix(int r0, int r1, int c0, int c1) const;  // half-open ranges
    Mat col(int j) const { return submatrix(0, rows_, j, j + 1); }
    Mat row(int i) const { return submatrix(i, i + 1, 0, cols_); }

    std::string to_string() const;

private:
    Field field_;
    int rows_, cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Mat echelon;             // the unique reduced row echelon form
    int rank = 0;
    Mat transform;           // transform * input == echelon
    std::vector<int> pivot_cols;
};

// Gauss-Jordan elimination.  Pivot choice: leftmost column, first row with a
// nonzero entry, so the output is deterministic.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

// Columns span ker(a); count == cols - rank.  Free columns in ascending
// order, each kernel vector normalized with a 1 in its free coordinate.
Mat kernel_basis(const Mat& a);

struct SolveResult {
    std::optional<Mat> solution;  // x with a*x == b, if consistent
    Mat kernel;                   // basis of ker(a), always returned
};

// Solve a*x = b for each column of b.
SolveResult solve(const Mat& a, const Mat& b);

// --- subspace helpers (columns of a Mat span a subspace) ---

// Canonical basis of the column space: reduced column echelon form with zero
// columns dropped.  Equal subspaces produce equal matrices.
Mat column_space(const Mat& m);

// Does span(cols of sub) lie inside span(cols of ambient)?
bool subspace_contains(const Mat& ambient, const Mat& sub);

// Basis of the sum of two column spans.
Mat subspace_sum(const Mat& a, const Mat& b);

// Columns of `inside` extending to a basis: returns coordinates matrix C with
// ambient-independent representatives.  Specifically, a matrix whose columns
// complete span(inside) to the full space k^n (n = inside.rows()).
Mat complement_basis(const Mat& inside);

// Express each column of v in the column basis `basis` (columns independent).
// Throws VerifyError if some column is outside the span.
Mat coordinates_in(const Mat& basis, const Mat& v);

}  // namespace strataforge
