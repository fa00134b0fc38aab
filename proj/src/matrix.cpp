#include "strataforge/matrix.hpp"

#include <sstream>

namespace strataforge {

Mat Mat::identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

Mat Mat::mul(const Mat& o) const {
    if (cols_ != o.rows_) throw MalformedError("matrix shape mismatch in mul");
    Mat r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.set(i, j, r.at(i, j) + aik * o.at(k, j));
            }
        }
    return r;
}

Mat Mat::add(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MalformedError("matrix shape mismatch in add");
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.reduce(data_[i] + o.data_[i]);
    return r;
}

Mat Mat::sub(const Mat& o) const { return add(o.neg()); }

Mat Mat::scale(const Scalar& c) const {
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.reduce(data_[i] * c);
    return r;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    if (rows_ != o.rows_) throw MalformedError("hstack row mismatch");
    Mat r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    if (cols_ != o.cols_) throw MalformedError("vstack col mismatch");
    Mat r(field_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
    return r;
}

Mat Mat::submatrix(int r0, int r1, int c0, int c1) const {
    Mat r(field_, r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) r.set(i - r0, j - c0, at(i, j));
    return r;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << field_.to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Mat& m) {
    const Field& f = m.field();
    Mat a = m;
    Mat t = Mat::identity(f, m.rows());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m.cols(); ++j) {
                Scalar tmp = a.at(r, j); a.set(r, j, a.at(piv, j)); a.set(piv, j, tmp);
            }
            for (int j = 0; j < m.rows(); ++j) {
                Scalar tmp = t.at(r, j); t.set(r, j, t.at(piv, j)); t.set(piv, j, tmp);
            }
        }
        Scalar invp = f.inv(a.at(r, c));
        for (int j = 0; j < m.cols(); ++j) a.set(r, j, a.at(r, j) * invp);
        for (int j = 0; j < m.rows(); ++j) t.set(r, j, t.at(r, j) * invp);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Scalar factor = a.at(i, c);
            if (factor == 0) continue;
            for (int j = 0; j < m.cols(); ++j) a.set(i, j, a.at(i, j) - factor * a.at(r, j));
            for (int j = 0; j < m.rows(); ++j) t.set(i, j, t.at(i, j) - factor * t.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), r, std::move(t), std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& a) {
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(a.field(), a.cols(), static_cast<int>(free_cols.size()));
    for (int fi = 0; fi < static_cast<int>(free_cols.size()); ++fi) {
        int fc = free_cols[fi];
        k.set(fc, fi, Scalar(1));
        for (int pi = 0; pi < rr.rank; ++pi)
            k.set(rr.pivot_cols[pi], fi, -rr.echelon.at(pi, fc));
    }
    return k;
}

SolveResult solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw MalformedError("solve: row count mismatch");
    RrefResult rr = rref(a.hstack(b));
    Mat ker = kernel_basis(a);
    // Consistent iff no pivot lands in the b-columns.
    for (int c : rr.pivot_cols)
        if (c >= a.cols()) return SolveResult{std::nullopt, std::move(ker)};
    Mat x(a.field(), a.cols(), b.cols());
    for (int pi = 0; pi < rr.rank; ++pi)
        for (int j = 0; j < b.cols(); ++j)
            x.set(rr.pivot_cols[pi], j, rr.echelon.at(pi, a.cols() + j));
    return SolveResult{std::move(x), std::move(ker)};
}

Mat column_space(const Mat& m) {
    RrefResult rr = rref(m.transpose());
    Mat basis(m.field(), m.rows(), rr.rank);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < m.rows(); ++j) basis.set(j, i, rr.echelon.at(i, j));
    return basis;
}

bool subspace_contains(const Mat& ambient, const Mat& sub) {
    if (sub.cols() == 0) return true;
    return rank(ambient) == rank(ambient.hstack(sub));
}

Mat subspace_sum(const Mat& a, const Mat& b) { return column_space(a.hstack(b)); }

Mat complement_basis(const Mat& inside) {
    // Greedy: run rref on [inside | I]; the identity columns that become
    // pivots complete the basis.
    int n = inside.rows();
    Mat aug = inside.hstack(Mat::identity(inside.field(), n));
    RrefResult rr = rref(aug);
    std::vector<int> extra;
    for (int c : rr.pivot_cols)
        if (c >= inside.cols()) extra.push_back(c - inside.cols());
    Mat comp(inside.field(), n, static_cast<int>(extra.size()));
    for (int i = 0; i < static_cast<int>(extra.size()); ++i) comp.set(extra[i], i, Scalar(1));
    return comp;
}

Mat coordinates_in(const Mat& basis, const Mat& v) {
    SolveResult s = solve(basis, v);
    if (!s.solution) throw VerifyError("coordinates_in: vector outside span");
    return *s.solution;
}

}  // namespace strataforge
