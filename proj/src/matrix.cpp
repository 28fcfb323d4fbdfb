#include "innertwist/matrix.hpp"

#include <functional>
#include <sstream>

namespace innertwist {

Mat::Mat(FieldPtr f, long rows, long cols)
    : field_(std::move(f)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw StructuralError("matrix shape must be non-negative");
    e_.assign(static_cast<std::size_t>(rows) * cols, CycScalar::zero(field_));
}

Mat Mat::identity(const FieldPtr& f, long n) {
    Mat m(f, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(f);
    return m;
}

Mat Mat::from_rows(const FieldPtr& f, long rows, long cols,
                   std::vector<CycScalar> entries) {
    if (static_cast<long>(entries.size()) != rows * cols) {
        std::ostringstream msg;
        msg << "matrix literal has " << entries.size() << " entries, expected "
            << rows << "x" << cols;
        throw StructuralError(msg.str());
    }
    Mat m(f, rows, cols);
    m.e_ = std::move(entries);
    for (const CycScalar& s : m.e_)
        if (s.is_null() || s.field()->order() != f->order())
            throw StructuralError("matrix entry from a different field");
    return m;
}

void Mat::require_usable() const {
    if (is_null()) throw StructuralError("operation on a null matrix");
}

const CycScalar& Mat::at(long r, long c) const {
    require_usable();
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw StructuralError("matrix index out of range");
    return e_[static_cast<std::size_t>(r) * cols_ + c];
}

CycScalar& Mat::at(long r, long c) {
    require_usable();
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw StructuralError("matrix index out of range");
    return e_[static_cast<std::size_t>(r) * cols_ + c];
}

Mat Mat::operator*(const Mat& o) const {
    require_usable();
    o.require_usable();
    if (cols_ != o.rows_) {
        std::ostringstream msg;
        msg << "matrix product shape mismatch: " << rows_ << "x" << cols_
            << " times " << o.rows_ << "x" << o.cols_;
        throw StructuralError(msg.str());
    }
    Mat out(field_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long k = 0; k < cols_; ++k) {
            const CycScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const CycScalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    require_usable();
    o.require_usable();
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw StructuralError("matrix sum shape mismatch");
    Mat out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    require_usable();
    o.require_usable();
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw StructuralError("matrix difference shape mismatch");
    Mat out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

Mat Mat::scaled(const CycScalar& s) const {
    require_usable();
    Mat out = *this;
    for (CycScalar& x : out.e_) x = x * s;
    return out;
}

Mat Mat::kron(const Mat& o) const {
    require_usable();
    o.require_usable();
    Mat out(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            const CycScalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (long k = 0; k < o.rows_; ++k)
                for (long l = 0; l < o.cols_; ++l) {
                    const CycScalar& b = o.at(k, l);
                    if (b.is_zero()) continue;
                    out.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
                }
        }
    return out;
}

Mat Mat::transpose() const {
    require_usable();
    Mat out(field_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Mat::operator==(const Mat& o) const {
    require_usable();
    o.require_usable();
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Mat::is_zero() const {
    require_usable();
    for (const CycScalar& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    require_usable();
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

namespace {

// In-place reduced row echelon form choosing pivots among the first
// `pivot_cols` columns; returns (pivot column -> row) as an ordered list of
// pivot columns (row index = position in the list).
std::vector<long> rref_in_place(Mat& m, long pivot_cols) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < pivot_cols && row < m.rows(); ++col) {
        long sel = -1;
        for (long r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (long c = 0; c < m.cols(); ++c)
                std::swap(m.at(sel, c), m.at(row, c));
        CycScalar inv = m.at(row, col).inverse();
        for (long c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
        for (long r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const CycScalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (long c = col; c < m.cols(); ++c)
                m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<Mat> Mat::inverse() const {
    require_usable();
    if (rows_ != cols_) return std::nullopt;
    Mat aug(field_, rows_, 2 * cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = CycScalar::one(field_);
    }
    auto pivots = rref_in_place(aug, cols_);
    if (static_cast<long>(pivots.size()) != cols_) return std::nullopt;
    Mat out(field_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

long Mat::rank() const {
    require_usable();
    Mat copy = *this;
    return static_cast<long>(rref_in_place(copy, cols_).size());
}

std::optional<std::pair<long, long>> first_difference(const Mat& a,
                                                      const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw StructuralError("first_difference on mismatched shapes");
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

std::optional<Mat> solve_linear(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows())
        throw StructuralError("linear system shape mismatch");
    const long n = A.cols(), k = B.cols();
    Mat aug(A.field(), A.rows(), n + k);
    for (long i = 0; i < A.rows(); ++i) {
        for (long j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        for (long j = 0; j < k; ++j) aug.at(i, n + j) = B.at(i, j);
    }
    auto pivots = rref_in_place(aug, n);
    // Any all-zero coefficient row with a nonzero right-hand side is a
    // contradiction.
    for (long r = static_cast<long>(pivots.size()); r < aug.rows(); ++r)
        for (long j = 0; j < k; ++j)
            if (!aug.at(r, n + j).is_zero()) return std::nullopt;
    Mat X(A.field(), n, k);
    for (std::size_t p = 0; p < pivots.size(); ++p)
        for (long j = 0; j < k; ++j)
            X.at(pivots[p], j) = aug.at(static_cast<long>(p), n + j);
    return X;
}

namespace {

struct KronShape {
    FieldPtr field;
    long rows = 1;
    long cols = 1;
};

KronShape kron_shape(const std::vector<Mat>& factors, const char* what) {
    if (factors.empty())
        throw StructuralError(std::string(what) + ": no factors");
    KronShape s;
    for (const Mat& f : factors) {
        if (f.is_null())
            throw StructuralError(std::string(what) + ": null factor");
        if (s.field && f.field() != s.field)
            throw StructuralError(std::string(what) +
                                  ": factors over different fields");
        s.field = f.field();
        s.rows *= f.rows();
        s.cols *= f.cols();
    }
    return s;
}

} // namespace

Mat kron_compose(const std::vector<Mat>& factors, const Mat& rhs) {
    KronShape s = kron_shape(factors, "kron_compose");
    if (rhs.is_null() || rhs.field() != s.field || rhs.rows() != s.cols)
        throw StructuralError("kron_compose: shape or field mismatch");
    const std::size_t k = factors.size();
    Mat out(s.field, s.rows, rhs.cols());
    std::vector<long> src(k);
    // scatter(level, base, v): accumulate v * (column src[level] of factor
    // `level`) (x) ... into rows of `out` below row-block `base`.
    std::function<void(std::size_t, long, const CycScalar&, long)> scatter =
        [&](std::size_t level, long base, const CycScalar& v, long col) {
            if (level == k) {
                out.at(base, col) = out.at(base, col) + v;
                return;
            }
            const Mat& f = factors[level];
            for (long r = 0; r < f.rows(); ++r) {
                const CycScalar& e = f.at(r, src[level]);
                if (e.is_zero()) continue;
                scatter(level + 1, base * f.rows() + r, v * e, col);
            }
        };
    for (long c = 0; c < rhs.cols(); ++c)
        for (long w = 0; w < rhs.rows(); ++w) {
            const CycScalar& v = rhs.at(w, c);
            if (v.is_zero()) continue;
            long rem = w;
            for (std::size_t i = k; i-- > 0;) {
                src[i] = rem % factors[i].cols();
                rem /= factors[i].cols();
            }
            scatter(0, 0, v, c);
        }
    return out;
}

Mat compose_kron(const Mat& lhs, const std::vector<Mat>& factors) {
    KronShape s = kron_shape(factors, "compose_kron");
    if (lhs.is_null() || lhs.field() != s.field || lhs.cols() != s.rows)
        throw StructuralError("compose_kron: shape or field mismatch");
    const std::size_t k = factors.size();
    Mat out(s.field, lhs.rows(), s.cols);
    std::vector<long> src(k);
    // gather(level, base, v): v is the accumulated factor-column entry; at
    // the leaves, row `base` of the Kronecker column is hit, so every row of
    // lhs picks up lhs(r, base) * v.
    std::function<void(std::size_t, long, const CycScalar&, long)> gather =
        [&](std::size_t level, long base, const CycScalar& v, long col) {
            if (level == k) {
                for (long r = 0; r < lhs.rows(); ++r) {
                    const CycScalar& e = lhs.at(r, base);
                    if (e.is_zero()) continue;
                    out.at(r, col) = out.at(r, col) + e * v;
                }
                return;
            }
            const Mat& f = factors[level];
            for (long r = 0; r < f.rows(); ++r) {
                const CycScalar& e = f.at(r, src[level]);
                if (e.is_zero()) continue;
                gather(level + 1, base * f.rows() + r, v * e, col);
            }
        };
    CycScalar one = CycScalar::one(s.field);
    for (long j = 0; j < s.cols; ++j) {
        long rem = j;
        for (std::size_t i = k; i-- > 0;) {
            src[i] = rem % factors[i].cols();
            rem /= factors[i].cols();
        }
        gather(0, 0, one, j);
    }
    return out;
}

Mat nullspace(const Mat& A) {
    Mat r = A;
    auto pivots = rref_in_place(r, A.cols());
    std::vector<bool> is_pivot(static_cast<std::size_t>(A.cols()), false);
    for (long p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < A.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    Mat out(A.field(), A.cols(), static_cast<long>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        out.at(free_cols[j], static_cast<long>(j)) = CycScalar::one(A.field());
        for (std::size_t p = 0; p < pivots.size(); ++p)
            out.at(pivots[p], static_cast<long>(j)) =
                -r.at(static_cast<long>(p), free_cols[j]);
    }
    return out;
}

} // namespace innertwist
