#pragma once

#include "innertwist/cyclotomic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace innertwist {

/// Dense matrix over Q(zeta_n), row-major.  All entries share one field; a
/// default-constructed Mat is a null placeholder.  Sizes stay small (a few
/// hundred rows), so the emphasis is on exactness, not asymptotics — but
/// products skip zero entries, which keeps composites of the mostly
/// permutation-shaped structure maps cheap.
class Mat {
public:
    Mat() = default;
    /// Zero matrix of the given shape.
    Mat(FieldPtr f, long rows, long cols);

    static Mat identity(const FieldPtr& f, long n);
    /// Build from a row-major list of entries (size must be rows*cols).
    static Mat from_rows(const FieldPtr& f, long rows, long cols,
                         std::vector<CycScalar> entries);

    bool is_null() const { return field_ == nullptr; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    const CycScalar& at(long r, long c) const;
    CycScalar& at(long r, long c);

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const CycScalar& s) const;
    /// Kronecker product: (a.kron(b)).at(i*b.rows+k, j*b.cols+l) =
    /// a.at(i,j) * b.at(k,l).
    Mat kron(const Mat& o) const;
    Mat transpose() const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    /// Exact Gauss-Jordan inverse; nullopt when not square-invertible.
    std::optional<Mat> inverse() const;
    long rank() const;

private:
    void require_usable() const;

    FieldPtr field_;
    long rows_ = 0;
    long cols_ = 0;
    std::vector<CycScalar> e_;
};

/// Row/column of the first entry where a and b differ (shapes must match).
std::optional<std::pair<long, long>> first_difference(const Mat& a,
                                                      const Mat& b);

/// (f1 (x) ... (x) fk) * rhs without materializing the Kronecker product,
/// which would be quadratic in the product of the factor dimensions.  The
/// result has prod(rows(fi)) rows and rhs.cols() columns; the product of the
/// factor column counts must equal rhs.rows().  Row indices decompose with
/// the first factor slowest, matching kron.
Mat kron_compose(const std::vector<Mat>& factors, const Mat& rhs);

/// lhs * (f1 (x) ... (x) fk), same idea from the other side: the result has
/// lhs.rows() rows and prod(cols(fi)) columns; the product of the factor row
/// counts must equal lhs.cols().
Mat compose_kron(const Mat& lhs, const std::vector<Mat>& factors);

/// All exact solutions of A X = B: a particular solution (free variables set
/// to zero), or nullopt when the system is inconsistent.  B may have several
/// columns.
std::optional<Mat> solve_linear(const Mat& A, const Mat& B);

/// Columns form a basis of the kernel of A (zero columns() when injective).
Mat nullspace(const Mat& A);

} // namespace innertwist
