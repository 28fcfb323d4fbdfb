#pragma once

#include "innertwist/errors.hpp"
#include "innertwist/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace innertwist {

/// Coefficients of the n-th cyclotomic polynomial Phi_n, ascending degree,
/// monic.  Computed by exact division of x^n - 1 by the product of Phi_d over
/// the proper divisors d of n.
std::vector<BigInt> cyclotomic_polynomial(long n);

class CyclotomicField;
using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// The coefficient field Q(zeta_n): rational polynomials in a primitive n-th
/// root of unity, reduced modulo Phi_n.  A verification session fixes one
/// order n and every scalar carries a pointer to the shared field object;
/// mixing scalars of different orders is a structural error.
///
/// n = 1 and n = 2 degenerate gracefully to Q (zeta_1 = 1, zeta_2 = -1).
class CyclotomicField {
public:
    static FieldPtr make(long order);

    long order() const { return order_; }
    /// phi(order) = deg Phi_n = length of every coefficient vector.
    long degree() const { return degree_; }
    const std::vector<Rational>& modulus() const { return modulus_; }

private:
    explicit CyclotomicField(long order);

    long order_ = 0;
    long degree_ = 0;
    std::vector<Rational> modulus_;
    // zeta^k reduced mod Phi_n for k = 0..order-1; used by root() and
    // as_root_power().
    std::vector<std::vector<Rational>> root_powers_;

    friend class CycScalar;
};

/// An element of Q(zeta_n).  Canonical representation: exactly degree()
/// rational coefficients (the residue mod Phi_n), so two scalars are equal
/// iff their coefficient vectors are equal.  Immutable value type.
class CycScalar {
public:
    /// Null scalar; placeholder only — any arithmetic on it throws.
    CycScalar() = default;

    static CycScalar zero(const FieldPtr& f);
    static CycScalar one(const FieldPtr& f);
    static CycScalar from_rational(const FieldPtr& f, const Rational& q);
    static CycScalar from_int(const FieldPtr& f, long v);
    /// zeta_n^k for any integer k (reduced mod n).
    static CycScalar root(const FieldPtr& f, long k);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_null() const { return field_ == nullptr; }
    bool is_zero() const;
    bool is_one() const;
    /// The constant term, provided all other coefficients vanish.
    std::optional<Rational> as_rational() const;
    /// k with *this == zeta^k (0 <= k < order), if this is a root of unity
    /// of the session order.
    std::optional<long> as_root_power() const;

    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator-() const;
    CycScalar operator*(const CycScalar& o) const;
    /// Throws DivisionByZero when o is zero.
    CycScalar operator/(const CycScalar& o) const;
    CycScalar inverse() const;
    /// Integer power; negative exponents invert (throws on zero base).
    CycScalar pow(long k) const;

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

private:
    CycScalar(FieldPtr f, std::vector<Rational> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    void require_usable() const;
    void require_same_field(const CycScalar& o) const;

    FieldPtr field_;
    std::vector<Rational> c_;
};

/// Scalar literal syntax used throughout the textual interfaces:
/// rationals `p/q`, the symbol `z` for zeta_n, integer powers `z^k`
/// (k may be negative), parentheses, sums, differences and `*`-products,
/// e.g. `1/2 - 1/2*z^3`.  Throws ParseError with a 1-based column.
CycScalar parse_scalar(const FieldPtr& f, std::string_view text);

/// Canonical rendering of a scalar in the literal syntax above
/// (terms in ascending powers of z, lowest-terms rationals).
std::string format_scalar(const CycScalar& a);

} // namespace innertwist
