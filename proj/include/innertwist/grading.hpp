#pragma once

#include "innertwist/cyclotomic.hpp"

#include <vector>

namespace innertwist {

/// A degree in the grading group: one integer per cyclic factor.  Grade
/// vectors circulate unnormalized (components may be negative or exceed the
/// modulus); everything that consumes them reduces componentwise first.
using Grade = std::vector<long>;

/// The finite abelian grading group Z/n1 x ... x Z/nk.  An empty modulus
/// list is the trivial group, whose only grade is the empty vector.
class GradingGroup {
public:
    GradingGroup() = default;
    explicit GradingGroup(std::vector<long> moduli);

    long rank() const { return static_cast<long>(moduli_.size()); }
    const std::vector<long>& moduli() const { return moduli_; }
    /// Number of elements (product of the moduli; 1 for the trivial group).
    long order() const;

    Grade zero() const { return Grade(moduli_.size(), 0); }
    Grade normalize(Grade g) const;
    Grade add(const Grade& a, const Grade& b) const;
    Grade negate(const Grade& a) const;
    bool same_grade(const Grade& a, const Grade& b) const;

    /// Mixed-radix encoding of a normalized grade (first factor slowest).
    long index_of(const Grade& g) const;
    Grade element(long index) const;

    bool operator==(const GradingGroup& o) const = default;

private:
    void require_rank(const Grade& g) const;
    std::vector<long> moduli_;
};

/// A bicharacter chi: G x G -> mu_n in Q(zeta_n), multiplicative in each
/// argument.  It induces the braiding tau(v (x) w) = chi(|v|, |w|) w (x) v
/// on graded vector spaces.
///
/// The standard construction is an exponent matrix E with
/// chi(g, h) = zeta^(g^T E h); well-definedness on Z/n1 x ... x Z/nk
/// requires n | n_i * E_ij and n | E_ij * n_j for all i, j.  A raw value
/// table may be supplied instead (it is NOT validated — deliberately, so
/// corrupted inputs flow into the axiom checks rather than being rejected
/// up front); is_multiplicative() reports whether it actually is one.
class Bicharacter {
public:
    Bicharacter() = default;

    static Bicharacter from_exponents(FieldPtr f, GradingGroup g,
                                      const std::vector<std::vector<long>>& E);
    /// table[a * order + b] = chi(element(a), element(b)).
    static Bicharacter from_table(FieldPtr f, GradingGroup g,
                                  std::vector<CycScalar> table);

    bool is_null() const { return field_ == nullptr; }
    const FieldPtr& field() const { return field_; }
    const GradingGroup& group() const { return group_; }

    CycScalar value(const Grade& a, const Grade& b) const;
    /// chi(a, b)^-1 (the braiding-inverse coefficient).
    CycScalar inverse_value(const Grade& a, const Grade& b) const;

    /// True when the table is multiplicative in both arguments (exponent
    /// constructions always are).
    bool is_multiplicative() const;

private:
    FieldPtr field_;
    GradingGroup group_;
    // Dense value table over normalized element indices.
    std::vector<CycScalar> table_;
};

} // namespace innertwist
