#pragma once

#include "innertwist/grading.hpp"
#include "innertwist/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace innertwist {

/// One basis vector of an atomic object: a display label and its degree.
struct BasisVector {
    std::string label;
    Grade grade;
    bool operator==(const BasisVector& o) const = default;
};

/// An atomic (non-tensor) graded vector space with a chosen basis.
struct Atom {
    std::string name;
    std::vector<BasisVector> basis;
    bool operator==(const Atom& o) const = default;
};
using AtomPtr = std::shared_ptr<const Atom>;

/// An object of the category: a finite list of atomic factors.  The tensor
/// product concatenates factor lists and the monoidal unit is the empty
/// list, so the structure is strict — I (x) V, V (x) I and both
/// parenthesizations of triple products are literally the same object, and
/// the matrix calculus below never needs associator bookkeeping.
///
/// Basis vectors of a composite are tuples of factor basis vectors,
/// enumerated row-major with the FIRST factor slowest (matching Mat::kron).
class GradedObject {
public:
    /// The monoidal unit: no factors, dimension 1, grade zero.
    GradedObject() = default;

    static GradedObject simple(std::string name,
                               std::vector<BasisVector> basis);

    GradedObject tensor(const GradedObject& o) const;
    /// Left dual: factors reversed, each grade negated, names starred.
    GradedObject dual() const;
    /// The k-th factor as a single-atom object.
    GradedObject factor(long k) const;
    /// Factors [begin, end) as an object (empty range = the unit).
    GradedObject slice(long begin, long end) const;

    long dim() const;
    long factor_count() const { return static_cast<long>(atoms_.size()); }
    const std::vector<AtomPtr>& atoms() const { return atoms_; }

    /// Total degree of basis vector i (unnormalized component sums).
    Grade grade_of(long i, const GradingGroup& g) const;
    /// "x(x)y(x)z" tuple label of basis vector i ("1" for the unit object).
    std::string label_of(long i) const;
    /// Display name: factor names joined with "(x)", "I" for the unit.
    std::string name() const;
    /// Index of the basis vector with the given per-factor indices.
    long index_of(const std::vector<long>& parts) const;

    /// Structural equality of the factor lists.
    bool operator==(const GradedObject& o) const;
    bool operator!=(const GradedObject& o) const { return !(*this == o); }

private:
    std::vector<AtomPtr> atoms_;
};

/// A linear map between objects, stored as a dim(target) x dim(source)
/// matrix over the session field.
class GradedMorphism {
public:
    GradedMorphism() = default;
    GradedMorphism(GradedObject src, GradedObject dst, Mat m);

    bool is_null() const { return m.is_null(); }
    const GradedObject& source() const { return src_; }
    const GradedObject& target() const { return dst_; }
    const Mat& matrix() const { return m; }
    Mat& matrix() { return m; }

    /// Every nonzero entry connects basis vectors of equal degree.
    bool is_homogeneous(const GradingGroup& g) const;

    /// Composition f * g = "f after g"; sources/targets must match as
    /// objects.
    GradedMorphism operator*(const GradedMorphism& g) const;
    GradedMorphism operator+(const GradedMorphism& o) const;
    GradedMorphism operator-(const GradedMorphism& o) const;
    GradedMorphism scaled(const CycScalar& s) const;
    /// (f (x) g): objects tensored, matrices Kronecker-multiplied.
    GradedMorphism tensor(const GradedMorphism& o) const;

    bool operator==(const GradedMorphism& o) const;
    bool operator!=(const GradedMorphism& o) const { return !(*this == o); }
    bool is_identity() const;

    std::optional<GradedMorphism> inverse() const;

private:
    GradedObject src_, dst_;
    Mat m;
};

/// (f1 (x) ... (x) fk) * g without materializing the Kronecker factor — the
/// way to postcompose a tensor of maps whose combined source is large (four
/// or more carrier factors).  The concatenated factor sources must equal
/// g's target.
GradedMorphism tensor_compose(const std::vector<GradedMorphism>& factors,
                              const GradedMorphism& g);

/// f * (g1 (x) ... (x) gk), the mirror image: the concatenated factor
/// targets must equal f's source.
GradedMorphism compose_tensor(const GradedMorphism& f,
                              const std::vector<GradedMorphism>& factors);

/// Session-wide categorical data: the coefficient field, the grading group
/// and the bicharacter inducing the braiding.  All structure constructors
/// hang off this.
class BraidedContext {
public:
    BraidedContext(FieldPtr f, GradingGroup g, Bicharacter chi);

    const FieldPtr& field() const { return field_; }
    const GradingGroup& group() const { return group_; }
    const Bicharacter& chi() const { return chi_; }

    GradedMorphism identity(const GradedObject& v) const;
    GradedMorphism zero_morphism(const GradedObject& src,
                                 const GradedObject& dst) const;
    /// Checked constructor: throws StructuralError when the matrix is not
    /// grade-preserving.  (Use GradedMorphism directly to skip the check —
    /// corrupted inputs are meant to reach the axiom checks alive.)
    GradedMorphism morphism(GradedObject src, GradedObject dst, Mat m) const;

    /// tau_{V,W}: V(x)W -> W(x)V,  v(x)w |-> chi(|v|,|w|) w(x)v.
    GradedMorphism braiding(const GradedObject& v, const GradedObject& w) const;
    /// The *inverse* braiding as a map V(x)W -> W(x)V, i.e. (tau_{W,V})^-1:
    /// v(x)w |-> chi(|w|,|v|)^-1 w(x)v.  Distinct from tau_{V,W} unless chi
    /// is symmetric-inverse.
    GradedMorphism braiding_inverse(const GradedObject& v,
                                    const GradedObject& w) const;

    /// Evaluation V*(x)V -> I and coevaluation I -> V(x)V* of a simple
    /// object (atomic factor lists only).
    GradedMorphism ev(const GradedObject& v) const;
    GradedMorphism db(const GradedObject& v) const;

private:
    FieldPtr field_;
    GradingGroup group_;
    Bicharacter chi_;
};
using ContextPtr = std::shared_ptr<const BraidedContext>;

ContextPtr make_context(FieldPtr f, GradingGroup g, Bicharacter chi);
/// Trivially graded context over Q(zeta_n): trivial group, chi == 1.
ContextPtr make_trivial_context(long field_order);

} // namespace innertwist
