#pragma once

#include "innertwist/report.hpp"

#include <optional>

namespace innertwist {

/// A coalgebra in the braided category: comultiplication delta: C -> C(x)C
/// and counit: C -> I.  Constructors validate types (source/target objects
/// and matrix shapes) but deliberately NOT the axioms or grade preservation;
/// those are produced as named checks so corrupted inputs are diagnosed, not
/// rejected.
struct Coalgebra {
    ContextPtr ctx;
    GradedObject carrier;
    GradedMorphism delta;
    GradedMorphism counit;

    Coalgebra(ContextPtr ctx, GradedObject carrier, GradedMorphism delta,
              GradedMorphism counit);
};

/// An algebra in the braided category: mult: A(x)A -> A, unit: I -> A.
struct Algebra {
    ContextPtr ctx;
    GradedObject carrier;
    GradedMorphism mult;
    GradedMorphism unit;

    Algebra(ContextPtr ctx, GradedObject carrier, GradedMorphism mult,
            GradedMorphism unit);
};

struct Bialgebra {
    ContextPtr ctx;
    GradedObject carrier;
    GradedMorphism mult, unit, delta, counit;

    Bialgebra(ContextPtr ctx, GradedObject carrier, GradedMorphism mult,
              GradedMorphism unit, GradedMorphism delta,
              GradedMorphism counit);

    Coalgebra as_coalgebra() const;
    Algebra as_algebra() const;
};

struct HopfAlgebra {
    Bialgebra bialgebra;
    GradedMorphism antipode;

    HopfAlgebra(Bialgebra b, GradedMorphism s);
};

/// Braided tensor product coalgebra on A (x) B:
///   delta = (A (x) tau_{A,B} (x) B)(delta_A (x) delta_B),
///   counit = counit_A (x) counit_B.
/// The braiding moves the middle pair past each other, so iterating this is
/// how comultiplications of multi-factor carriers are built.
Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b);

/// Braided tensor product algebra on A (x) B:
///   mult = (mult_A (x) mult_B)(A (x) tau_{B,A} (x) B),
///   unit = unit_A (x) unit_B.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

/// Braided tensor product bialgebra (the two constructions above on the
/// same carrier).
Bialgebra tensor_bialgebra(const Bialgebra& a, const Bialgebra& b);

/// Convolution product on Mor(C, -): f * g = [mult o] (f (x) g) o delta.
/// The final mult is applied exactly when both f and g land in the algebra
/// carrier; otherwise the plain tensor target stands.  Since the unit
/// object is strict, this covers functional convolution (targets I) and the
/// mixed functional*morphism products with no special cases.
GradedMorphism convolve(const Coalgebra& c, const Algebra& a,
                        const GradedMorphism& f, const GradedMorphism& g);

/// Two-sided convolution inverse of a functional f: C -> I, i.e. the unique
/// g with (f (x) g) delta = counit = (g (x) f) delta, found by an exact
/// linear solve.  nullopt when f is not convolution-invertible.
std::optional<GradedMorphism> convolution_inverse(const Coalgebra& c,
                                                  const GradedMorphism& f);

/// The antipode as the convolution inverse of the identity: the unique
/// solution S of mult (S (x) id) delta = unit counit = mult (id (x) S) delta,
/// found by stacking both axioms into one exact linear system.  nullopt when
/// the bialgebra has no antipode.
std::optional<GradedMorphism> solve_antipode(const Bialgebra& b);

/// Named axiom checks.  `subject` is the display name used in reports.
CheckList check_coalgebra(const Coalgebra& c, const std::string& subject);
CheckList check_algebra(const Algebra& a, const std::string& subject);
CheckList check_bialgebra(const Bialgebra& b, const std::string& subject);
/// Bialgebra checks plus the antipode axioms and the braided
/// anti-(co)multiplicativity of S.
CheckList check_hopf(const HopfAlgebra& h, const std::string& subject);

} // namespace innertwist
