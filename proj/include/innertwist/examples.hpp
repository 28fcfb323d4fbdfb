#pragma once

#include "innertwist/cqt.hpp"

namespace innertwist {

/// A named instance bundling a central bialgebra with one pairing accepted
/// by the coquasitriangular suite.
struct CqtExample {
    std::string name;
    CentralBialgebra bialgebra;
    GradedMorphism pairing;
};

/// k[Z/n]: group-likes 1, g, ..., g^{n-1}, trivially graded over a fresh
/// order-n scalar field, sigma the categorical flip, S(g^i) = g^{-i}, and
/// the bicharacter pairing r(g^i (x) g^j) = zeta^{k i j}.  Requires n >= 1
/// and 0 <= k < n.
CqtExample build_group_algebra_cqt(long n, long k);

/// The exterior algebra on one odd generator v in super vector spaces:
/// Delta v = v (x) 1 + 1 (x) v, v^2 = 0, S v = -v, sigma the categorical
/// (signed) braiding; pairing r(1 (x) 1) = 1, r(v (x) v) = alpha, zero on
/// the odd mixed terms.  Every scalar alpha is admissible.
CqtExample build_exterior_line(long alpha);

/// The four-dimensional Hopf algebra with basis {1, g, x, gx}, relations
/// g^2 = 1, x^2 = 0, xg = -gx, coproducts Delta g = g (x) g,
/// Delta x = x (x) 1 + g (x) x, over the rationals, with sigma = flip.
/// The antipode is found by the exact convolution solver, not entered by
/// hand.  Pairings for it are found by cqt_ansatz_solver over
/// sweedler_support().
CentralBialgebra build_sweedler();

/// Pairs of basis labels naming the entries a pairing ansatz may use.
using SupportPattern = std::vector<std::pair<std::string, std::string>>;

/// Every pair of basis labels of b.
SupportPattern full_support(const GradedObject& b);

/// {1,g} x {1,g} together with {x,gx} x {x,gx}: the support on which the
/// pairings of the four-dimensional example live.
SupportPattern sweedler_support();

/// Exhaustive exact search for coquasitriangular pairings supported on the
/// declared entries.  Entries whose grades do not cancel are fixed to zero;
/// when the unit is a basis vector, entries pairing it are fixed to counit
/// values; every remaining entry ranges over the palette {0} U {+-zeta^t}.
/// A candidate must pass the defining axioms (CQT1, CQT2, CQT3 with an
/// exact convolution inverse), and every survivor is re-verified against
/// the full suite before being returned, so the output is sound by
/// construction.  An unsolvable ansatz yields an empty list.  Unknown
/// labels are structural errors.
std::vector<GradedMorphism> cqt_ansatz_solver(const CentralBialgebra& b,
                                              const SupportPattern& support);

} // namespace innertwist
