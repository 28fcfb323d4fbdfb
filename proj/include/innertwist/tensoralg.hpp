#pragma once

#include "innertwist/central.hpp"

namespace innertwist {

/// A coalgebra whose carrier is equipped with a half-braiding — an object
/// of the center of the coalgebra category.  Unlike a central bialgebra
/// there is no product, so only the coalgebra-level axioms apply.
struct CentralCoalgebra {
    Coalgebra coalgebra;
    HalfBraiding sigma;

    CentralCoalgebra(Coalgebra c, HalfBraiding s);

    const GradedObject& carrier() const { return coalgebra.carrier; }
    const ContextPtr& context() const { return coalgebra.ctx; }
};

/// The coalgebra-level central axioms, verified against each probe
/// coalgebra D:
///   Z1  sigma_C(D) is a coalgebra morphism C(x)D -> D(x)C (braided tensor
///       coalgebras on both sides, counit preservation included),
///   Z2  naturality against the supplied morphisms plus Delta_D, counit_D,
///   Z3  sigma_C(D) invertible.
CheckList check_central_coalgebra(const CentralCoalgebra& c,
                                  const std::string& subject,
                                  const std::vector<Coalgebra>& tests,
                                  const std::vector<NamedMorphism>& naturality);
/// Same with the default probe family {C itself}.
CheckList check_central_coalgebra(const CentralCoalgebra& c,
                                  const std::string& subject);

/// The tensor powers I, C, C^(x)2, ..., C^(x)N of a central coalgebra, each
/// carrying the braided tensor-product coalgebra structure and the
/// hexagon-extended half-braiding, with concatenation products
/// t_{i,j}: C^(x)i (x) C^(x)j -> C^(x)(i+j) (identities in the strict
/// monoidal setting).  A degree-bounded model of the tensor bialgebra on C:
/// all of its defining identities are degree-local, so bounded verification
/// is sound for the degrees it covers.
struct TruncatedTensorBialgebra {
    ContextPtr ctx;
    long degree = 0;
    CentralCoalgebra seed;
    std::vector<Coalgebra> components;  ///< index k in [0, degree]
    std::vector<HalfBraiding> sigmas;   ///< half-braiding of C^(x)k

    const Coalgebra& component(long k) const;
    const HalfBraiding& sigma_at(long k) const;
    /// t_{i,j}; i and j must be nonnegative with i + j within the bound.
    GradedMorphism concat(long i, long j) const;
};

/// Builds the powers inductively; degree must be at least 1.
TruncatedTensorBialgebra truncated_tensor_bialgebra(const CentralCoalgebra& c,
                                                    long degree);

/// Degree-local laws of the truncated tensor bialgebra:
///   - every component passes the coalgebra axioms,
///   - every concatenation t_{i,j} is a coalgebra morphism (the bialgebra
///     compatibility of the tensor algebra, degree by degree),
///   - Z4: the degree-zero half-braiding is the identity and every sigma is
///     trivial at the unit argument,
///   - Z5: sigma of C^(x)(i+j) factors through the pieces for every split,
///   - every component is a central coalgebra over the probe C (Z1-Z3).
CheckList check_truncated_tensor_bialgebra(const TruncatedTensorBialgebra& t,
                                           const std::string& subject);

/// The pairing table r_{i,j}: C^(x)i (x) C^(x)j -> I generated from a seed
/// pairing r_{1,1} by the two multiplicative recursions
///   r_{i,j+k} = r_{i,k} (A_i (x) r_{i,j} (x) A_k)(Delta_i (x) A_j (x) A_k),
///   r_{i+j,k} = (r_{i,k} (x) r_{j,k}) (A_i (x) sigma_{A_j,A_k} (x) A_k)
///               (A_i (x) A_j (x) Delta_k),
/// with the counit functionals along the edges r_{0,j} and r_{i,0}.  Every
/// entry is stored together with its convolution inverse on the braided
/// tensor coalgebra of its source.
struct DiagramBicharacter {
    TruncatedTensorBialgebra diagram;
    std::vector<std::vector<GradedMorphism>> pairing;
    std::vector<std::vector<GradedMorphism>> pairing_inverse;

    const GradedMorphism& at(long i, long j) const;
    const GradedMorphism& inverse_at(long i, long j) const;
};

/// Fills the table bottom-up from the seed: first column by the i+j
/// recursion, then rows by the j+k recursion.  Throws StructuralError when
/// the seed is not a functional on C (x) C or when any entry fails to be
/// convolution-invertible (reported with its indices).
DiagramBicharacter extend_bicharacter(const CentralCoalgebra& c,
                                      const GradedMorphism& seed, long degree);

/// Exact coherence of the table: both recursion displays hold for every
/// in-range split (anchors "bicharacter (rows)" and "bicharacter
/// (columns)"), the edge entries are the counit functionals ("bicharacter
/// (edges)"), and the stored inverses are two-sided ("bicharacter
/// (inverses)").
CheckList check_bicharacter(const DiagramBicharacter& bc,
                            const std::string& subject);

/// R_{i,j} = (r^{-1}_{i,j} (x) sigma_{A_i,A_j} (x) r_{i,j}) Delta^(2):
/// the braiding-style operator C^(x)i (x) C^(x)j -> C^(x)j (x) C^(x)i
/// induced by the pairing.
GradedMorphism diagram_R(const DiagramBicharacter& bc, long i, long j);

/// Operator laws of the R table, in every bounded degree: each R_{i,j} is
/// an invertible coalgebra morphism and the hexagon factorizations
///   R_{i+j,k} = (R_{i,k} (x) A_j)(A_i (x) R_{j,k}),
///   R_{i,j+k} = (A_j (x) R_{i,k})(R_{i,j} (x) A_k)
/// hold exactly.
CheckList check_diagram_R(const DiagramBicharacter& bc,
                          const std::string& subject);

/// The matrix coalgebra on V* (x) V of a simple object V: comultiplication
/// V* (x) db (x) V, counit ev, and the half-braiding
///   sigma(N) = (tau^-1_{V*,N} (x) V)(V* (x) tau_{V,N}),
/// whose component at N twists by chi(|v|,|n|) chi(|n|,|v*|)^-1 — the plain
/// flip when chi is symmetric, but a genuine deviation from the categorical
/// braiding otherwise.  Verifies the snake identities of the canonical dual
/// before building; throws StructuralError if V is not simple or the snakes
/// fail.
CentralCoalgebra dual_coalgebra(const ContextPtr& ctx, const GradedObject& v);

/// Centrality of a comodule: given rho: V -> V (x) B over a central
/// bialgebra, forms the induced map b = (ev (x) B)(V* (x) rho) from the
/// matrix coalgebra V* (x) V to B and verifies, in order,
///   - the coaction laws (rho (x) B) rho = (V (x) Delta) rho and
///     (V (x) counit) rho = V,
///   - that b is a coalgebra morphism (comultiplication and counit parts),
///   - that b intertwines the half-braidings of V* (x) V and B at each
///     probe object.
/// Violations are reported as failed checks, not thrown, so corrupted
/// coactions are diagnosed; only a type mismatch of rho is structural.
CheckList check_comodule_central(const GradedObject& v,
                                 const CentralBialgebra& b,
                                 const GradedMorphism& rho,
                                 const std::vector<GradedObject>& probes,
                                 const std::string& subject);
/// Same with the default probe family {V, B's carrier}.
CheckList check_comodule_central(const GradedObject& v,
                                 const CentralBialgebra& b,
                                 const GradedMorphism& rho,
                                 const std::string& subject);

} // namespace innertwist
