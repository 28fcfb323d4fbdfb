#pragma once

#include "innertwist/central.hpp"

#include <map>
#include <optional>
#include <string>

namespace innertwist {

/// Everything declared by one structure file: the braided context, the
/// named objects and morphisms, and — when the file declares one — a
/// central bialgebra (with the categorical flip as its half-braiding and
/// an optional antipode) plus an optional pairing for the
/// coquasitriangular suite.  A file with no declarations yields a session
/// whose context is null and whose maps are empty.
struct StructureSession {
    ContextPtr ctx;
    std::map<std::string, GradedObject> objects;
    std::map<std::string, GradedMorphism> morphisms;
    std::string bialgebra_name;
    std::optional<CentralBialgebra> bialgebra;
    std::optional<GradedMorphism> pairing;
};

/// Parse the line-oriented structure format.  Directives:
///
///   field n                     scalars are the order-n cyclotomic field
///   group n1 n2 ...             grading by Z/n1 x Z/n2 x ...
///   chi e11 .. e1r ; e21 .. ;   braiding exponents: chi(a,b) = z^(a^T E b)
///   object Name                 begin an object; followed by basis lines
///   basis label g1 ... gr       one basis vector with its degree
///   morphism f Src -> Dst       begin a morphism; Src/Dst are '*'-joined
///                               object names, 'I' the unit object
///   entry row col scalar        one matrix entry (scalar expressions:
///                               rationals, z^k, sums, products, parens)
///   bialgebra B mult=m unit=u delta=d counit=e
///   antipode S                  a declared morphism, as the antipode
///   sigma flip                  the half-braiding (flip is the default
///                               and the only supported choice)
///   cqt r                       a declared morphism, as the pairing
///
/// '#' starts a comment.  Everything is validated while reading: unknown
/// names, out-of-range entries, entries violating the grading, and
/// ill-typed structure maps all raise ParseError with a 1-based source
/// location.
StructureSession parse_structure_text(const std::string& text);

/// Read and parse a structure file.  Throws StructuralError when the file
/// cannot be read, ParseError on invalid content.
StructureSession parse_structure_file(const std::string& path);

} // namespace innertwist
