#pragma once

#include "l2b/sym.hpp"

namespace l2b {

/// The degree-3 Poisson bracket on the shifted symmetric algebra.
///
/// On generators it is the dual-basis pairing ({v, eps} = (-1)^{|v|} <v,eps>
/// for primal v and dual eps, zero on primal/primal and dual/dual pairs);
/// it extends to arbitrary elements as a biderivation with the shifted
/// antisymmetry {e1,e2} = -(-1)^{(|e1|+3)(|e2|+3)} {e2,e1}.  Output degree is
/// |e1| + |e2| + 3 on homogeneous inputs.  Rejects mixed ambient spaces.
SymElement big_bracket(const SymElement& e1, const SymElement& e2);

/// {e1,{e2,e3}} - {{e1,e2},e3} - (-1)^{(|e1|+3)(|e2|+3)} {e2,{e1,e3}}.
/// Identically zero; inputs must be homogeneous.
SymElement jacobi_defect(const SymElement& e1, const SymElement& e2, const SymElement& e3);

/// Iterated bracket {...{{F,x1},x2},...,xq} for F with exactly q dual factors
/// per monomial and arguments from the primal subalgebra.  Rejects arity
/// mismatches and arguments containing dual-role generators.
SymElement derived_map(const SymElement& F, const std::vector<SymElement>& args);

/// Mirror of derived_map for the dual side: arguments from the subalgebra
/// generated by the dual roles, consuming primal factors of F.
SymElement derived_map_dual(const SymElement& F, const std::vector<SymElement>& args);

/// Defect of the shuffle composition identity for derived maps:
/// derived_map({E,F}, args) minus the two-shuffle-sum expansion.  Identically
/// zero; E and F must have uniform dual arity l and q with |args| = q + l - 1.
SymElement composition_defect(const SymElement& E, const SymElement& F,
                              const std::vector<SymElement>& args);

} // namespace l2b
