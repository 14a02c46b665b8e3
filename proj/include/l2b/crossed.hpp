#pragma once

#include "l2b/lie.hpp"
#include "l2b/structures.hpp"
#include "l2b/wedge.hpp"

namespace l2b {

/// Crossed module of Lie algebras: source --phi--> target with the target
/// acting on the source by derivations.  For the primal module the source is
/// theta and the target is g; the dual module has source g* and target theta*.
struct LieAlgebraCrossedModule {
    LieAlgebraConstants source;
    LieAlgebraConstants target;
    RatMat phi;      // target_dim x source_dim
    Tensor3 action;  // action(i,a,b): source_b-coefficient of target_i |> source_a

    int source_dim() const { return source.dim; }
    int target_dim() const { return target.dim; }
    static LieAlgebraCrossedModule zero(int target_dim, int source_dim);
    void validate() const;

    RatVec act(const RatVec& t, const RatVec& s) const;
    RatVec apply_phi(const RatVec& s) const { return mat_apply(phi, s); }
    /// Semidirect sum Lie algebra on target (+) source, target block first.
    LieAlgebraConstants semidirect() const;

    bool operator==(const LieAlgebraCrossedModule&) const = default;
};

/// Jacobi on both sides, module and derivation laws for the action, the two
/// crossed-module axioms, and the derived homomorphism property of phi.
VerificationReport verify_crossed_module(const LieAlgebraCrossedModule& cm);

struct InducedCrossedModule {
    LieAlgebraCrossedModule cm;
    VerificationReport preconditions;  // module law plus the two inducing conditions
};

/// Builds the unique source bracket [u,v] := phi(u) |> v from a target
/// algebra, a module action and phi, when the inducing conditions hold.
InducedCrossedModule induce_source_bracket(const LieAlgebraConstants& target,
                                           const Tensor3& action, const RatMat& phi);

// -- the (delta, omega) calculus on the semidirect sum ---------------------------

/// Cobracket pair read through the duality: delta(i,j,a) = <delta(x_i), xi_j ^ kappa_a>,
/// omega(a,b,c) = <omega(u_a), kappa_b ^ kappa_c>.
struct DeltaOmega {
    SpaceSpec space;
    Tensor3 delta;
    Tensor3 omega;

    WedgeElement delta_of(const RatVec& x) const;
    WedgeElement omega_of(const RatVec& u) const;
    /// delta + omega extended as a parity-1 derivation of the exterior algebra.
    WedgeElement codifferential(const WedgeElement& w) const;

    bool operator==(const DeltaOmega&) const = default;
};

/// Membership in W_k: iota_{zeta1} iota_{phi* zeta2} w = -iota_{zeta2} iota_{phi* zeta1} w
/// for all basis zeta in g*.  w must live in g ^ (wedge^{k-1} theta).
bool check_W_membership(const WedgeElement& w, int k, const RatMat& phi);

/// Degree-0 derivation with D(x) = 0 and D(u) = phi(u).
WedgeElement D_phi(const RatMat& phi, const WedgeElement& w);

/// The three compatibility laws of the pair (W_2 values, D_phi o omega =
/// delta o phi, omega^2 = 0, (omega+delta) o delta = 0).
VerificationReport check_delta_omega(const DeltaOmega& dw, const RatMat& phi);

/// Dual crossed module (g* -> theta*, map -phi^T) encoded by the pair.
LieAlgebraCrossedModule delta_omega_to_dual_cm(const DeltaOmega& dw, const RatMat& phi);
DeltaOmega dual_cm_to_delta_omega(const LieAlgebraCrossedModule& dual_cm);

/// partial(x+u) = omega(u) + delta(x) + pi(x), pi = -1/2 D_phi o delta.
WedgeElement cobracket_partial(const DeltaOmega& dw, const RatMat& phi, const WedgeElement& e);

// -- Lie bialgebra crossed modules ------------------------------------------------

struct BialgebraCrossedModule {
    LieAlgebraCrossedModule cm;       // theta -> g
    LieAlgebraCrossedModule dual_cm;  // g* -> theta*

    SpaceSpec space() const { return SpaceSpec(cm.target_dim(), cm.source_dim()); }
    bool operator==(const BialgebraCrossedModule&) const = default;
};

/// Both crossed modules, the duality of the maps, the cocycle conditions for
/// (delta, omega), and the Lie-bialgebra property of the semidirect pair
/// (checked both through the partial cobracket and through the cocycle of the
/// dual semidirect bracket).
VerificationReport verify_bialgebra_cm(const BialgebraCrossedModule& bcm);

/// The strict degree-(-4) element of a Lie bialgebra crossed module.
/// With check=true the input is verified first and rejected when invalid.
BialgebraElement bcm_to_lie2bialgebra(const BialgebraCrossedModule& bcm, bool check = true);

/// Inverse of the above on strict verified elements; rejects non-strict input.
BialgebraCrossedModule lie2bialgebra_to_bcm(const BialgebraElement& e);

// -- matched pairs -----------------------------------------------------------------

struct MatchedPairData {
    LieAlgebraConstants lie_g;
    LieAlgebraConstants lie_tstar;
    Tensor3 act_g_on_tstar;  // (i,a,b): kappa_b-coefficient of x_i |> kappa_a
    Tensor3 act_tstar_on_g;  // (a,i,j): x_j-coefficient of kappa_a |> x_i

    RatVec act_g(const RatVec& x, const RatVec& k) const;
    RatVec act_tstar(const RatVec& k, const RatVec& x) const;
};

/// (g, theta*) with both actions dualized from the crossed-module data.
MatchedPairData matched_pair_from_bcm(const BialgebraCrossedModule& bcm);

/// Jacobi on both algebras plus the two mixed compatibility equations.
VerificationReport matched_pair_defects(const MatchedPairData& mp);

/// Double Lie algebra on g (+) theta* (g block first); rejects defective input.
LieAlgebraConstants build_double(const MatchedPairData& mp);

/// Quotient of a Lie bialgebra (theta, theta*) by a central ideal with
/// omega(I) inside wedge^2 I; g = theta/I, phi the projection.
BialgebraCrossedModule quotient_construction(const LieAlgebraConstants& theta,
                                             const LieAlgebraConstants& theta_dual,
                                             const std::vector<RatVec>& ideal_basis);

/// The two restricted Lie bialgebras (theta, theta*) and (g, g*).
struct RestrictedBialgebras {
    LieAlgebraConstants theta, theta_dual;
    LieAlgebraConstants g, g_dual;
};
RestrictedBialgebras restrict_bialgebras(const BialgebraCrossedModule& bcm);

} // namespace l2b
