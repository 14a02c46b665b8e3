#pragma once

#include "l2b/bracket.hpp"
#include "l2b/linalg.hpp"
#include "l2b/report.hpp"

namespace l2b {

/// Structure maps of a weak Lie 2-algebra on theta -> g, as exact
/// structure-constant tensors.
struct Lie2AlgebraData {
    SpaceSpec space;
    RatMat phi;        // phi[i][a]: x_i-coefficient of phi(u_a)
    Tensor3 bracket;   // bracket(i,j,k): x_k-coefficient of [x_i, x_j]; skew in (i,j)
    Tensor3 action;    // action(i,a,b): u_b-coefficient of x_i |> u_a
    Tensor4 homotopy;  // homotopy(i,j,k,a): u_a-coefficient of h(x_i,x_j,x_k); alternating

    static Lie2AlgebraData zero(const SpaceSpec& sp);
    /// Shape and symmetry validation; throws on violation.
    void validate() const;
    bool operator==(const Lie2AlgebraData&) const = default;

    RatVec apply_phi(const RatVec& u) const;
    RatVec apply_bracket(const RatVec& x, const RatVec& y) const;
    RatVec apply_action(const RatVec& x, const RatVec& u) const;
    RatVec apply_homotopy(const RatVec& x, const RatVec& y, const RatVec& z) const;
};

/// Structure maps of a weak Lie 2-coalgebra on theta -> g: the shared map phi,
/// the two cobrackets read through the pairing, and the coalgebra homotopy
/// kept as the (p,q,k,l) = (0,1,3,0) element it encodes.
struct Lie2CoalgebraData {
    SpaceSpec space;
    RatMat phi;      // as in Lie2AlgebraData
    Tensor3 delta;   // delta(i,j,a) = <delta(x_i), xi_j ^ kappa_a>
    Tensor3 omega;   // omega(a,b,c) = <omega(u_a), kappa_b ^ kappa_c>; skew in (b,c)
    SymElement eta;  // element of g* (.) S^3(theta)

    static Lie2CoalgebraData zero(const SpaceSpec& sp);
    void validate() const;
    bool operator==(const Lie2CoalgebraData&) const = default;
};

/// A degree(-4) element supported on the seven admissible signatures.
struct BialgebraElement {
    SymElement eps;
    bool is_quasi = false;
    bool is_strict = false;

    /// Validates support (degree -4, admissible signatures only) and sets flags.
    static BialgebraElement from_element(const SymElement& eps);
};

/// The seven admissible (p,q,k,l) signatures of a weak Lie 2-bialgebra element.
extern const int kBialgebraSignatures[7][4];

// -- element encoding ---------------------------------------------------------
// The decode direction (structure constants from iterated brackets) is the
// definition; the encode direction inverts it per signature, with the scale
// factors solved once per space from the dictionary itself.

SymElement algebra_to_element(const Lie2AlgebraData& d);
Lie2AlgebraData element_to_algebra(const SymElement& l);
SymElement coalgebra_to_element(const Lie2CoalgebraData& d);
Lie2CoalgebraData element_to_coalgebra(const SymElement& c);

/// Coalgebra homotopy as structure constants: eta(a,b,c,i) is the xi_i
/// coefficient of the value on (kappa_a, kappa_b, kappa_c); alternating.
SymElement eta_from_tensor(const SpaceSpec& sp, const Tensor4& eta);
Tensor4 eta_to_tensor(const SymElement& eta);

/// Requires alg.phi == coalg.phi (the shared component is taken once).
BialgebraElement assemble_bialgebra(const Lie2AlgebraData& alg, const Lie2CoalgebraData& coalg);

Lie2AlgebraData project_algebra(const BialgebraElement& e);
Lie2CoalgebraData project_coalgebra(const BialgebraElement& e);

// -- verifiers ----------------------------------------------------------------

/// Evaluates the five structure-map identities on all basis tuples, the master
/// equation {l,l} = 0, and the factor relations tying the two together.
VerificationReport verify_weak_lie2_algebra(const Lie2AlgebraData& d);

/// Master equation {c,c} = 0 for the coalgebra element.
VerificationReport verify_weak_lie2_coalgebra(const Lie2CoalgebraData& d);

/// {eps,eps} = 0, reported in four parts: the algebra part {l,l}, the
/// coalgebra part {c,c}, the strict mixed part, and the homotopy cross terms.
VerificationReport verify_bialgebra(const BialgebraElement& e);

/// The four defect parts of {eps,eps} in the order described above.
/// Their signature supports are disjoint and
/// {eps,eps} = algebra + coalgebra + 2*mixed + homotopy_cross.
struct BialgebraDefects {
    SymElement algebra;
    SymElement coalgebra;
    SymElement mixed;
    SymElement homotopy_cross;
};
BialgebraDefects bialgebra_defects(const BialgebraElement& e);

} // namespace l2b
