#pragma once

#include "l2b/linalg.hpp"
#include "l2b/report.hpp"

namespace l2b {

/// A finite-dimensional Lie algebra given by structure constants on a fixed
/// basis: c(i,j,k) is the e_k-coefficient of [e_i, e_j].
struct LieAlgebraConstants {
    int dim = 0;
    Tensor3 c;

    LieAlgebraConstants() = default;
    explicit LieAlgebraConstants(int n) : dim(n), c(n, n, n) {}

    void set_bracket(int i, int j, int k, const Rational& v) {
        c.at(i, j, k) = v;
        c.at(j, i, k) = -v;
    }
    RatVec bracket(const RatVec& a, const RatVec& b) const;
    /// ad matrix of basis vector e_i: column j holds [e_i, e_j].
    RatMat ad(int i) const;
    /// Structure constants after the change of basis e'_j = sum_i P[i][j] e_i.
    LieAlgebraConstants change_basis(const RatMat& P) const;
    LieAlgebraConstants opposite() const;

    /// Throws when c is not skew in its first two slots.
    void validate_skew() const;
    /// Jacobi witnesses over all basis triples; empty = Lie algebra.
    Check jacobi_check(const std::string& id = "jacobi") const;

    bool operator==(const LieAlgebraConstants&) const = default;

    static LieAlgebraConstants abelian(int n);
    /// [e0,e1]=e2, [e1,e2]=e0, [e2,e0]=e1
    static LieAlgebraConstants so3();
    /// [e0,e1]=e1
    static LieAlgebraConstants nonabelian2();
    /// [e0,e1]=e2 central
    static LieAlgebraConstants heisenberg3();
};

/// Cobracket structure constants read off a dual Lie algebra on the dual
/// basis: d(i, a, b) = <delta(e_i), f_a ^ f_b> = -<e_i, [f_a, f_b]_*>,
/// stored skew in (a, b).
Tensor3 cobracket_from_dual(const LieAlgebraConstants& dual);

/// Lie bialgebra check for a pair of algebras on dual bases: Jacobi on both
/// sides plus the 1-cocycle condition for the cobracket of the dual bracket.
VerificationReport check_lie_bialgebra(const LieAlgebraConstants& a,
                                       const LieAlgebraConstants& a_dual);

/// Renders a coordinate vector as a combination of basis tokens ("e0", ...).
std::string render_vec(const RatVec& v, const std::string& token = "e");

} // namespace l2b
