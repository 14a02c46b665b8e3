#pragma once

#include "l2b/crossed.hpp"

namespace l2b {

/// Exact complex rational a + bi, the scalar ring of the matrix construction.
struct GaussianScalar {
    Rational re, im;

    GaussianScalar() = default;
    GaussianScalar(Rational r) : re(std::move(r)) {}
    GaussianScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianScalar operator+(const GaussianScalar& a, const GaussianScalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianScalar operator-(const GaussianScalar& a, const GaussianScalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianScalar operator*(const GaussianScalar& a, const GaussianScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianScalar& operator+=(const GaussianScalar& o) { return *this = *this + o; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool operator==(const GaussianScalar&) const = default;
};

using GaussMat = std::vector<std::vector<GaussianScalar>>;

GaussMat gauss_zero(int n);
GaussMat gauss_commutator(const GaussMat& a, const GaussMat& b);
GaussianScalar gauss_trace_product(const GaussMat& a, const GaussMat& b);

/// K(e_i, e_j) = trace(ad e_i . ad e_j).
RatMat killing_form(const LieAlgebraConstants& g);

/// The weak 2-term structure on a Lie algebra with nondegenerate Killing form:
/// theta = R, trivial phi and action, h = hbar K(., [.,.]), coalgebra side
/// carried by the coadjoint action of a fixed element x.  Rejects degenerate
/// Killing forms.
BialgebraElement string_lie2_bialgebra(const LieAlgebraConstants& g, const RatVec& x,
                                       const Rational& hbar);

/// The identity crossed module of a Lie bialgebra (theta, theta*) with the
/// adjoint action, dual side on the opposite bracket.  Rejects pairs failing
/// the Lie-bialgebra check.
BialgebraCrossedModule trivial_bcm(const LieAlgebraConstants& theta,
                                   const LieAlgebraConstants& theta_dual);

/// The Manin-triple data of (gl_n(C), theta, u(n)) under Im Tr(XY):
/// theta = upper triangular with real diagonal, theta* identified with u(n).
struct ManinTripleData {
    int n = 0;
    LieAlgebraConstants theta;       // structure constants on the theta basis
    LieAlgebraConstants theta_dual;  // u(n) bracket transported to the dual basis
    RatMat pairing_cross;            // Im Tr(t_a f_b)
    RatMat pairing_theta;            // Im Tr(t_a t_b) (zero: lagrangian)
    RatMat pairing_un;               // Im Tr(f_a f_b) (zero: lagrangian)
};
ManinTripleData matrix_manin_triple(int n);

/// Quotient of the Manin-triple bialgebra by the central ideal R*Id:
/// g = traceless upper triangular, phi the projection.
BialgebraCrossedModule matrix_example(int n);

} // namespace l2b
