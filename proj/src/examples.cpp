#include "l2b/examples.hpp"

#include <stdexcept>

namespace l2b {

GaussMat gauss_zero(int n) { return GaussMat(n, std::vector<GaussianScalar>(n)); }

GaussMat gauss_commutator(const GaussMat& a, const GaussMat& b) {
    int n = static_cast<int>(a.size());
    GaussMat r = gauss_zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                r[i][j] += a[i][k] * b[k][j];
                r[i][j] += GaussianScalar(Rational(-1)) * (b[i][k] * a[k][j]);
            }
    return r;
}

GaussianScalar gauss_trace_product(const GaussMat& a, const GaussMat& b) {
    int n = static_cast<int>(a.size());
    GaussianScalar t;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) t += a[i][k] * b[k][i];
    return t;
}

RatMat killing_form(const LieAlgebraConstants& g) {
    RatMat K = zero_matrix(g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i) {
        RatMat adi = g.ad(i);
        for (int j = 0; j < g.dim; ++j) {
            RatMat prod = mat_mul(adi, g.ad(j));
            Rational tr;
            for (int k = 0; k < g.dim; ++k) tr += prod[k][k];
            K[i][j] = tr;
        }
    }
    return K;
}

BialgebraElement string_lie2_bialgebra(const LieAlgebraConstants& g, const RatVec& x,
                                       const Rational& hbar) {
    if (static_cast<int>(x.size()) != g.dim)
        throw std::invalid_argument("string_lie2_bialgebra: x size mismatch");
    RatMat K = killing_form(g);
    if (!invert(K)) throw std::invalid_argument("string_lie2_bialgebra: Killing form degenerate");

    SpaceSpec sp(g.dim, 1);
    Lie2AlgebraData alg = Lie2AlgebraData::zero(sp);
    alg.bracket = g.c;
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            for (int k = 0; k < g.dim; ++k) {
                // h(e_i,e_j,e_k) = hbar K(e_i, [e_j,e_k])
                Rational v;
                for (int l = 0; l < g.dim; ++l) v += g.c.at(j, k, l) * K[i][l];
                alg.homotopy.at(i, j, k, 0) = hbar * v;
            }

    Lie2CoalgebraData co = Lie2CoalgebraData::zero(sp);
    // <delta(e_i), xi_j ^ kappa_0> = <e_i, kappa_0 |> xi_j> with
    // kappa_0 |> xi = coadjoint action of the fixed element x
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
            Rational v;
            for (int l = 0; l < g.dim; ++l) v += x[l] * g.c.at(l, i, j);
            co.delta.at(i, j, 0) = -v;
        }
    return assemble_bialgebra(alg, co);
}

BialgebraCrossedModule trivial_bcm(const LieAlgebraConstants& theta,
                                   const LieAlgebraConstants& theta_dual) {
    VerificationReport pre = check_lie_bialgebra(theta, theta_dual);
    if (!pre.pass())
        throw std::invalid_argument("trivial_bcm: (theta, theta*) is not a Lie bialgebra:\n" +
                                    pre.to_text());
    int n = theta.dim;
    BialgebraCrossedModule bcm;
    bcm.cm = LieAlgebraCrossedModule::zero(n, n);
    bcm.cm.source = theta;
    bcm.cm.target = theta;
    bcm.cm.phi = identity_matrix(n);
    bcm.cm.action = theta.c;  // adjoint action

    bcm.dual_cm = LieAlgebraCrossedModule::zero(n, n);
    bcm.dual_cm.source = theta_dual;
    bcm.dual_cm.target = theta_dual.opposite();
    for (int i = 0; i < n; ++i) bcm.dual_cm.phi[i][i] = Rational(-1);
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) bcm.dual_cm.action.at(a, p, q) = -theta_dual.c.at(a, p, q);
    return bcm;
}

namespace {

// real-linear coordinates of an n x n Gaussian matrix (re, im per entry)
RatVec flatten(const GaussMat& a) {
    int n = static_cast<int>(a.size());
    RatVec out;
    out.reserve(2 * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.push_back(a[i][j].re);
            out.push_back(a[i][j].im);
        }
    return out;
}

LieAlgebraConstants constants_from_basis(const std::vector<GaussMat>& basis) {
    int dim = static_cast<int>(basis.size());
    std::vector<RatVec> span;
    for (const auto& b : basis) span.push_back(flatten(b));
    LieAlgebraConstants out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            auto coords = coordinates_in_span(span, flatten(gauss_commutator(basis[i], basis[j])));
            if (!coords) throw std::logic_error("matrix basis not closed under commutator");
            for (int k = 0; k < dim; ++k) out.set_bracket(i, j, k, (*coords)[k]);
        }
    return out;
}

}  // namespace

ManinTripleData matrix_manin_triple(int n) {
    if (n < 1) throw std::invalid_argument("matrix_manin_triple: n must be positive");
    const GaussianScalar one{Rational(1)};
    const GaussianScalar iu{Rational(0), Rational(1)};
    auto E = [&](int j, int k) {
        GaussMat m = gauss_zero(n);
        m[j][k] = one;
        return m;
    };
    auto scale = [&](const GaussianScalar& s, GaussMat m) {
        for (auto& row : m)
            for (auto& v : row) v = s * v;
        return m;
    };
    auto add = [&](GaussMat a, const GaussMat& b) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] += b[i][j];
        return a;
    };

    // theta: E_jj, then E_jk and iE_jk for j < k
    std::vector<GaussMat> theta_basis;
    for (int j = 0; j < n; ++j) theta_basis.push_back(E(j, j));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            theta_basis.push_back(E(j, k));
            theta_basis.push_back(scale(iu, E(j, k)));
        }
    // u(n): iE_jj, then E_jk - E_kj and i(E_jk + E_kj) for j < k
    std::vector<GaussMat> un_basis;
    for (int j = 0; j < n; ++j) un_basis.push_back(scale(iu, E(j, j)));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            un_basis.push_back(add(E(j, k), scale(GaussianScalar(Rational(-1)), E(k, j))));
            un_basis.push_back(scale(iu, add(E(j, k), E(k, j))));
        }

    int dim = n * n;
    ManinTripleData out;
    out.n = n;
    out.theta = constants_from_basis(theta_basis);
    LieAlgebraConstants un = constants_from_basis(un_basis);

    auto im_tr = [&](const GaussMat& a, const GaussMat& b) { return gauss_trace_product(a, b).im; };
    out.pairing_cross = zero_matrix(dim, dim);
    out.pairing_theta = zero_matrix(dim, dim);
    out.pairing_un = zero_matrix(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            out.pairing_cross[a][b] = im_tr(theta_basis[a], un_basis[b]);
            out.pairing_theta[a][b] = im_tr(theta_basis[a], theta_basis[b]);
            out.pairing_un[a][b] = im_tr(un_basis[a], un_basis[b]);
        }

    // transport the u(n) bracket to the basis dual to theta:
    // kappa_a = psi(Y_a), Y_a = sum_c A[c][a] f_c with A = pairing^{-1},
    // psi(f_c) = sum_d P[d][c] kappa_d
    auto Ainv = invert(out.pairing_cross);
    if (!Ainv) throw std::logic_error("matrix_manin_triple: degenerate pairing");
    const RatMat& P = out.pairing_cross;
    const RatMat& A = *Ainv;
    out.theta_dual = LieAlgebraConstants(dim);
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            RatVec ya(dim), yb(dim);
            for (int c = 0; c < dim; ++c) {
                ya[c] = A[c][a];
                yb[c] = A[c][b];
            }
            RatVec z = un.bracket(ya, yb);
            RatVec kappa(dim);
            for (int c = 0; c < dim; ++c)
                for (int d = 0; d < dim; ++d) kappa[d] += z[c] * P[d][c];
            for (int d = 0; d < dim; ++d) out.theta_dual.set_bracket(a, b, d, kappa[d]);
        }
    return out;
}

BialgebraCrossedModule matrix_example(int n) {
    ManinTripleData mt = matrix_manin_triple(n);
    RatVec id_vec(mt.theta.dim);
    for (int j = 0; j < n; ++j) id_vec[j] = Rational(1);  // identity = sum of E_jj
    return quotient_construction(mt.theta, mt.theta_dual, {id_vec});
}

} // namespace l2b
