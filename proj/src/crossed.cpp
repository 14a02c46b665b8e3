#include "l2b/crossed.hpp"

#include <chrono>
#include <stdexcept>

namespace l2b {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

RatVec basis_vec(int dim, int i) {
    RatVec v(dim);
    v[i] = Rational(1);
    return v;
}

RatVec vadd(RatVec a, const RatVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

RatVec vneg(RatVec a) {
    for (auto& r : a) r = -r;
    return a;
}

bool all_zero(const RatVec& v) {
    for (const auto& r : v)
        if (!r.is_zero()) return false;
    return true;
}

}  // namespace

LieAlgebraCrossedModule LieAlgebraCrossedModule::zero(int target_dim, int source_dim) {
    LieAlgebraCrossedModule cm;
    cm.source = LieAlgebraConstants(source_dim);
    cm.target = LieAlgebraConstants(target_dim);
    cm.phi = zero_matrix(target_dim, source_dim);
    cm.action = Tensor3(target_dim, source_dim, source_dim);
    return cm;
}

void LieAlgebraCrossedModule::validate() const {
    if (static_cast<int>(phi.size()) != target.dim ||
        (target.dim > 0 && static_cast<int>(phi[0].size()) != source.dim))
        throw std::invalid_argument("crossed module: phi shape");
    if (action.dim(0) != target.dim || action.dim(1) != source.dim || action.dim(2) != source.dim)
        throw std::invalid_argument("crossed module: action shape");
}

RatVec LieAlgebraCrossedModule::act(const RatVec& t, const RatVec& s) const {
    RatVec r(source.dim);
    for (int i = 0; i < target.dim; ++i)
        for (int a = 0; a < source.dim; ++a) {
            if (t[i].is_zero() || s[a].is_zero()) continue;
            Rational f = t[i] * s[a];
            for (int b = 0; b < source.dim; ++b) r[b] += f * action.at(i, a, b);
        }
    return r;
}

LieAlgebraConstants LieAlgebraCrossedModule::semidirect() const {
    int tn = target.dim, sn = source.dim;
    LieAlgebraConstants out(tn + sn);
    for (int i = 0; i < tn; ++i)
        for (int j = 0; j < tn; ++j)
            for (int k = 0; k < tn; ++k) out.c.at(i, j, k) = target.c.at(i, j, k);
    for (int a = 0; a < sn; ++a)
        for (int b = 0; b < sn; ++b)
            for (int c = 0; c < sn; ++c) out.c.at(tn + a, tn + b, tn + c) = source.c.at(a, b, c);
    for (int i = 0; i < tn; ++i)
        for (int a = 0; a < sn; ++a)
            for (int b = 0; b < sn; ++b) {
                out.c.at(i, tn + a, tn + b) = action.at(i, a, b);
                out.c.at(tn + a, i, tn + b) = -action.at(i, a, b);
            }
    return out;
}

namespace {

Check skew_check(const LieAlgebraConstants& alg, const std::string& id) {
    Check out{id, {}};
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < alg.dim; ++k) {
                Rational d = alg.c.at(i, j, k) + alg.c.at(j, i, k);
                if (!d.is_zero())
                    out.witnesses.push_back({"(e" + std::to_string(i) + ",e" + std::to_string(j) +
                                                 ")",
                                             d.to_string() + " e" + std::to_string(k)});
            }
    return out;
}

}  // namespace

VerificationReport verify_crossed_module(const LieAlgebraCrossedModule& cm) {
    auto t0 = Clock::now();
    cm.validate();
    VerificationReport rep;
    int tn = cm.target.dim, sn = cm.source.dim;
    auto T = [&](int i) { return basis_vec(tn, i); };
    auto S = [&](int a) { return basis_vec(sn, a); };

    rep.checks.push_back(skew_check(cm.target, "target-skew"));
    rep.checks.push_back(skew_check(cm.source, "source-skew"));
    rep.checks.push_back(cm.target.jacobi_check("target-jacobi"));
    rep.checks.push_back(cm.source.jacobi_check("source-jacobi"));

    Check& mod = rep.add("action-module-law");
    for (int i = 0; i < tn; ++i)
        for (int j = i + 1; j < tn; ++j)
            for (int a = 0; a < sn; ++a) {
                RatVec d = cm.act(cm.target.bracket(T(i), T(j)), S(a));
                d = vadd(d, vneg(cm.act(T(i), cm.act(T(j), S(a)))));
                d = vadd(d, cm.act(T(j), cm.act(T(i), S(a))));
                if (!all_zero(d))
                    mod.witnesses.push_back({"(t" + std::to_string(i) + ",t" + std::to_string(j) +
                                                 ",s" + std::to_string(a) + ")",
                                             render_vec(d, "s")});
            }

    Check& der = rep.add("action-by-derivations");
    for (int i = 0; i < tn; ++i)
        for (int a = 0; a < sn; ++a)
            for (int b = a + 1; b < sn; ++b) {
                RatVec d = cm.act(T(i), cm.source.bracket(S(a), S(b)));
                d = vadd(d, vneg(cm.source.bracket(cm.act(T(i), S(a)), S(b))));
                d = vadd(d, vneg(cm.source.bracket(S(a), cm.act(T(i), S(b)))));
                if (!all_zero(d))
                    der.witnesses.push_back({"(t" + std::to_string(i) + ",s" + std::to_string(a) +
                                                 ",s" + std::to_string(b) + ")",
                                             render_vec(d, "s")});
            }

    Check& ax1 = rep.add("axiom-phi-action");  // phi(u) |> v = [u,v]
    for (int a = 0; a < sn; ++a)
        for (int b = 0; b < sn; ++b) {
            RatVec d = vadd(cm.act(cm.apply_phi(S(a)), S(b)),
                            vneg(cm.source.bracket(S(a), S(b))));
            if (!all_zero(d))
                ax1.witnesses.push_back(
                    {"(s" + std::to_string(a) + ",s" + std::to_string(b) + ")", render_vec(d, "s")});
        }

    Check& ax2 = rep.add("axiom-phi-equivariance");  // phi(x |> u) = [x, phi(u)]
    for (int i = 0; i < tn; ++i)
        for (int a = 0; a < sn; ++a) {
            RatVec d = vadd(cm.apply_phi(cm.act(T(i), S(a))),
                            vneg(cm.target.bracket(T(i), cm.apply_phi(S(a)))));
            if (!all_zero(d))
                ax2.witnesses.push_back(
                    {"(t" + std::to_string(i) + ",s" + std::to_string(a) + ")", render_vec(d, "t")});
        }

    Check& hom = rep.add("phi-homomorphism");  // implied by the axioms; asserted
    for (int a = 0; a < sn; ++a)
        for (int b = a + 1; b < sn; ++b) {
            RatVec d = vadd(cm.apply_phi(cm.source.bracket(S(a), S(b))),
                            vneg(cm.target.bracket(cm.apply_phi(S(a)), cm.apply_phi(S(b)))));
            if (!all_zero(d))
                hom.witnesses.push_back(
                    {"(s" + std::to_string(a) + ",s" + std::to_string(b) + ")", render_vec(d, "t")});
        }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

InducedCrossedModule induce_source_bracket(const LieAlgebraConstants& target,
                                           const Tensor3& action, const RatMat& phi) {
    int tn = target.dim;
    int sn = action.dim(1);
    VerificationReport pre;
    auto T = [&](int i) { return basis_vec(tn, i); };
    auto S = [&](int a) { return basis_vec(sn, a); };

    LieAlgebraCrossedModule cm = LieAlgebraCrossedModule::zero(tn, sn);
    cm.target = target;
    cm.action = action;
    cm.phi = phi;
    cm.validate();

    pre.checks.push_back(target.jacobi_check("target-jacobi"));
    Check& mod = pre.add("action-module-law");
    for (int i = 0; i < tn; ++i)
        for (int j = i + 1; j < tn; ++j)
            for (int a = 0; a < sn; ++a) {
                RatVec d = cm.act(target.bracket(T(i), T(j)), S(a));
                d = vadd(d, vneg(cm.act(T(i), cm.act(T(j), S(a)))));
                d = vadd(d, cm.act(T(j), cm.act(T(i), S(a))));
                if (!all_zero(d))
                    mod.witnesses.push_back({"(t" + std::to_string(i) + ",t" + std::to_string(j) +
                                                 ",s" + std::to_string(a) + ")",
                                             render_vec(d, "s")});
            }
    Check& c1 = pre.add("phi-equivariance");  // phi(x |> u) = [x, phi(u)]
    for (int i = 0; i < tn; ++i)
        for (int a = 0; a < sn; ++a) {
            RatVec d = vadd(mat_apply(phi, cm.act(T(i), S(a))),
                            vneg(target.bracket(T(i), mat_apply(phi, S(a)))));
            if (!all_zero(d))
                c1.witnesses.push_back(
                    {"(t" + std::to_string(i) + ",s" + std::to_string(a) + ")", render_vec(d, "t")});
        }
    Check& c2 = pre.add("phi-action-antisymmetry");  // phi(u)|>v = -phi(v)|>u
    for (int a = 0; a < sn; ++a)
        for (int b = a; b < sn; ++b) {
            RatVec d = vadd(cm.act(mat_apply(phi, S(a)), S(b)), cm.act(mat_apply(phi, S(b)), S(a)));
            if (!all_zero(d))
                c2.witnesses.push_back(
                    {"(s" + std::to_string(a) + ",s" + std::to_string(b) + ")", render_vec(d, "s")});
        }

    // [u,v] := phi(u) |> v
    for (int a = 0; a < sn; ++a)
        for (int b = 0; b < sn; ++b) {
            RatVec br = cm.act(mat_apply(phi, S(a)), S(b));
            for (int c = 0; c < sn; ++c) cm.source.c.at(a, b, c) = br[c];
        }
    return {cm, pre};
}

// ---- (delta, omega) --------------------------------------------------------------

WedgeElement DeltaOmega::delta_of(const RatVec& x) const {
    WedgeElement out(space);
    for (int i = 0; i < space.dim_g; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < space.dim_g; ++j)
            for (int a = 0; a < space.dim_theta; ++a) {
                const Rational& v = delta.at(i, j, a);
                if (v.is_zero()) continue;
                out.add_word({{Role::G, j}, {Role::Theta, a}}, x[i] * v);
            }
    }
    return out;
}

WedgeElement DeltaOmega::omega_of(const RatVec& u) const {
    WedgeElement out(space);
    for (int a = 0; a < space.dim_theta; ++a) {
        if (u[a].is_zero()) continue;
        for (int b = 0; b < space.dim_theta; ++b)
            for (int c = b + 1; c < space.dim_theta; ++c) {
                const Rational& v = omega.at(a, b, c);
                if (v.is_zero()) continue;
                out.add_word({{Role::Theta, b}, {Role::Theta, c}}, u[a] * v);
            }
    }
    return out;
}

WedgeElement DeltaOmega::codifferential(const WedgeElement& w) const {
    return apply_derivation(w, 1, [&](const Generator& g) {
        if (g.role == Role::G) return delta_of(basis_vec(space.dim_g, g.index));
        return omega_of(basis_vec(space.dim_theta, g.index));
    });
}

WedgeElement D_phi(const RatMat& phi, const WedgeElement& w) {
    const SpaceSpec& sp = w.space();
    return apply_derivation(w, 0, [&](const Generator& g) {
        if (g.role == Role::G) return WedgeElement::zero(sp);
        WedgeElement out(sp);
        for (int i = 0; i < sp.dim_g; ++i) out.add_word({{Role::G, i}}, phi[i][g.index]);
        return out;
    });
}

bool check_W_membership(const WedgeElement& w, int k, const RatMat& phi) {
    const SpaceSpec& sp = w.space();
    for (const auto& [m, c] : w.terms())
        if (static_cast<int>(m.gens.size()) != k || m.role_count(Role::G) != 1)
            throw std::invalid_argument("check_W_membership: not in g ^ (wedge^{k-1} theta)");
    for (int p = 0; p < sp.dim_g; ++p)
        for (int q = 0; q < sp.dim_g; ++q) {
            Covector z1 = Covector::basis_gstar(sp, p);
            Covector z2 = Covector::basis_gstar(sp, q);
            Covector phiz1 = Covector::zero(sp), phiz2 = Covector::zero(sp);
            for (int a = 0; a < sp.dim_theta; ++a) {
                phiz1.on_theta[a] = phi[p][a];
                phiz2.on_theta[a] = phi[q][a];
            }
            WedgeElement lhs = contract(z1, contract(phiz2, w));
            WedgeElement rhs = contract(z2, contract(phiz1, w));
            if (!(lhs + rhs).is_zero()) return false;
        }
    return true;
}

VerificationReport check_delta_omega(const DeltaOmega& dw, const RatMat& phi) {
    auto t0 = Clock::now();
    VerificationReport rep;
    const SpaceSpec& sp = dw.space;

    Check& w2 = rep.add("delta-in-W2");
    for (int i = 0; i < sp.dim_g; ++i) {
        WedgeElement d = dw.delta_of(basis_vec(sp.dim_g, i));
        if (d.is_zero()) continue;
        if (!check_W_membership(d, 2, phi))
            w2.witnesses.push_back({"x" + std::to_string(i), d.to_string()});
    }

    Check& compat = rep.add("Dphi-omega-vs-delta-phi");
    for (int a = 0; a < sp.dim_theta; ++a) {
        RatVec u = basis_vec(sp.dim_theta, a);
        WedgeElement lhs = D_phi(phi, dw.omega_of(u));
        WedgeElement rhs = dw.delta_of(mat_apply(phi, u));
        if (!(lhs - rhs).is_zero())
            compat.witnesses.push_back({"u" + std::to_string(a), (lhs - rhs).to_string()});
    }

    Check& sq = rep.add("omega-squared");
    for (int a = 0; a < sp.dim_theta; ++a) {
        WedgeElement r =
            dw.codifferential(dw.omega_of(basis_vec(sp.dim_theta, a))).project_theta(3);
        if (!r.is_zero()) sq.witnesses.push_back({"u" + std::to_string(a), r.to_string()});
    }

    Check& dd = rep.add("omega-plus-delta-after-delta");
    for (int i = 0; i < sp.dim_g; ++i) {
        WedgeElement r = dw.codifferential(dw.delta_of(basis_vec(sp.dim_g, i)));
        if (!r.is_zero()) dd.witnesses.push_back({"x" + std::to_string(i), r.to_string()});
    }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

LieAlgebraCrossedModule delta_omega_to_dual_cm(const DeltaOmega& dw, const RatMat& phi) {
    const SpaceSpec& sp = dw.space;
    int g = sp.dim_g, t = sp.dim_theta;
    LieAlgebraCrossedModule dual = LieAlgebraCrossedModule::zero(t, g);
    // theta*-bracket: <u, [kappa_a, kappa_b]> = -<omega(u), kappa_a ^ kappa_b>
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            for (int c = 0; c < t; ++c) dual.target.c.at(a, b, c) = -dw.omega.at(c, a, b);
    // action: <x, kappa_a |> xi_p> = <delta(x), xi_p ^ kappa_a>
    for (int a = 0; a < t; ++a)
        for (int p = 0; p < g; ++p)
            for (int j = 0; j < g; ++j) dual.action.at(a, p, j) = dw.delta.at(j, p, a);
    // map -phi^T
    for (int a = 0; a < t; ++a)
        for (int p = 0; p < g; ++p) dual.phi[a][p] = -phi[p][a];
    // source bracket forced by the first axiom: [xi, zeta] = (-phi^T xi) |> zeta
    for (int p = 0; p < g; ++p)
        for (int q = 0; q < g; ++q) {
            RatVec br = dual.act(mat_apply(dual.phi, basis_vec(g, p)), basis_vec(g, q));
            for (int r = 0; r < g; ++r) dual.source.c.at(p, q, r) = br[r];
        }
    return dual;
}

DeltaOmega dual_cm_to_delta_omega(const LieAlgebraCrossedModule& dual_cm) {
    int t = dual_cm.target.dim, g = dual_cm.source.dim;
    DeltaOmega dw{SpaceSpec(g, t), Tensor3(g, g, t), Tensor3(t, t, t)};
    for (int c = 0; c < t; ++c)
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) dw.omega.at(c, a, b) = -dual_cm.target.c.at(a, b, c);
    for (int j = 0; j < g; ++j)
        for (int p = 0; p < g; ++p)
            for (int a = 0; a < t; ++a) dw.delta.at(j, p, a) = dual_cm.action.at(a, p, j);
    return dw;
}

WedgeElement cobracket_partial(const DeltaOmega& dw, const RatMat& phi, const WedgeElement& e) {
    if (e.is_zero()) return e;
    auto deg = e.wedge_degree();
    if (!deg || *deg != 1) throw std::invalid_argument("cobracket_partial: expected a vector");
    const SpaceSpec& sp = e.space();
    RatVec x(sp.dim_g), u(sp.dim_theta);
    for (const auto& [m, c] : e.terms()) {
        const Generator& g0 = m.gens[0];
        (g0.role == Role::G ? x[g0.index] : u[g0.index]) = c;
    }
    WedgeElement dx = dw.delta_of(x);
    // pi(x) = -1/2 (D_phi o delta)(x)
    WedgeElement pi = Rational(-1, 2) * D_phi(phi, dx);
    return dw.omega_of(u) + dx + pi;
}

// ---- bialgebra crossed modules ----------------------------------------------------

namespace {

// dual semidirect constants re-indexed to the basis dual to (x_0..,u_0..):
// the natural order is (kappa.., xi..); the aligned order is (xi.., kappa..)
LieAlgebraConstants aligned_dual_semidirect(const BialgebraCrossedModule& bcm) {
    LieAlgebraConstants natural = bcm.dual_cm.semidirect();
    int t = bcm.dual_cm.target.dim, g = bcm.dual_cm.source.dim;
    int n = t + g;
    RatMat P = zero_matrix(n, n);
    for (int j = 0; j < g; ++j) P[t + j][j] = Rational(1);  // xi_j
    for (int a = 0; a < t; ++a) P[a][g + a] = Rational(1);  // kappa_a
    return natural.change_basis(P);
}

Covector aligned_dual_covector(const SpaceSpec& sp, int j) {
    if (j < sp.dim_g) return Covector::basis_gstar(sp, j);
    return Covector::basis_thetastar(sp, j - sp.dim_g);
}

}  // namespace

VerificationReport verify_bialgebra_cm(const BialgebraCrossedModule& bcm) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.merge(verify_crossed_module(bcm.cm), "cm/");
    rep.merge(verify_crossed_module(bcm.dual_cm), "dual-cm/");

    int g = bcm.cm.target.dim, t = bcm.cm.source.dim;
    SpaceSpec sp(g, t);

    Check& dual_map = rep.add("duality/phi-transpose");
    {
        bool ok = bcm.dual_cm.target.dim == t && bcm.dual_cm.source.dim == g;
        if (ok)
            for (int a = 0; a < t && ok; ++a)
                for (int p = 0; p < g && ok; ++p)
                    ok = (bcm.dual_cm.phi[a][p] + bcm.cm.phi[p][a]).is_zero();
        if (!ok) dual_map.witnesses.push_back({"phi", "dual map is not -phi^T"});
    }
    if (!dual_map.pass()) {
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }

    DeltaOmega dw = dual_cm_to_delta_omega(bcm.dual_cm);
    rep.merge(check_delta_omega(dw, bcm.cm.phi), "delta-omega/");

    // adjoint action of the semidirect sum on its exterior algebra
    auto gen_bracket = [&](const Generator& a, const Generator& b) -> WedgeElement {
        WedgeElement out(sp);
        if (a.role == Role::G && b.role == Role::G) {
            RatVec v = bcm.cm.target.bracket(basis_vec(g, a.index), basis_vec(g, b.index));
            for (int k = 0; k < g; ++k) out.add_word({{Role::G, k}}, v[k]);
        } else if (a.role == Role::G && b.role == Role::Theta) {
            RatVec v = bcm.cm.act(basis_vec(g, a.index), basis_vec(t, b.index));
            for (int c = 0; c < t; ++c) out.add_word({{Role::Theta, c}}, v[c]);
        } else if (a.role == Role::Theta && b.role == Role::G) {
            RatVec v = vneg(bcm.cm.act(basis_vec(g, b.index), basis_vec(t, a.index)));
            for (int c = 0; c < t; ++c) out.add_word({{Role::Theta, c}}, v[c]);
        } else {
            RatVec v = bcm.cm.source.bracket(basis_vec(t, a.index), basis_vec(t, b.index));
            for (int c = 0; c < t; ++c) out.add_word({{Role::Theta, c}}, v[c]);
        }
        return out;
    };
    auto ad = [&](const Generator& e, const WedgeElement& w) {
        return apply_derivation(w, 0, [&](const Generator& x) { return gen_bracket(e, x); });
    };

    // delta is a 1-cocycle for the adjoint action of g on g ^ theta
    Check& coc = rep.add("delta-cocycle");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            WedgeElement lhs = dw.delta_of(bcm.cm.target.bracket(basis_vec(g, i), basis_vec(g, j)));
            WedgeElement rhs = ad({Role::G, i}, dw.delta_of(basis_vec(g, j))) -
                               ad({Role::G, j}, dw.delta_of(basis_vec(g, i)));
            if (!(lhs - rhs).is_zero())
                coc.witnesses.push_back({"(x" + std::to_string(i) + ",x" + std::to_string(j) + ")",
                                         (lhs - rhs).to_string()});
        }

    // x |> omega(u) - omega(x |> u) = Pr_{theta^2}([u, delta(x)])
    Check& omc = rep.add("omega-compatibility");
    for (int i = 0; i < g; ++i)
        for (int a = 0; a < t; ++a) {
            WedgeElement lhs = ad({Role::G, i}, dw.omega_of(basis_vec(t, a))) -
                               dw.omega_of(bcm.cm.act(basis_vec(g, i), basis_vec(t, a)));
            WedgeElement rhs = ad({Role::Theta, a}, dw.delta_of(basis_vec(g, i))).project_theta(2);
            if (!(lhs - rhs).is_zero())
                omc.witnesses.push_back({"(x" + std::to_string(i) + ",u" + std::to_string(a) + ")",
                                         (lhs - rhs).to_string()});
        }

    // omega is then a 1-cocycle as well; asserted as a derived check
    Check& omcoc = rep.add("omega-cocycle");
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b) {
            WedgeElement lhs = dw.omega_of(bcm.cm.source.bracket(basis_vec(t, a), basis_vec(t, b)));
            WedgeElement rhs = ad({Role::Theta, a}, dw.omega_of(basis_vec(t, b))) -
                               ad({Role::Theta, b}, dw.omega_of(basis_vec(t, a)));
            if (!(lhs - rhs).is_zero())
                omcoc.witnesses.push_back({"(u" + std::to_string(a) + ",u" + std::to_string(b) + ")",
                                           (lhs - rhs).to_string()});
        }

    // partial is minus-dual to the bracket of the dual semidirect sum
    LieAlgebraConstants dual_sd = aligned_dual_semidirect(bcm);
    Check& pd = rep.add("partial-duality");
    int n = g + t;
    for (int e = 0; e < n; ++e) {
        WedgeElement ve =
            e < g ? WedgeElement::basis_g(sp, e) : WedgeElement::basis_theta(sp, e - g);
        WedgeElement pe = cobracket_partial(dw, bcm.cm.phi, ve);
        for (int A = 0; A < n; ++A)
            for (int B = A + 1; B < n; ++B) {
                Rational lhs =
                    pair2(pe, aligned_dual_covector(sp, A), aligned_dual_covector(sp, B));
                Rational rhs = -dual_sd.c.at(A, B, e);
                if (!(lhs - rhs).is_zero())
                    pd.witnesses.push_back({"(e" + std::to_string(e) + ";f" + std::to_string(A) +
                                                ",f" + std::to_string(B) + ")",
                                            (lhs - rhs).to_string()});
            }
    }

    // and the semidirect pair is a Lie bialgebra
    rep.merge(check_lie_bialgebra(bcm.cm.semidirect(), dual_sd), "semidirect-pair/");

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

BialgebraElement bcm_to_lie2bialgebra(const BialgebraCrossedModule& bcm, bool check) {
    if (check) {
        VerificationReport rep = verify_bialgebra_cm(bcm);
        if (!rep.pass())
            throw std::invalid_argument(
                "bcm_to_lie2bialgebra: input is not a Lie bialgebra crossed module:\n" +
                rep.to_text());
    }
    int g = bcm.cm.target.dim, t = bcm.cm.source.dim;
    SpaceSpec sp(g, t);
    Lie2AlgebraData alg = Lie2AlgebraData::zero(sp);
    alg.phi = bcm.cm.phi;
    alg.bracket = bcm.cm.target.c;
    alg.action = bcm.cm.action;
    Lie2CoalgebraData co = Lie2CoalgebraData::zero(sp);
    co.phi = bcm.cm.phi;
    DeltaOmega dw = dual_cm_to_delta_omega(bcm.dual_cm);
    co.delta = dw.delta;
    co.omega = dw.omega;
    return assemble_bialgebra(alg, co);
}

BialgebraCrossedModule lie2bialgebra_to_bcm(const BialgebraElement& e) {
    if (!e.is_strict) throw std::invalid_argument("lie2bialgebra_to_bcm: element is not strict");
    Lie2AlgebraData alg = project_algebra(e);
    Lie2CoalgebraData co = project_coalgebra(e);
    const SpaceSpec& sp = alg.space;
    BialgebraCrossedModule bcm;
    bcm.cm = LieAlgebraCrossedModule::zero(sp.dim_g, sp.dim_theta);
    bcm.cm.target.c = alg.bracket;
    bcm.cm.action = alg.action;
    bcm.cm.phi = alg.phi;
    // the source bracket is determined: [u,v] = phi(u) |> v
    for (int a = 0; a < sp.dim_theta; ++a)
        for (int b = 0; b < sp.dim_theta; ++b) {
            RatVec br = bcm.cm.act(mat_apply(alg.phi, basis_vec(sp.dim_theta, a)),
                                   basis_vec(sp.dim_theta, b));
            for (int c = 0; c < sp.dim_theta; ++c) bcm.cm.source.c.at(a, b, c) = br[c];
        }
    DeltaOmega dw{sp, co.delta, co.omega};
    bcm.dual_cm = delta_omega_to_dual_cm(dw, alg.phi);
    return bcm;
}

// ---- matched pairs ------------------------------------------------------------------

RatVec MatchedPairData::act_g(const RatVec& x, const RatVec& k) const {
    int g = lie_g.dim, t = lie_tstar.dim;
    RatVec r(t);
    for (int i = 0; i < g; ++i)
        for (int a = 0; a < t; ++a) {
            if (x[i].is_zero() || k[a].is_zero()) continue;
            Rational f = x[i] * k[a];
            for (int b = 0; b < t; ++b) r[b] += f * act_g_on_tstar.at(i, a, b);
        }
    return r;
}

RatVec MatchedPairData::act_tstar(const RatVec& k, const RatVec& x) const {
    int g = lie_g.dim, t = lie_tstar.dim;
    RatVec r(g);
    for (int a = 0; a < t; ++a)
        for (int i = 0; i < g; ++i) {
            if (k[a].is_zero() || x[i].is_zero()) continue;
            Rational f = k[a] * x[i];
            for (int j = 0; j < g; ++j) r[j] += f * act_tstar_on_g.at(a, i, j);
        }
    return r;
}

MatchedPairData matched_pair_from_bcm(const BialgebraCrossedModule& bcm) {
    int g = bcm.cm.target.dim, t = bcm.cm.source.dim;
    MatchedPairData mp;
    mp.lie_g = bcm.cm.target;
    mp.lie_tstar = bcm.dual_cm.target;
    mp.act_g_on_tstar = Tensor3(g, t, t);
    mp.act_tstar_on_g = Tensor3(t, g, g);
    // <x |> kappa, u> = -<kappa, x |> u>
    for (int i = 0; i < g; ++i)
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) mp.act_g_on_tstar.at(i, a, b) = -bcm.cm.action.at(i, b, a);
    // <kappa |> x, xi> = -<x, kappa |> xi>
    for (int a = 0; a < t; ++a)
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                mp.act_tstar_on_g.at(a, i, j) = -bcm.dual_cm.action.at(a, j, i);
    return mp;
}

VerificationReport matched_pair_defects(const MatchedPairData& mp) {
    auto t0 = Clock::now();
    VerificationReport rep;
    int g = mp.lie_g.dim, t = mp.lie_tstar.dim;
    rep.checks.push_back(mp.lie_g.jacobi_check("g-jacobi"));
    rep.checks.push_back(mp.lie_tstar.jacobi_check("tstar-jacobi"));

    auto X = [&](int i) { return basis_vec(g, i); };
    auto K = [&](int a) { return basis_vec(t, a); };

    // both actions are module actions
    Check& gm = rep.add("g-action-module-law");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int a = 0; a < t; ++a) {
                RatVec d = mp.act_g(mp.lie_g.bracket(X(i), X(j)), K(a));
                d = vadd(d, vneg(mp.act_g(X(i), mp.act_g(X(j), K(a)))));
                d = vadd(d, mp.act_g(X(j), mp.act_g(X(i), K(a))));
                if (!all_zero(d))
                    gm.witnesses.push_back({"(x" + std::to_string(i) + ",x" + std::to_string(j) +
                                                ",k" + std::to_string(a) + ")",
                                            render_vec(d, "k")});
            }
    Check& tm = rep.add("tstar-action-module-law");
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            for (int i = 0; i < g; ++i) {
                RatVec d = mp.act_tstar(mp.lie_tstar.bracket(K(a), K(b)), X(i));
                d = vadd(d, vneg(mp.act_tstar(K(a), mp.act_tstar(K(b), X(i)))));
                d = vadd(d, mp.act_tstar(K(b), mp.act_tstar(K(a), X(i))));
                if (!all_zero(d))
                    tm.witnesses.push_back({"(k" + std::to_string(a) + ",k" + std::to_string(b) +
                                                ",x" + std::to_string(i) + ")",
                                            render_vec(d, "x")});
            }

    // kappa |> [x,y] = [x, kappa|>y] - [y, kappa|>x] + (y|>kappa)|>x - (x|>kappa)|>y
    Check& m1 = rep.add("mixed-jacobi-on-g");
    for (int a = 0; a < t; ++a)
        for (int i = 0; i < g; ++i)
            for (int j = i + 1; j < g; ++j) {
                RatVec d = mp.act_tstar(K(a), mp.lie_g.bracket(X(i), X(j)));
                d = vadd(d, vneg(mp.lie_g.bracket(X(i), mp.act_tstar(K(a), X(j)))));
                d = vadd(d, mp.lie_g.bracket(X(j), mp.act_tstar(K(a), X(i))));
                d = vadd(d, vneg(mp.act_tstar(mp.act_g(X(j), K(a)), X(i))));
                d = vadd(d, mp.act_tstar(mp.act_g(X(i), K(a)), X(j)));
                if (!all_zero(d))
                    m1.witnesses.push_back({"(k" + std::to_string(a) + ";x" + std::to_string(i) +
                                                ",x" + std::to_string(j) + ")",
                                            render_vec(d, "x")});
            }

    // x |> [k1,k2] = [k1, x|>k2] - [k2, x|>k1] + (k2|>x)|>k1 - (k1|>x)|>k2
    Check& m2 = rep.add("mixed-jacobi-on-tstar");
    for (int i = 0; i < g; ++i)
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) {
                RatVec d = mp.act_g(X(i), mp.lie_tstar.bracket(K(a), K(b)));
                d = vadd(d, vneg(mp.lie_tstar.bracket(K(a), mp.act_g(X(i), K(b)))));
                d = vadd(d, mp.lie_tstar.bracket(K(b), mp.act_g(X(i), K(a))));
                d = vadd(d, vneg(mp.act_g(mp.act_tstar(K(b), X(i)), K(a))));
                d = vadd(d, mp.act_g(mp.act_tstar(K(a), X(i)), K(b)));
                if (!all_zero(d))
                    m2.witnesses.push_back({"(x" + std::to_string(i) + ";k" + std::to_string(a) +
                                                ",k" + std::to_string(b) + ")",
                                            render_vec(d, "k")});
            }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

LieAlgebraConstants build_double(const MatchedPairData& mp) {
    VerificationReport rep = matched_pair_defects(mp);
    if (!rep.pass())
        throw std::invalid_argument("build_double: not a matched pair:\n" + rep.to_text());
    int g = mp.lie_g.dim, t = mp.lie_tstar.dim;
    LieAlgebraConstants out(g + t);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k) out.c.at(i, j, k) = mp.lie_g.c.at(i, j, k);
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            for (int c = 0; c < t; ++c) out.c.at(g + a, g + b, g + c) = mp.lie_tstar.c.at(a, b, c);
    // [x, kappa] = x |> kappa - kappa |> x
    for (int i = 0; i < g; ++i)
        for (int a = 0; a < t; ++a) {
            for (int b = 0; b < t; ++b) {
                out.c.at(i, g + a, g + b) = mp.act_g_on_tstar.at(i, a, b);
                out.c.at(g + a, i, g + b) = -mp.act_g_on_tstar.at(i, a, b);
            }
            for (int j = 0; j < g; ++j) {
                out.c.at(i, g + a, j) = -mp.act_tstar_on_g.at(a, i, j);
                out.c.at(g + a, i, j) = mp.act_tstar_on_g.at(a, i, j);
            }
        }
    return out;
}

// ---- quotient construction -----------------------------------------------------------

BialgebraCrossedModule quotient_construction(const LieAlgebraConstants& theta,
                                             const LieAlgebraConstants& theta_dual,
                                             const std::vector<RatVec>& ideal_basis) {
    int n = theta.dim;
    if (theta_dual.dim != n)
        throw std::invalid_argument("quotient_construction: dual dimension mismatch");
    VerificationReport bx = check_lie_bialgebra(theta, theta_dual);
    if (!bx.pass())
        throw std::invalid_argument(
            "quotient_construction: (theta, theta*) is not a Lie bialgebra:\n" + bx.to_text());

    RatMat red = ideal_basis;
    for (const auto& v : red)
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("quotient_construction: ideal vector size");
    auto pivots = rref(red);
    int m = static_cast<int>(ideal_basis.size());
    if (static_cast<int>(pivots.size()) != m)
        throw std::invalid_argument("quotient_construction: ideal basis not independent");

    // centrality: [theta, I] = 0
    for (int i = 0; i < n; ++i)
        for (const auto& w : ideal_basis) {
            RatVec br = theta.bracket(basis_vec(n, i), w);
            if (!all_zero(br))
                throw std::invalid_argument(
                    "quotient_construction: ideal not central, witness [e" + std::to_string(i) +
                    ", " + render_vec(w, "e") + "] = " + render_vec(br, "e"));
        }

    // omega(I) inside wedge^2 I, omega the cobracket of theta
    auto omega_mat = [&](const RatVec& u) {
        RatMat w = zero_matrix(n, n);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Rational v;
                for (int d = 0; d < n; ++d) v += u[d] * (-theta_dual.c.at(b, c, d));
                w[b][c] = v;
            }
        return w;
    };
    auto flatten_pairs = [&](const RatMat& w) {
        RatVec out;
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c) out.push_back(w[b][c]);
        return out;
    };
    std::vector<RatVec> wedge_I;
    for (int r = 0; r < m; ++r)
        for (int s = r + 1; s < m; ++s) {
            RatMat w = zero_matrix(n, n);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    w[b][c] = ideal_basis[r][b] * ideal_basis[s][c] -
                              ideal_basis[r][c] * ideal_basis[s][b];
            wedge_I.push_back(flatten_pairs(w));
        }
    for (const auto& w : ideal_basis) {
        RatVec target = flatten_pairs(omega_mat(w));
        if (!coordinates_in_span(wedge_I, target))
            throw std::invalid_argument(
                "quotient_construction: omega(I) not inside wedge^2 I, witness " +
                render_vec(w, "e"));
    }

    // complement basis: non-pivot coordinates of the reduced ideal
    std::vector<int> comp;
    {
        std::vector<bool> is_pivot(n, false);
        for (int p : pivots) is_pivot[p] = true;
        for (int i = 0; i < n; ++i)
            if (!is_pivot[i]) comp.push_back(i);
    }
    int gdim = static_cast<int>(comp.size());

    // projection theta -> theta/I in the complement coordinates
    RatMat M = zero_matrix(n, n);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < n; ++i) M[i][r] = ideal_basis[r][i];
    for (int jc = 0; jc < gdim; ++jc) M[comp[jc]][m + jc] = Rational(1);
    auto Minv = invert(M);
    if (!Minv) throw std::logic_error("quotient_construction: complement assembly failed");
    RatMat proj = zero_matrix(gdim, n);
    for (int jc = 0; jc < gdim; ++jc)
        for (int i = 0; i < n; ++i) proj[jc][i] = (*Minv)[m + jc][i];

    BialgebraCrossedModule bcm;
    bcm.cm = LieAlgebraCrossedModule::zero(gdim, n);
    bcm.cm.source = theta;
    bcm.cm.phi = proj;
    for (int p = 0; p < gdim; ++p)
        for (int q = 0; q < gdim; ++q) {
            RatVec br =
                mat_apply(proj, theta.bracket(basis_vec(n, comp[p]), basis_vec(n, comp[q])));
            for (int k = 0; k < gdim; ++k) bcm.cm.target.c.at(p, q, k) = br[k];
        }
    for (int p = 0; p < gdim; ++p)
        for (int a = 0; a < n; ++a) {
            RatVec br = theta.bracket(basis_vec(n, comp[p]), basis_vec(n, a));
            for (int b = 0; b < n; ++b) bcm.cm.action.at(p, a, b) = br[b];
        }

    // dual side: g* = annihilator of I in theta*, basis xi_p = proj^T f_p
    std::vector<RatVec> xi;
    for (int p = 0; p < gdim; ++p) {
        RatVec v(n);
        for (int a = 0; a < n; ++a) v[a] = proj[p][a];
        xi.push_back(v);
    }
    bcm.dual_cm = LieAlgebraCrossedModule::zero(n, gdim);
    bcm.dual_cm.target = theta_dual.opposite();
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < gdim; ++p) bcm.dual_cm.phi[a][p] = -xi[p][a];
    // action kappa_a |> xi_p = -[kappa_a, xi_p]_*, in the xi coordinates
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < gdim; ++p) {
            RatVec br = vneg(theta_dual.bracket(basis_vec(n, a), xi[p]));
            auto coords = coordinates_in_span(xi, br);
            if (!coords) throw std::logic_error("quotient_construction: annihilator not an ideal");
            for (int q = 0; q < gdim; ++q) bcm.dual_cm.action.at(a, p, q) = (*coords)[q];
        }
    // source bracket on g*: the theta* bracket restricted to the annihilator
    for (int p = 0; p < gdim; ++p)
        for (int q = 0; q < gdim; ++q) {
            RatVec br = theta_dual.bracket(xi[p], xi[q]);
            auto coords = coordinates_in_span(xi, br);
            if (!coords)
                throw std::logic_error("quotient_construction: annihilator not a subalgebra");
            for (int r = 0; r < gdim; ++r) bcm.dual_cm.source.c.at(p, q, r) = (*coords)[r];
        }
    return bcm;
}

RestrictedBialgebras restrict_bialgebras(const BialgebraCrossedModule& bcm) {
    return {bcm.cm.source, bcm.dual_cm.target, bcm.cm.target, bcm.dual_cm.source};
}

} // namespace l2b
