#pragma once

#include "l2b/crossed.hpp"
#include "l2b/examples.hpp"
#include "testutil.hpp"

namespace l2b::testutil {

struct BialgebraSeed {
    LieAlgebraConstants algebra;
    LieAlgebraConstants dual;
};

inline std::vector<BialgebraSeed> bialgebra_catalog() {
    std::vector<BialgebraSeed> out;
    for (int n = 1; n <= 3; ++n)
        out.push_back({LieAlgebraConstants::abelian(n), LieAlgebraConstants::abelian(n)});
    out.push_back({LieAlgebraConstants::nonabelian2(), LieAlgebraConstants::abelian(2)});
    out.push_back({LieAlgebraConstants::abelian(2), LieAlgebraConstants::nonabelian2()});
    out.push_back({LieAlgebraConstants::nonabelian2(), LieAlgebraConstants::nonabelian2()});
    {
        LieAlgebraConstants d(2);  // [f0,f1] = f0
        d.set_bracket(0, 1, 0, Rational(1));
        out.push_back({LieAlgebraConstants::nonabelian2(), d});
    }
    {
        LieAlgebraConstants d(3);  // the standard solvable dual of so(3)
        d.set_bracket(0, 1, 1, Rational(1));
        d.set_bracket(0, 2, 2, Rational(1));
        out.push_back({LieAlgebraConstants::so3(), d});
    }
    out.push_back({LieAlgebraConstants::so3(), LieAlgebraConstants::abelian(3)});
    out.push_back({LieAlgebraConstants::heisenberg3(), LieAlgebraConstants::abelian(3)});
    out.push_back({LieAlgebraConstants::abelian(3), LieAlgebraConstants::heisenberg3()});
    out.push_back({LieAlgebraConstants::abelian(3), LieAlgebraConstants::so3()});
    return out;
}

/// Random invertible matrix with small rational entries.
inline RatMat rand_invertible(Rng& rng, int n) {
    RatMat u = identity_matrix(n), l = identity_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            u[i][j] = Rational(rand_int(rng, -2, 2));
            l[j][i] = Rational(rand_int(rng, -2, 2));
        }
    RatMat d = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) {
        int v = rand_int(rng, 1, 2) * (rand_int(rng, 0, 1) ? 1 : -1);
        d[i][i] = Rational(v);
    }
    return mat_mul(mat_mul(u, d), l);
}

/// Random Lie bialgebra on dual bases: a catalog pair pushed through a random
/// change of basis (dual side through the contragredient).
inline BialgebraSeed rand_bialgebra(Rng& rng) {
    auto cat = bialgebra_catalog();
    BialgebraSeed seed = cat[rand_int(rng, 0, static_cast<int>(cat.size()) - 1)];
    RatMat P = rand_invertible(rng, seed.algebra.dim);
    RatMat Q = transpose(*invert(P));
    return {seed.algebra.change_basis(P), seed.dual.change_basis(Q)};
}

/// Random strict Lie bialgebra crossed module: the trivial construction on a
/// random bialgebra, or a quotient instance.
inline BialgebraCrossedModule rand_strict_bcm(Rng& rng) {
    int pick = rand_int(rng, 0, 5);
    if (pick <= 2) {
        BialgebraSeed s = rand_bialgebra(rng);
        return trivial_bcm(s.algebra, s.dual);
    }
    if (pick == 3) {
        // central line of a transformed Heisenberg algebra: the old center e2
        // has coordinates P^{-1} e2 in the new basis
        RatMat P = rand_invertible(rng, 3);
        LieAlgebraConstants heis = LieAlgebraConstants::heisenberg3().change_basis(P);
        LieAlgebraConstants ab = LieAlgebraConstants::abelian(3);
        RatMat Pinv = *invert(P);
        RatVec center(3);
        for (int i = 0; i < 3; ++i) center[i] = Pinv[i][2];
        return quotient_construction(heis, ab, {center});
    }
    if (pick == 4) {
        // abelian theta with the Heisenberg dual; the ideal avoids the omega image
        LieAlgebraConstants ab = LieAlgebraConstants::abelian(3);
        LieAlgebraConstants heis = LieAlgebraConstants::heisenberg3();
        std::vector<RatVec> ideal;
        RatVec e0(3), e1(3);
        e0[0] = Rational(1);
        e1[1] = Rational(1);
        if (rand_int(rng, 0, 1)) ideal = {e0};
        else ideal = {e0, e1};
        return quotient_construction(ab, heis, ideal);
    }
    return matrix_example(2);
}

/// Rebuilds a crossed-module pair from its five independent tensor families
/// (the dual map is always -phi^T; both source brackets are the forced ones).
inline BialgebraCrossedModule bcm_from_tensors(int g, int t, const RatMat& phi,
                                               const Tensor3& bracket, const Tensor3& action,
                                               const Tensor3& dual_bracket,
                                               const Tensor3& dual_action) {
    BialgebraCrossedModule bcm;
    bcm.cm = LieAlgebraCrossedModule::zero(g, t);
    bcm.cm.phi = phi;
    bcm.cm.target.c = bracket;
    bcm.cm.action = action;
    bcm.dual_cm = LieAlgebraCrossedModule::zero(t, g);
    bcm.dual_cm.target.c = dual_bracket;
    bcm.dual_cm.action = dual_action;
    for (int a = 0; a < t; ++a)
        for (int p = 0; p < g; ++p) bcm.dual_cm.phi[a][p] = -phi[p][a];
    auto basis = [](int dim, int i) {
        RatVec v(dim);
        v[i] = Rational(1);
        return v;
    };
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
            RatVec br = bcm.cm.act(mat_apply(phi, basis(t, a)), basis(t, b));
            for (int c = 0; c < t; ++c) bcm.cm.source.c.at(a, b, c) = br[c];
        }
    for (int p = 0; p < g; ++p)
        for (int q = 0; q < g; ++q) {
            RatVec br = bcm.dual_cm.act(mat_apply(bcm.dual_cm.phi, basis(g, p)), basis(g, q));
            for (int r = 0; r < g; ++r) bcm.dual_cm.source.c.at(p, q, r) = br[r];
        }
    return bcm;
}

/// Adds 1 to a single constant of one of the five independent tensor families
/// (skew-consistently for brackets), then rebuilds the derived data.  Returns
/// a description of the changed constant.
inline std::string perturb_bcm(Rng& rng, BialgebraCrossedModule& bcm) {
    int g = bcm.cm.target.dim, t = bcm.cm.source.dim;
    RatMat phi = bcm.cm.phi;
    Tensor3 bracket = bcm.cm.target.c, action = bcm.cm.action;
    Tensor3 dual_bracket = bcm.dual_cm.target.c, dual_action = bcm.dual_cm.action;
    std::string what;
    for (int tries = 0; tries < 40 && what.empty(); ++tries) {
        switch (rand_int(rng, 0, 4)) {
            case 0: {
                if (g == 0 || t == 0) break;
                int i = rand_int(rng, 0, g - 1), a = rand_int(rng, 0, t - 1);
                phi[i][a] += Rational(1);
                what = "phi[" + std::to_string(i) + "][" + std::to_string(a) + "]";
                break;
            }
            case 1: {
                if (g < 2) break;
                int i = rand_int(rng, 0, g - 1), j = rand_int(rng, 0, g - 1),
                    k = rand_int(rng, 0, g - 1);
                if (i == j) break;
                bracket.at(i, j, k) += Rational(1);
                bracket.at(j, i, k) -= Rational(1);
                what = "bracket[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                       std::to_string(k) + "]";
                break;
            }
            case 2: {
                if (g == 0 || t == 0) break;
                int i = rand_int(rng, 0, g - 1), a = rand_int(rng, 0, t - 1),
                    b = rand_int(rng, 0, t - 1);
                action.at(i, a, b) += Rational(1);
                what = "action[" + std::to_string(i) + "][" + std::to_string(a) + "][" +
                       std::to_string(b) + "]";
                break;
            }
            case 3: {
                if (t < 2) break;
                int a = rand_int(rng, 0, t - 1), b = rand_int(rng, 0, t - 1),
                    c = rand_int(rng, 0, t - 1);
                if (a == b) break;
                dual_bracket.at(a, b, c) += Rational(1);
                dual_bracket.at(b, a, c) -= Rational(1);
                what = "dual_bracket[" + std::to_string(a) + "][" + std::to_string(b) + "][" +
                       std::to_string(c) + "]";
                break;
            }
            default: {
                if (g == 0 || t == 0) break;
                int a = rand_int(rng, 0, t - 1), p = rand_int(rng, 0, g - 1),
                    q = rand_int(rng, 0, g - 1);
                dual_action.at(a, p, q) += Rational(1);
                what = "dual_action[" + std::to_string(a) + "][" + std::to_string(p) + "][" +
                       std::to_string(q) + "]";
                break;
            }
        }
    }
    if (what.empty()) {
        phi[0][0] += Rational(1);
        what = "phi[0][0]";
    }
    bcm = bcm_from_tensors(g, t, phi, bracket, action, dual_bracket, dual_action);
    return what;
}

} // namespace l2b::testutil
