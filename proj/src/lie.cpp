#include "l2b/lie.hpp"

#include <stdexcept>

namespace l2b {

RatVec LieAlgebraConstants::bracket(const RatVec& a, const RatVec& b) const {
    if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
        throw std::invalid_argument("LieAlgebraConstants::bracket: size mismatch");
    RatVec r(dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Rational f = a[i] * b[j];
            for (int k = 0; k < dim; ++k) {
                const Rational& s = c.at(i, j, k);
                if (!s.is_zero()) r[k] += f * s;
            }
        }
    }
    return r;
}

RatMat LieAlgebraConstants::ad(int i) const {
    RatMat m = zero_matrix(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m[k][j] = c.at(i, j, k);
    return m;
}

LieAlgebraConstants LieAlgebraConstants::change_basis(const RatMat& P) const {
    auto Pinv = invert(P);
    if (!Pinv) throw std::invalid_argument("change_basis: singular matrix");
    LieAlgebraConstants out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            RatVec ei(dim), ej(dim);
            for (int r = 0; r < dim; ++r) {
                ei[r] = P[r][i];
                ej[r] = P[r][j];
            }
            RatVec br = mat_apply(*Pinv, bracket(ei, ej));
            for (int k = 0; k < dim; ++k) out.c.at(i, j, k) = br[k];
        }
    return out;
}

LieAlgebraConstants LieAlgebraConstants::opposite() const {
    LieAlgebraConstants out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) out.c.at(i, j, k) = -c.at(i, j, k);
    return out;
}

void LieAlgebraConstants::validate_skew() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < dim; ++k)
                if (!(c.at(i, j, k) + c.at(j, i, k)).is_zero())
                    throw std::invalid_argument("Lie bracket tensor not skew-symmetric");
}

Check LieAlgebraConstants::jacobi_check(const std::string& id) const {
    Check out{id, {}};
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                RatVec ei(dim), ej(dim), ek(dim);
                ei[i] = ej[j] = ek[k] = Rational(1);
                RatVec d = bracket(bracket(ei, ej), ek);
                RatVec t2 = bracket(bracket(ej, ek), ei);
                RatVec t3 = bracket(bracket(ek, ei), ej);
                bool bad = false;
                for (int r = 0; r < dim; ++r) {
                    d[r] += t2[r] + t3[r];
                    if (!d[r].is_zero()) bad = true;
                }
                if (bad)
                    out.witnesses.push_back({"(e" + std::to_string(i) + ",e" + std::to_string(j) +
                                                 ",e" + std::to_string(k) + ")",
                                             render_vec(d)});
            }
    return out;
}

LieAlgebraConstants LieAlgebraConstants::abelian(int n) { return LieAlgebraConstants(n); }

LieAlgebraConstants LieAlgebraConstants::so3() {
    LieAlgebraConstants a(3);
    a.set_bracket(0, 1, 2, Rational(1));
    a.set_bracket(1, 2, 0, Rational(1));
    a.set_bracket(2, 0, 1, Rational(1));
    return a;
}

LieAlgebraConstants LieAlgebraConstants::nonabelian2() {
    LieAlgebraConstants a(2);
    a.set_bracket(0, 1, 1, Rational(1));
    return a;
}

LieAlgebraConstants LieAlgebraConstants::heisenberg3() {
    LieAlgebraConstants a(3);
    a.set_bracket(0, 1, 2, Rational(1));
    return a;
}

Tensor3 cobracket_from_dual(const LieAlgebraConstants& dual) {
    int n = dual.dim;
    Tensor3 d(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) d.at(i, a, b) = -dual.c.at(a, b, i);
    return d;
}

namespace {

// adjoint action of e_i on a skew matrix w representing sum w[p][q] e_p ^ e_q (p<q)
RatMat ad_on_wedge2(const LieAlgebraConstants& alg, int i, const RatMat& w) {
    RatMat A = alg.ad(i);
    RatMat r = mat_mul(A, w);
    RatMat wAt = mat_mul(w, transpose(A));
    for (int p = 0; p < alg.dim; ++p)
        for (int q = 0; q < alg.dim; ++q) r[p][q] += wAt[p][q];
    return r;
}

std::string render_wedge2(const RatMat& w) {
    std::string out;
    int n = static_cast<int>(w.size());
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (!w[p][q].is_zero()) {
                if (!out.empty()) out += " + ";
                out += w[p][q].to_string() + " e" + std::to_string(p) + "^e" + std::to_string(q);
            }
    return out.empty() ? "0" : out;
}

}  // namespace

VerificationReport check_lie_bialgebra(const LieAlgebraConstants& a,
                                       const LieAlgebraConstants& a_dual) {
    VerificationReport rep;
    if (a.dim != a_dual.dim) throw std::invalid_argument("check_lie_bialgebra: dim mismatch");
    rep.checks.push_back(a.jacobi_check("jacobi"));
    rep.checks.push_back(a_dual.jacobi_check("dual-jacobi"));

    Tensor3 d = cobracket_from_dual(a_dual);
    auto delta_of = [&](int i) {
        RatMat w = zero_matrix(a.dim, a.dim);
        for (int p = 0; p < a.dim; ++p)
            for (int q = 0; q < a.dim; ++q) w[p][q] = d.at(i, p, q);
        return w;
    };
    Check& coc = rep.add("cobracket-cocycle");
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j) {
            // delta([e_i,e_j]) - e_i . delta(e_j) + e_j . delta(e_i)
            RatMat lhs = zero_matrix(a.dim, a.dim);
            for (int k = 0; k < a.dim; ++k) {
                const Rational& f = a.c.at(i, j, k);
                if (f.is_zero()) continue;
                RatMat dk = delta_of(k);
                for (int p = 0; p < a.dim; ++p)
                    for (int q = 0; q < a.dim; ++q) lhs[p][q] += f * dk[p][q];
            }
            RatMat r1 = ad_on_wedge2(a, i, delta_of(j));
            RatMat r2 = ad_on_wedge2(a, j, delta_of(i));
            bool bad = false;
            for (int p = 0; p < a.dim; ++p)
                for (int q = 0; q < a.dim; ++q) {
                    lhs[p][q] -= r1[p][q] - r2[p][q];
                    if (!lhs[p][q].is_zero()) bad = true;
                }
            if (bad)
                coc.witnesses.push_back(
                    {"(e" + std::to_string(i) + ",e" + std::to_string(j) + ")", render_wedge2(lhs)});
        }
    return rep;
}

std::string render_vec(const RatVec& v, const std::string& token) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += v[i].to_string() + " " + token + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (const auto& c : checks) {
        out += (c.pass() ? "pass  " : "FAIL  ") + c.id + "\n";
        for (const auto& w : c.witnesses) out += "      at " + w.where + ": " + w.defect + "\n";
    }
    return out;
}

} // namespace l2b
