#include "l2b/structures.hpp"

#include "l2b/lie.hpp"

#include <chrono>
#include <stdexcept>

namespace l2b {

const int kBialgebraSignatures[7][4] = {
    // (p, q, k, l) = (#G, #GStar, #Theta, #ThetaStar)
    {1, 2, 0, 0},  // bracket on g
    {0, 1, 1, 1},  // g-action on theta
    {0, 3, 1, 0},  // algebra homotopy
    {1, 0, 0, 1},  // phi
    {0, 0, 2, 1},  // omega / bracket on theta*
    {1, 1, 1, 0},  // delta / theta*-action on g*
    {0, 1, 3, 0},  // coalgebra homotopy
};

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

SymElement gen_el(const SpaceSpec& sp, Role r, int i) {
    return SymElement::generator(sp, {r, i});
}

Rational coeff_at(const SymElement& e, std::vector<Generator> word) {
    auto nm = normalize(std::move(word));
    if (!nm) return Rational(0);
    auto it = e.terms().find(nm->monomial);
    if (it == e.terms().end()) return Rational(0);
    return nm->sign == 1 ? it->second : -it->second;
}

Rational scalar_part(const SymElement& e) { return coeff_at(e, {}); }

SymElement embed(const SpaceSpec& sp, Role r, const RatVec& v) {
    SymElement out(sp);
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.add_term(Monomial{{{r, static_cast<int>(i)}}}, v[i]);
    return out;
}

// ---- per-signature dictionaries ----------------------------------------------
// Each decode functional is the defining iterated-bracket dictionary; encode
// divides by the scale the dictionary assigns to a single canonical monomial.

struct SignatureCodec {
    // canonical monomial for an entry index tuple
    std::vector<Generator> (*monomial)(const int*);
    // decode one tensor entry from the element
    Rational (*entry)(const SymElement&, const int*);
};

Rational phi_entry(const SymElement& e, const int* ix) {
    // ix = {i, a}: x_i-coefficient of derived(e)(u_a)
    const SpaceSpec& sp = e.space();
    return coeff_at(derived_map(e, {gen_el(sp, Role::Theta, ix[1])}), {{Role::G, ix[0]}});
}

std::vector<Generator> phi_monomial(const int* ix) {
    return {{Role::ThetaStar, ix[1]}, {Role::G, ix[0]}};
}

Rational bracket_entry(const SymElement& e, const int* ix) {
    const SpaceSpec& sp = e.space();
    return coeff_at(
        derived_map(e, {gen_el(sp, Role::G, ix[0]), gen_el(sp, Role::G, ix[1])}),
        {{Role::G, ix[2]}});
}

std::vector<Generator> bracket_monomial(const int* ix) {
    return {{Role::GStar, ix[0]}, {Role::GStar, ix[1]}, {Role::G, ix[2]}};
}

Rational action_entry(const SymElement& e, const int* ix) {
    const SpaceSpec& sp = e.space();
    return coeff_at(
        derived_map(e, {gen_el(sp, Role::G, ix[0]), gen_el(sp, Role::Theta, ix[1])}),
        {{Role::Theta, ix[2]}});
}

std::vector<Generator> action_monomial(const int* ix) {
    return {{Role::GStar, ix[0]}, {Role::ThetaStar, ix[1]}, {Role::Theta, ix[2]}};
}

Rational homotopy_entry(const SymElement& e, const int* ix) {
    const SpaceSpec& sp = e.space();
    return coeff_at(derived_map(e, {gen_el(sp, Role::G, ix[0]), gen_el(sp, Role::G, ix[1]),
                                    gen_el(sp, Role::G, ix[2])}),
                    {{Role::Theta, ix[3]}});
}

std::vector<Generator> homotopy_monomial(const int* ix) {
    return {{Role::GStar, ix[0]}, {Role::GStar, ix[1]}, {Role::GStar, ix[2]}, {Role::Theta, ix[3]}};
}

Rational omega_entry(const SymElement& e, const int* ix) {
    // <omega(u_a), kappa_b ^ kappa_c> = {u_a, {{e, kappa_b}, kappa_c}}
    const SpaceSpec& sp = e.space();
    SymElement inner = big_bracket(big_bracket(e, gen_el(sp, Role::ThetaStar, ix[1])),
                                   gen_el(sp, Role::ThetaStar, ix[2]));
    return scalar_part(big_bracket(gen_el(sp, Role::Theta, ix[0]), inner));
}

std::vector<Generator> omega_monomial(const int* ix) {
    return {{Role::ThetaStar, ix[0]}, {Role::Theta, ix[1]}, {Role::Theta, ix[2]}};
}

Rational delta_entry(const SymElement& e, const int* ix) {
    // <delta(x_i), xi_j ^ kappa_a> = {x_i, {{e, kappa_a}, xi_j}}
    const SpaceSpec& sp = e.space();
    SymElement inner = big_bracket(big_bracket(e, gen_el(sp, Role::ThetaStar, ix[2])),
                                   gen_el(sp, Role::GStar, ix[1]));
    return scalar_part(big_bracket(gen_el(sp, Role::G, ix[0]), inner));
}

std::vector<Generator> delta_monomial(const int* ix) {
    return {{Role::GStar, ix[0]}, {Role::Theta, ix[2]}, {Role::G, ix[1]}};
}

// scale the dictionary assigns to the canonical monomial of an entry tuple
Rational codec_scale(const SpaceSpec& sp, const SignatureCodec& codec, const int* ix) {
    SymElement m = SymElement::monomial(sp, codec.monomial(ix));
    Rational s = codec.entry(m, ix);
    if (s.is_zero()) throw std::logic_error("signature codec: degenerate scale");
    return s;
}

void add_encoded(SymElement& out, const SignatureCodec& codec, const int* ix, const Rational& v) {
    if (v.is_zero()) return;
    Rational s = codec_scale(out.space(), codec, ix);
    SymElement m = SymElement::monomial(out.space(), codec.monomial(ix), v / s);
    out += m;
}

constexpr SignatureCodec kPhiCodec{phi_monomial, phi_entry};
constexpr SignatureCodec kBracketCodec{bracket_monomial, bracket_entry};
constexpr SignatureCodec kActionCodec{action_monomial, action_entry};
constexpr SignatureCodec kHomotopyCodec{homotopy_monomial, homotopy_entry};
constexpr SignatureCodec kOmegaCodec{omega_monomial, omega_entry};
constexpr SignatureCodec kDeltaCodec{delta_monomial, delta_entry};

void require_signature_support(const SymElement& e, const std::vector<const int*>& allowed,
                               const char* who) {
    for (const auto& [m, c] : e.terms()) {
        int p = m.role_count(Role::G), q = m.role_count(Role::GStar);
        int k = m.role_count(Role::Theta), l = m.role_count(Role::ThetaStar);
        bool ok = false;
        for (const int* s : allowed)
            if (p == s[0] && q == s[1] && k == s[2] && l == s[3]) {
                ok = true;
                break;
            }
        if (!ok)
            throw std::invalid_argument(std::string(who) + ": stray component in signature (" +
                                        std::to_string(p) + "," + std::to_string(q) + "," +
                                        std::to_string(k) + "," + std::to_string(l) + ")");
    }
}

}  // namespace

// ---- data types ---------------------------------------------------------------

Lie2AlgebraData Lie2AlgebraData::zero(const SpaceSpec& sp) {
    Lie2AlgebraData d;
    d.space = sp;
    d.phi = zero_matrix(sp.dim_g, sp.dim_theta);
    d.bracket = Tensor3(sp.dim_g, sp.dim_g, sp.dim_g);
    d.action = Tensor3(sp.dim_g, sp.dim_theta, sp.dim_theta);
    d.homotopy = Tensor4(sp.dim_g, sp.dim_g, sp.dim_g, sp.dim_theta);
    return d;
}

void Lie2AlgebraData::validate() const {
    int g = space.dim_g, t = space.dim_theta;
    if (static_cast<int>(phi.size()) != g ||
        (g > 0 && static_cast<int>(phi[0].size()) != t))
        throw std::invalid_argument("Lie2AlgebraData: phi shape");
    if (bracket.dim(0) != g || bracket.dim(1) != g || bracket.dim(2) != g)
        throw std::invalid_argument("Lie2AlgebraData: bracket shape");
    if (action.dim(0) != g || action.dim(1) != t || action.dim(2) != t)
        throw std::invalid_argument("Lie2AlgebraData: action shape");
    if (homotopy.dim(0) != g || homotopy.dim(1) != g || homotopy.dim(2) != g ||
        homotopy.dim(3) != t)
        throw std::invalid_argument("Lie2AlgebraData: homotopy shape");
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k) {
                if (!(bracket.at(i, j, k) + bracket.at(j, i, k)).is_zero())
                    throw std::invalid_argument("Lie2AlgebraData: bracket not skew");
                for (int a = 0; a < t; ++a) {
                    if (!(homotopy.at(i, j, k, a) + homotopy.at(j, i, k, a)).is_zero() ||
                        !(homotopy.at(i, j, k, a) + homotopy.at(i, k, j, a)).is_zero())
                        throw std::invalid_argument("Lie2AlgebraData: homotopy not alternating");
                }
            }
}

RatVec Lie2AlgebraData::apply_phi(const RatVec& u) const { return mat_apply(phi, u); }

RatVec Lie2AlgebraData::apply_bracket(const RatVec& x, const RatVec& y) const {
    int g = space.dim_g;
    RatVec r(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            if (x[i].is_zero() || y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (int k = 0; k < g; ++k) r[k] += f * bracket.at(i, j, k);
        }
    return r;
}

RatVec Lie2AlgebraData::apply_action(const RatVec& x, const RatVec& u) const {
    int g = space.dim_g, t = space.dim_theta;
    RatVec r(t);
    for (int i = 0; i < g; ++i)
        for (int a = 0; a < t; ++a) {
            if (x[i].is_zero() || u[a].is_zero()) continue;
            Rational f = x[i] * u[a];
            for (int b = 0; b < t; ++b) r[b] += f * action.at(i, a, b);
        }
    return r;
}

RatVec Lie2AlgebraData::apply_homotopy(const RatVec& x, const RatVec& y, const RatVec& z) const {
    int g = space.dim_g, t = space.dim_theta;
    RatVec r(t);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k) {
                if (x[i].is_zero() || y[j].is_zero() || z[k].is_zero()) continue;
                Rational f = x[i] * y[j] * z[k];
                for (int a = 0; a < t; ++a) r[a] += f * homotopy.at(i, j, k, a);
            }
    return r;
}

Lie2CoalgebraData Lie2CoalgebraData::zero(const SpaceSpec& sp) {
    Lie2CoalgebraData d;
    d.space = sp;
    d.phi = zero_matrix(sp.dim_g, sp.dim_theta);
    d.delta = Tensor3(sp.dim_g, sp.dim_g, sp.dim_theta);
    d.omega = Tensor3(sp.dim_theta, sp.dim_theta, sp.dim_theta);
    d.eta = SymElement::zero(sp);
    return d;
}

void Lie2CoalgebraData::validate() const {
    int g = space.dim_g, t = space.dim_theta;
    if (static_cast<int>(phi.size()) != g ||
        (g > 0 && static_cast<int>(phi[0].size()) != t))
        throw std::invalid_argument("Lie2CoalgebraData: phi shape");
    if (delta.dim(0) != g || delta.dim(1) != g || delta.dim(2) != t)
        throw std::invalid_argument("Lie2CoalgebraData: delta shape");
    if (omega.dim(0) != t || omega.dim(1) != t || omega.dim(2) != t)
        throw std::invalid_argument("Lie2CoalgebraData: omega shape");
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            for (int c = 0; c < t; ++c)
                if (!(omega.at(a, b, c) + omega.at(a, c, b)).is_zero())
                    throw std::invalid_argument("Lie2CoalgebraData: omega not skew");
    if (!eta.space().same_dims(space))
        throw std::invalid_argument("Lie2CoalgebraData: eta space mismatch");
    static const int etaSig[4] = {0, 1, 3, 0};
    require_signature_support(eta, {etaSig}, "Lie2CoalgebraData eta");
}

BialgebraElement BialgebraElement::from_element(const SymElement& eps) {
    auto deg = eps.degree();
    if (deg && *deg != -4)
        throw std::invalid_argument("BialgebraElement: element not of degree -4");
    std::vector<const int*> allowed;
    for (const auto& s : kBialgebraSignatures) allowed.push_back(s);
    require_signature_support(eps, allowed, "BialgebraElement");
    BialgebraElement e;
    e.eps = eps;
    e.is_quasi = eps.component(0, 3, 1, 0).is_zero();
    e.is_strict = e.is_quasi && eps.component(0, 1, 3, 0).is_zero();
    return e;
}

// ---- encode / decode ------------------------------------------------------------

SymElement algebra_to_element(const Lie2AlgebraData& d) {
    d.validate();
    const SpaceSpec& sp = d.space;
    SymElement out(sp);
    for (int i = 0; i < sp.dim_g; ++i)
        for (int a = 0; a < sp.dim_theta; ++a) {
            int ix[2] = {i, a};
            add_encoded(out, kPhiCodec, ix, d.phi[i][a]);
        }
    for (int i = 0; i < sp.dim_g; ++i)
        for (int j = i + 1; j < sp.dim_g; ++j)
            for (int k = 0; k < sp.dim_g; ++k) {
                int ix[3] = {i, j, k};
                add_encoded(out, kBracketCodec, ix, d.bracket.at(i, j, k));
            }
    for (int i = 0; i < sp.dim_g; ++i)
        for (int a = 0; a < sp.dim_theta; ++a)
            for (int b = 0; b < sp.dim_theta; ++b) {
                int ix[3] = {i, a, b};
                add_encoded(out, kActionCodec, ix, d.action.at(i, a, b));
            }
    for (int i = 0; i < sp.dim_g; ++i)
        for (int j = i + 1; j < sp.dim_g; ++j)
            for (int k = j + 1; k < sp.dim_g; ++k)
                for (int a = 0; a < sp.dim_theta; ++a) {
                    int ix[4] = {i, j, k, a};
                    add_encoded(out, kHomotopyCodec, ix, d.homotopy.at(i, j, k, a));
                }
    return out;
}

Lie2AlgebraData element_to_algebra(const SymElement& l) {
    static const int sig0[4] = {1, 2, 0, 0}, sig1[4] = {0, 1, 1, 1}, sig2[4] = {0, 3, 1, 0},
                     sig3[4] = {1, 0, 0, 1};
    require_signature_support(l, {sig0, sig1, sig2, sig3}, "element_to_algebra");
    const SpaceSpec& sp = l.space();
    Lie2AlgebraData d = Lie2AlgebraData::zero(sp);
    SymElement e10 = l.component(1, 0, 0, 1);
    SymElement e12 = l.component(1, 2, 0, 0);
    SymElement e01 = l.component(0, 1, 1, 1);
    SymElement e03 = l.component(0, 3, 1, 0);
    for (int i = 0; i < sp.dim_g; ++i)
        for (int a = 0; a < sp.dim_theta; ++a) {
            int ix[2] = {i, a};
            if (!e10.is_zero()) d.phi[i][a] = phi_entry(e10, ix);
        }
    if (!e12.is_zero())
        for (int i = 0; i < sp.dim_g; ++i)
            for (int j = 0; j < sp.dim_g; ++j)
                for (int k = 0; k < sp.dim_g; ++k) {
                    int ix[3] = {i, j, k};
                    d.bracket.at(i, j, k) = bracket_entry(e12, ix);
                }
    if (!e01.is_zero())
        for (int i = 0; i < sp.dim_g; ++i)
            for (int a = 0; a < sp.dim_theta; ++a)
                for (int b = 0; b < sp.dim_theta; ++b) {
                    int ix[3] = {i, a, b};
                    d.action.at(i, a, b) = action_entry(e01, ix);
                }
    if (!e03.is_zero())
        for (int i = 0; i < sp.dim_g; ++i)
            for (int j = 0; j < sp.dim_g; ++j)
                for (int k = 0; k < sp.dim_g; ++k)
                    for (int a = 0; a < sp.dim_theta; ++a) {
                        int ix[4] = {i, j, k, a};
                        d.homotopy.at(i, j, k, a) = homotopy_entry(e03, ix);
                    }
    return d;
}

SymElement coalgebra_to_element(const Lie2CoalgebraData& d) {
    d.validate();
    const SpaceSpec& sp = d.space;
    SymElement out(sp);
    for (int i = 0; i < sp.dim_g; ++i)
        for (int a = 0; a < sp.dim_theta; ++a) {
            int ix[2] = {i, a};
            add_encoded(out, kPhiCodec, ix, d.phi[i][a]);
        }
    for (int a = 0; a < sp.dim_theta; ++a)
        for (int b = 0; b < sp.dim_theta; ++b)
            for (int c = b + 1; c < sp.dim_theta; ++c) {
                int ix[3] = {a, b, c};
                add_encoded(out, kOmegaCodec, ix, d.omega.at(a, b, c));
            }
    for (int i = 0; i < sp.dim_g; ++i)
        for (int j = 0; j < sp.dim_g; ++j)
            for (int a = 0; a < sp.dim_theta; ++a) {
                int ix[3] = {i, j, a};
                add_encoded(out, kDeltaCodec, ix, d.delta.at(i, j, a));
            }
    out += d.eta;
    return out;
}

Lie2CoalgebraData element_to_coalgebra(const SymElement& c) {
    static const int sig0[4] = {1, 0, 0, 1}, sig1[4] = {0, 0, 2, 1}, sig2[4] = {1, 1, 1, 0},
                     sig3[4] = {0, 1, 3, 0};
    require_signature_support(c, {sig0, sig1, sig2, sig3}, "element_to_coalgebra");
    const SpaceSpec& sp = c.space();
    Lie2CoalgebraData d = Lie2CoalgebraData::zero(sp);
    SymElement e10 = c.component(1, 0, 0, 1);
    SymElement e00 = c.component(0, 0, 2, 1);
    SymElement e11 = c.component(1, 1, 1, 0);
    for (int i = 0; i < sp.dim_g; ++i)
        for (int a = 0; a < sp.dim_theta; ++a) {
            int ix[2] = {i, a};
            if (!e10.is_zero()) d.phi[i][a] = phi_entry(e10, ix);
        }
    if (!e00.is_zero())
        for (int a = 0; a < sp.dim_theta; ++a)
            for (int b = 0; b < sp.dim_theta; ++b)
                for (int cc = 0; cc < sp.dim_theta; ++cc) {
                    int ix[3] = {a, b, cc};
                    d.omega.at(a, b, cc) = omega_entry(e00, ix);
                }
    if (!e11.is_zero())
        for (int i = 0; i < sp.dim_g; ++i)
            for (int j = 0; j < sp.dim_g; ++j)
                for (int a = 0; a < sp.dim_theta; ++a) {
                    int ix[3] = {i, j, a};
                    d.delta.at(i, j, a) = delta_entry(e11, ix);
                }
    d.eta = c.component(0, 1, 3, 0);
    return d;
}

namespace {

Rational eta_entry(const SymElement& e, const int* ix) {
    // xi_i coefficient of {{{e, kappa_a}, kappa_b}, kappa_c}
    const SpaceSpec& sp = e.space();
    SymElement r = big_bracket(
        big_bracket(big_bracket(e, gen_el(sp, Role::ThetaStar, ix[0])),
                    gen_el(sp, Role::ThetaStar, ix[1])),
        gen_el(sp, Role::ThetaStar, ix[2]));
    return coeff_at(r, {{Role::GStar, ix[3]}});
}

std::vector<Generator> eta_monomial(const int* ix) {
    return {{Role::GStar, ix[3]}, {Role::Theta, ix[0]}, {Role::Theta, ix[1]}, {Role::Theta, ix[2]}};
}

constexpr SignatureCodec kEtaCodec{eta_monomial, eta_entry};

}  // namespace

SymElement eta_from_tensor(const SpaceSpec& sp, const Tensor4& eta) {
    if (eta.dim(0) != sp.dim_theta || eta.dim(1) != sp.dim_theta || eta.dim(2) != sp.dim_theta ||
        eta.dim(3) != sp.dim_g)
        throw std::invalid_argument("eta_from_tensor: shape");
    for (int a = 0; a < sp.dim_theta; ++a)
        for (int b = 0; b < sp.dim_theta; ++b)
            for (int c = 0; c < sp.dim_theta; ++c)
                for (int i = 0; i < sp.dim_g; ++i)
                    if (!(eta.at(a, b, c, i) + eta.at(b, a, c, i)).is_zero() ||
                        !(eta.at(a, b, c, i) + eta.at(a, c, b, i)).is_zero())
                        throw std::invalid_argument("eta_from_tensor: not alternating");
    SymElement out(sp);
    for (int a = 0; a < sp.dim_theta; ++a)
        for (int b = a + 1; b < sp.dim_theta; ++b)
            for (int c = b + 1; c < sp.dim_theta; ++c)
                for (int i = 0; i < sp.dim_g; ++i) {
                    int ix[4] = {a, b, c, i};
                    add_encoded(out, kEtaCodec, ix, eta.at(a, b, c, i));
                }
    return out;
}

Tensor4 eta_to_tensor(const SymElement& eta) {
    static const int sig[4] = {0, 1, 3, 0};
    require_signature_support(eta, {sig}, "eta_to_tensor");
    const SpaceSpec& sp = eta.space();
    Tensor4 out(sp.dim_theta, sp.dim_theta, sp.dim_theta, sp.dim_g);
    if (eta.is_zero()) return out;
    for (int a = 0; a < sp.dim_theta; ++a)
        for (int b = 0; b < sp.dim_theta; ++b)
            for (int c = 0; c < sp.dim_theta; ++c)
                for (int i = 0; i < sp.dim_g; ++i) {
                    int ix[4] = {a, b, c, i};
                    out.at(a, b, c, i) = eta_entry(eta, ix);
                }
    return out;
}

BialgebraElement assemble_bialgebra(const Lie2AlgebraData& alg, const Lie2CoalgebraData& coalg) {
    if (!alg.space.same_dims(coalg.space))
        throw std::invalid_argument("assemble_bialgebra: mixed spaces");
    if (alg.phi != coalg.phi)
        throw std::invalid_argument("assemble_bialgebra: phi mismatch between algebra and coalgebra");
    SymElement l = algebra_to_element(alg);
    SymElement c = coalgebra_to_element(coalg);
    SymElement eps = l + c - c.component(1, 0, 0, 1);  // shared phi component taken once
    return BialgebraElement::from_element(eps);
}

Lie2AlgebraData project_algebra(const BialgebraElement& e) {
    SymElement l = e.eps.component(1, 0, 0, 1) + e.eps.component(1, 2, 0, 0) +
                   e.eps.component(0, 1, 1, 1) + e.eps.component(0, 3, 1, 0);
    return element_to_algebra(l);
}

Lie2CoalgebraData project_coalgebra(const BialgebraElement& e) {
    SymElement c = e.eps.component(1, 0, 0, 1) + e.eps.component(0, 0, 2, 1) +
                   e.eps.component(1, 1, 1, 0) + e.eps.component(0, 1, 3, 0);
    return element_to_coalgebra(c);
}

// ---- verifiers -------------------------------------------------------------------

namespace {

RatVec basis_vec(int dim, int i) {
    RatVec v(dim);
    v[i] = Rational(1);
    return v;
}

void add_witness(Check& c, const std::string& where, const RatVec& defect,
                 const std::string& token) {
    for (const auto& r : defect)
        if (!r.is_zero()) {
            c.witnesses.push_back({where, render_vec(defect, token)});
            return;
        }
}

}  // namespace

VerificationReport verify_weak_lie2_algebra(const Lie2AlgebraData& d) {
    auto t0 = Clock::now();
    d.validate();
    VerificationReport rep;
    const int g = d.space.dim_g, t = d.space.dim_theta;

    auto X = [&](int i) { return basis_vec(g, i); };
    auto U = [&](int a) { return basis_vec(t, a); };
    auto vsum = [](RatVec a, const RatVec& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    auto vneg = [](RatVec a) {
        for (auto& r : a) r = -r;
        return a;
    };

    // (1) Jacobi up to homotopy: [[x,y],z] + c.p. + phi(h(x,y,z)) = 0
    auto defect1 = [&](int i, int j, int k) {
        RatVec r = d.apply_bracket(d.apply_bracket(X(i), X(j)), X(k));
        r = vsum(r, d.apply_bracket(d.apply_bracket(X(j), X(k)), X(i)));
        r = vsum(r, d.apply_bracket(d.apply_bracket(X(k), X(i)), X(j)));
        r = vsum(r, d.apply_phi(d.apply_homotopy(X(i), X(j), X(k))));
        return r;
    };
    // (2) action flatness up to homotopy:
    //     y|>(x|>u) - x|>(y|>u) + [x,y]|>u + h(phi(u),x,y) = 0
    auto defect2 = [&](int i, int j, int a) {
        RatVec r = d.apply_action(X(j), d.apply_action(X(i), U(a)));
        r = vsum(r, vneg(d.apply_action(X(i), d.apply_action(X(j), U(a)))));
        r = vsum(r, d.apply_action(d.apply_bracket(X(i), X(j)), U(a)));
        r = vsum(r, d.apply_homotopy(d.apply_phi(U(a)), X(i), X(j)));
        return r;
    };
    // (3) phi(u)|>v + phi(v)|>u = 0
    auto defect3 = [&](int a, int b) {
        return vsum(d.apply_action(d.apply_phi(U(a)), U(b)),
                    d.apply_action(d.apply_phi(U(b)), U(a)));
    };
    // (4) phi(x|>u) - [x, phi(u)] = 0
    auto defect4 = [&](int i, int a) {
        return vsum(d.apply_phi(d.apply_action(X(i), U(a))),
                    vneg(d.apply_bracket(X(i), d.apply_phi(U(a)))));
    };
    // (5) homotopy coherence
    auto defect5 = [&](int i, int j, int k, int l) {
        RatVec r = vneg(d.apply_action(X(l), d.apply_homotopy(X(i), X(j), X(k))));
        r = vsum(r, vneg(d.apply_action(X(j), d.apply_homotopy(X(i), X(k), X(l)))));
        r = vsum(r, d.apply_action(X(k), d.apply_homotopy(X(i), X(j), X(l))));
        r = vsum(r, d.apply_action(X(i), d.apply_homotopy(X(j), X(k), X(l))));
        r = vsum(r, vneg(d.apply_homotopy(d.apply_bracket(X(i), X(j)), X(k), X(l))));
        r = vsum(r, d.apply_homotopy(d.apply_bracket(X(i), X(k)), X(j), X(l)));
        r = vsum(r, vneg(d.apply_homotopy(d.apply_bracket(X(i), X(l)), X(j), X(k))));
        r = vsum(r, vneg(d.apply_homotopy(d.apply_bracket(X(j), X(k)), X(i), X(l))));
        r = vsum(r, d.apply_homotopy(d.apply_bracket(X(j), X(l)), X(i), X(k)));
        r = vsum(r, vneg(d.apply_homotopy(d.apply_bracket(X(k), X(l)), X(i), X(j))));
        return r;
    };

    auto xs = [](std::initializer_list<int> v, const char* tok) {
        std::string out = "(";
        bool first = true;
        for (int i : v) {
            out += (first ? "" : ",") + std::string(tok) + std::to_string(i);
            first = false;
        }
        return out + ")";
    };

    Check& c1 = rep.add("jacobi-up-to-homotopy");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int k = j + 1; k < g; ++k) add_witness(c1, xs({i, j, k}, "x"), defect1(i, j, k), "x");
    Check& c2 = rep.add("action-flatness");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int a = 0; a < t; ++a)
                add_witness(c2, "(x" + std::to_string(i) + ",x" + std::to_string(j) + ",u" +
                                    std::to_string(a) + ")",
                            defect2(i, j, a), "u");
    Check& c3 = rep.add("phi-action-antisymmetry");
    for (int a = 0; a < t; ++a)
        for (int b = a; b < t; ++b) add_witness(c3, xs({a, b}, "u"), defect3(a, b), "u");
    Check& c4 = rep.add("phi-equivariance");
    for (int i = 0; i < g; ++i)
        for (int a = 0; a < t; ++a)
            add_witness(c4, "(x" + std::to_string(i) + ",u" + std::to_string(a) + ")",
                        defect4(i, a), "x");
    Check& c5 = rep.add("homotopy-coherence");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int k = j + 1; k < g; ++k)
                for (int l = k + 1; l < g; ++l)
                    add_witness(c5, xs({i, j, k, l}, "x"), defect5(i, j, k, l), "u");

    // master equation {l,l} = 0
    SymElement l = algebra_to_element(d);
    SymElement ll = big_bracket(l, l);
    Check& cm = rep.add("master-equation");
    for (const auto& [m, c] : ll.terms()) {
        SymElement one_term(d.space);
        one_term.add_term(m, c);
        cm.witnesses.push_back({"{l,l}", one_term.to_string()});
    }

    // factor relations between the derived maps of {l,l} and the five identities
    const SpaceSpec& sp = d.space;
    SymElement part2(sp), part3(sp), part4(sp);
    for (const auto& [m, c] : ll.terms()) {
        int duals = m.role_count(Role::GStar) + m.role_count(Role::ThetaStar);
        SymElement term(sp);
        term.add_term(m, c);
        if (duals == 2) part2 += term;
        else if (duals == 3) part3 += term;
        else part4 += term;
    }
    auto gel = [&](Role r, int i) { return gen_el(sp, r, i); };
    Check& cf = rep.add("factor-relations");
    auto check_factor = [&](const SymElement& part, std::vector<SymElement> args,
                            const RatVec& defect, Role out_role, int factor,
                            const std::string& where) {
        SymElement lhs = part.is_zero() ? SymElement::zero(sp) : derived_map(part, args);
        SymElement rhs = Rational(factor) * embed(sp, out_role, defect);
        if (!(lhs == rhs)) cf.witnesses.push_back({where, (lhs - rhs).to_string()});
    };
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int k = j + 1; k < g; ++k)
                check_factor(part3, {gel(Role::G, i), gel(Role::G, j), gel(Role::G, k)},
                             defect1(i, j, k), Role::G, 2, "eq1" + xs({i, j, k}, "x"));
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int a = 0; a < t; ++a)
                check_factor(part3, {gel(Role::G, i), gel(Role::G, j), gel(Role::Theta, a)},
                             defect2(i, j, a), Role::Theta, 2,
                             "eq2(x" + std::to_string(i) + ",x" + std::to_string(j) + ",u" +
                                 std::to_string(a) + ")");
    for (int i = 0; i < g; ++i)
        for (int a = 0; a < t; ++a)
            check_factor(part2, {gel(Role::Theta, a), gel(Role::G, i)}, defect4(i, a), Role::G, 2,
                         "eq3(u" + std::to_string(a) + ",x" + std::to_string(i) + ")");
    for (int a = 0; a < t; ++a)
        for (int b = a; b < t; ++b)
            check_factor(part2, {gel(Role::Theta, a), gel(Role::Theta, b)}, defect3(a, b),
                         Role::Theta, 2, "eq4" + xs({a, b}, "u"));
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int k = j + 1; k < g; ++k)
                for (int l = k + 1; l < g; ++l)
                    check_factor(part4,
                                 {gel(Role::G, i), gel(Role::G, j), gel(Role::G, k), gel(Role::G, l)},
                                 defect5(i, j, k, l), Role::Theta, -2,
                                 "eq5" + xs({i, j, k, l}, "x"));

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_weak_lie2_coalgebra(const Lie2CoalgebraData& d) {
    auto t0 = Clock::now();
    d.validate();
    VerificationReport rep;
    SymElement c = coalgebra_to_element(d);
    SymElement cc = big_bracket(c, c);
    Check& check = rep.add("co-master-equation");
    for (const auto& [m, co] : cc.terms()) {
        SymElement term(d.space);
        term.add_term(m, co);
        check.witnesses.push_back({"{c,c}", term.to_string()});
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

BialgebraDefects bialgebra_defects(const BialgebraElement& e) {
    const SymElement& eps = e.eps;
    const SpaceSpec& sp = eps.space();
    SymElement e12 = eps.component(1, 2, 0, 0), e01 = eps.component(0, 1, 1, 1),
               e03 = eps.component(0, 3, 1, 0), e10 = eps.component(1, 0, 0, 1),
               e00 = eps.component(0, 0, 2, 1), e11 = eps.component(1, 1, 1, 0),
               e30 = eps.component(0, 1, 3, 0);
    SymElement l = e10 + e12 + e01 + e03;
    SymElement c = e10 + e00 + e11 + e30;
    BialgebraDefects out{big_bracket(l, l), big_bracket(c, c),
                         big_bracket(e12, e11) + big_bracket(e01, e00) + big_bracket(e01, e11),
                         SymElement::zero(sp)};
    SymElement cross = big_bracket(e03, e00 + e11 + e30) + big_bracket(e12 + e01, e30);
    out.homotopy_cross = Rational(2) * cross;
    return out;
}

VerificationReport verify_bialgebra(const BialgebraElement& e) {
    auto t0 = Clock::now();
    VerificationReport rep;
    BialgebraDefects d = bialgebra_defects(e);
    auto report_part = [&](const char* id, const SymElement& part) {
        Check& c = rep.add(id);
        for (const auto& [m, co] : part.terms()) {
            SymElement term(e.eps.space());
            term.add_term(m, co);
            c.witnesses.push_back({id, term.to_string()});
        }
    };
    report_part("algebra-part", d.algebra);
    report_part("coalgebra-part", d.coalgebra);
    report_part("mixed-part", d.mixed);
    report_part("homotopy-cross-part", d.homotopy_cross);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace l2b
