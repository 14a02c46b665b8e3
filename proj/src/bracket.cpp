#include "l2b/bracket.hpp"

#include <stdexcept>

namespace l2b {

namespace {

int shifted_parity_of(const SymElement& e, const char* who) {
    auto d = e.degree();
    if (!d) throw std::invalid_argument(std::string(who) + ": homogeneous element required");
    return (*d + 3) & 1;
}

// {a, b} on single generators: the pairing axiom plus shifted antisymmetry.
Rational generator_bracket(const SpaceSpec& sp, const Generator& a, const Generator& b) {
    if (is_primal(a.role) && is_dual(b.role)) {
        Rational p = pairing(sp, a, b);
        return (a.degree() & 1) ? -p : p;
    }
    if (is_dual(a.role) && is_primal(b.role)) {
        Rational p = pairing(sp, b, a);
        Rational v = (b.degree() & 1) ? -p : p;
        int s = a.shifted_parity() * b.shifted_parity();
        return s ? v : -v;  // -(-1)^{s_a s_b} {b,a}
    }
    return Rational(0);
}

// {m1, m2} on canonical monomials, Leibniz-expanded.
SymElement bracket_monomials(const SpaceSpec& sp, const Monomial& m1, const Monomial& m2) {
    if (m1.empty() || m2.empty()) return SymElement::zero(sp);
    if (m1.gens.size() == 1 && m2.gens.size() == 1) {
        SymElement r(sp);
        Rational c = generator_bracket(sp, m1.gens[0], m2.gens[0]);
        if (!c.is_zero()) r.add_term(Monomial{}, c);
        return r;
    }
    if (m2.gens.size() >= 2) {
        // {e1, b (.) rest} = {e1,b} (.) rest + (-1)^{(|e1|+3)|b|} b (.) {e1,rest}
        Generator b = m2.gens.front();
        Monomial rest{std::vector<Generator>(m2.gens.begin() + 1, m2.gens.end())};
        SymElement rest_el(sp);
        rest_el.add_term(rest, Rational(1));
        SymElement b_el = SymElement::generator(sp, b);

        SymElement term1 = sym_product(bracket_monomials(sp, m1, Monomial{{b}}), rest_el);
        SymElement term2 = sym_product(b_el, bracket_monomials(sp, m1, rest));
        int sign = (m1.shifted_parity() * b.parity()) & 1;
        return sign ? term1 - term2 : term1 + term2;
    }
    // m1 has length >= 2, m2 is a single generator:
    // {a (.) rest, e3} = a (.) {rest,e3} + (-1)^{|rest|(|e3|+3)} {a,e3} (.) rest
    Generator a = m1.gens.front();
    Monomial rest{std::vector<Generator>(m1.gens.begin() + 1, m1.gens.end())};
    SymElement rest_el(sp);
    rest_el.add_term(rest, Rational(1));
    SymElement a_el = SymElement::generator(sp, a);

    SymElement term1 = sym_product(a_el, bracket_monomials(sp, rest, m2));
    SymElement term2 = sym_product(bracket_monomials(sp, Monomial{{a}}, m2), rest_el);
    int sign = (rest.parity() * m2.gens[0].shifted_parity()) & 1;
    return sign ? term1 - term2 : term1 + term2;
}

}  // namespace

SymElement big_bracket(const SymElement& e1, const SymElement& e2) {
    if (!e1.space().same_dims(e2.space()))
        throw std::invalid_argument("big_bracket: mixed ambient spaces");
    SymElement r(e1.space());
    for (const auto& [m1, c1] : e1.terms()) {
        for (const auto& [m2, c2] : e2.terms()) {
            SymElement b = bracket_monomials(e1.space(), m1, m2);
            if (!b.is_zero()) r += (c1 * c2) * b;
        }
    }
    return r;
}

SymElement jacobi_defect(const SymElement& e1, const SymElement& e2, const SymElement& e3) {
    SymElement lhs = big_bracket(e1, big_bracket(e2, e3));
    SymElement r1 = big_bracket(big_bracket(e1, e2), e3);
    SymElement r2 = big_bracket(e2, big_bracket(e1, e3));
    if (e1.is_zero() || e2.is_zero()) return lhs - r1 - r2;  // sign irrelevant on zero
    int s = shifted_parity_of(e1, "jacobi_defect") * shifted_parity_of(e2, "jacobi_defect");
    return s ? lhs - r1 + r2 : lhs - r1 - r2;
}

namespace {

bool pure_role_side(const SymElement& e, bool primal) {
    for (const auto& [m, c] : e.terms())
        for (const auto& g : m.gens)
            if (is_primal(g.role) != primal) return false;
    return true;
}

SymElement iterate_bracket(const SymElement& F, const std::vector<SymElement>& args) {
    SymElement acc = F;
    for (const auto& x : args) acc = big_bracket(acc, x);
    return acc;
}

}  // namespace

SymElement derived_map(const SymElement& F, const std::vector<SymElement>& args) {
    for (const auto& x : args) {
        if (!pure_role_side(x, true))
            throw std::invalid_argument("derived_map: argument contains dual-role generators");
        if (!F.space().same_dims(x.space()))
            throw std::invalid_argument("derived_map: mixed ambient spaces");
    }
    if (F.is_zero()) return SymElement::zero(F.space());
    auto q = F.uniform_dual_count();
    if (!q) throw std::invalid_argument("derived_map: non-uniform dual arity");
    if (*q != static_cast<int>(args.size()))
        throw std::invalid_argument("derived_map: arity mismatch");
    return iterate_bracket(F, args);
}

SymElement derived_map_dual(const SymElement& F, const std::vector<SymElement>& args) {
    for (const auto& x : args) {
        if (!pure_role_side(x, false))
            throw std::invalid_argument("derived_map_dual: argument contains primal-role generators");
        if (!F.space().same_dims(x.space()))
            throw std::invalid_argument("derived_map_dual: mixed ambient spaces");
    }
    if (F.is_zero()) return SymElement::zero(F.space());
    std::optional<int> p;
    for (const auto& [m, c] : F.terms()) {
        int n = m.role_count(Role::G) + m.role_count(Role::Theta);
        if (!p) p = n;
        else if (*p != n) throw std::invalid_argument("derived_map_dual: non-uniform primal arity");
    }
    if (*p != static_cast<int>(args.size()))
        throw std::invalid_argument("derived_map_dual: arity mismatch");
    return iterate_bracket(F, args);
}

namespace {

// all (j, n-j)-shuffles of 0..n-1, as full index sequences
std::vector<std::vector<int>> shuffles(int j, int n) {
    std::vector<std::vector<int>> out;
    if (j < 0 || j > n) return out;
    std::vector<int> pick(j);
    // iterate ascending j-subsets
    for (int i = 0; i < j; ++i) pick[i] = i;
    while (true) {
        std::vector<int> seq = pick;
        std::vector<bool> used(n, false);
        for (int v : pick) used[v] = true;
        for (int v = 0; v < n; ++v)
            if (!used[v]) seq.push_back(v);
        out.push_back(std::move(seq));
        // next subset
        int i = j - 1;
        while (i >= 0 && pick[i] == n - j + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < j; ++k) pick[k] = pick[k - 1] + 1;
    }
    return out;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& shifted_parities) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && shifted_parities[perm[i]] && shifted_parities[perm[j]])
                sign = -sign;
    return sign;
}

}  // namespace

SymElement composition_defect(const SymElement& E, const SymElement& F,
                              const std::vector<SymElement>& args) {
    const SpaceSpec& sp = E.space();
    if (E.is_zero() || F.is_zero()) return SymElement::zero(sp);
    auto l_opt = E.uniform_dual_count();
    auto q_opt = F.uniform_dual_count();
    if (!l_opt || !q_opt)
        throw std::invalid_argument("composition_defect: non-uniform dual arity");
    int l = *l_opt, q = *q_opt;
    int n = q + l - 1;
    if (n != static_cast<int>(args.size()))
        throw std::invalid_argument("composition_defect: arity mismatch");

    std::vector<int> sp_args;
    for (const auto& x : args) sp_args.push_back(shifted_parity_of(x, "composition_defect"));
    int sE = shifted_parity_of(E, "composition_defect");
    int sF = shifted_parity_of(F, "composition_defect");

    SymElement lhs = derived_map(big_bracket(E, F), args);

    auto pick_args = [&](const std::vector<int>& seq, int from, int to) {
        std::vector<SymElement> out;
        for (int i = from; i < to; ++i) out.push_back(args[seq[i]]);
        return out;
    };

    SymElement sum1(sp);
    for (const auto& seq : shuffles(q, n)) {
        int sgn = koszul_sign(seq, sp_args);
        SymElement inner = derived_map(F, pick_args(seq, 0, q));
        std::vector<SymElement> outer = {inner};
        for (int i = q; i < n; ++i) outer.push_back(args[seq[i]]);
        SymElement term = derived_map(E, outer);
        sum1 += sgn == 1 ? term : -term;
    }

    SymElement sum2(sp);
    for (const auto& seq : shuffles(l, n)) {
        int sgn = koszul_sign(seq, sp_args);
        SymElement inner = derived_map(E, pick_args(seq, 0, l));
        std::vector<SymElement> outer = {inner};
        for (int i = l; i < n; ++i) outer.push_back(args[seq[i]]);
        SymElement term = derived_map(F, outer);
        sum2 += sgn == 1 ? term : -term;
    }

    SymElement rhs = (sE & sF) != 0 ? sum1 + sum2 : sum1 - sum2;
    return lhs - rhs;
}

} // namespace l2b
