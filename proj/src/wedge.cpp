#include "l2b/wedge.hpp"

#include <stdexcept>

namespace l2b {

namespace {

// strictly ascending sort with signature sign; nullopt on any repeated factor
std::optional<NormalizedMonomial> normalize_wedge(std::vector<Generator> raw) {
    int sign = 1;
    for (size_t i = 1; i < raw.size(); ++i) {
        Generator key = raw[i];
        size_t j = i;
        while (j > 0 && key < raw[j - 1]) {
            sign = -sign;
            raw[j] = raw[j - 1];
            --j;
        }
        raw[j] = key;
    }
    for (size_t i = 1; i < raw.size(); ++i)
        if (raw[i] == raw[i - 1]) return std::nullopt;
    return NormalizedMonomial{Monomial{std::move(raw)}, sign};
}

void check_primal(const SpaceSpec& sp, const Generator& g) {
    if (!is_primal(g.role)) throw std::invalid_argument("WedgeElement: dual-role generator");
    check_generator(sp, g);
}

}  // namespace

WedgeElement WedgeElement::one(const SpaceSpec& sp) {
    WedgeElement e(sp);
    e.add_term(Monomial{}, Rational(1));
    return e;
}

WedgeElement WedgeElement::generator(const SpaceSpec& sp, Generator g) {
    check_primal(sp, g);
    WedgeElement e(sp);
    e.add_term(Monomial{{g}}, Rational(1));
    return e;
}

WedgeElement WedgeElement::basis_g(const SpaceSpec& sp, int i) {
    return generator(sp, {Role::G, i});
}

WedgeElement WedgeElement::basis_theta(const SpaceSpec& sp, int a) {
    return generator(sp, {Role::Theta, a});
}

WedgeElement WedgeElement::vector(const SpaceSpec& sp, const RatVec& g_coords,
                                  const RatVec& t_coords) {
    if (static_cast<int>(g_coords.size()) != sp.dim_g ||
        static_cast<int>(t_coords.size()) != sp.dim_theta)
        throw std::invalid_argument("WedgeElement::vector: coordinate size mismatch");
    WedgeElement e(sp);
    for (int i = 0; i < sp.dim_g; ++i) e.add_term(Monomial{{{Role::G, i}}}, g_coords[i]);
    for (int a = 0; a < sp.dim_theta; ++a) e.add_term(Monomial{{{Role::Theta, a}}}, t_coords[a]);
    return e;
}

void WedgeElement::add_word(const std::vector<Generator>& word, const Rational& c) {
    for (const auto& g : word) check_primal(space_, g);
    auto nm = normalize_wedge(word);
    if (nm) add_term(nm->monomial, nm->sign == 1 ? c : -c);
}

void WedgeElement::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

WedgeElement WedgeElement::operator-() const {
    WedgeElement r(space_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

static void require_same_space(const WedgeElement& a, const WedgeElement& b) {
    if (!a.space().same_dims(b.space()))
        throw std::invalid_argument("WedgeElement: mixed ambient spaces");
}

WedgeElement operator+(const WedgeElement& a, const WedgeElement& b) {
    require_same_space(a, b);
    WedgeElement r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

WedgeElement operator-(const WedgeElement& a, const WedgeElement& b) {
    require_same_space(a, b);
    WedgeElement r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
    return r;
}

WedgeElement operator*(const Rational& c, const WedgeElement& e) {
    WedgeElement r(e.space());
    if (c.is_zero()) return r;
    for (const auto& [m, k] : e.terms()) r.add_term(m, c * k);
    return r;
}

WedgeElement wedge(const WedgeElement& a, const WedgeElement& b) {
    require_same_space(a, b);
    WedgeElement r(a.space());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Generator> word = ma.gens;
            word.insert(word.end(), mb.gens.begin(), mb.gens.end());
            auto nm = normalize_wedge(std::move(word));
            if (!nm) continue;
            Rational c = ca * cb;
            r.add_term(nm->monomial, nm->sign == 1 ? c : -c);
        }
    return r;
}

std::optional<int> WedgeElement::wedge_degree() const {
    if (terms_.empty()) return std::nullopt;
    size_t d = terms_.begin()->first.gens.size();
    for (const auto& [m, c] : terms_)
        if (m.gens.size() != d) return std::nullopt;
    return static_cast<int>(d);
}

WedgeElement WedgeElement::project_theta(int degree) const {
    WedgeElement r(space_);
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(m.gens.size()) != degree) continue;
        if (m.role_count(Role::Theta) == degree) r.add_term(m, c);
    }
    return r;
}

WedgeElement WedgeElement::bidegree_part(int ng, int nt) const {
    WedgeElement r(space_);
    for (const auto& [m, c] : terms_)
        if (m.role_count(Role::G) == ng && m.role_count(Role::Theta) == nt) r.add_term(m, c);
    return r;
}

std::string WedgeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.is_negative()) out += "-";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        bool unit = a.is_one() && !m.empty();
        if (!unit) out += a.to_string();
        if (!m.empty()) {
            if (!unit) out += " ";
            for (size_t i = 0; i < m.gens.size(); ++i) {
                if (i) out += "^";
                out += m.gens[i].token();
            }
        }
    }
    return out;
}

Covector Covector::basis_gstar(const SpaceSpec& sp, int i) {
    Covector c = zero(sp);
    c.on_g.at(i) = Rational(1);
    return c;
}

Covector Covector::basis_thetastar(const SpaceSpec& sp, int a) {
    Covector c = zero(sp);
    c.on_theta.at(a) = Rational(1);
    return c;
}

Rational Covector::eval(const Generator& g) const {
    if (g.role == Role::G) return on_g.at(g.index);
    if (g.role == Role::Theta) return on_theta.at(g.index);
    throw std::invalid_argument("Covector::eval: dual-role generator");
}

WedgeElement contract(const Covector& alpha, const WedgeElement& w) {
    WedgeElement r(w.space());
    for (const auto& [m, c] : w.terms()) {
        int sign = 1;
        for (size_t i = 0; i < m.gens.size(); ++i) {
            Rational v = alpha.eval(m.gens[i]);
            if (!v.is_zero()) {
                std::vector<Generator> rest;
                rest.reserve(m.gens.size() - 1);
                for (size_t j = 0; j < m.gens.size(); ++j)
                    if (j != i) rest.push_back(m.gens[j]);
                Rational coeff = c * v;
                r.add_term(Monomial{std::move(rest)}, sign == 1 ? coeff : -coeff);
            }
            sign = -sign;
        }
    }
    return r;
}

Rational pair2(const WedgeElement& w, const Covector& alpha, const Covector& beta) {
    WedgeElement s = contract(beta, contract(alpha, w));
    Rational out;
    for (const auto& [m, c] : s.terms()) {
        if (!m.empty()) throw std::invalid_argument("pair2: element not of exterior degree 2");
        out += c;
    }
    return out;
}

WedgeElement apply_derivation(const WedgeElement& w, int parity,
                              const std::function<WedgeElement(const Generator&)>& image) {
    WedgeElement r(w.space());
    for (const auto& [m, c] : w.terms()) {
        for (size_t i = 0; i < m.gens.size(); ++i) {
            WedgeElement img = image(m.gens[i]);
            if (img.is_zero()) continue;
            int sign = (parity && (i & 1)) ? -1 : 1;
            WedgeElement head(w.space());
            head.add_term(Monomial{std::vector<Generator>(m.gens.begin(), m.gens.begin() + i)},
                          Rational(1));
            WedgeElement tail(w.space());
            tail.add_term(Monomial{std::vector<Generator>(m.gens.begin() + i + 1, m.gens.end())},
                          Rational(1));
            WedgeElement term = wedge(wedge(head, img), tail);
            r += (sign == 1 ? c : -c) * term;
        }
    }
    return r;
}

} // namespace l2b
