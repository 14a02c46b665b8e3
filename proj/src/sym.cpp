#include "l2b/sym.hpp"

#include <set>
#include <stdexcept>

namespace l2b {

void SpaceSpec::validate() const {
    if (dim_g < 0 || dim_theta < 0) throw std::invalid_argument("SpaceSpec: negative dimension");
    auto check_labels = [](const std::vector<std::string>& labels, int dim, const char* which) {
        if (labels.empty()) return;
        if (static_cast<int>(labels.size()) != dim)
            throw std::invalid_argument(std::string("SpaceSpec: ") + which + " label count != dim");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw std::invalid_argument(std::string("SpaceSpec: duplicate ") + which + " label");
    };
    check_labels(labels_g, dim_g, "g");
    check_labels(labels_theta, dim_theta, "theta");
}

void check_generator(const SpaceSpec& sp, const Generator& gen) {
    if (gen.index < 0 || gen.index >= sp.dim_of(gen.role))
        throw std::invalid_argument("generator " + gen.token() + " out of range for space");
}

Rational pairing(const SpaceSpec& sp, const Generator& v, const Generator& eps) {
    check_generator(sp, v);
    check_generator(sp, eps);
    if (!is_primal(v.role)) throw std::invalid_argument("pairing: first argument must be primal");
    if (!is_dual(eps.role)) throw std::invalid_argument("pairing: second argument must be dual");
    return (eps.role == dual_role(v.role) && eps.index == v.index) ? Rational(1) : Rational(0);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& g : gens) d += g.degree();
    return d;
}

int Monomial::role_count(Role r) const {
    int n = 0;
    for (const auto& g : gens)
        if (g.role == r) ++n;
    return n;
}

std::optional<NormalizedMonomial> normalize(std::vector<Generator> raw) {
    // insertion sort, tracking the Koszul sign of each adjacent swap
    int sign = 1;
    for (size_t i = 1; i < raw.size(); ++i) {
        Generator key = raw[i];
        size_t j = i;
        while (j > 0 && key < raw[j - 1]) {
            if (key.parity() & raw[j - 1].parity()) sign = -sign;
            raw[j] = raw[j - 1];
            --j;
        }
        raw[j] = key;
    }
    for (size_t i = 1; i < raw.size(); ++i)
        if (raw[i] == raw[i - 1] && raw[i].parity() == 1) return std::nullopt;
    return NormalizedMonomial{Monomial{std::move(raw)}, sign};
}

SymElement SymElement::one(const SpaceSpec& sp) {
    SymElement e(sp);
    e.add_term(Monomial{}, Rational(1));
    return e;
}

SymElement SymElement::generator(const SpaceSpec& sp, Generator g) {
    check_generator(sp, g);
    SymElement e(sp);
    e.add_term(Monomial{{g}}, Rational(1));
    return e;
}

SymElement SymElement::monomial(const SpaceSpec& sp, const std::vector<Generator>& gens,
                                const Rational& coeff) {
    for (const auto& g : gens) check_generator(sp, g);
    SymElement e(sp);
    auto nm = normalize(gens);
    if (nm)
        e.add_term(nm->monomial, nm->sign == 1 ? coeff : -coeff);
    return e;
}

void SymElement::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymElement SymElement::operator-() const {
    SymElement r(space_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

static void require_same_space(const SymElement& a, const SymElement& b) {
    if (!a.space().same_dims(b.space()))
        throw std::invalid_argument("SymElement: mixed ambient spaces");
}

SymElement operator+(const SymElement& a, const SymElement& b) {
    require_same_space(a, b);
    SymElement r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

SymElement operator-(const SymElement& a, const SymElement& b) {
    require_same_space(a, b);
    SymElement r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
    return r;
}

SymElement& SymElement::operator+=(const SymElement& o) { return *this = *this + o; }
SymElement& SymElement::operator-=(const SymElement& o) { return *this = *this - o; }

SymElement operator*(const Rational& c, const SymElement& e) {
    SymElement r(e.space());
    if (c.is_zero()) return r;
    for (const auto& [m, k] : e.terms()) r.add_term(m, c * k);
    return r;
}

SymElement sym_product(const SymElement& a, const SymElement& b) {
    require_same_space(a, b);
    SymElement r(a.space());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Generator> word = ma.gens;
            word.insert(word.end(), mb.gens.begin(), mb.gens.end());
            auto nm = normalize(std::move(word));
            if (!nm) continue;
            Rational c = ca * cb;
            r.add_term(nm->monomial, nm->sign == 1 ? c : -c);
        }
    }
    return r;
}

std::optional<int> SymElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

std::map<int, SymElement> SymElement::degree_decompose() const {
    std::map<int, SymElement> out;
    for (const auto& [m, c] : terms_) {
        auto [it, inserted] = out.try_emplace(m.degree(), space_);
        it->second.add_term(m, c);
    }
    return out;
}

SymElement SymElement::component(int p, int q, int k, int l) const {
    SymElement r(space_);
    for (const auto& [m, c] : terms_) {
        if (m.role_count(Role::G) == p && m.role_count(Role::GStar) == q &&
            m.role_count(Role::Theta) == k && m.role_count(Role::ThetaStar) == l)
            r.add_term(m, c);
    }
    return r;
}

std::optional<int> SymElement::uniform_dual_count() const {
    std::optional<int> n;
    for (const auto& [m, c] : terms_) {
        int d = m.role_count(Role::GStar) + m.role_count(Role::ThetaStar);
        if (!n) n = d;
        else if (*n != d) return std::nullopt;
    }
    return n;
}

std::string SymElement::to_string() const {
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
        bool unit_coeff = a.is_one() && !m.empty();
        if (!unit_coeff) out += a.to_string();
        if (!m.empty()) {
            if (!unit_coeff) out += " ";
            for (size_t i = 0; i < m.gens.size(); ++i) {
                if (i) out += "⊙";
                out += m.gens[i].token();
            }
        }
    }
    return out;
}

} // namespace l2b
