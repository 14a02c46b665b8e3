#pragma once

#include "l2b/space.hpp"

#include <map>
#include <optional>
#include <utility>

namespace l2b {

/// Canonical graded-symmetric monomial: generators sorted ascending in the
/// global order (gs < ts < t < g, index-minor), odd generators squarefree.
struct Monomial {
    std::vector<Generator> gens;

    int degree() const;
    int parity() const { return (-degree()) & 1; }
    int shifted_parity() const { return (degree() + 3) & 1; }
    /// Number of factors with the given role.
    int role_count(Role r) const;
    bool empty() const { return gens.empty(); }

    auto operator<=>(const Monomial&) const = default;
};

/// Result of sorting a raw generator word into canonical order.
struct NormalizedMonomial {
    Monomial monomial;
    int sign;  // +1 or -1
};

/// Sorts a generator word into the global order, accumulating the Koszul sign
/// (-1)^{|a||b|} per adjacent transposition.  Returns nullopt when an odd
/// generator repeats (odd squares vanish).
std::optional<NormalizedMonomial> normalize(std::vector<Generator> raw);

/// Element of the shifted symmetric algebra: finite rational combination of
/// canonical monomials.  Zero coefficients are never stored.
class SymElement {
public:
    SymElement() = default;
    explicit SymElement(SpaceSpec sp) : space_(std::move(sp)) {}

    static SymElement zero(const SpaceSpec& sp) { return SymElement(sp); }
    static SymElement one(const SpaceSpec& sp);
    static SymElement generator(const SpaceSpec& sp, Generator g);
    /// Scalar * product of the given generators (normalized; may come out zero).
    static SymElement monomial(const SpaceSpec& sp, const std::vector<Generator>& gens,
                               const Rational& coeff = Rational(1));

    const SpaceSpec& space() const { return space_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    SymElement operator-() const;
    friend SymElement operator+(const SymElement& a, const SymElement& b);
    friend SymElement operator-(const SymElement& a, const SymElement& b);
    SymElement& operator+=(const SymElement& o);
    SymElement& operator-=(const SymElement& o);
    friend SymElement operator*(const Rational& c, const SymElement& e);

    bool operator==(const SymElement& o) const { return same(o); }

    /// Homogeneous degree, or nullopt for 0 / inhomogeneous elements.
    std::optional<int> degree() const;
    bool is_homogeneous() const { return is_zero() || degree().has_value(); }

    /// Splits into homogeneous components keyed by degree. Zero -> empty map.
    std::map<int, SymElement> degree_decompose() const;

    /// Sub-sum of monomials with exactly p G-, q GStar-, k Theta-, l ThetaStar-factors.
    SymElement component(int p, int q, int k, int l) const;

    /// Number of dual-role factors, when uniform across all monomials.
    std::optional<int> uniform_dual_count() const;

    /// Canonical text rendering: terms in monomial order, coefficients as
    /// reduced fractions, factors joined with the symmetric-product sign.
    std::string to_string() const;

private:
    SpaceSpec space_;
    std::map<Monomial, Rational> terms_;
    bool same(const SymElement& o) const {
        return space_.same_dims(o.space_) && terms_ == o.terms_;
    }
};

/// Graded-symmetric product (bilinear, Koszul-signed). Rejects mixed ambient spaces.
SymElement sym_product(const SymElement& a, const SymElement& b);

inline std::map<int, SymElement> degree_decompose(const SymElement& e) { return e.degree_decompose(); }
inline SymElement component(const SymElement& e, int p, int q, int k, int l) {
    return e.component(p, q, k, l);
}

} // namespace l2b
