#pragma once

#include "l2b/linalg.hpp"
#include "l2b/sym.hpp"

#include <functional>

namespace l2b {

/// Element of the classical exterior algebra over the direct sum g (+) theta.
/// Generators are the primal-role basis vectors of the ambient space; every
/// wedge factor anticommutes, independent of the shifted grading used by the
/// symmetric algebra (this is the unshifted calculus of polyvectors on the
/// semidirect sum).
class WedgeElement {
public:
    WedgeElement() = default;
    explicit WedgeElement(SpaceSpec sp) : space_(std::move(sp)) {}

    static WedgeElement zero(const SpaceSpec& sp) { return WedgeElement(sp); }
    static WedgeElement one(const SpaceSpec& sp);
    static WedgeElement generator(const SpaceSpec& sp, Generator g);
    /// Basis vector of g (role G) as a degree-1 element.
    static WedgeElement basis_g(const SpaceSpec& sp, int i);
    static WedgeElement basis_theta(const SpaceSpec& sp, int a);
    /// Vector of g (+) theta from coordinate lists.
    static WedgeElement vector(const SpaceSpec& sp, const RatVec& g_coords, const RatVec& t_coords);

    const SpaceSpec& space() const { return space_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_word(const std::vector<Generator>& word, const Rational& c);
    void add_term(const Monomial& m, const Rational& c);

    WedgeElement operator-() const;
    friend WedgeElement operator+(const WedgeElement& a, const WedgeElement& b);
    friend WedgeElement operator-(const WedgeElement& a, const WedgeElement& b);
    WedgeElement& operator+=(const WedgeElement& o) { return *this = *this + o; }
    WedgeElement& operator-=(const WedgeElement& o) { return *this = *this - o; }
    friend WedgeElement operator*(const Rational& c, const WedgeElement& e);
    bool operator==(const WedgeElement& o) const {
        return space_.same_dims(o.space_) && terms_ == o.terms_;
    }

    /// Exterior degree when uniform across terms; nullopt for 0 or mixed.
    std::optional<int> wedge_degree() const;

    /// Monomials whose factors all lie in theta, in the given exterior degree.
    WedgeElement project_theta(int degree) const;
    /// Monomials with exactly (ng, nt) factors from g and theta.
    WedgeElement bidegree_part(int ng, int nt) const;

    std::string to_string() const;

private:
    SpaceSpec space_;
    std::map<Monomial, Rational> terms_;
};

WedgeElement wedge(const WedgeElement& a, const WedgeElement& b);

/// Covector on g (+) theta, i.e. an element of g* (+) theta*.
struct Covector {
    RatVec on_g;
    RatVec on_theta;

    static Covector zero(const SpaceSpec& sp) {
        return {RatVec(sp.dim_g), RatVec(sp.dim_theta)};
    }
    static Covector basis_gstar(const SpaceSpec& sp, int i);
    static Covector basis_thetastar(const SpaceSpec& sp, int a);
    Rational eval(const Generator& g) const;
};

/// Interior product: iota_a(w1 ^ ... ^ wk) = sum_i (-1)^{i-1} <w_i,a> w1 ^ ...
/// (omit w_i) ... ^ wk.
WedgeElement contract(const Covector& alpha, const WedgeElement& w);

/// <w, alpha ^ beta> = iota_beta(iota_alpha(w)) for w of exterior degree 2.
Rational pair2(const WedgeElement& w, const Covector& alpha, const Covector& beta);

/// Extends generator images to a derivation of the stated parity
/// (0: D(a^b) = Da^b + a^Db; 1: D(a^b) = Da^b + (-1)^{deg a} a^Db).
WedgeElement apply_derivation(const WedgeElement& w, int parity,
                              const std::function<WedgeElement(const Generator&)>& image);

} // namespace l2b
