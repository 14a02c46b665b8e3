#pragma once

#include "l2b/bracket.hpp"
#include "l2b/sym.hpp"

#include <map>
#include <random>
#include <vector>

namespace l2b::testutil {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng) {
    int num = rand_int(rng, -4, 4);
    int den = rand_int(rng, 1, 3);
    return Rational(num, den);
}

inline Rational rand_nonzero_rational(Rng& rng) {
    Rational r = rand_rational(rng);
    return r.is_zero() ? Rational(1) : r;
}

/// All canonical monomials over sp with at most max_len generators.
inline std::vector<Monomial> enumerate_monomials(const SpaceSpec& sp, int max_len) {
    std::vector<Generator> universe;
    for (Role r : {Role::GStar, Role::ThetaStar, Role::Theta, Role::G})
        for (int i = 0; i < sp.dim_of(r); ++i) universe.push_back({r, i});
    std::vector<Monomial> out{Monomial{}};
    std::vector<Monomial> frontier{Monomial{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            for (const auto& g : universe) {
                if (!m.gens.empty() && g < m.gens.back()) continue;  // keep sorted
                if (!m.gens.empty() && g == m.gens.back() && g.parity() == 1) continue;
                Monomial ext = m;
                ext.gens.push_back(g);
                next.push_back(std::move(ext));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

/// Random homogeneous element: picks a degree bucket and combines a few
/// monomials of that degree with random coefficients.  Never returns an
/// element mixing degrees; may return zero.
inline SymElement rand_homogeneous(Rng& rng, const SpaceSpec& sp, int max_len = 4,
                                   int max_terms = 3) {
    static std::map<std::pair<int, int>, std::map<int, std::vector<Monomial>>> cache;
    auto key = std::make_pair(sp.dim_g, sp.dim_theta);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::map<int, std::vector<Monomial>> buckets;
        for (auto& m : enumerate_monomials(sp, 4))
            if (!m.gens.empty()) buckets[m.degree()].push_back(m);
        it = cache.emplace(key, std::move(buckets)).first;
    }
    auto& buckets = it->second;
    int pick = rand_int(rng, 0, static_cast<int>(buckets.size()) - 1);
    auto bit = buckets.begin();
    std::advance(bit, pick);
    const auto& pool = bit->second;
    SymElement e(sp);
    int terms = rand_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        const Monomial& m = pool[rand_int(rng, 0, static_cast<int>(pool.size()) - 1)];
        if (static_cast<int>(m.gens.size()) <= max_len) e.add_term(m, rand_rational(rng));
    }
    return e;
}

inline SymElement rand_homogeneous_nonzero(Rng& rng, const SpaceSpec& sp) {
    for (int tries = 0; tries < 50; ++tries) {
        SymElement e = rand_homogeneous(rng, sp);
        if (!e.is_zero()) return e;
    }
    return SymElement::generator(sp, {Role::G, 0});
}

/// Random nonzero element with every monomial of fixed dual arity and fixed
/// total degree (needed by the composition identity).
inline SymElement rand_fixed_arity(Rng& rng, const SpaceSpec& sp, int dual_count,
                                   int max_len = 4) {
    std::vector<Monomial> pool;
    for (auto& m : enumerate_monomials(sp, max_len)) {
        if (m.gens.empty()) continue;
        if (m.role_count(Role::GStar) + m.role_count(Role::ThetaStar) == dual_count)
            pool.push_back(m);
    }
    std::map<int, std::vector<Monomial>> by_degree;
    for (auto& m : pool) by_degree[m.degree()].push_back(m);
    for (int tries = 0; tries < 80; ++tries) {
        auto bit = by_degree.begin();
        std::advance(bit, rand_int(rng, 0, static_cast<int>(by_degree.size()) - 1));
        SymElement e(sp);
        int terms = rand_int(rng, 1, 2);
        for (int t = 0; t < terms; ++t) {
            const auto& v = bit->second;
            e.add_term(v[rand_int(rng, 0, static_cast<int>(v.size()) - 1)], rand_rational(rng));
        }
        if (!e.is_zero()) return e;
    }
    throw std::runtime_error("rand_fixed_arity: could not build element");
}

/// Random primal-side homogeneous element (arguments for derived maps).
inline SymElement rand_primal(Rng& rng, const SpaceSpec& sp, bool allow_products = true) {
    std::vector<Generator> universe;
    for (Role r : {Role::Theta, Role::G})
        for (int i = 0; i < sp.dim_of(r); ++i) universe.push_back({r, i});
    if (universe.empty()) throw std::runtime_error("rand_primal: empty space");
    if (!allow_products || rand_int(rng, 0, 2) < 2) {
        // single generator with coefficient
        SymElement e(sp);
        e.add_term(Monomial{{universe[rand_int(rng, 0, static_cast<int>(universe.size()) - 1)]}},
                   rand_nonzero_rational(rng));
        return e;
    }
    // product of two generators, kept homogeneous by construction
    Generator a = universe[rand_int(rng, 0, static_cast<int>(universe.size()) - 1)];
    std::vector<Generator> same_degree;
    for (const auto& g : universe)
        if (g.degree() == a.degree()) same_degree.push_back(g);
    Generator b = same_degree[rand_int(rng, 0, static_cast<int>(same_degree.size()) - 1)];
    SymElement e = sym_product(SymElement::generator(sp, a), SymElement::generator(sp, b));
    if (e.is_zero()) return SymElement::generator(sp, a);
    return rand_nonzero_rational(rng) * e;
}

} // namespace l2b::testutil
