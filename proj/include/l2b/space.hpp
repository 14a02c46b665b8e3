#pragma once

#include "l2b/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace l2b {

/// The four generator roles of the shifted symmetric algebra built from a
/// pair of vector spaces (g, theta) and their duals.  The enum order is the
/// global generator order used for canonical monomials.
enum class Role : uint8_t { GStar = 0, ThetaStar = 1, Theta = 2, G = 3 };

constexpr const char* role_token(Role r) {
    switch (r) {
        case Role::GStar: return "gs";
        case Role::ThetaStar: return "ts";
        case Role::Theta: return "t";
        case Role::G: return "g";
    }
    return "?";
}

/// Degree of a role under the shift convention: g and theta* sit in degree -2,
/// theta and g* in degree -1.
constexpr int role_degree(Role r) {
    switch (r) {
        case Role::G: return -2;
        case Role::ThetaStar: return -2;
        case Role::Theta: return -1;
        case Role::GStar: return -1;
    }
    return 0;
}

/// Parity = degree mod 2. Odd generators square to zero in the symmetric algebra.
constexpr int role_parity(Role r) { return (-role_degree(r)) & 1; }

constexpr bool is_primal(Role r) { return r == Role::G || r == Role::Theta; }
constexpr bool is_dual(Role r) { return !is_primal(r); }

/// Dual partner under the dual-basis pairing.
constexpr Role dual_role(Role r) {
    switch (r) {
        case Role::G: return Role::GStar;
        case Role::GStar: return Role::G;
        case Role::Theta: return Role::ThetaStar;
        case Role::ThetaStar: return Role::Theta;
    }
    return r;
}

/// Dimensions of the two underlying spaces, with optional basis labels.
struct SpaceSpec {
    int dim_g = 0;
    int dim_theta = 0;
    std::vector<std::string> labels_g;      // optional, unique when present
    std::vector<std::string> labels_theta;  // optional, unique when present

    SpaceSpec() = default;
    SpaceSpec(int g, int theta) : dim_g(g), dim_theta(theta) {}
    SpaceSpec(int g, int theta, std::vector<std::string> lg, std::vector<std::string> lt)
        : dim_g(g), dim_theta(theta), labels_g(std::move(lg)), labels_theta(std::move(lt)) {}

    int dim_of(Role r) const {
        return (r == Role::G || r == Role::GStar) ? dim_g : dim_theta;
    }
    bool same_dims(const SpaceSpec& o) const {
        return dim_g == o.dim_g && dim_theta == o.dim_theta;
    }
    /// Throws std::invalid_argument when labels are non-unique or mis-sized.
    void validate() const;

    bool operator==(const SpaceSpec& o) const = default;
};

/// A basis vector of one of the four roles.
struct Generator {
    Role role;
    int index;

    int degree() const { return role_degree(role); }
    int parity() const { return role_parity(role); }
    /// degree + 3 mod 2: the parity governing the shifted antisymmetry signs.
    int shifted_parity() const { return (degree() + 3) & 1; }

    auto operator<=>(const Generator&) const = default;

    std::string token() const { return role_token(role) + std::to_string(index); }
};

inline int degree_of(const Generator& gen) { return gen.degree(); }

/// Checks index bounds against the ambient space.
void check_generator(const SpaceSpec& sp, const Generator& gen);

/// Dual-basis pairing <v, eps>: 1 on dual partners with equal index, else 0.
/// v must be primal and eps dual; throws std::invalid_argument otherwise.
Rational pairing(const SpaceSpec& sp, const Generator& v, const Generator& eps);

} // namespace l2b
