#pragma once

#include "l2b/linalg.hpp"
#include "l2b/space.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace l2b {

/// Input rejected by the structure-file schema, with a field path in the message.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// On-disk description of structure data: dimensions plus named tensors of
/// exact rationals.  Tensors are optional (absent means zero); unknown keys
/// are rejected.
struct StructureFile {
    SpaceSpec space;
    std::optional<RatMat> phi;           // [g][t]
    std::optional<Tensor3> bracket;      // [g][g][g], skew in (0,1)
    std::optional<Tensor3> action;       // [g][t][t]
    std::optional<Tensor4> homotopy_h;   // [g][g][g][t], alternating in (0,1,2)
    std::optional<Tensor3> delta;        // [g][g][t]
    std::optional<Tensor3> omega;        // [t][t][t], skew in (1,2)
    std::optional<Tensor4> eta;          // [t][t][t][g], alternating in (0,1,2)
    std::optional<Tensor3> dual_bracket; // [t][t][t], skew in (0,1)
    std::optional<Tensor3> dual_action;  // [t][g][g]
    std::optional<std::string> element;  // rendering in the expression grammar

    bool has_any_tensor() const {
        return phi || bracket || action || homotopy_h || delta || omega || eta || dual_bracket ||
               dual_action;
    }
};

/// Strict parse; exact rational strings only, never floats.
StructureFile parse_structure_file(const std::string& text);

/// Canonical serialization: fixed key order, reduced fractions, all-zero
/// tensors omitted.  parse(serialize(f)) == canonicalized f byte for byte.
std::string serialize_structure_file(const StructureFile& f);

} // namespace l2b
