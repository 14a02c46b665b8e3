#pragma once

#include "l2b/crossed.hpp"
#include "l2b/structure_file.hpp"

namespace l2b {

/// Parses the tiny element grammar over the given space: rational
/// coefficients, generator tokens g0.., t0.., gs0.., ts0.., products joined
/// by '*' (or juxtaposition), sums with '+'/'-'.  The named elements
/// eps, l and c refer to the file's assembled tensors when a file is given.
/// Throws ParseError with a character position on malformed input.
SymElement parse_element_expr(const SpaceSpec& sp, const std::string& text,
                              const StructureFile* file = nullptr);

/// Structure data assembled from a file (absent tensors are zero).
Lie2AlgebraData algebra_from_file(const StructureFile& f);
Lie2CoalgebraData coalgebra_from_file(const StructureFile& f);
/// Crossed-module data with the source bracket induced by phi and the action.
InducedCrossedModule primal_cm_from_file(const StructureFile& f);
InducedCrossedModule dual_cm_from_file(const StructureFile& f);

/// Entry point used by the binary; returns the process exit code
/// (0 pass/success, 1 verification failure, 2 input error).
int run_cli(int argc, const char* const* argv);

} // namespace l2b
