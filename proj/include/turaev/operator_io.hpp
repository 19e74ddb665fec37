#pragma once

// Operator files are JSON objects:
//
//   { "d": 2,
//     "R": [[[re, im], ...], ...],     d^2 x d^2, row-major
//     "alpha": [re, im],               optional, default [1, 0]
//     "beta":  [re, im],               optional, default [1, 0]
//     "mu":    [[[re, im], ...], ...]  optional d x d, default identity }
//
// Basis index of e_i (x) e_j is i * d + j.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "turaev/yang_baxter.hpp"

namespace turaev {

struct OperatorFile {
  std::size_t d;
  ComplexMatrix r;
  std::optional<Complex> alpha;
  std::optional<Complex> beta;
  std::optional<ComplexMatrix> mu;

  /// Missing fields take their defaults. Throws SingularMatrix for singular R.
  EnhancedYB to_enhanced(Tolerance tol = {}) const;
};

/// Throws ParseError with a description of the first problem found.
OperatorFile parse_operator_json(std::string_view text);
OperatorFile load_operator_file(const std::filesystem::path& path);

/// Always writes every field, one matrix row per line.
std::string operator_to_json(const EnhancedYB& e);

}  // namespace turaev
