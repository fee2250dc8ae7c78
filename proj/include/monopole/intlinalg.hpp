#pragma once

#include <optional>
#include <vector>

#include "monopole/numeric.hpp"

namespace monopole {

using MatZ = std::vector<std::vector<Int>>;
using MatQ = std::vector<std::vector<Rat>>;

// Solve A x = b over the rationals.  Returns one solution (free variables set
// to zero) or empty when the system is inconsistent.
std::optional<std::vector<Rat>> solve_rational(MatQ A, std::vector<Rat> b);

// Solve A x = b over the integers by diagonalising A with unimodular row and
// column operations.  Returns one integral solution or empty when none exists
// (covers both inconsistency and consistent-but-non-integral cosets).
std::optional<std::vector<Int>> solve_integer(MatZ A, std::vector<Int> b);

}  // namespace monopole
