// Small dense exact-rational linear algebra: nullspace and rank via
// Gauss-Jordan elimination.  Intended for systems with at most a few hundred
// columns; larger structured systems use dedicated sparse routines.

#pragma once

#include <cstddef>
#include <vector>

#include "qaoadla/pauli.hpp"

namespace qaoadla {

using RatMatrix = std::vector<std::vector<Rat>>;  // row-major, ragged rows forbidden

/// Basis of {c in Q^ncols : M c = 0}; deterministic (first nonzero pivot,
/// free columns in ascending order).  Rows of m must all have length ncols.
std::vector<std::vector<Rat>> rat_nullspace(RatMatrix m, std::size_t ncols);

/// Rank of m over Q.
std::size_t rat_rank(RatMatrix m, std::size_t ncols);

}  // namespace qaoadla
