// Closed-form classification of the free-mixer Lie algebra by graph family:
// family tag, isomorphism type, exact dimension, and the explicit
// Pauli-string basis membership predicate for each family.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qaoadla/graph.hpp"
#include "qaoadla/pauli.hpp"

namespace qaoadla {

enum class Family {
  Path,
  Cycle,
  BipartiteEvenEven,  // both parts of even size
  BipartiteEvenOdd,   // parts of opposite parity
  BipartiteOddOdd,    // both parts odd
  Archetypal,         // connected, non-bipartite, not a cycle
};

std::string family_name(Family f);

struct FamilyReport {
  Family family;
  std::string iso_type;    // e.g. "so(8)", "sp(8)⊕sp(8)", "su(16)⊕su(16)"
  std::uint64_t dim_free;  // exact closed-form dimension
  std::vector<int> part1, part2;  // bipartition (bipartite families only)
};

/// Classify a connected graph (n >= 2) into its family with the closed-form
/// free-algebra dimension:
///   Path     -> 2n^2 - n            Cycle    -> 4n^2 - 2n
///   even-even-> 2^{2n-2} - 2^{n-1}  even-odd -> 2^{2n-2} - 1
///   odd-odd  -> 2^{2n-2} + 2^{n-1}  Archetypal -> 2^{2n-1} - 2
/// Throws std::invalid_argument on disconnected input or n < 2.
FamilyReport classify(const Graph& g);

/// True iff iP belongs to the family's explicit Pauli-string basis:
///   always: #Y + #Z even, #I != n, #X != n;
///   bipartite families additionally: #X + #Y|_{V1} + #Z|_{V1} odd
///     (V1 = part containing vertex 1);
///   path: single X, or a contiguous {Y,Z} X..X {Y,Z} window with I outside;
///   cycle: those two patterns plus their X^(x)n-complements
///     (single I among X, and {Y,Z} I..I {Y,Z} window with X outside).
/// Throws on qubit-count mismatch.
bool free_basis_predicate(const Graph& g, const PauliString& p);

/// Closed-form natural-algebra dimension where known: n^2 for paths,
/// 3(n-1)+2 for cycles, and for complete graphs K_n (n >= 3)
/// C(n+3,3)/2 - 2 (n odd) or C(n+3,3)/2 + n/4 - 3/2 (n even);
/// std::nullopt otherwise.
std::optional<std::uint64_t> nat_dim_closed_form(const Graph& g);

}  // namespace qaoadla
