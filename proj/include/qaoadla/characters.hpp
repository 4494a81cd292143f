// Cycle-type character of the natural symmetry group (vertex permutations
// together with the global bit flip), multiplicity tables via Schur
// orthogonality, abelian character tables, combinatorial sum identities, and
// dense cross-checks of multiplicities against group-average projectors and
// block dimensions.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qaoadla/graph.hpp"

namespace qaoadla {

/// Trace of the natural-symmetry operator for the element (flip^e, sigma):
/// 2^{c(sigma)} when e = 0 or every cycle of sigma has even length, else 0.
std::int64_t chi_nat(bool flip, const Permutation& sigma);

/// Multiplicity of the trivial character in the natural character:
/// (1 / (2 |Aut|)) * sum over Aut of 2^{c(sigma)} * (1 + [all cycles even]).
/// Exact integer arithmetic; throws if the sum is not divisible.
std::int64_t trivial_multiplicity(const Graph& g);

/// One row per irreducible character of the group: values aligned with
/// grp.elements order.  Only abelian groups are supported (all irreducibles
/// are 1-dimensional); throws std::invalid_argument otherwise.
std::vector<std::vector<std::complex<double>>> abelian_characters(const PermGroup& grp);

struct MultiplicityEntry {
  std::string nu1;               // "t" (trivial) or "s" (sign) on the flip factor
  std::string nu2;               // label of the vertex-group character
  std::int64_t multiplicity = 0;
  int degree = 1;                // always 1 in the abelian case
};

struct MultiplicityTable {
  bool full = false;             // true when the vertex group is abelian
  std::size_t group_order = 0;   // |Aut(G)|
  std::vector<MultiplicityEntry> entries;  // trivial entry only when !full
};

/// Abelian automorphism group: all multiplicities via Schur orthogonality
/// (characters labelled "c0" = trivial, "c1", ... in enumeration order; for
/// order-2 groups the labels are "t" and "s").  Nonabelian: the trivial
/// entry only.
MultiplicityTable multiplicity_table(const Graph& g);

struct F2Row {
  int n = 0;
  std::int64_t sum_plain = 0;    // sum over S_n of 2^{c}
  std::int64_t expect_plain = 0; // (n+1)!
  std::int64_t sum_even = 0;     // sum over S_n of 2^{c} * [all cycles even]
  std::int64_t expect_even = 0;  // n! for even n, 0 for odd n
  bool ok = false;
};

/// Brute-force verification of the two character-sum identities for
/// 1 <= n <= limit_n (limit_n <= 8).
std::vector<F2Row> f2_identities(int limit_n);

/// Dense cross-check (n <= 5): rank of the group-average projector
/// (1/|G|) sum conj(chi_nu(g)) Upsilon(g), one value per table entry, which
/// must reproduce the multiplicities.
std::vector<std::int64_t> dense_multiplicities(const Graph& g, const MultiplicityTable& table);

struct DualityReport {
  bool ok = false;
  bool full = false;                    // full multiset comparison vs membership only
  std::vector<std::int64_t> mult_side;  // multiplicities (repeated by degree), sorted
  std::vector<std::int64_t> block_side; // block dims of the symmetrized full algebra, sorted
};

/// Multiplicities-vs-dimensions duality: the multiset of multiplicities
/// (each repeated by its degree) must equal the multiset of block dimensions
/// of the symmetrized full algebra's decomposition.  Nonabelian groups check
/// membership of the trivial multiplicity only.  Requires n <= 5.
DualityReport duality_check(const Graph& g);

}  // namespace qaoadla
