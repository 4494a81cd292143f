// Generator construction for the four ansatz variants, Lie-closure
// computation, the three symmetrization maps, the symmetrized algebras, the
// inclusion-chain check, and centers.
//
// Algebra elements are real combinations of i*(Pauli string) with the i kept
// implicit (see pauli.hpp); echelon spans are over Q.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaoadla/echelon.hpp"
#include "qaoadla/graph.hpp"
#include "qaoadla/pauli.hpp"

namespace qaoadla {

enum class Ansatz { Free, Standard, Orbit, Natural };

std::string ansatz_name(Ansatz a);
std::optional<Ansatz> ansatz_from_name(const std::string& s);

/// A graph together with the ansatz variant and optional extra iZ_w
/// generators (vertex list, 1-indexed).
struct AnsatzSpec {
  Graph graph;
  Ansatz kind = Ansatz::Free;
  std::vector<int> extra_z;
};

/// Result of a closure (or of a symmetrized-span construction, depth 0).
struct AlgebraResult {
  RatBasis basis;
  std::size_t dim = 0;              // == basis.dim()
  std::size_t generator_count = 0;
  int depth = 0;                    // max nested-bracket depth inserted
};

/// Generators per variant:
///   Free     -> {iX_v : v} then {iZ_uZ_v : edges};
///   Standard -> {i sum X_v, i sum Z_uZ_v};
///   Orbit    -> one summed generator per vertex orbit, then per edge orbit;
///   Natural  -> the full natural-algebra basis (downstream uniformity).
/// extra_z appends individual iZ_w (not supported for Natural).
/// Standard/Orbit/Natural require a connected graph.
std::vector<RatVec> ansatz_generators(const AnsatzSpec& spec);

/// Breadth-first Lie closure: seed an echelon basis with the generators, then
/// bracket every newly inserted row against every generator until stable
/// (left-normed brackets suffice by the Jacobi identity).  Hard cap 4^n - 1
/// rows; exceeding it is an internal error.
AlgebraResult lie_closure(const std::vector<RatVec>& gens);

enum class SymMode { Z2, Aut, Nat };

/// tau_Z2: drop terms anticommuting with X^(x)n (keep #Y+#Z even);
/// tau_aut: average over vertex-position permutations of the group;
/// tau_nat: both (order-independent).
RatVec symmetrize(const RatVec& m, SymMode mode, const PermGroup& grp);

/// Natural algebra: span of tau_nat over the free-closure basis rows.
AlgebraResult natural_basis(const Graph& g);
AlgebraResult natural_basis(const Graph& g, const AlgebraResult& free_alg,
                            const PermGroup& grp);

/// Symmetrized full algebra: span of tau_nat(iP) over all 4^n Pauli strings
/// (identity included); equals the commutant-invariant span.
RatBasis u_nat_basis(const Graph& g);
RatBasis u_nat_basis(const Graph& g, const PermGroup& grp);

/// (I^(x)n + sign*X^(x)n)/2 as a two-term vector (sign = +1 or -1).
RatVec half_projector(int n, int sign);

/// Inclusion chain standard <= orbit <= natural <= free, with dimensions; for
/// archetypal (connected non-bipartite non-cycle) graphs additionally checks
/// span(natural basis + both half projectors) == symmetrized full algebra.
struct HierarchyReport {
  std::size_t dim_std = 0, dim_orbit = 0, dim_nat = 0, dim_free = 0;
  bool std_in_orbit = false, orbit_in_nat = false, nat_in_free = false;
  bool chain_holds = false;
  std::optional<bool> projector_span_identity;  // archetypal graphs only
  std::size_t dim_u_nat = 0;                    // filled when that check runs
};
HierarchyReport hierarchy_check(const Graph& g);

/// Center = algebra intersected with its commutant (the commutant basis comes
/// from the symmetry-analysis module for the same generators).
struct CenterResult {
  std::size_t dim = 0;
  std::vector<RatVec> basis;
};
CenterResult center_of_algebra(const AlgebraResult& alg, const RatBasis& commutant);

}  // namespace qaoadla
