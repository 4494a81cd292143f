// Commutants and their centers (exact, over the Pauli coefficient basis),
// isotypical/invariant-subspace decomposition (dense, seeded), bilinear-form
// block typing, natural vs. hidden symmetries, the block-diagonalizing
// transform with reduced operators, and related spectral diagnostics.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qaoadla/dense.hpp"
#include "qaoadla/echelon.hpp"
#include "qaoadla/graph.hpp"
#include "qaoadla/pauli.hpp"

namespace qaoadla {

// -- Commutant --------------------------------------------------------------

/// Exact commutant of a generator set.  Rows are rational combinations of
/// plain Pauli strings; their complex span is the commutant algebra, and the
/// stated dimension is the complex dimension (the defining constraints are
/// real after factoring out i).
struct CommutantResult {
  RatBasis basis;
  std::size_t dim = 0;
};

/// Nullspace of the stacked adjoint maps S -> [S, H_k], computed exactly.
/// Single-string generator sets take a direct combinatorial path; otherwise a
/// sparse rational elimination runs over the strings that fail to commute
/// termwise.  Requires n <= 8.  `n` may be omitted when gens is nonempty.
CommutantResult commutant(const std::vector<RatVec>& gens, int n = -1);

/// Center Z(C): elements of C commuting with every element of C, solved in
/// C's own coordinates; returned as echelon rows over the Pauli basis.
RatBasis commutant_center(const CommutantResult& c);

// -- Isotypical decomposition ----------------------------------------------

enum class BilinearType { Orthogonal, Symplectic, Unitary, Undetermined };
std::string bilinear_name(BilinearType t);

struct IsotypicalBlock {
  int d = 0;       // irreducible block dimension
  int m = 0;       // multiplicity
  Mat projector;   // orthogonal projector of rank d*m
  BilinearType type = BilinearType::Undetermined;
};

struct DecompositionReport {
  std::size_t commutant_dim = 0;
  std::size_t center_dim = 0;  // == blocks.size()
  std::vector<IsotypicalBlock> blocks;
  std::uint64_t seed_used = 0;
};

/// Diagonalize a seeded random self-adjoint element of Z(C); eigenvalue
/// clusters (relative tolerance 1e-8) give the minimal isotypical projectors;
/// d*m = rank, m^2 = dim(P C P); integer recovery within 1e-6, reseeding up
/// to 5 times on failure.  Blocks are sorted by descending d, then by overlap
/// with the +1 eigenspace of X^(x)n, then by first support index.
DecompositionReport isotypical_decomposition(const std::vector<RatVec>& gens,
                                             std::uint64_t seed = 0);

/// Bilinear classification of an irreducibly-acting block: solve
/// S H_j + H_j^t S = 0 over all j (SVD nullspace, cutoff 1e-8 * sigma_max).
/// No solution -> Unitary; one -> Orthogonal (symmetric S) or Symplectic
/// (skew S), requiring a dominance ratio > 1e6 and S S-bar = +-alpha 1.
/// Throws std::runtime_error on a nullspace of dimension >= 2 (the
/// irreducibility precheck must have failed) or an ambiguous S.
BilinearType block_bilinear_type(const std::vector<Mat>& block_gens);

/// Isometry whose columns span the range of an orthogonal projector.
Mat projector_isometry(const Mat& projector);

/// Fill in blocks[].type: multiplicity-one blocks get the bilinear test on
/// the restricted generators (after an irreducibility precheck); others stay
/// Undetermined.
void classify_block_types(DecompositionReport& rep, const std::vector<RatVec>& gens);

// -- Natural vs. hidden symmetries ------------------------------------------

struct NaturalSymmetryReport {
  std::size_t nat_dim = 0;       // dim of the span of the symmetry-group ops
  std::size_t hidden_dim = 0;    // commutant_dim - nat_dim
  std::size_t commutant_dim = 0; // dim of the two-generator commutant
  bool contained = false;        // symmetry span inside the commutant
  CRatBasis basis;
};

/// Span of {zeta[sigma], X^(x)n zeta[sigma]} over the automorphism group,
/// reduced exactly, compared against the commutant of the two summed
/// generators.
NaturalSymmetryReport natural_symmetries(const Graph& g);

/// Exact Pauli expansion of the vertex-permutation operator zeta[sigma].
CRatVec zeta_pauli(const Permutation& sigma);

// -- Block-diagonalizing transform ------------------------------------------

/// Signed image (+1/-1, string) of an even-parity string under the
/// block-diagonalizing conjugation.  The output's first letter is I when both
/// blocks receive the same sign and Z when they receive opposite signs.
/// Throws if #Y + #Z of p is odd.
std::pair<int, PauliString> lambda_transform(const PauliString& p);

/// Termwise transform stripping qubit 1: returns the operators induced on
/// the +1 and -1 eigenblocks of X^(x)n, each on n-1 qubits.
std::pair<RatVec, RatVec> reduce_to_blocks(const RatVec& v);

// -- Diagnostics ------------------------------------------------------------

/// For odd n: every block projector must map onto another one under
/// conjugation by Z^(x)n (tolerance 1e-8).  Returns the verdict.
bool odd_n_pairing_check(const DecompositionReport& rep, int n);

struct OneDimBlock {
  Eigen::VectorXcd vec;        // spanning vector, scaled to largest entry 1
  std::vector<double> beta;    // eigenvalue per generator, in generator order
};

/// Spanning vectors and eigenvalue tuples of all 1-dimensional blocks.
std::vector<OneDimBlock> one_dim_eigenvectors(const DecompositionReport& rep,
                                              const std::vector<RatVec>& gens);

}  // namespace qaoadla
