// Exact statevector simulation of the ansatz circuits: every generator is a
// sum of pairwise-commuting Pauli terms, so each layer factors into exact
// single-string exponentials (diagonal phase masks, single-qubit rotations,
// or cos/sin string applications) with no step-size approximation.  Includes
// the maxcut cost, analytic reverse-sweep gradients with a finite-difference
// oracle, seeded gradient-variance surveys, and the closed-form variance
// prediction for deep circuits on archetypal graphs.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qaoadla/closure.hpp"
#include "qaoadla/graph.hpp"

namespace qaoadla {

struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amp;  // index bit (n-u) holds qubit u

  double squared_norm() const;
};

/// Uniform superposition 2^{-n/2} sum over all basis states; 1 <= n <= 16.
StateVector prepare_plus(int n);

/// Materialized circuit: the ansatz generator list in fixed order plus the
/// layer count.  Flat parameter index = layer * generator_count + generator.
struct Circuit {
  Graph graph;
  std::vector<RatVec> gens;
  int layers = 1;

  std::size_t param_count() const { return gens.size() * static_cast<std::size_t>(layers); }
};

Circuit make_circuit(const AnsatzSpec& spec, int layers);

/// In-place exp(-i theta H) for one generator H = sum of commuting Pauli
/// terms; throws std::invalid_argument if two terms fail to commute.
void apply_generator(StateVector& s, const RatVec& gen, double theta);

/// One layer: the last generator in the list acts on the state first (the
/// written product's rightmost factor), problem terms before mixers.
void apply_layer(StateVector& s, const Circuit& c, const double* layer_params);

/// Full circuit applied to |+>^n; layer 0 acts first.
StateVector run_circuit(const Circuit& c, const std::vector<double>& params);

/// <psi| sum_edges Z_u Z_v |psi>, optionally divided by the edge count.
double cost(const StateVector& s, const Graph& g, bool normalize = false);

/// Exact gradient for every flat parameter via one reverse sweep.
std::vector<double> gradient_all(const Circuit& c, const std::vector<double>& params,
                                 bool normalize = false);

/// Single-index gradient (convenience wrapper over the full sweep).
double gradient(const Circuit& c, const std::vector<double>& params,
                std::size_t index, bool normalize = false);

/// Central finite-difference oracle.
double gradient_fd(const Circuit& c, std::vector<double> params, std::size_t index,
                   bool normalize = false, double step = 1e-5);

struct VarianceOptions {
  int layers = 1;
  int samples = 100;
  std::uint64_t seed = 0;
  bool normalize = false;
  double half_width = 3.14159265358979323846;  // parameters drawn from [-w, w]
};

struct GradientStats {
  std::vector<double> mean;      // per flat parameter
  std::vector<double> variance;  // unbiased, per flat parameter
  double mean_variance = 0;      // average of the per-parameter variances
  int samples = 0;
  std::uint64_t seed = 0;
  bool normalized = false;
};

/// Draw i.i.d. uniform parameter vectors (one RNG stream per sample index,
/// so results are independent of evaluation order) and collect gradient
/// statistics for every flat parameter.
GradientStats variance_survey(const AnsatzSpec& spec, const VarianceOptions& opt);

struct Cor1Prediction {
  double variance = 0;  // 4 d^2 |E| / ((d^2 - 4)(d + 2)) with d = 2^n
  double bound = 0;     // 4 n^2 / 2^n
};

/// Deep-circuit variance prediction; requires a connected non-bipartite
/// non-cycle graph with n > 3 (throws otherwise).
Cor1Prediction cor1_prediction(const Graph& g);

/// Deterministic cubic circulant on an even n >= 4: ring edges plus
/// antipodal chords (n = 4 gives the complete graph).
Graph circulant_cubic(int n);

/// Least-squares slope of y against x (sizes must match, >= 2 points).
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qaoadla
