// Dense 2^n x 2^n materialization of Pauli vectors and permutation matrices,
// plus small dense utilities shared by the spectral machinery and tests.
//
// Index convention: qubit 1 is the most significant bit of a computational
// basis index, matching the Kronecker order A_1 (x) A_2 (x) ... (x) A_n; the
// basis ket |b_1 b_2 ... b_n> has index sum_u b_u 2^{n-u}.

#pragma once

#include <Eigen/Dense>
#include <string>

#include "qaoadla/graph.hpp"
#include "qaoadla/pauli.hpp"

namespace qaoadla {

using Mat = Eigen::MatrixXcd;

/// Hermitian matrix of the string W(x,z) = i^{|x&z|} X^x Z^z.
Mat dense_pauli(const PauliString& p);

/// Dense Hermitian matrix of a real/complex combination of strings.
Mat dense_vec(const RatVec& v);
Mat dense_vec(const CRatVec& v);
Mat dense_vec(const FloatVec& v);

/// Permutation matrix zeta[sigma]: |x_1..x_n> -> |y> with y_{sigma(u)} = x_u.
Eigen::MatrixXd dense_zeta(const Permutation& sigma);

/// Pauli expansion of a Hermitian matrix: coefficients Tr[W m] / 2^n (real up
/// to `tol`; throws if an imaginary part exceeds it).  Coefficients below
/// `drop` in magnitude are dropped.
FloatVec pauli_expand(const Mat& m, double tol = 1e-9, double drop = 1e-12);

/// Tr[B^2] - Tr[B]^2 / dim for a Hermitian matrix of the stated dimension.
double delta_quantity(const Mat& b, int dim);

/// Basis index of a ket written qubit-1-first: "00110" -> 6.
std::uint32_t ket_index(const std::string& bits);

}  // namespace qaoadla
