#include "qaoadla/dense.hpp"

#include <complex>
#include <stdexcept>

namespace qaoadla {

namespace {

using Cplx = std::complex<double>;

Eigen::Matrix2cd letter_matrix(char a) {
  Eigen::Matrix2cd m;
  switch (a) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Cplx(0, -1), Cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("unknown letter");
  }
  return m;
}

Mat kron(const Mat& a, const Eigen::Matrix2cd& b) {
  Mat out(a.rows() * 2, a.cols() * 2);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

Mat dense_pauli(const PauliString& p) {
  Mat m = Mat::Ones(1, 1);
  for (int u = 1; u <= p.n; ++u) m = kron(m, letter_matrix(p.letter(u)));
  return m;
}

Mat dense_vec(const RatVec& v) {
  Mat m = Mat::Zero(1 << v.n, 1 << v.n);
  for (const auto& [p, c] : v.terms)
    m += static_cast<double>(c) * dense_pauli(p);
  return m;
}

Mat dense_vec(const CRatVec& v) {
  Mat m = Mat::Zero(1 << v.n, 1 << v.n);
  for (const auto& [p, c] : v.terms)
    m += Cplx(static_cast<double>(c.re), static_cast<double>(c.im)) * dense_pauli(p);
  return m;
}

Mat dense_vec(const FloatVec& v) {
  Mat m = Mat::Zero(1 << v.n, 1 << v.n);
  for (const auto& [p, c] : v.terms) m += c * dense_pauli(p);
  return m;
}

Eigen::MatrixXd dense_zeta(const Permutation& sigma) {
  const int n = sigma.n();
  const std::uint32_t size = 1u << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (std::uint32_t x = 0; x < size; ++x) {
    std::uint32_t y = 0;
    for (int u = 1; u <= n; ++u) {
      std::uint32_t bit = (x >> (n - u)) & 1u;
      y |= bit << (n - sigma.apply1(u));
    }
    m(y, x) = 1.0;
  }
  return m;
}

FloatVec pauli_expand(const Mat& m, double tol, double drop) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pauli_expand: non-square input");
  int n = 0;
  while ((Eigen::Index{1} << n) < m.rows()) ++n;
  if ((Eigen::Index{1} << n) != m.rows())
    throw std::invalid_argument("pauli_expand: dimension is not a power of two");
  const double dim = static_cast<double>(m.rows());
  FloatVec out(n);
  std::vector<std::pair<PauliString, double>> raw;
  const std::uint32_t size = 1u << n;
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t z = 0; z < size; ++z) {
      PauliString p(n, x, z);
      Cplx coeff = (dense_pauli(p) * m).trace() / dim;
      if (std::abs(coeff.imag()) > tol)
        throw std::invalid_argument("pauli_expand: input is not Hermitian within tolerance");
      if (std::abs(coeff.real()) > drop) raw.emplace_back(p, coeff.real());
    }
  return FloatVec::from_terms(n, std::move(raw));
}

double delta_quantity(const Mat& b, int dim) {
  if (b.rows() != b.cols() || b.rows() != dim)
    throw std::invalid_argument("delta_quantity: dimension mismatch");
  Cplx tr = b.trace();
  Cplx tr2 = (b * b).trace();
  return tr2.real() - (tr * tr).real() / static_cast<double>(dim);
}

std::uint32_t ket_index(const std::string& bits) {
  std::uint32_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("ket bits must be 0/1");
    idx = (idx << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return idx;
}

}  // namespace qaoadla
