#include "qaoadla/symmetry.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

#include "qaoadla/closure.hpp"
#include "qaoadla/linalg.hpp"
#include "qaoadla/util.hpp"

namespace qaoadla {

namespace {

// Multiply an exact complex coefficient by i^g.
CRat times_i_pow(const CRat& c, int g) {
  switch (((g % 4) + 4) % 4) {
    case 0: return c;
    case 1: return {-c.im, c.re};
    case 2: return -c;
    default: return {c.im, -c.re};
  }
}

// Sparse row-reduced echelon form over rational coefficients, with integer
// column labels.  Rows keep their smallest column as pivot (coefficient 1)
// and are mutually reduced, mirroring the string-labelled echelon basis.
class SparseEchelon {
 public:
  void insert(std::map<int, Rat> row) {
    // Eliminate existing pivots.  Each subtraction removes one pivot column
    // and introduces only non-pivot columns, so the scan restarts but the
    // total work is bounded by the number of pivot hits.
    bool again = true;
    while (again) {
      again = false;
      for (const auto& [col, coeff] : row) {
        auto it = pivot_of_.find(col);
        if (it == pivot_of_.end()) continue;
        subtract(row, coeff, rows_[it->second]);
        again = true;
        break;
      }
    }
    if (row.empty()) return;
    const int pivot = row.begin()->first;
    const Rat inv = row.begin()->second;
    for (auto& [col, coeff] : row) coeff /= inv;
    for (auto& [col, idx] : pivot_of_) {
      auto& other = rows_[idx];
      auto hit = other.find(pivot);
      if (hit != other.end()) subtract(other, hit->second, row);
    }
    pivot_of_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(row));
  }

  bool is_pivot(int col) const { return pivot_of_.count(col) != 0; }
  const std::map<int, Rat>* row_for(int pivot) const {
    auto it = pivot_of_.find(pivot);
    return it == pivot_of_.end() ? nullptr : &rows_[it->second];
  }
  const std::map<int, std::size_t>& pivots() const { return pivot_of_; }

 private:
  static void subtract(std::map<int, Rat>& target, Rat factor,
                       const std::map<int, Rat>& source) {
    for (const auto& [col, coeff] : source) {
      auto it = target.find(col);
      if (it == target.end()) {
        target.emplace(col, -factor * coeff);
      } else {
        it->second -= factor * coeff;
        if (it->second == 0) target.erase(it);
      }
    }
  }

  std::map<int, std::size_t> pivot_of_;
  std::vector<std::map<int, Rat>> rows_;
};

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Numerical rank of the row-stacked matrix with a relative singular-value
// cutoff; falls back to a Gram-matrix eigenvalue count when the explicit SVD
// would be too large.
Eigen::Index stacked_rank(const Mat& stacked, double rel_tol) {
  if (stacked.rows() == 0 || stacked.cols() == 0) return 0;
  if (stacked.size() <= 2'000'000) {
    Eigen::BDCSVD<Mat> svd(stacked);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > rel_tol * sv(0)) ++r;
    return r;
  }
  Mat gram = stacked * stacked.adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  const auto& ev = es.eigenvalues();  // ascending, real (Hermitian PSD)
  double top = ev(ev.size() - 1);
  if (top <= 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > rel_tol * rel_tol * top) ++r;
  return r;
}

std::pair<RatVec, RatVec> split_real_imag(const CRatVec& v) {
  std::vector<std::pair<PauliString, Rat>> re, im;
  for (const auto& [p, c] : v.terms) {
    if (c.re != 0) re.emplace_back(p, c.re);
    if (c.im != 0) im.emplace_back(p, c.im);
  }
  return {RatVec::from_terms(v.n, std::move(re)), RatVec::from_terms(v.n, std::move(im))};
}

}  // namespace

// -- Commutant ---------------------------------------------------------------

CommutantResult commutant(const std::vector<RatVec>& gens, int n) {
  if (n < 0) {
    if (gens.empty())
      throw std::invalid_argument("commutant: empty generator list needs an explicit qubit count");
    n = gens.front().n;
  }
  for (const auto& g : gens)
    if (g.n != n) throw std::invalid_argument("commutant: qubit-count mismatch");
  if (n < 1 || n > 8) throw std::invalid_argument("commutant: supported range is 1 <= n <= 8");

  std::vector<PauliString> all_terms;
  bool all_single = true;
  for (const auto& g : gens) {
    if (g.size() != 1) all_single = false;
    for (const auto& [p, c] : g.terms) all_terms.push_back(p);
  }

  CommutantResult out;
  out.basis = RatBasis(n);
  const std::uint32_t size = 1u << n;

  // Strings commuting with every individual term commute with every
  // generator and survive as free monomial directions; the rest become
  // variables of the exact linear system.
  std::vector<PauliString> vars;
  for (std::uint32_t z = 0; z < size; ++z)
    for (std::uint32_t x = 0; x < size; ++x) {
      PauliString q(n, x, z);
      bool clean = true;
      for (const auto& t : all_terms)
        if (!q.commutes(t)) {
          clean = false;
          break;
        }
      if (clean) {
        out.basis.insert_reduce(RatVec::monomial(q));
      } else {
        vars.push_back(q);
      }
    }

  if (all_single || vars.empty()) {
    // Against a single-string generator c*P, each anticommuting variable Q
    // yields the lone constraint c * factor * s_Q = 0, so no variable
    // survives and the commutant is exactly the span of clean monomials.
    out.dim = out.basis.dim();
    return out;
  }

  std::map<PauliString, int> var_index;
  for (int i = 0; i < static_cast<int>(vars.size()); ++i) var_index.emplace(vars[i], i);

  // One constraint per (generator, output string): the coefficient of that
  // string in [S, H_k] must vanish.  Entries are c_P * bracket factor.
  std::map<std::pair<std::size_t, PauliString>, std::map<int, Rat>> rows;
  for (int qi = 0; qi < static_cast<int>(vars.size()); ++qi) {
    const PauliString& q = vars[qi];
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (const auto& [p, c] : gens[k].terms) {
        if (q.commutes(p)) continue;
        rows[{k, q.xor_with(p)}][qi] += c * Rat(bracket_factor(q, p));
      }
  }

  SparseEchelon ech;
  for (auto& [key, row] : rows) {
    for (auto it = row.begin(); it != row.end();)
      it = (it->second == 0) ? row.erase(it) : std::next(it);
    if (!row.empty()) ech.insert(std::move(row));
  }

  for (int f = 0; f < static_cast<int>(vars.size()); ++f) {
    if (ech.is_pivot(f)) continue;
    std::vector<std::pair<PauliString, Rat>> raw;
    raw.emplace_back(vars[f], Rat(1));
    for (const auto& [pivot, idx] : ech.pivots()) {
      const auto* row = ech.row_for(pivot);
      auto it = row->find(f);
      if (it != row->end()) raw.emplace_back(vars[pivot], -it->second);
    }
    if (!out.basis.insert_reduce(RatVec::from_terms(n, std::move(raw))))
      throw std::logic_error("commutant: nullspace vector reduced to zero");
  }

  out.dim = out.basis.dim();
  return out;
}

RatBasis commutant_center(const CommutantResult& c) {
  const auto& rows = c.basis.rows();
  const int n = c.basis.qubits();
  const std::size_t m = rows.size();
  RatBasis out(n);
  if (m == 0) return out;

  // z = sum_j a_j B_j lies in the center iff [z, B_k] = 0 for every k.
  // Expand all brackets over the Pauli basis and collect one equation per
  // (k, output string).
  std::map<std::pair<std::size_t, PauliString>, std::size_t> row_ids;
  RatMatrix mat;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      if (j == k) continue;
      RatVec br = commutator(rows[j], rows[k]);
      for (const auto& [p, coeff] : br.terms) {
        auto key = std::make_pair(k, p);
        auto it = row_ids.find(key);
        if (it == row_ids.end()) {
          it = row_ids.emplace(key, mat.size()).first;
          mat.emplace_back(m, Rat(0));
        }
        mat[it->second][j] += coeff;
      }
    }

  for (const auto& coeffs : rat_nullspace(std::move(mat), m)) {
    std::vector<std::pair<PauliString, Rat>> raw;
    for (std::size_t j = 0; j < m; ++j) {
      if (coeffs[j] == 0) continue;
      for (const auto& [p, cc] : rows[j].terms) raw.emplace_back(p, cc * coeffs[j]);
    }
    out.insert_reduce(RatVec::from_terms(n, std::move(raw)));
  }
  return out;
}

// -- Isotypical decomposition ------------------------------------------------

std::string bilinear_name(BilinearType t) {
  switch (t) {
    case BilinearType::Orthogonal: return "orthogonal";
    case BilinearType::Symplectic: return "symplectic";
    case BilinearType::Unitary: return "unitary";
    default: return "undetermined";
  }
}

DecompositionReport isotypical_decomposition(const std::vector<RatVec>& gens,
                                             std::uint64_t seed) {
  CommutantResult com = commutant(gens);
  RatBasis zc = commutant_center(com);
  const int n = com.basis.qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;

  DecompositionReport rep;
  rep.commutant_dim = com.dim;
  rep.center_dim = zc.dim();
  rep.seed_used = seed;

  std::vector<Mat> cb, zb;
  cb.reserve(com.basis.rows().size());
  for (const auto& r : com.basis.rows()) cb.push_back(dense_vec(r));
  zb.reserve(zc.rows().size());
  for (const auto& r : zc.rows()) zb.push_back(dense_vec(r));
  const Mat pplus = dense_vec(half_projector(n, +1));

  std::string failure = "no attempt";
  for (int attempt = 0; attempt < 5; ++attempt) {
    auto rng = rng_stream(seed, static_cast<std::uint64_t>(attempt));
    Mat random_z = Mat::Zero(dim, dim);
    for (const auto& b : zb) random_z += uniform_in(rng, -1.0, 1.0) * b;

    Eigen::SelfAdjointEigenSolver<Mat> es(random_z);
    if (es.info() != Eigen::Success) {
      failure = "eigensolver failure";
      continue;
    }
    const auto& ev = es.eigenvalues();  // ascending
    const double scale =
        std::max({1.0, std::abs(ev(0)), std::abs(ev(dim - 1))});

    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // (start, len)
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= dim; ++i) {
      if (i == dim || ev(i) - ev(i - 1) > 1e-8 * scale) {
        clusters.emplace_back(start, i - start);
        start = i;
      }
    }
    if (clusters.size() != zc.dim()) {
      failure = "eigenvalue clusters do not match the center dimension";
      continue;
    }

    bool ok = true;
    std::vector<IsotypicalBlock> blocks;
    for (const auto& [a, len] : clusters) {
      Mat v = es.eigenvectors().middleCols(a, len);
      IsotypicalBlock blk;
      blk.projector = v * v.adjoint();

      // dim(P C P) = m^2, computed as the rank of the commutant basis
      // restricted to the block by the cluster isometry.
      Mat stacked(static_cast<Eigen::Index>(cb.size()), len * len);
      for (std::size_t j = 0; j < cb.size(); ++j) {
        Mat k = v.adjoint() * cb[j] * v;
        stacked.row(static_cast<Eigen::Index>(j)) =
            Eigen::Map<const Eigen::VectorXcd>(k.data(), len * len).transpose();
      }
      const Eigen::Index msq = stacked_rank(stacked, 1e-8);
      const double mf = std::sqrt(static_cast<double>(msq));
      const auto mi = static_cast<Eigen::Index>(std::llround(mf));
      if (std::abs(mf - static_cast<double>(mi)) > 1e-6 || mi <= 0 || len % mi != 0) {
        failure = "block multiplicity is not integral";
        ok = false;
        break;
      }
      blk.m = static_cast<int>(mi);
      blk.d = static_cast<int>(len / mi);
      blocks.push_back(std::move(blk));
    }
    if (!ok) continue;

    Eigen::Index total = 0;
    std::size_t msum = 0;
    for (const auto& b : blocks) {
      total += static_cast<Eigen::Index>(b.d) * b.m;
      msum += static_cast<std::size_t>(b.m) * b.m;
    }
    if (total != dim || msum != com.dim) {
      failure = "block dimensions do not account for the space";
      continue;
    }

    std::vector<double> overlap(blocks.size());
    std::vector<Eigen::Index> first_support(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      overlap[j] = (blocks[j].projector * pplus).trace().real();
      Eigen::Index fs = dim;
      for (Eigen::Index i = 0; i < dim; ++i)
        if (std::abs(blocks[j].projector(i, i)) > 1e-8) {
          fs = i;
          break;
        }
      first_support[j] = fs;
    }
    std::vector<std::size_t> order(blocks.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t a2, std::size_t b2) {
      if (blocks[a2].d != blocks[b2].d) return blocks[a2].d > blocks[b2].d;
      if (std::abs(overlap[a2] - overlap[b2]) > 1e-6) return overlap[a2] > overlap[b2];
      return first_support[a2] < first_support[b2];
    });
    rep.blocks.clear();
    for (std::size_t j : order) rep.blocks.push_back(std::move(blocks[j]));
    return rep;
  }
  throw std::runtime_error("isotypical decomposition failed after 5 seeds: " + failure);
}

Mat projector_isometry(const Mat& projector) {
  Eigen::SelfAdjointEigenSolver<Mat> es(projector);
  const auto& ev = es.eigenvalues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.5) ++r;
  return es.eigenvectors().rightCols(r);
}

BilinearType block_bilinear_type(const std::vector<Mat>& block_gens) {
  if (block_gens.empty())
    throw std::invalid_argument("block_bilinear_type: no generators");
  const Eigen::Index d = block_gens[0].rows();
  const Mat id = Mat::Identity(d, d);

  // Column-stacked vectorization turns S H + H^t S = 0 into
  // ((H^t (x) 1) + (1 (x) H^t)) vec(S) = 0.
  Mat sys(static_cast<Eigen::Index>(block_gens.size()) * d * d, d * d);
  for (std::size_t k = 0; k < block_gens.size(); ++k) {
    Mat ht = block_gens[k].transpose();
    sys.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
        kron(ht, id) + kron(id, ht);
  }

  Eigen::BDCSVD<Mat> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index null_dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= 1e-8 * smax) ++null_dim;
  null_dim += d * d - sv.size();  // singular values beyond min(rows, cols)
  if (smax == 0.0) null_dim = d * d;

  if (null_dim == 0) return BilinearType::Unitary;
  if (null_dim >= 2)
    throw std::runtime_error(
        "block_bilinear_type: invariant-form space has dimension >= 2 "
        "(block is not acting irreducibly)");

  Eigen::VectorXcd s_vec = svd.matrixV().col(d * d - 1);
  Mat s = Eigen::Map<const Mat>(s_vec.data(), d, d);
  const double sym = (s + s.transpose()).norm();
  const double skew = (s - s.transpose()).norm();
  BilinearType type;
  if (sym > 1e6 * skew) {
    type = BilinearType::Orthogonal;
  } else if (skew > 1e6 * sym) {
    type = BilinearType::Symplectic;
  } else {
    throw std::runtime_error(
        "block_bilinear_type: invariant form is neither symmetric nor skew");
  }

  // Consistency: S conj(S) must be a real scalar whose sign matches the
  // symmetry of S (+ for symmetric, - for skew).
  Mat prod = s * s.conjugate();
  std::complex<double> alpha = prod.trace() / static_cast<double>(d);
  if ((prod - alpha * id).norm() > 1e-6 * std::abs(alpha) ||
      std::abs(alpha.imag()) > 1e-6 * std::abs(alpha))
    throw std::runtime_error("block_bilinear_type: S * conj(S) is not scalar");
  const bool positive = alpha.real() > 0;
  if (positive != (type == BilinearType::Orthogonal))
    throw std::runtime_error("block_bilinear_type: involution sign mismatch");
  return type;
}

void classify_block_types(DecompositionReport& rep, const std::vector<RatVec>& gens) {
  std::vector<Mat> gd;
  gd.reserve(gens.size());
  for (const auto& g : gens) gd.push_back(dense_vec(g));

  for (auto& blk : rep.blocks) {
    blk.type = BilinearType::Undetermined;
    if (blk.m != 1) continue;

    Mat v = projector_isometry(blk.projector);
    const Eigen::Index d = v.cols();
    std::vector<Mat> restricted;
    restricted.reserve(gd.size());
    for (const auto& g : gd) restricted.push_back(v.adjoint() * g * v);

    // Irreducibility precheck: the matrix commutant of the restricted
    // generators must be the scalars.
    const Mat id = Mat::Identity(d, d);
    Mat sys(static_cast<Eigen::Index>(restricted.size()) * d * d, d * d);
    for (std::size_t k = 0; k < restricted.size(); ++k) {
      Mat ht = restricted[k].transpose();
      sys.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
          kron(ht, id) - kron(id, ht);
    }
    Eigen::BDCSVD<Mat> svd(sys);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    Eigen::Index null_dim = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) <= 1e-8 * smax) ++null_dim;
    null_dim += d * d - sv.size();
    if (smax == 0.0) null_dim = d * d;
    if (null_dim != 1) continue;

    try {
      blk.type = block_bilinear_type(restricted);
    } catch (const std::runtime_error&) {
      blk.type = BilinearType::Undetermined;
    }
  }
}

// -- Natural vs. hidden symmetries -------------------------------------------

CRatVec zeta_pauli(const Permutation& sigma) {
  const int n = sigma.n();
  if (n < 1 || n > 8)
    throw std::invalid_argument("zeta_pauli: supported range is 1 <= n <= 8");
  const std::uint32_t size = 1u << n;
  const Rat norm(1, std::int64_t{1} << n);

  // Expand sum_c |perm(c)><c| site by site: matching bits give (I +- Z)/2,
  // differing bits give (X +- iY)/2; enumerate the Z-mask choices directly.
  std::map<PauliString, CRat> acc;
  for (std::uint32_t cidx = 0; cidx < size; ++cidx) {
    std::uint32_t r_v = 0, c_v = 0;  // vertex-indexed masks (bit u-1 = site u)
    for (int u = 1; u <= n; ++u) {
      std::uint32_t bit = (cidx >> (n - u)) & 1u;
      c_v |= bit << (u - 1);
      r_v |= bit << (sigma.apply1(u) - 1);
    }
    const std::uint32_t px = r_v ^ c_v;
    for (std::uint32_t zm = 0; zm < size; ++zm) {
      const int zsign = std::popcount(zm & ~px & r_v) & 1;
      const int e =
          (std::popcount(zm & px & ~r_v) - std::popcount(zm & px & r_v)) & 3;
      CRat coeff = times_i_pow(CRat(zsign ? -norm : norm), e);
      acc[PauliString(n, px, zm)] += coeff;
    }
  }

  std::vector<std::pair<PauliString, CRat>> raw;
  raw.reserve(acc.size());
  for (auto& [p, c] : acc)
    if (!c.is_zero()) raw.emplace_back(p, std::move(c));
  return CRatVec::from_terms(n, std::move(raw));
}

NaturalSymmetryReport natural_symmetries(const Graph& g) {
  const int n = g.n;
  AnsatzSpec spec;
  spec.graph = g;
  spec.kind = Ansatz::Standard;
  auto gens = ansatz_generators(spec);
  CommutantResult com = commutant(gens);
  PermGroup grp = automorphism_group(g);

  NaturalSymmetryReport rep;
  rep.commutant_dim = com.dim;
  rep.basis = CRatBasis(n);
  rep.contained = true;

  const PauliString xall(n, (1u << n) - 1, 0);
  for (const auto& sigma : grp.elements) {
    CRatVec zv = zeta_pauli(sigma);
    CRatVec xz(n);
    {
      std::vector<std::pair<PauliString, CRat>> raw;
      raw.reserve(zv.size());
      for (const auto& [p, c] : zv.terms)
        raw.emplace_back(xall.xor_with(p), times_i_pow(c, xall.phase_exponent(p)));
      xz = CRatVec::from_terms(n, std::move(raw));
    }
    for (const CRatVec* v : {&zv, &xz}) {
      rep.basis.insert_reduce(*v);
      auto [re, im] = split_real_imag(*v);
      if (!re.empty() && !com.basis.contains(re)) rep.contained = false;
      if (!im.empty() && !com.basis.contains(im)) rep.contained = false;
    }
  }
  rep.nat_dim = rep.basis.dim();
  rep.hidden_dim = com.dim >= rep.nat_dim ? com.dim - rep.nat_dim : 0;
  return rep;
}

// -- Block-diagonalizing transform -------------------------------------------

std::pair<int, PauliString> lambda_transform(const PauliString& p) {
  const int n = p.n;
  const auto counts = p.letter_counts();
  if ((counts.nY + counts.nZ) % 2 != 0)
    throw std::invalid_argument("lambda_transform: string has odd Y+Z parity");

  const std::uint32_t rest = ((1u << n) - 1) & ~1u;  // qubits 2..n
  const std::uint32_t rx = p.x & rest;
  const std::uint32_t rz = p.z & rest;
  const char a1 = p.letter(1);

  if (a1 == 'I' || a1 == 'Z') return {+1, PauliString(n, rx, rz)};

  // First letter X or Y: the rest-of-string letters flip I<->X and Y<->Z,
  // the first letter becomes Z, and the sign is i^(#Y - #Z) over the
  // original rest (times an extra i when the first letter is Y); parity
  // guarantees the exponent is even.
  const int y_rest = std::popcount(rx & rz);
  const int z_rest = std::popcount(rz) - y_rest;
  int e = y_rest - z_rest + (a1 == 'Y' ? 1 : 0);
  e = ((e % 4) + 4) % 4;
  if (e % 2 != 0)
    throw std::logic_error("lambda_transform: phase exponent should be even");
  return {e == 0 ? +1 : -1, PauliString(n, rx ^ rest, rz | 1u)};
}

std::pair<RatVec, RatVec> reduce_to_blocks(const RatVec& v) {
  const int n = v.n;
  if (n < 2) throw std::invalid_argument("reduce_to_blocks: needs n >= 2");
  std::vector<std::pair<PauliString, Rat>> plus_raw, minus_raw;
  for (const auto& [p, c] : v.terms) {
    auto [sign, q] = lambda_transform(p);
    const bool opposite = q.letter(1) == 'Z';
    PauliString r(n - 1, q.x >> 1, q.z >> 1);
    Rat sc = sign < 0 ? -c : c;
    plus_raw.emplace_back(r, sc);
    minus_raw.emplace_back(r, opposite ? -sc : sc);
  }
  return {RatVec::from_terms(n - 1, std::move(plus_raw)),
          RatVec::from_terms(n - 1, std::move(minus_raw))};
}

// -- Diagnostics -------------------------------------------------------------

bool odd_n_pairing_check(const DecompositionReport& rep, int n) {
  if (n % 2 == 0)
    throw std::invalid_argument("odd_n_pairing_check: n must be odd");
  const Mat zn = dense_pauli(PauliString(n, 0, (1u << n) - 1));
  for (const auto& blk : rep.blocks) {
    const Mat image = zn * blk.projector * zn;
    bool found = false;
    for (const auto& other : rep.blocks) {
      const double ref = std::max(1.0, other.projector.norm());
      if ((image - other.projector).norm() <= 1e-8 * ref) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<OneDimBlock> one_dim_eigenvectors(const DecompositionReport& rep,
                                              const std::vector<RatVec>& gens) {
  std::vector<Mat> gd;
  gd.reserve(gens.size());
  for (const auto& g : gens) gd.push_back(dense_vec(g));

  std::vector<OneDimBlock> out;
  for (const auto& blk : rep.blocks) {
    if (blk.d * blk.m != 1) continue;
    Mat v = projector_isometry(blk.projector);
    Eigen::VectorXcd psi = v.col(0);
    Eigen::Index imax = 0;
    psi.cwiseAbs().maxCoeff(&imax);
    psi /= psi(imax);

    OneDimBlock one;
    one.vec = psi;
    const double nrm2 = psi.squaredNorm();
    for (const auto& g : gd)
      one.beta.push_back(((psi.adjoint() * g * psi)(0) / nrm2).real());
    out.push_back(std::move(one));
  }
  return out;
}

}  // namespace qaoadla
