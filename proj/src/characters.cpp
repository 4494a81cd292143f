#include "qaoadla/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "qaoadla/closure.hpp"
#include "qaoadla/dense.hpp"
#include "qaoadla/symmetry.hpp"

namespace qaoadla {

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

int element_order(const Permutation& p) {
  Permutation acc = p;
  int order = 1;
  while (!acc.is_identity()) {
    acc = acc.compose(p);
    ++order;
  }
  return order;
}

bool is_abelian(const PermGroup& grp) {
  const auto& els = grp.elements;
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (!(els[i].compose(els[j]) == els[j].compose(els[i]))) return false;
  return true;
}

std::int64_t round_checked(std::complex<double> v) {
  const double r = std::round(v.real());
  if (std::abs(v.real() - r) > 1e-6 || std::abs(v.imag()) > 1e-6)
    throw std::runtime_error("character sum is not an integer within tolerance");
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t chi_nat(bool flip, const Permutation& sigma) {
  CycleType ct = cycle_data(sigma);
  if (flip && !ct.all_even) return 0;
  return pow2(ct.cycle_count);
}

std::int64_t trivial_multiplicity(const Graph& g) {
  PermGroup grp = automorphism_group(g);
  std::int64_t sum = 0;
  for (const auto& sigma : grp.elements) {
    CycleType ct = cycle_data(sigma);
    sum += pow2(ct.cycle_count) * (1 + (ct.all_even ? 1 : 0));
  }
  const auto denom = static_cast<std::int64_t>(2 * grp.order());
  if (sum % denom != 0)
    throw std::runtime_error("trivial multiplicity is not an integer");
  return sum / denom;
}

std::vector<std::vector<std::complex<double>>> abelian_characters(const PermGroup& grp) {
  if (!is_abelian(grp))
    throw std::invalid_argument("abelian_characters: group is not abelian");
  const auto& els = grp.elements;
  const std::size_t order = els.size();
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < order; ++i) index.emplace(els[i], i);

  // Greedy generating set, largest element order first: repeatedly adjoin an
  // element outside the subgroup generated so far.
  std::vector<std::size_t> gen_ids;
  std::vector<int> gen_orders;
  std::set<std::size_t> span{index.at(Permutation::identity(els[0].n()))};
  while (span.size() < order) {
    std::size_t best = order;
    int best_order = 0;
    for (std::size_t i = 0; i < order; ++i) {
      if (span.count(i)) continue;
      int o = element_order(els[i]);
      if (o > best_order) {
        best_order = o;
        best = i;
      }
    }
    gen_ids.push_back(best);
    gen_orders.push_back(best_order);
    // Re-close the span under the enlarged generating set.
    std::queue<std::size_t> work;
    for (std::size_t s : span) work.push(s);
    while (!work.empty()) {
      std::size_t cur = work.front();
      work.pop();
      for (std::size_t gi : gen_ids) {
        std::size_t nxt = index.at(els[cur].compose(els[gi]));
        if (span.insert(nxt).second) work.push(nxt);
      }
    }
  }

  // Every irreducible character assigns each generator a root of unity whose
  // order divides the generator's order; an assignment is admissible iff the
  // induced labelling of the Cayley graph is consistent.  Enumerating all
  // assignments and filtering yields exactly |G| distinct characters.
  std::vector<std::vector<std::complex<double>>> found;
  std::set<std::vector<std::int64_t>> seen;  // rounded fingerprints
  std::vector<int> choice(gen_ids.size(), 0);
  const auto id_idx = index.at(Permutation::identity(els[0].n()));
  while (true) {
    std::vector<std::complex<double>> genval(gen_ids.size());
    for (std::size_t i = 0; i < gen_ids.size(); ++i) {
      const double ang = 2.0 * std::numbers::pi * choice[i] / gen_orders[i];
      genval[i] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<std::complex<double>> label(order, {0, 0});
    std::vector<bool> known(order, false);
    label[id_idx] = 1.0;
    known[id_idx] = true;
    std::queue<std::size_t> work;
    work.push(id_idx);
    bool consistent = true;
    while (consistent && !work.empty()) {
      std::size_t cur = work.front();
      work.pop();
      for (std::size_t i = 0; i < gen_ids.size(); ++i) {
        std::size_t nxt = index.at(els[cur].compose(els[gen_ids[i]]));
        std::complex<double> val = label[cur] * genval[i];
        if (!known[nxt]) {
          known[nxt] = true;
          label[nxt] = val;
          work.push(nxt);
        } else if (std::abs(label[nxt] - val) > 1e-9) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      std::vector<std::int64_t> fp;
      fp.reserve(2 * order);
      for (const auto& v : label) {
        fp.push_back(std::llround(v.real() * 1e6));
        fp.push_back(std::llround(v.imag() * 1e6));
      }
      if (seen.insert(std::move(fp)).second) found.push_back(std::move(label));
    }
    // Advance the mixed-radix choice vector.
    std::size_t pos = 0;
    while (pos < choice.size()) {
      if (++choice[pos] < gen_orders[pos]) break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
  }
  if (found.size() != order)
    throw std::runtime_error("abelian_characters: character count mismatch");

  // Deterministic order: trivial character first, then lexicographic by
  // rounded value vectors.
  std::sort(found.begin(), found.end(),
            [order](const auto& a, const auto& b) {
              for (std::size_t i = 0; i < order; ++i) {
                auto ka = std::make_pair(std::llround(a[i].real() * 1e6),
                                         std::llround(a[i].imag() * 1e6));
                auto kb = std::make_pair(std::llround(b[i].real() * 1e6),
                                         std::llround(b[i].imag() * 1e6));
                if (ka != kb) return ka > kb;  // all-ones vector sorts first
              }
              return false;
            });
  return found;
}

MultiplicityTable multiplicity_table(const Graph& g) {
  PermGroup grp = automorphism_group(g);
  MultiplicityTable table;
  table.group_order = grp.order();

  if (!is_abelian(grp)) {
    table.full = false;
    table.entries.push_back({"t", "t", trivial_multiplicity(g), 1});
    return table;
  }

  table.full = true;
  auto chars = abelian_characters(grp);
  std::vector<std::int64_t> plain(grp.order()), even(grp.order());
  for (std::size_t i = 0; i < grp.order(); ++i) {
    CycleType ct = cycle_data(grp.elements[i]);
    plain[i] = pow2(ct.cycle_count);
    even[i] = ct.all_even ? plain[i] : 0;
  }

  const double denom = 2.0 * static_cast<double>(grp.order());
  for (std::size_t c = 0; c < chars.size(); ++c) {
    std::complex<double> sp{0, 0}, se{0, 0};
    for (std::size_t i = 0; i < grp.order(); ++i) {
      sp += std::conj(chars[c][i]) * static_cast<double>(plain[i]);
      se += std::conj(chars[c][i]) * static_cast<double>(even[i]);
    }
    const std::string nu2 =
        grp.order() == 2 ? (c == 0 ? "t" : "s") : ("c" + std::to_string(c));
    for (int flip_sign : {+1, -1}) {
      std::complex<double> total = (sp + static_cast<double>(flip_sign) * se) / denom;
      table.entries.push_back(
          {flip_sign > 0 ? "t" : "s", nu2, round_checked(total), 1});
    }
  }
  return table;
}

std::vector<F2Row> f2_identities(int limit_n) {
  if (limit_n < 1 || limit_n > 8)
    throw std::invalid_argument("f2_identities: supported range is 1 <= n <= 8");
  std::vector<F2Row> out;
  for (int n = 1; n <= limit_n; ++n) {
    F2Row row;
    row.n = n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Permutation p{perm};
      CycleType ct = cycle_data(p);
      const std::int64_t w = pow2(ct.cycle_count);
      row.sum_plain += w;
      if (ct.all_even) row.sum_even += w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::int64_t fact = 1;
    for (int k = 2; k <= n + 1; ++k) fact *= k;
    row.expect_plain = fact;                       // (n+1)!
    row.expect_even = (n % 2 == 0) ? fact / (n + 1) : 0;  // n! or 0
    row.ok = row.sum_plain == row.expect_plain && row.sum_even == row.expect_even;
    out.push_back(row);
  }
  return out;
}

std::vector<std::int64_t> dense_multiplicities(const Graph& g,
                                               const MultiplicityTable& table) {
  const int n = g.n;
  if (n > 5)
    throw std::invalid_argument("dense_multiplicities: supported up to n = 5");
  PermGroup grp = automorphism_group(g);
  auto chars = table.full ? abelian_characters(grp)
                          : std::vector<std::vector<std::complex<double>>>{
                                std::vector<std::complex<double>>(grp.order(), 1.0)};

  const Eigen::Index dim = Eigen::Index{1} << n;
  const Mat flip = dense_pauli(PauliString(n, (1u << n) - 1, 0));
  std::vector<Mat> zetas;
  zetas.reserve(grp.order());
  for (const auto& sigma : grp.elements)
    zetas.push_back(dense_zeta(sigma).cast<std::complex<double>>());

  std::vector<std::int64_t> ranks;
  for (const auto& entry : table.entries) {
    const double s1 = entry.nu1 == "t" ? 1.0 : -1.0;
    std::size_t ci = 0;
    if (table.full) {
      // Recover the character row from the label used by multiplicity_table.
      if (entry.nu2 == "t") {
        ci = 0;
      } else if (entry.nu2 == "s") {
        ci = 1;
      } else {
        ci = static_cast<std::size_t>(std::strtoul(entry.nu2.c_str() + 1, nullptr, 10));
      }
    }
    Mat proj = Mat::Zero(dim, dim);
    for (std::size_t i = 0; i < grp.order(); ++i) {
      proj += std::conj(chars[ci][i]) * zetas[i];
      proj += s1 * std::conj(chars[ci][i]) * (flip * zetas[i]);
    }
    proj /= 2.0 * static_cast<double>(grp.order());
    Eigen::SelfAdjointEigenSolver<Mat> es(proj);
    std::int64_t rank = 0;
    for (Eigen::Index i = 0; i < dim; ++i)
      if (es.eigenvalues()(i) > 0.5) ++rank;
    ranks.push_back(rank);
  }
  return ranks;
}

DualityReport duality_check(const Graph& g) {
  if (g.n > 5)
    throw std::invalid_argument("duality_check: supported up to n = 5");
  MultiplicityTable table = multiplicity_table(g);

  DualityReport rep;
  rep.full = table.full;
  for (const auto& e : table.entries)
    for (int k = 0; k < e.degree; ++k)
      if (e.multiplicity > 0) rep.mult_side.push_back(e.multiplicity);
  std::sort(rep.mult_side.begin(), rep.mult_side.end());

  RatBasis u_nat = u_nat_basis(g);
  std::vector<RatVec> gens(u_nat.rows().begin(), u_nat.rows().end());
  DecompositionReport dec = isotypical_decomposition(gens);
  for (const auto& blk : dec.blocks) rep.block_side.push_back(blk.d);
  std::sort(rep.block_side.begin(), rep.block_side.end());

  if (table.full) {
    rep.ok = rep.mult_side == rep.block_side;
  } else {
    rep.ok = std::find(rep.block_side.begin(), rep.block_side.end(),
                       table.entries.front().multiplicity) != rep.block_side.end();
  }
  return rep;
}

}  // namespace qaoadla
