#include "qaoadla/closure.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "qaoadla/linalg.hpp"

namespace qaoadla {

std::string ansatz_name(Ansatz a) {
  switch (a) {
    case Ansatz::Free: return "free";
    case Ansatz::Standard: return "standard";
    case Ansatz::Orbit: return "orbit";
    case Ansatz::Natural: return "natural";
  }
  return "?";
}

std::optional<Ansatz> ansatz_from_name(const std::string& s) {
  if (s == "free") return Ansatz::Free;
  if (s == "standard") return Ansatz::Standard;
  if (s == "orbit") return Ansatz::Orbit;
  if (s == "natural") return Ansatz::Natural;
  return std::nullopt;
}

namespace {

PauliString zz_string(int n, int u, int v) {
  return PauliString(n, 0, (1u << (u - 1)) | (1u << (v - 1)));
}

}  // namespace

PauliString permute_string(const PauliString& p, const Permutation& sigma) {
  std::uint32_t x = 0, z = 0;
  for (int u = 0; u < p.n; ++u) {
    int t = sigma.img[u];
    x |= ((p.x >> u) & 1u) << t;
    z |= ((p.z >> u) & 1u) << t;
  }
  return PauliString(p.n, x, z);
}

std::vector<RatVec> ansatz_generators(const AnsatzSpec& spec) {
  const Graph& g = spec.graph;
  const int n = g.n;
  for (int w : spec.extra_z)
    if (w < 1 || w > n) throw std::invalid_argument("extra-z vertex out of range");
  std::vector<RatVec> gens;
  switch (spec.kind) {
    case Ansatz::Free: {
      for (int v = 1; v <= n; ++v)
        gens.push_back(RatVec::monomial(PauliString::single(n, v, 'X')));
      for (auto [u, v] : g.edges)
        gens.push_back(RatVec::monomial(zz_string(n, u, v)));
      break;
    }
    case Ansatz::Standard: {
      if (!is_connected(g)) throw std::invalid_argument("standard variant requires a connected graph");
      RatVec hm(n), hp(n);
      for (int v = 1; v <= n; ++v)
        hm.add_scaled(RatVec::monomial(PauliString::single(n, v, 'X')), Rat(1));
      for (auto [u, v] : g.edges) hp.add_scaled(RatVec::monomial(zz_string(n, u, v)), Rat(1));
      gens.push_back(std::move(hm));
      gens.push_back(std::move(hp));
      break;
    }
    case Ansatz::Orbit: {
      if (!is_connected(g)) throw std::invalid_argument("orbit variant requires a connected graph");
      PermGroup grp = automorphism_group(g);
      for (const auto& orbit : vertex_orbits(g, grp)) {
        RatVec sum(n);
        for (int v : orbit)
          sum.add_scaled(RatVec::monomial(PauliString::single(n, v, 'X')), Rat(1));
        gens.push_back(std::move(sum));
      }
      for (const auto& orbit : edge_orbits(g, grp)) {
        RatVec sum(n);
        for (auto [u, v] : orbit) sum.add_scaled(RatVec::monomial(zz_string(n, u, v)), Rat(1));
        gens.push_back(std::move(sum));
      }
      break;
    }
    case Ansatz::Natural: {
      if (!is_connected(g)) throw std::invalid_argument("natural variant requires a connected graph");
      if (!spec.extra_z.empty())
        throw std::invalid_argument("extra-z generators are not defined for the natural variant");
      AlgebraResult nat = natural_basis(g);
      for (const auto& row : nat.basis.rows()) gens.push_back(row);
      return gens;
    }
  }
  for (int w : spec.extra_z)
    gens.push_back(RatVec::monomial(PauliString::single(n, w, 'Z')));
  return gens;
}

AlgebraResult lie_closure(const std::vector<RatVec>& gens) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  const int n = gens.front().n;
  for (const auto& g : gens)
    if (g.n != n) throw std::invalid_argument("generators disagree on qubit count");
  const std::size_t cap = (std::size_t{1} << (2 * n)) - 1;

  AlgebraResult result;
  result.basis = RatBasis(n);
  result.generator_count = gens.size();
  std::vector<RatVec> work;   // snapshot of each row at insertion time
  std::vector<int> depth;     // nested-bracket depth of that row
  for (const auto& g : gens) {
    if (result.basis.insert_reduce(g)) {
      work.push_back(result.basis.rows().back());
      depth.push_back(1);
      result.depth = 1;
    }
  }
  for (std::size_t qi = 0; qi < work.size(); ++qi) {
    for (const auto& g : gens) {
      RatVec c = commutator(g, work[qi]);
      if (c.empty()) continue;
      if (result.basis.insert_reduce(c)) {
        work.push_back(result.basis.rows().back());
        depth.push_back(depth[qi] + 1);
        result.depth = std::max(result.depth, depth.back());
        if (result.basis.dim() > cap)
          throw std::logic_error("closure exceeded the Pauli-space dimension bound");
      }
    }
  }
  result.dim = result.basis.dim();
  return result;
}

RatVec symmetrize(const RatVec& m, SymMode mode, const PermGroup& grp) {
  RatVec v = m;
  if (mode == SymMode::Z2 || mode == SymMode::Nat) {
    PauliString xall(v.n, v.n == 32 ? ~0u : ((1u << v.n) - 1u), 0);
    RatVec kept(v.n);
    for (const auto& [p, c] : v.terms)
      if (p.commutes(xall)) kept.add_scaled(RatVec::monomial(p, c), Rat(1));
    v = std::move(kept);
  }
  if (mode == SymMode::Aut || mode == SymMode::Nat) {
    if (grp.elements.empty()) throw std::invalid_argument("symmetrize: empty group");
    RatVec avg(v.n);
    for (const auto& sigma : grp.elements) {
      for (const auto& [p, c] : v.terms)
        avg.add_scaled(RatVec::monomial(permute_string(p, sigma), c), Rat(1));
    }
    avg.scale(Rat(1, static_cast<unsigned>(grp.elements.size())));
    v = std::move(avg);
  }
  return v;
}

namespace {

// Orbit of a single string under vertex permutations, with an early exit when
// a strictly smaller image shows the input is not the orbit minimum.
// Returns the distinct orbit elements, or empty if not minimal.
std::vector<PauliString> orbit_if_minimal(const PauliString& p, const PermGroup& grp) {
  std::set<PauliString> orbit;
  for (const auto& sigma : grp.elements) {
    PauliString q = permute_string(p, sigma);
    if (q < p) return {};
    orbit.insert(q);
  }
  return {orbit.begin(), orbit.end()};
}

RatVec orbit_sum(int n, const std::vector<PauliString>& orbit) {
  RatVec v(n);
  for (const auto& q : orbit) v.add_scaled(RatVec::monomial(q), Rat(1));
  return v;
}

}  // namespace

AlgebraResult natural_basis(const Graph& g, const AlgebraResult& free_alg,
                            const PermGroup& grp) {
  const int n = g.n;
  PauliString xall(n, n == 32 ? ~0u : ((1u << n) - 1u), 0);
  AlgebraResult result;
  result.basis = RatBasis(n);
  result.generator_count = free_alg.dim;
  for (const auto& row : free_alg.basis.rows()) {
    if (row.size() != 1)
      throw std::logic_error("free-closure rows are expected to be single strings");
    const PauliString& p = row.terms.front().first;
    if (!p.commutes(xall)) continue;  // killed by the Z2 projector
    auto orbit = orbit_if_minimal(p, grp);
    if (orbit.empty()) continue;  // a smaller representative handles this orbit
    result.basis.insert_reduce(orbit_sum(n, orbit));
  }
  result.dim = result.basis.dim();
  return result;
}

AlgebraResult natural_basis(const Graph& g) {
  AlgebraResult free_alg = lie_closure(ansatz_generators({g, Ansatz::Free, {}}));
  PermGroup grp = automorphism_group(g);
  return natural_basis(g, free_alg, grp);
}

RatBasis u_nat_basis(const Graph& g, const PermGroup& grp) {
  const int n = g.n;
  if (n > 8) throw std::invalid_argument("symmetrized full algebra limited to n <= 8");
  RatBasis basis(n);
  const std::uint32_t size = 1u << n;
  for (std::uint32_t z = 0; z < size; ++z) {
    if (std::popcount(z) % 2 != 0) continue;  // anticommutes with X^(x)n
    for (std::uint32_t x = 0; x < size; ++x) {
      auto orbit = orbit_if_minimal(PauliString(n, x, z), grp);
      if (orbit.empty()) continue;
      basis.insert_reduce(orbit_sum(n, orbit));
    }
  }
  return basis;
}

RatBasis u_nat_basis(const Graph& g) {
  return u_nat_basis(g, automorphism_group(g));
}

RatVec half_projector(int n, int sign) {
  PauliString xall(n, n == 32 ? ~0u : ((1u << n) - 1u), 0);
  return RatVec::from_terms(
      n, {{PauliString::identity(n), Rat(1, 2)}, {xall, Rat(sign, 2)}});
}

HierarchyReport hierarchy_check(const Graph& g) {
  HierarchyReport r;
  PermGroup grp = automorphism_group(g);
  AlgebraResult std_alg = lie_closure(ansatz_generators({g, Ansatz::Standard, {}}));
  AlgebraResult orbit_alg = lie_closure(ansatz_generators({g, Ansatz::Orbit, {}}));
  AlgebraResult free_alg = lie_closure(ansatz_generators({g, Ansatz::Free, {}}));
  AlgebraResult nat_alg = natural_basis(g, free_alg, grp);
  r.dim_std = std_alg.dim;
  r.dim_orbit = orbit_alg.dim;
  r.dim_nat = nat_alg.dim;
  r.dim_free = free_alg.dim;
  r.std_in_orbit = std_alg.basis.contained_in(orbit_alg.basis);
  r.orbit_in_nat = orbit_alg.basis.contained_in(nat_alg.basis);
  r.nat_in_free = nat_alg.basis.contained_in(free_alg.basis);
  r.chain_holds = r.std_in_orbit && r.orbit_in_nat && r.nat_in_free;
  Shape s = shape(g);
  if (s.kind == ShapeKind::NonBipartite) {
    RatBasis u = u_nat_basis(g, grp);
    r.dim_u_nat = u.dim();
    RatBasis augmented = nat_alg.basis;
    augmented.insert_reduce(half_projector(g.n, +1));
    augmented.insert_reduce(half_projector(g.n, -1));
    r.projector_span_identity = augmented.same_span(u);
  }
  return r;
}

CenterResult center_of_algebra(const AlgebraResult& alg, const RatBasis& commutant) {
  if (alg.basis.qubits() != commutant.qubits())
    throw std::invalid_argument("center: qubit-count mismatch");
  CenterResult out;
  const auto& crows = commutant.rows();
  const std::size_t m = crows.size();
  if (m == 0) return out;
  // v = sum_j c_j B_j lies in the algebra iff sum_j c_j reduce(B_j) == 0;
  // reduction against the echelon basis is linear.
  std::vector<RatVec> residues;
  residues.reserve(m);
  std::map<PauliString, std::size_t> row_index;
  for (const auto& b : crows) {
    residues.push_back(alg.basis.reduce(b));
    for (const auto& [p, c] : residues.back().terms)
      row_index.emplace(p, row_index.size());
  }
  RatMatrix mat(row_index.size(), std::vector<Rat>(m, Rat(0)));
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& [p, c] : residues[j].terms) mat[row_index[p]][j] = c;
  for (const auto& coeffs : rat_nullspace(std::move(mat), m)) {
    RatVec v(alg.basis.qubits());
    for (std::size_t j = 0; j < m; ++j)
      if (coeffs[j] != 0) v.add_scaled(crows[j], coeffs[j]);
    out.basis.push_back(std::move(v));
  }
  out.dim = out.basis.size();
  return out;
}

}  // namespace qaoadla
