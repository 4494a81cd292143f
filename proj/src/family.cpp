#include "qaoadla/family.hpp"

#include <stdexcept>

namespace qaoadla {

std::string family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::BipartiteEvenEven: return "bipartite-even-even";
    case Family::BipartiteEvenOdd: return "bipartite-even-odd";
    case Family::BipartiteOddOdd: return "bipartite-odd-odd";
    case Family::Archetypal: return "archetypal";
  }
  return "?";
}

namespace {

std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

std::string iso_string(Family f, int n) {
  auto alg = [](const std::string& kind, std::uint64_t size, int copies) {
    std::string one = kind + "(" + std::to_string(size) + ")";
    return copies == 2 ? one + "⊕" + one : one;
  };
  switch (f) {
    case Family::Path: return alg("so", 2 * std::uint64_t(n), 1);
    case Family::Cycle: return alg("so", 2 * std::uint64_t(n), 2);
    case Family::BipartiteEvenEven: return alg("so", pow2(n - 1), 2);
    case Family::BipartiteEvenOdd: return alg("su", pow2(n - 1), 1);
    case Family::BipartiteOddOdd: return alg("sp", pow2(n - 1), 2);
    case Family::Archetypal: return alg("su", pow2(n - 1), 2);
  }
  return "?";
}

}  // namespace

FamilyReport classify(const Graph& g) {
  if (g.n < 2) throw std::invalid_argument("classification requires n >= 2");
  Shape s = shape(g);
  if (s.kind == ShapeKind::Disconnected)
    throw std::invalid_argument("classification requires a connected graph");
  FamilyReport r;
  const int n = g.n;
  switch (s.kind) {
    case ShapeKind::Path:
      r.family = Family::Path;
      r.dim_free = 2 * std::uint64_t(n) * n - n;
      break;
    case ShapeKind::Cycle:
      r.family = Family::Cycle;
      r.dim_free = 4 * std::uint64_t(n) * n - 2 * n;
      break;
    case ShapeKind::Bipartite: {
      bool odd1 = s.part1.size() % 2 != 0, odd2 = s.part2.size() % 2 != 0;
      if (!odd1 && !odd2) {
        r.family = Family::BipartiteEvenEven;
        r.dim_free = pow2(2 * n - 2) - pow2(n - 1);
      } else if (odd1 && odd2) {
        r.family = Family::BipartiteOddOdd;
        r.dim_free = pow2(2 * n - 2) + pow2(n - 1);
      } else {
        r.family = Family::BipartiteEvenOdd;
        r.dim_free = pow2(2 * n - 2) - 1;
      }
      r.part1 = s.part1;
      r.part2 = s.part2;
      break;
    }
    case ShapeKind::NonBipartite:
      r.family = Family::Archetypal;
      r.dim_free = pow2(2 * n - 1) - 2;
      break;
    case ShapeKind::Disconnected:
      break;  // unreachable
  }
  r.iso_type = iso_string(r.family, n);
  return r;
}

namespace {

// Single X, all other letters I.
bool is_single_x(const PauliString& p) {
  auto c = p.letter_counts();
  return c.nX == 1 && c.nI == p.n - 1;
}

// Single I, all other letters X (the X^(x)n-complement of a single X).
bool is_single_i_rest_x(const PauliString& p) {
  auto c = p.letter_counts();
  return c.nI == 1 && c.nX == p.n - 1;
}

// Contiguous window [i..j], i<j: endpoints in {Y,Z}, `inside` strictly
// between, `outside` elsewhere.
bool is_window(const PauliString& p, char inside, char outside) {
  int first = 0, last = 0;
  for (int u = 1; u <= p.n; ++u) {
    if (p.letter(u) != outside) {
      if (first == 0) first = u;
      last = u;
    }
  }
  if (first == 0 || first == last) return false;
  char a = p.letter(first), b = p.letter(last);
  if ((a != 'Y' && a != 'Z') || (b != 'Y' && b != 'Z')) return false;
  for (int u = first + 1; u < last; ++u)
    if (p.letter(u) != inside) return false;
  return true;
}

}  // namespace

bool free_basis_predicate(const Graph& g, const PauliString& p) {
  if (p.n != g.n) throw std::invalid_argument("qubit count mismatch");
  FamilyReport r = classify(g);
  switch (r.family) {
    case Family::Path:
      return is_single_x(p) || is_window(p, 'X', 'I');
    case Family::Cycle:
      return is_single_x(p) || is_single_i_rest_x(p) ||
             is_window(p, 'X', 'I') || is_window(p, 'I', 'X');
    default: {
      auto c = p.letter_counts();
      if ((c.nY + c.nZ) % 2 != 0 || c.nI == p.n || c.nX == p.n) return false;
      if (r.family == Family::Archetypal) return true;
      std::uint32_t v1 = 0;
      for (int u : r.part1) v1 |= 1u << (u - 1);
      auto c1 = p.letter_counts(v1);
      return (c.nX + c1.nY + c1.nZ) % 2 == 1;
    }
  }
}

std::optional<std::uint64_t> nat_dim_closed_form(const Graph& g) {
  Shape s = shape(g);
  const std::uint64_t n = g.n;
  if (s.kind == ShapeKind::Path) return n * n;
  if (s.kind == ShapeKind::Cycle) return 3 * (n - 1) + 2;
  bool complete = g.edge_count() == g.n * (g.n - 1) / 2;
  if (complete && g.n >= 3) {
    // C(n+3,3)/2 - 2 for odd n; C(n+3,3)/2 + n/4 - 3/2 for even n.
    std::uint64_t binom = (n + 3) * (n + 2) * (n + 1) / 6;
    if (n % 2 == 1) return binom / 2 - 2;
    return (2 * binom + n - 6) / 4;
  }
  return std::nullopt;
}

}  // namespace qaoadla
