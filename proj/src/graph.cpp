#include "qaoadla/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace qaoadla {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1 || n > 32) throw std::invalid_argument("vertex count out of range");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (u < 1 || v > n) throw std::invalid_argument("vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge rejected");
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, 0);
  for (auto [u, v] : g.edges) {
    g.adj[u - 1] |= 1u << (v - 1);
    g.adj[v - 1] |= 1u << (u - 1);
  }
  return g;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph::make(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(1, n);
  return Graph::make(n, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph::make(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) e.emplace_back(u, v);
  return Graph::make(a + b, std::move(e));
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (int u = 0; u < g.n; ++u)
      if ((frontier >> u) & 1u) next |= g.adj[u];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 32 ? ~0u : ((1u << g.n) - 1u));
}

Shape shape(const Graph& g) {
  Shape s;
  if (!is_connected(g)) {
    s.kind = ShapeKind::Disconnected;
    return s;
  }
  // 2-coloring by BFS from vertex 1; color[0] unused sentinel -1.
  std::vector<int> color(g.n, -1);
  color[0] = 0;
  std::queue<int> q;
  q.push(0);
  bool bipartite = true;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < g.n; ++v) {
      if (!((g.adj[u] >> v) & 1u)) continue;
      if (color[v] == -1) {
        color[v] = 1 - color[u];
        q.push(v);
      } else if (color[v] == color[u]) {
        bipartite = false;
      }
    }
  }
  if (bipartite) {
    for (int v = 0; v < g.n; ++v)
      (color[v] == 0 ? s.part1 : s.part2).push_back(v + 1);
  }
  int maxdeg = 0;
  for (int u = 1; u <= g.n; ++u) maxdeg = std::max(maxdeg, g.degree(u));
  bool acyclic = g.edge_count() == g.n - 1;
  bool two_regular = g.n >= 3;
  for (int u = 1; u <= g.n && two_regular; ++u)
    if (g.degree(u) != 2) two_regular = false;
  if (acyclic && maxdeg <= 2)
    s.kind = ShapeKind::Path;
  else if (two_regular)
    s.kind = ShapeKind::Cycle;
  else
    s.kind = bipartite ? ShapeKind::Bipartite : ShapeKind::NonBipartite;
  return s;
}

// -- Permutations -----------------------------------------------------------

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img[i] != i) return false;
  return true;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation r;
  r.img.resize(n());
  for (int i = 0; i < n(); ++i) r.img[i] = img[other.img[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img.resize(n());
  for (int i = 0; i < n(); ++i) r.img[img[i]] = i;
  return r;
}

CycleType cycle_data(const Permutation& p) {
  CycleType t;
  t.b.assign(p.n() + 1, 0);
  std::vector<bool> seen(p.n(), false);
  t.all_even = true;
  for (int i = 0; i < p.n(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p.img[j];
      ++len;
    }
    ++t.b[len];
    ++t.cycle_count;
    if (len % 2 != 0) t.all_even = false;
  }
  return t;
}

// -- Automorphisms ----------------------------------------------------------

namespace {

// Iterated degree refinement: returns a stable coloring where automorphisms
// can only map same-colored vertices to each other.
std::vector<int> stable_coloring(const Graph& g) {
  std::vector<int> color(g.n);
  for (int u = 0; u < g.n; ++u) color[u] = g.degree(u + 1);
  for (;;) {
    // signature = (color, sorted multiset of neighbor colors)
    std::vector<std::pair<int, std::vector<int>>> sig(g.n);
    for (int u = 0; u < g.n; ++u) {
      std::vector<int> nb;
      for (int v = 0; v < g.n; ++v)
        if ((g.adj[u] >> v) & 1u) nb.push_back(color[v]);
      std::sort(nb.begin(), nb.end());
      sig[u] = {color[u], std::move(nb)};
    }
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (int u = 0; u < g.n; ++u) index[sig[u]] = 0;
    int next = 0;
    for (auto& [k, v] : index) v = next++;
    std::vector<int> refined(g.n);
    for (int u = 0; u < g.n; ++u) refined[u] = index[sig[u]];
    if (refined == color) return color;
    color = std::move(refined);
  }
}

void search_autos(const Graph& g, const std::vector<int>& color, int depth,
                  std::vector<int>& img, std::uint32_t used,
                  std::vector<Permutation>& out) {
  if (depth == g.n) {
    out.push_back(Permutation{img});
    return;
  }
  for (int w = 0; w < g.n; ++w) {
    if ((used >> w) & 1u) continue;
    if (color[w] != color[depth]) continue;
    bool ok = true;
    for (int u = 0; u < depth && ok; ++u)
      if (((g.adj[depth] >> u) & 1u) != ((g.adj[w] >> img[u]) & 1u)) ok = false;
    if (!ok) continue;
    img[depth] = w;
    search_autos(g, color, depth + 1, img, used | (1u << w), out);
  }
}

}  // namespace

PermGroup automorphism_group(const Graph& g) {
  if (g.n > 12) throw std::invalid_argument("automorphism materialization limited to n <= 12");
  auto color = stable_coloring(g);
  std::vector<int> img(g.n, -1);
  PermGroup grp;
  search_autos(g, color, 0, img, 0, grp.elements);
  std::sort(grp.elements.begin(), grp.elements.end());
  return grp;
}

std::vector<std::vector<int>> vertex_orbits(const Graph& g, const PermGroup& grp) {
  std::vector<bool> seen(g.n, false);
  std::vector<std::vector<int>> orbits;
  for (int u = 0; u < g.n; ++u) {
    if (seen[u]) continue;
    std::set<int> orbit;
    for (const auto& p : grp.elements) orbit.insert(p.img[u]);
    std::vector<int> o;
    for (int v : orbit) {
      seen[v] = true;
      o.push_back(v + 1);
    }
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::vector<std::vector<std::pair<int, int>>> edge_orbits(const Graph& g,
                                                          const PermGroup& grp) {
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<std::pair<int, int>>> orbits;
  for (auto e : g.edges) {
    if (seen.count(e)) continue;
    std::set<std::pair<int, int>> orbit;
    for (const auto& p : grp.elements) {
      int a = p.apply1(e.first), b = p.apply1(e.second);
      orbit.insert({std::min(a, b), std::max(a, b)});
    }
    for (auto f : orbit) seen.insert(f);
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

// -- Edge saturation --------------------------------------------------------

Graph saturate_edges(const Graph& g) {
  Shape s = shape(g);
  if (s.kind == ShapeKind::Disconnected)
    throw std::invalid_argument("saturation requires a connected graph");
  if (s.kind == ShapeKind::Path || s.kind == ShapeKind::Cycle)
    throw std::invalid_argument("saturation excludes path and cycle graphs");
  std::vector<std::uint32_t> adj = g.adj;
  auto connect = [&](int a, int b, bool& changed) {
    if (a != b && !((adj[a] >> b) & 1u)) {
      adj[a] |= 1u << b;
      adj[b] |= 1u << a;
      changed = true;
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    // Paw rule: triangle {a,b,c} plus edge {c,d} -> add {a,d}, {b,d}.
    for (int c = 0; c < g.n; ++c) {
      for (int a = 0; a < g.n; ++a) {
        if (!((adj[c] >> a) & 1u)) continue;
        for (int b = a + 1; b < g.n; ++b) {
          if (!((adj[c] >> b) & 1u) || !((adj[a] >> b) & 1u)) continue;
          std::uint32_t ds = adj[c] & ~((1u << a) | (1u << b));
          for (int d = 0; d < g.n; ++d)
            if ((ds >> d) & 1u) {
              connect(a, d, changed);
              connect(b, d, changed);
            }
        }
      }
    }
    // Y rule: edges {a,c},{b,c},{c,d},{d,e} on five distinct vertices
    // -> add {a,e}, {b,e}.
    for (int c = 0; c < g.n; ++c) {
      for (int a = 0; a < g.n; ++a) {
        if (!((adj[c] >> a) & 1u)) continue;
        for (int b = a + 1; b < g.n; ++b) {
          if (!((adj[c] >> b) & 1u)) continue;
          for (int d = 0; d < g.n; ++d) {
            if (d == a || d == b || !((adj[c] >> d) & 1u)) continue;
            for (int e = 0; e < g.n; ++e) {
              if (e == a || e == b || e == c || !((adj[d] >> e) & 1u)) continue;
              connect(a, e, changed);
              connect(b, e, changed);
            }
          }
        }
      }
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((adj[u] >> v) & 1u) edges.emplace_back(u + 1, v + 1);
  return Graph::make(g.n, std::move(edges));
}

// -- graph6 -----------------------------------------------------------------

Graph graph_from_graph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  int n = static_cast<int>(static_cast<unsigned char>(s[0])) - 63;
  if (n < 1 || n > 62) throw std::invalid_argument("graph6 vertex count out of range");
  int nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() != 1 + nbytes) throw std::invalid_argument("graph6 length mismatch");
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int c = static_cast<int>(static_cast<unsigned char>(s[1 + bit / 6])) - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6 byte out of range");
      if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(i + 1, j + 1);
    }
  return Graph::make(n, std::move(edges));
}

std::string graph_to_graph6(const Graph& g) {
  if (g.n > 62) throw std::invalid_argument("graph6 limited to n <= 62");
  int nbits = g.n * (g.n - 1) / 2;
  std::string out(1 + (nbits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(g.n + 63);
  int bit = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i + 1, j + 1))
        out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
  return out;
}

// -- Canonical form and enumeration -----------------------------------------

namespace {

// Depth-first minimization of the upper-triangle encoding.  New label `depth`
// is assigned to an unused original vertex; the bits x(0,depth)..x(depth-1,depth)
// extend the prefix.  Bit significance: x(0,1) is most significant.
struct CanonSearch {
  const Graph* g;
  int n;
  std::uint64_t best;       // best complete code found so far
  int total_bits;
  std::vector<int> lab;     // lab[new] = original vertex (0-based)

  void run(int depth, std::uint64_t prefix, int bits, std::uint32_t used) {
    if (depth == n) {
      if (prefix < best) best = prefix;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1u) continue;
      std::uint64_t ext = prefix;
      for (int i = 0; i < depth; ++i) {
        ext = (ext << 1) |
              (((g->adj[w] >> lab[i]) & 1u) ? 1u : 0u);
      }
      int nb = bits + depth;
      // Compare against the corresponding prefix of best.
      if (nb > 0 && ext > (best >> (total_bits - nb))) continue;
      lab[depth] = w;
      run(depth + 1, ext, nb, used | (1u << w));
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.n > 11) throw std::invalid_argument("canonical code limited to n <= 11");
  CanonSearch cs;
  cs.g = &g;
  cs.n = g.n;
  cs.total_bits = g.n * (g.n - 1) / 2;
  cs.best = ~0ULL >> (64 - std::max(cs.total_bits, 1));
  if (cs.total_bits == 0) return 0;
  cs.lab.assign(g.n, -1);
  cs.run(0, 0, 0, 0);
  return cs.best;
}

namespace {

Graph graph_from_code(int n, std::uint64_t code) {
  int total = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  // Bit order matches CanonSearch: x(0,1) most significant, column-major.
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((code >> (total - 1 - bit)) & 1u) edges.emplace_back(i + 1, j + 1);
  return Graph::make(n, std::move(edges));
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration limited to 1 <= n <= 8");
  if (n == 1) return {Graph::make(1, {})};
  // Every connected graph on n vertices arises from a connected graph on n-1
  // vertices (delete a non-cut vertex, e.g. a spanning-tree leaf) by attaching
  // one vertex to a nonempty neighbor set.
  std::vector<Graph> prev = connected_graphs(n - 1);
  std::set<std::uint64_t> codes;
  for (const Graph& h : prev) {
    for (std::uint32_t s = 1; s < (1u << (n - 1)); ++s) {
      std::vector<std::pair<int, int>> edges = h.edges;
      for (int v = 0; v < n - 1; ++v)
        if ((s >> v) & 1u) edges.emplace_back(v + 1, n);
      codes.insert(canonical_code(Graph::make(n, std::move(edges))));
    }
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t c : codes) out.push_back(graph_from_code(n, c));
  return out;
}

}  // namespace qaoadla
