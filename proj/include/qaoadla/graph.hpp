// Graph model and structural algorithms.
//
// Conventions:
//   - Vertices are 1-indexed in every public interface and report (vertex set
//     {1..n}); adjacency bitmasks use bit (u-1) internally.
//   - Edges are stored as (u, v) with u < v, sorted ascending.
//   - Permutations store 0-based images internally (img[u-1] = sigma(u)-1).

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qaoadla {

/// Simple undirected graph without loops or multi-edges on {1..n}.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (u,v), u<v, ascending
  std::vector<std::uint32_t> adj;          // adj[u-1] bit (v-1) set iff {u,v} in E

  /// Validates (1 <= u < v <= n, no duplicates), sorts edges, builds masks.
  /// Throws std::invalid_argument on loops, duplicates, or range errors.
  static Graph make(int n, std::vector<std::pair<int, int>> edges);

  bool has_edge(int u, int v) const {
    return u != v && (adj[u - 1] >> (v - 1)) & 1u;
  }
  int degree(int u) const { return std::popcount(adj[u - 1]); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// -- Families --------------------------------------------------------------

Graph path_graph(int n);                    // P_n: edges {v, v+1}
Graph cycle_graph(int n);                   // C_n, n >= 3
Graph complete_graph(int n);                // K_n
Graph complete_bipartite(int a, int b);     // K_{a,b}: part {1..a} vs {a+1..a+b}

// -- Structural queries -----------------------------------------------------

enum class ShapeKind { Disconnected, Path, Cycle, Bipartite, NonBipartite };

/// Shape classification.  Path/Cycle take precedence over Bipartite; for every
/// bipartite graph (whatever the kind) part1/part2 hold the unique-for-connected
/// 2-coloring with part1 containing vertex 1.
struct Shape {
  ShapeKind kind = ShapeKind::Disconnected;
  std::vector<int> part1, part2;
};

Shape shape(const Graph& g);
bool is_connected(const Graph& g);

// -- Permutations and automorphisms ----------------------------------------

/// Bijection on {1..n}; img[u-1] = sigma(u)-1 (0-based internally).
struct Permutation {
  std::vector<int> img;

  int n() const { return static_cast<int>(img.size()); }
  int apply1(int u) const { return img[u - 1] + 1; }  // 1-based action
  bool is_identity() const;
  static Permutation identity(int n);
  Permutation compose(const Permutation& other) const;  // this after other
  Permutation inverse() const;
  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }
};

/// Cycle structure of a permutation: b[a] = number of length-a cycles.
struct CycleType {
  std::vector<int> b;       // index 0 unused; sum over a of a*b[a] == n
  int cycle_count = 0;      // c(sigma) = total number of cycles
  bool all_even = false;    // true iff every cycle has even length
};

CycleType cycle_data(const Permutation& p);

/// Materialized permutation group (assumed small; see automorphism_group).
struct PermGroup {
  std::vector<Permutation> elements;  // sorted by image array; identity first
  std::size_t order() const { return elements.size(); }
};

/// Exact full automorphism group by backtracking over the degree-refinement
/// partition; deterministic element order (lexicographic by image).
/// Requires n <= 12 (materialization bound); throws beyond.
PermGroup automorphism_group(const Graph& g);

/// Orbit partitions under the group action; each orbit sorted ascending and
/// orbits ordered by smallest element.
std::vector<std::vector<int>> vertex_orbits(const Graph& g, const PermGroup& grp);
std::vector<std::vector<std::pair<int, int>>> edge_orbits(const Graph& g,
                                                          const PermGroup& grp);

// -- Edge saturation --------------------------------------------------------

/// Repeatedly applies the two local edge-addition rules (Y configuration on
/// five vertices, paw configuration on four) until no rule fires.  For
/// connected non-path non-cycle inputs the fixpoint is K_n (non-bipartite
/// case) or the complete bipartite graph on the bipartition (bipartite case).
/// Throws if g is disconnected or is a path/cycle graph.
Graph saturate_edges(const Graph& g);

// -- graph6 -----------------------------------------------------------------

/// Standard graph6: byte 0 is n+63 (n <= 62); then ceil(n(n-1)/2 / 6) bytes,
/// each value-63 giving 6 bits of the upper-triangle adjacency in column-major
/// order x(0,1), x(0,2), x(1,2), x(0,3), ..., zero-padded.
Graph graph_from_graph6(const std::string& s);
std::string graph_to_graph6(const Graph& g);

// -- Isomorph-free enumeration ----------------------------------------------

/// Minimum upper-triangle adjacency encoding over all vertex relabelings
/// (bit k = presence of the k-th column-major upper-triangle pair).
std::uint64_t canonical_code(const Graph& g);

/// All connected graphs on n vertices up to isomorphism (n <= 8), each in a
/// canonical labeling, ordered by canonical code.  Counts follow the known
/// sequence 1, 1, 2, 6, 21, 112, 853, 11117.
std::vector<Graph> connected_graphs(int n);

}  // namespace qaoadla
