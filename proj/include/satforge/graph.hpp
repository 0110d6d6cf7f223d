#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "satforge/parallel.hpp"
#include "satforge/residues.hpp"

namespace satforge {

// Finite simple undirected graph on vertices 0..n-1 with bitset adjacency
// rows. Rows are word-aligned so the saturation kernels can intersect
// neighborhoods with plain 64-bit ANDs.
class Graph {
 public:
  explicit Graph(uint32_t n);

  uint32_t order() const { return n_; }
  uint32_t row_words() const { return row_words_; }

  bool has_edge(uint32_t u, uint32_t v) const {
    return rows_[size_t{u} * row_words_ + (v >> 6)] >> (v & 63) & 1;
  }
  void add_edge(uint32_t u, uint32_t v);
  void remove_edge(uint32_t u, uint32_t v);

  std::span<const uint64_t> row(uint32_t u) const {
    return {rows_.data() + size_t{u} * row_words_, row_words_};
  }

  uint32_t degree(uint32_t u) const;
  uint64_t edge_count() const;
  std::optional<uint32_t> regular_degree() const;
  std::vector<uint32_t> neighbors(uint32_t u) const;
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph& o) const = default;

 private:
  uint32_t n_;
  uint32_t row_words_;
  std::vector<uint64_t> rows_;
};

// Circulant: u ~ v iff (v - u) mod n in S. |S|-regular and vertex-transitive.
Graph cayley_graph(const SymmetricSet& s);
Graph empty_graph(uint32_t n);
Graph complete_graph(uint32_t n);
// Kneser graph K(5,2) on the lexicographically ordered 2-subsets of {0..4}.
Graph petersen();

// Disjoint union plus all cross edges; G's labels first, H's shifted by |G|.
Graph join(const Graph& g, const Graph& h);
// Each vertex v becomes the independent class {v*t, ..., v*t + t - 1};
// classes fully joined iff the originals are adjacent.
Graph blow_up(const Graph& g, uint32_t t);

// Branch and bound on bitset neighborhoods; returns some clique with s
// vertices, or nullopt. Deterministic for a fixed graph.
std::optional<std::vector<uint32_t>> contains_clique(const Graph& g, uint32_t s);
// Same, with candidates restricted to the given vertex mask (row_words words).
std::optional<std::vector<uint32_t>> clique_in_mask(const Graph& g,
                                                    std::span<const uint64_t> mask,
                                                    uint32_t s);

// Is there a path with exactly len edges and distinct vertices from u to v?
// DFS with a node budget; past it the check switches to an exact
// meet-in-the-middle enumeration, so nonexistence never degenerates into a
// d^len tree walk.
bool exists_path_of_length(const Graph& g, uint32_t u, uint32_t v, uint32_t len);
std::optional<std::vector<uint32_t>> find_path_of_length(const Graph& g, uint32_t u,
                                                         uint32_t v, uint32_t len);

// Some cycle with exactly m vertices, as the vertex sequence, or nullopt.
// Checks edge by edge for a (m-1)-path between the endpoints; edges proven
// cycle-free are dropped from the working copy before later checks.
std::optional<std::vector<uint32_t>> contains_cycle(const Graph& g, uint32_t m,
                                                    Exec exec = Exec::parallel);

}  // namespace satforge
