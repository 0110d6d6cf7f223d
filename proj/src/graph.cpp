#include "satforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace satforge {

namespace {

template <typename Fn>
void for_each_bit(std::span<const uint64_t> words, Fn&& fn) {
  for (size_t w = 0; w < words.size(); ++w) {
    uint64_t x = words[w];
    while (x) {
      fn(static_cast<uint32_t>(w * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

size_t popcount_words(std::span<const uint64_t> words) {
  size_t c = 0;
  for (uint64_t w : words) c += std::popcount(w);
  return c;
}

}  // namespace

Graph::Graph(uint32_t n) : n_(n), row_words_((n + 63) / 64), rows_(size_t{n} * row_words_, 0) {
  if (n == 0) throw std::invalid_argument("Graph: order must be >= 1");
}

void Graph::add_edge(uint32_t u, uint32_t v) {
  if (u == v) throw std::invalid_argument("Graph: no loops");
  rows_[size_t{u} * row_words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  rows_[size_t{v} * row_words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::remove_edge(uint32_t u, uint32_t v) {
  rows_[size_t{u} * row_words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
  rows_[size_t{v} * row_words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
}

uint32_t Graph::degree(uint32_t u) const { return popcount_words(row(u)); }

uint64_t Graph::edge_count() const {
  uint64_t total = 0;
  for (uint32_t u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::optional<uint32_t> Graph::regular_degree() const {
  uint32_t d = degree(0);
  for (uint32_t u = 1; u < n_; ++u)
    if (degree(u) != d) return std::nullopt;
  return d;
}

std::vector<uint32_t> Graph::neighbors(uint32_t u) const {
  std::vector<uint32_t> out;
  for_each_bit(row(u), [&](uint32_t v) { out.push_back(v); });
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t u = 0; u < n_; ++u)
    for_each_bit(row(u), [&](uint32_t v) {
      if (v > u) out.emplace_back(u, v);
    });
  return out;
}

Graph cayley_graph(const SymmetricSet& s) {
  Graph g(s.modulus());
  const uint32_t n = s.modulus();
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t x : s.elements()) {
      uint32_t v = u + x;
      if (v >= n) v -= n;
      if (v > u) g.add_edge(u, v);
    }
  return g;
}

Graph empty_graph(uint32_t n) { return Graph(n); }

Graph complete_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t a = 0; a < 5; ++a)
    for (uint32_t b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  Graph g(10);
  for (uint32_t i = 0; i < 10; ++i)
    for (uint32_t j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

Graph join(const Graph& g, const Graph& h) {
  const uint32_t ng = g.order(), nh = h.order();
  Graph out(ng + nh);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
  for (uint32_t u = 0; u < ng; ++u)
    for (uint32_t v = 0; v < nh; ++v) out.add_edge(u, ng + v);
  return out;
}

Graph blow_up(const Graph& g, uint32_t t) {
  if (t == 0) throw std::invalid_argument("blow_up: t must be >= 1");
  Graph out(g.order() * t);
  for (auto [u, v] : g.edges())
    for (uint32_t i = 0; i < t; ++i)
      for (uint32_t j = 0; j < t; ++j) out.add_edge(u * t + i, v * t + j);
  return out;
}

// ---------------------------------------------------------------------------
// Clique search: branch and bound with a pivot, straight out of the
// Bron-Kerbosch playbook but stopping at the first clique of the wanted size.

namespace {

struct CliqueSearch {
  const Graph& g;
  uint32_t W;
  uint32_t want;
  std::vector<uint64_t> levels;       // (want+1) candidate sets
  std::vector<uint32_t> chosen;

  CliqueSearch(const Graph& g, uint32_t want)
      : g(g), W(g.row_words()), want(want), levels(size_t{want + 1} * W), chosen(want) {}

  uint64_t* level(uint32_t d) { return levels.data() + size_t{d} * W; }

  bool expand(uint32_t depth) {
    if (depth == want) return true;
    uint64_t* P = level(depth);
    size_t cnt = popcount_words({P, W});
    if (depth + cnt < want) return false;

    // pivot = candidate with the most candidate neighbors
    uint32_t pivot = 0;
    size_t best = 0;
    bool have = false;
    for_each_bit({P, W}, [&](uint32_t u) {
      auto ru = g.row(u);
      size_t overlap = 0;
      for (uint32_t w = 0; w < W; ++w) overlap += std::popcount(P[w] & ru[w]);
      if (!have || overlap > best) {
        have = true;
        best = overlap;
        pivot = u;
      }
    });

    std::vector<uint32_t> ext;
    auto rp = g.row(pivot);
    for (uint32_t w = 0; w < W; ++w) {
      uint64_t x = P[w] & ~rp[w];
      while (x) {
        ext.push_back(w * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
    for (uint32_t v : ext) {
      chosen[depth] = v;
      uint64_t* next = level(depth + 1);
      auto rv = g.row(v);
      for (uint32_t w = 0; w < W; ++w) next[w] = P[w] & rv[w];
      if (expand(depth + 1)) return true;
      P[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<uint32_t>> clique_in_mask(const Graph& g,
                                                    std::span<const uint64_t> mask,
                                                    uint32_t s) {
  if (s == 0) return std::vector<uint32_t>{};
  CliqueSearch cs(g, s);
  std::copy(mask.begin(), mask.end(), cs.level(0));
  if (!cs.expand(0)) return std::nullopt;
  std::vector<uint32_t> witness(cs.chosen.begin(), cs.chosen.begin() + s);
  std::sort(witness.begin(), witness.end());
  return witness;
}

std::optional<std::vector<uint32_t>> contains_clique(const Graph& g, uint32_t s) {
  if (s < 2) throw std::invalid_argument("contains_clique: s must be >= 2");
  if (s > g.order()) return std::nullopt;
  std::vector<uint64_t> all(g.row_words(), ~uint64_t{0});
  uint32_t tail = g.order() & 63;
  if (tail) all.back() = (uint64_t{1} << tail) - 1;
  return clique_in_mask(g, all, s);
}

// ---------------------------------------------------------------------------
// Fixed-length simple paths. Two engines share the work:
//  - a DFS with a node budget and BFS-distance pruning, which settles the
//    common case (paths are plentiful in saturated graphs) in a few hundred
//    node visits;
//  - an exact meet-in-the-middle enumeration of self-avoiding half-walks,
//    used past the budget and for the cycle scan, where nonexistence is the
//    expected outcome and the full d^len DFS tree would be ruinous.

namespace {

std::vector<uint32_t> bfs_distances(const Graph& g, uint32_t src) {
  const uint32_t inf = ~uint32_t{0};
  std::vector<uint32_t> dist(g.order(), inf);
  std::vector<uint32_t> frontier{src};
  dist[src] = 0;
  while (!frontier.empty()) {
    std::vector<uint32_t> next;
    for (uint32_t u : frontier)
      for_each_bit(g.row(u), [&](uint32_t v) {
        if (dist[v] == inf) {
          dist[v] = dist[u] + 1;
          next.push_back(v);
        }
      });
    frontier = std::move(next);
  }
  return dist;
}

struct PathDfs {
  const Graph& g;
  uint32_t target;
  std::vector<uint32_t> dist;       // BFS distances from target
  std::vector<uint64_t> visited;
  std::vector<uint32_t> path;
  uint64_t budget;
  bool aborted = false;

  PathDfs(const Graph& g, uint32_t src, uint32_t target, uint64_t budget)
      : g(g), target(target), dist(bfs_distances(g, target)),
        visited(g.row_words(), 0), budget(budget) {
    visited[src >> 6] |= uint64_t{1} << (src & 63);
    path.push_back(src);
  }

  bool seen(uint32_t x) const { return visited[x >> 6] >> (x & 63) & 1; }

  bool run(uint32_t pos, uint32_t remaining) {
    if (budget == 0) {
      aborted = true;
      return false;
    }
    --budget;
    if (remaining == 0) return pos == target;
    if (dist[pos] > remaining) return false;
    bool found = false;
    for_each_bit(g.row(pos), [&](uint32_t w) {
      if (found || aborted || seen(w)) return;
      if (remaining > 1 && w == target) return;  // target must come last
      visited[w >> 6] |= uint64_t{1} << (w & 63);
      path.push_back(w);
      if (run(w, remaining - 1)) {
        found = true;
        return;
      }
      path.pop_back();
      visited[w >> 6] &= ~(uint64_t{1} << (w & 63));
    });
    return found;
  }
};

// All self-avoiding walks of length hlen from start, stored flat.
struct WalkTable {
  uint32_t W = 0;
  uint32_t hlen = 0;
  uint32_t count = 0;
  bool truncated = false;
  std::vector<uint64_t> masks;
  std::vector<uint16_t> ends;
  std::vector<uint16_t> seqs;             // count x (hlen+1), only if need_seq
  std::vector<uint32_t> bucket_start;     // by endpoint, size n+1
  std::vector<uint32_t> order;
};

constexpr uint32_t kWalkTableCap = 1u << 23;

struct WalkCollector {
  const Graph& g;
  WalkTable& t;
  bool need_seq;
  std::vector<uint64_t> visited;
  std::vector<uint16_t> stack;

  WalkCollector(const Graph& g, WalkTable& t, bool need_seq)
      : g(g), t(t), need_seq(need_seq), visited(g.row_words(), 0) {}

  bool seen(uint32_t x) const { return visited[x >> 6] >> (x & 63) & 1; }

  void run(uint32_t pos, uint32_t depth) {
    if (t.truncated) return;
    if (depth == t.hlen) {
      if (t.count >= kWalkTableCap) {
        t.truncated = true;
        return;
      }
      t.masks.insert(t.masks.end(), visited.begin(), visited.end());
      t.ends.push_back(static_cast<uint16_t>(pos));
      if (need_seq) t.seqs.insert(t.seqs.end(), stack.begin(), stack.end());
      ++t.count;
      return;
    }
    for_each_bit(g.row(pos), [&](uint32_t w) {
      if (t.truncated || seen(w)) return;
      visited[w >> 6] |= uint64_t{1} << (w & 63);
      stack.push_back(static_cast<uint16_t>(w));
      run(w, depth + 1);
      stack.pop_back();
      visited[w >> 6] &= ~(uint64_t{1} << (w & 63));
    });
  }
};

// Walks that touch `forbidden` can never pair up into a valid path (it is the
// far endpoint, always inside the other side's mask), so they are pruned at
// the source.
bool enumerate_walks(const Graph& g, uint32_t start, uint32_t hlen, bool need_seq,
                     WalkTable& t, uint32_t forbidden) {
  t.W = g.row_words();
  t.hlen = hlen;
  t.count = 0;
  t.truncated = false;
  t.masks.clear();
  t.ends.clear();
  t.seqs.clear();
  WalkCollector wc(g, t, need_seq);
  wc.visited[start >> 6] |= uint64_t{1} << (start & 63);
  wc.visited[forbidden >> 6] |= uint64_t{1} << (forbidden & 63);
  wc.stack.push_back(static_cast<uint16_t>(start));
  wc.run(start, 0);
  for (size_t i = 0; i < t.count; ++i)
    t.masks[i * t.W + (forbidden >> 6)] &= ~(uint64_t{1} << (forbidden & 63));
  return !t.truncated;
}

void index_by_endpoint(const Graph& g, WalkTable& t) {
  const uint32_t n = g.order();
  t.bucket_start.assign(n + 1, 0);
  for (uint32_t i = 0; i < t.count; ++i) ++t.bucket_start[t.ends[i] + 1];
  for (uint32_t v = 0; v < n; ++v) t.bucket_start[v + 1] += t.bucket_start[v];
  t.order.resize(t.count);
  std::vector<uint32_t> fill(t.bucket_start.begin(), t.bucket_start.end() - 1);
  for (uint32_t i = 0; i < t.count; ++i) t.order[fill[t.ends[i]]++] = i;
}

// Exact: is there a simple path with len edges from u to v? Optionally
// reconstructs the vertex sequence. Enumerates half-walks from both sides and
// pairs them on a shared endpoint with otherwise disjoint visited sets.
std::optional<std::vector<uint32_t>> mitm_path(const Graph& g, uint32_t u, uint32_t v,
                                               uint32_t len, bool need_seq) {
  const uint32_t W = g.row_words();
  uint32_t h1 = len / 2, h2 = len - h1;
  WalkTable A, B;
  if (!enumerate_walks(g, u, h1, need_seq, A, v) ||
      !enumerate_walks(g, v, h2, need_seq, B, u)) {
    // Table blew the cap; fall back to the exhaustive DFS.
    PathDfs dfs(g, u, v, ~uint64_t{0});
    if (!dfs.run(u, len)) return std::nullopt;
    return dfs.path;
  }
  index_by_endpoint(g, B);

  for (uint32_t ia = 0; ia < A.count; ++ia) {
    uint32_t mid = A.ends[ia];
    const uint64_t* ma = A.masks.data() + size_t{ia} * W;
    for (uint32_t bi = B.bucket_start[mid]; bi < B.bucket_start[mid + 1]; ++bi) {
      uint32_t ib = B.order[bi];
      const uint64_t* mb = B.masks.data() + size_t{ib} * W;
      bool ok = true;
      for (uint32_t w = 0; w < W; ++w) {
        uint64_t x = ma[w] & mb[w];
        uint64_t want = (mid >> 6 == w) ? uint64_t{1} << (mid & 63) : 0;
        if (x != want) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (!need_seq) return std::vector<uint32_t>{};
      std::vector<uint32_t> seq;
      const uint16_t* sa = A.seqs.data() + size_t{ia} * (h1 + 1);
      const uint16_t* sb = B.seqs.data() + size_t{ib} * (h2 + 1);
      for (uint32_t i = 0; i <= h1; ++i) seq.push_back(sa[i]);
      for (uint32_t i = h2; i-- > 0;) seq.push_back(sb[i]);
      return seq;
    }
  }
  return std::nullopt;
}

constexpr uint64_t kPathDfsBudget = 1u << 17;

std::optional<std::vector<uint32_t>> path_of_length(const Graph& g, uint32_t u,
                                                    uint32_t v, uint32_t len,
                                                    uint64_t dfs_budget,
                                                    bool need_seq) {
  if (u == v) throw std::invalid_argument("path_of_length: u and v must differ");
  if (len == 0) throw std::invalid_argument("path_of_length: len must be >= 1");
  if (len == 1)
    return g.has_edge(u, v) ? std::optional(std::vector<uint32_t>{u, v}) : std::nullopt;
  if (len >= g.order()) return std::nullopt;  // needs len+1 distinct vertices
  if (dfs_budget > 0) {
    PathDfs dfs(g, u, v, dfs_budget);
    if (dfs.run(u, len)) return dfs.path;
    if (!dfs.aborted) return std::nullopt;
  }
  return mitm_path(g, u, v, len, need_seq);
}

}  // namespace

bool exists_path_of_length(const Graph& g, uint32_t u, uint32_t v, uint32_t len) {
  return path_of_length(g, u, v, len, kPathDfsBudget, false).has_value();
}

std::optional<std::vector<uint32_t>> find_path_of_length(const Graph& g, uint32_t u,
                                                         uint32_t v, uint32_t len) {
  return path_of_length(g, u, v, len, kPathDfsBudget, true);
}

std::optional<std::vector<uint32_t>> contains_cycle(const Graph& g, uint32_t m,
                                                    Exec exec) {
  if (m < 3) throw std::invalid_argument("contains_cycle: m must be >= 3");
  if (m > g.order()) return std::nullopt;

  // Working copy. An edge with no m-cycle through it (in the current copy)
  // cannot be part of an undiscovered m-cycle, so it is dropped; later edge
  // checks then run on a sparser graph. For each edge the (m-1)-path search
  // goes straight to meet-in-the-middle with a token DFS budget, since
  // nonexistence is the expected outcome here.
  Graph h = g;
  auto edge_list = g.edges();
  const uint64_t budget = 2048;

  if (exec == Exec::serial || max_threads() == 1) {
    for (auto [u, v] : edge_list) {
      if (auto p = path_of_length(h, u, v, m - 1, budget, true)) return p;
      h.remove_edge(u, v);
    }
    return std::nullopt;
  }

  const size_t chunk = std::max<size_t>(16, size_t{4} * max_threads());
  for (size_t base = 0; base < edge_list.size(); base += chunk) {
    size_t end = std::min(edge_list.size(), base + chunk);
    std::vector<std::optional<std::vector<uint32_t>>> found(end - base);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(end - base); ++i) {
      auto [u, v] = edge_list[base + i];
      found[i] = path_of_length(h, u, v, m - 1, budget, true);
    }
    for (auto& f : found)
      if (f) return f;
    for (size_t i = base; i < end; ++i)
      h.remove_edge(edge_list[i].first, edge_list[i].second);
  }
  return std::nullopt;
}

}  // namespace satforge
