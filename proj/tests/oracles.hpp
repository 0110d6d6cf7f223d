// Brute-force reference implementations for the tests. Everything here is
// deliberately literal (tuple enumeration, subset enumeration, add-the-edge
// saturation) and shares no code with the library paths it checks.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "satforge/graph.hpp"
#include "satforge/saturation.hpp"

namespace oracle {

// kS by literal enumeration of all |S|^k tuples.
inline std::set<uint32_t> sumset(uint32_t n, const std::vector<uint32_t>& s, uint32_t k) {
  std::set<uint32_t> out;
  std::vector<uint32_t> idx(k, 0);
  while (true) {
    uint64_t total = 0;
    for (uint32_t i = 0; i < k; ++i) total += s[idx[i]];
    out.insert(static_cast<uint32_t>(total % n));
    uint32_t pos = 0;
    while (pos < k && ++idx[pos] == s.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

// R_k(S) by tuple enumeration with the all-pairs consecutive sub-sum test.
inline std::set<uint32_t> restricted_sumset(uint32_t n, const std::vector<uint32_t>& s,
                                            uint32_t k) {
  std::set<uint32_t> out;
  std::vector<uint32_t> idx(k, 0);
  while (true) {
    std::vector<uint32_t> terms(k);
    for (uint32_t i = 0; i < k; ++i) terms[i] = s[idx[i]];
    bool ok = true;
    for (uint32_t i = 0; i < k && ok; ++i) {
      uint64_t sub = 0;
      for (uint32_t j = i; j < k; ++j) {
        sub += terms[j];
        if (j > i && sub % n == 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      uint64_t total = 0;
      for (uint32_t t : terms) total += t;
      out.insert(static_cast<uint32_t>(total % n));
    }
    uint32_t pos = 0;
    while (pos < k && ++idx[pos] == s.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

inline bool next_combination(std::vector<uint32_t>& c, uint32_t n) {
  uint32_t k = c.size();
  for (uint32_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline bool contains_clique(const satforge::Graph& g, uint32_t s) {
  if (s > g.order()) return false;
  std::vector<uint32_t> c(s);
  for (uint32_t i = 0; i < s; ++i) c[i] = i;
  do {
    bool clique = true;
    for (uint32_t i = 0; i < s && clique; ++i)
      for (uint32_t j = i + 1; j < s; ++j)
        if (!g.has_edge(c[i], c[j])) {
          clique = false;
          break;
        }
    if (clique) return true;
  } while (next_combination(c, g.order()));
  return false;
}

inline bool path_search(const satforge::Graph& g, uint32_t pos, uint32_t target,
                        uint32_t remaining, std::vector<bool>& used) {
  if (remaining == 0) return pos == target;
  for (uint32_t w = 0; w < g.order(); ++w) {
    if (used[w] || !g.has_edge(pos, w)) continue;
    used[w] = true;
    if (path_search(g, w, target, remaining - 1, used)) {
      used[w] = false;
      return true;
    }
    used[w] = false;
  }
  return false;
}

inline bool exists_path(const satforge::Graph& g, uint32_t u, uint32_t v, uint32_t len) {
  std::vector<bool> used(g.order(), false);
  used[u] = true;
  return path_search(g, u, v, len, used);
}

// C_m existence: choose m vertices, try every cyclic order.
inline bool contains_cycle(const satforge::Graph& g, uint32_t m) {
  if (m > g.order()) return false;
  std::vector<uint32_t> c(m);
  for (uint32_t i = 0; i < m; ++i) c[i] = i;
  do {
    std::vector<uint32_t> perm(c.begin() + 1, c.end());
    std::sort(perm.begin(), perm.end());
    do {
      bool cyc = g.has_edge(c[0], perm.front()) && g.has_edge(c[0], perm.back());
      for (uint32_t i = 0; i + 1 < perm.size() && cyc; ++i)
        if (!g.has_edge(perm[i], perm[i + 1])) cyc = false;
      if (cyc) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (next_combination(c, g.order()));
  return false;
}

inline bool forbidden_exists(const satforge::Graph& g, satforge::Target t) {
  return t.kind == satforge::Target::Kind::clique ? oracle::contains_clique(g, t.size)
                                                  : oracle::contains_cycle(g, t.size);
}

// The definition, verbatim: F-free, and adding any non-edge creates a copy.
inline satforge::Verdict saturation(const satforge::Graph& g, satforge::Target t) {
  if (forbidden_exists(g, t)) return satforge::Verdict::contains_forbidden;
  for (uint32_t u = 0; u < g.order(); ++u)
    for (uint32_t v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      satforge::Graph h = g;
      h.add_edge(u, v);
      if (!forbidden_exists(h, t)) return satforge::Verdict::non_edge_unwitnessed;
    }
  return satforge::Verdict::saturated;
}

inline satforge::Graph random_graph(std::mt19937& rng, uint32_t n, double p) {
  satforge::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Graph on n vertices whose edge set is the bits of `code` over the
// lexicographic pair order; enumerating code = 0..2^C(n,2)-1 covers all
// labeled graphs.
inline satforge::Graph graph_from_code(uint32_t n, uint64_t code) {
  satforge::Graph g(n);
  uint32_t bit = 0;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) g.add_edge(u, v);
  return g;
}

inline std::vector<uint32_t> random_symmetric_elements(std::mt19937& rng, uint32_t n,
                                                       uint32_t max_pairs) {
  std::uniform_int_distribution<uint32_t> pick(1, n / 2);
  std::set<uint32_t> xs;
  uint32_t pairs = 1 + rng() % max_pairs;
  for (uint32_t i = 0; i < pairs; ++i) {
    uint32_t x = pick(rng);
    xs.insert(x);
    xs.insert(n - x);
  }
  return {xs.begin(), xs.end()};
}

}  // namespace oracle
