#include "satforge/saturation.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace satforge {

std::string Target::str() const {
  return (kind == Kind::clique ? "clique:" : "cycle:") + std::to_string(size);
}

Target Target::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("Target: expected clique:<s> or cycle:<m>");
  std::string head = s.substr(0, colon);
  uint32_t size = static_cast<uint32_t>(std::stoul(s.substr(colon + 1)));
  if (head == "clique") return {Kind::clique, size};
  if (head == "cycle") return {Kind::cycle, size};
  throw std::invalid_argument("Target: unknown kind " + head);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::saturated: return "saturated";
    case Verdict::contains_forbidden: return "contains_forbidden";
    case Verdict::non_edge_unwitnessed: return "non_edge_unwitnessed";
  }
  return "?";
}

nlohmann::json SaturationVerdict::to_json() const {
  nlohmann::json j{{"target", target.str()},
                   {"verdict", to_string(verdict)},
                   {"certificate", certificate},
                   {"edges", edge_count}};
  j["degree"] = regular ? nlohmann::json(*regular) : nlohmann::json(nullptr);
  return j;
}

namespace {

// Scans non-adjacent pairs (u < v, lexicographic) with the given witness
// predicate; returns the least failing pair, encoded u*n+v, or UINT64_MAX.
// Parallel mode reduces to the minimum failing index, so the certificate is
// deterministic either way.
template <typename Witnessed>
uint64_t scan_non_edges(const Graph& g, Exec exec, Witnessed&& witnessed) {
  const uint32_t n = g.order();
  const uint64_t none = ~uint64_t{0};

  if (exec == Exec::serial || max_threads() == 1) {
    for (uint32_t u = 0; u < n; ++u)
      for (uint32_t v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        if (!witnessed(u, v)) return uint64_t{u} * n + v;
      }
    return none;
  }

  std::atomic<uint64_t> best{none};
#pragma omp parallel for schedule(dynamic, 1)
  for (long lu = 0; lu < static_cast<long>(n); ++lu) {
    uint32_t u = static_cast<uint32_t>(lu);
    if (uint64_t{u} * n >= best.load(std::memory_order_relaxed)) continue;
    for (uint32_t v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      uint64_t code = uint64_t{u} * n + v;
      if (code >= best.load(std::memory_order_relaxed)) break;
      if (!witnessed(u, v)) {
        uint64_t cur = best.load(std::memory_order_relaxed);
        while (code < cur && !best.compare_exchange_weak(cur, code)) {
        }
        break;
      }
    }
  }
  return best.load();
}

}  // namespace

SaturationVerdict is_clique_saturated(const Graph& g, uint32_t s, Exec exec) {
  if (s < 3) throw std::invalid_argument("is_clique_saturated: s must be >= 3");
  SaturationVerdict out{.target = {Target::Kind::clique, s},
                        .verdict = Verdict::saturated,
                        .certificate = {},
                        .regular = g.regular_degree(),
                        .edge_count = g.edge_count()};

  if (auto clique = contains_clique(g, s)) {
    out.verdict = Verdict::contains_forbidden;
    out.certificate = *clique;
    return out;
  }

  const uint32_t W = g.row_words();
  uint64_t fail = scan_non_edges(g, exec, [&](uint32_t u, uint32_t v) {
    std::vector<uint64_t> common(W);
    auto ru = g.row(u), rv = g.row(v);
    for (uint32_t w = 0; w < W; ++w) common[w] = ru[w] & rv[w];
    return clique_in_mask(g, common, s - 2).has_value();
  });
  if (fail != ~uint64_t{0}) {
    out.verdict = Verdict::non_edge_unwitnessed;
    out.certificate = {static_cast<uint32_t>(fail / g.order()),
                       static_cast<uint32_t>(fail % g.order())};
  }
  return out;
}

SaturationVerdict is_cycle_saturated(const Graph& g, uint32_t m, Exec exec) {
  if (m < 3) throw std::invalid_argument("is_cycle_saturated: m must be >= 3");
  SaturationVerdict out{.target = {Target::Kind::cycle, m},
                        .verdict = Verdict::saturated,
                        .certificate = {},
                        .regular = g.regular_degree(),
                        .edge_count = g.edge_count()};

  if (auto cyc = contains_cycle(g, m, exec)) {
    out.verdict = Verdict::contains_forbidden;
    out.certificate = *cyc;
    return out;
  }

  uint64_t fail = scan_non_edges(g, exec, [&](uint32_t u, uint32_t v) {
    return exists_path_of_length(g, u, v, m - 1);
  });
  if (fail != ~uint64_t{0}) {
    out.verdict = Verdict::non_edge_unwitnessed;
    out.certificate = {static_cast<uint32_t>(fail / g.order()),
                       static_cast<uint32_t>(fail % g.order())};
  }
  return out;
}

SaturationVerdict check_saturation(const Graph& g, Target t, Exec exec) {
  return t.kind == Target::Kind::clique ? is_clique_saturated(g, t.size, exec)
                                        : is_cycle_saturated(g, t.size, exec);
}

}  // namespace satforge
