#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "satforge/graph.hpp"
#include "satforge/parallel.hpp"

namespace satforge {

// What "F" is: a clique K_s or a cycle C_m.
struct Target {
  enum class Kind { clique, cycle };
  Kind kind;
  uint32_t size;

  std::string str() const;                    // "clique:4", "cycle:5"
  static Target parse(const std::string& s);  // throws std::invalid_argument
  bool operator==(const Target&) const = default;
};

enum class Verdict { saturated, contains_forbidden, non_edge_unwitnessed };
const char* to_string(Verdict v);

// Machine-checkable outcome of a saturation test. The certificate is the
// forbidden subgraph's vertices, or the failing non-edge {u, v}; empty when
// saturated.
struct SaturationVerdict {
  Target target;
  Verdict verdict;
  std::vector<uint32_t> certificate;
  std::optional<uint32_t> regular;
  uint64_t edge_count = 0;

  bool saturated() const { return verdict == Verdict::saturated; }
  nlohmann::json to_json() const;
};

// G is K_s-saturated iff G is K_s-free and every non-adjacent pair has a
// K_{s-2} inside its common neighborhood. The witness check runs on the
// common-neighborhood mask, never on a mutated G+uv.
SaturationVerdict is_clique_saturated(const Graph& g, uint32_t s,
                                      Exec exec = Exec::parallel);

// G is C_m-saturated iff G is C_m-free and every non-adjacent pair is joined
// by a path with exactly m-1 edges.
SaturationVerdict is_cycle_saturated(const Graph& g, uint32_t m,
                                     Exec exec = Exec::parallel);

SaturationVerdict check_saturation(const Graph& g, Target t, Exec exec = Exec::parallel);

}  // namespace satforge
