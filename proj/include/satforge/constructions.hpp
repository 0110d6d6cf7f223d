#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "satforge/graph.hpp"
#include "satforge/residues.hpp"
#include "satforge/saturation.hpp"

namespace satforge {

enum class Family {
  cayley, join, blow_up, empty, petersen,
  g3, h4, gprime, super_sum, recursive_clique,
};
const char* family_name(Family f);
Family family_from_string(const std::string& s);

// Symbolic description of how a graph was built. Replaying a spec through
// build_spec reproduces the graph with identical labels.
struct ConstructionSpec {
  Family family;
  nlohmann::json params = nlohmann::json::object();
  std::optional<SymmetricSet> set;          // family == cayley
  std::vector<ConstructionSpec> children;   // join, blow_up, recursive_clique

  nlohmann::json to_json() const;
  static ConstructionSpec from_json(const nlohmann::json& j);
};

// A built graph together with its provenance and the claimed
// (target, degree) the verifier checks it against.
struct Construction {
  Graph graph;
  ConstructionSpec spec;
  Target target;
  uint32_t claimed_degree;
  std::string family;      // report name: "g3", "k4", ...
  nlohmann::json params;   // report parameters
};

// Parameters outside the thresholds the constructions are proven for.
struct UnsupportedParameters : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A builder whose claimed property failed its computational post-check.
struct ConstructionDiscrepancy : std::runtime_error {
  SaturationVerdict verdict;
  ConstructionDiscrepancy(const std::string& msg, SaturationVerdict v)
      : std::runtime_error(msg), verdict(std::move(v)) {}
};

// Directory of search-found base graphs, keyed (n, s), consumed by the
// blow-up branch of k4_family. Respects SATFORGE_BASE_DIR.
class BaseStore {
 public:
  explicit BaseStore(std::filesystem::path dir) : dir_(std::move(dir)) {}
  static BaseStore from_env();

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<SymmetricSet> lookup(uint32_t n, uint32_t s) const;
  void save(uint32_t n, uint32_t s, const SymmetricSet& set) const;

 private:
  std::filesystem::path dir_;
};

// K_3-saturated circulants on 3k+r vertices, degree k+(r-1). g3(3,1) is the
// Petersen graph. Thresholds: r=2 needs k>=1, r=1 needs k>=3, r=0 needs k>=7.
Construction g3(uint32_t k, uint32_t r);

// (2k+2)-regular K_4-saturated circulant on 5k+4 vertices, k >= 3.
Construction h4(uint32_t k);

// (k-1)-regular K_3-saturated circulant on 3k+2 vertices, k >= 9. The printed
// connection set is not closed under negation; the builder substitutes k+1
// for k+2 (the unique one-element repair) and then proves K_3-saturation for
// the instance, throwing ConstructionDiscrepancy if that ever fails.
Construction gprime(uint32_t k);

// Regular K_4-saturated graph on n >= 36 vertices. n % 5 in {1,2,3}: join of
// a g3 graph with an independent set; n % 5 == 4: h4; n % 5 == 0: blow-up of
// a stored base graph, or UnsupportedParameters when the store has none.
Construction k4_family(uint32_t n, const BaseStore* store = nullptr);

// Regular K_5-saturated graph: join of two g3 graphs (n >= 42, n % 6 != 5) or
// gprime + g3 (n >= 59, n % 6 == 5).
Construction k5_family(uint32_t n);

// Part (i): K_{2d+1}-saturated on 3dk+r vertices, r in 0..2d.
// Part (ii): K_{2d+2}-saturated on (3d+2)k+r vertices, r in 1..2d+1.
// Requires k >= 7.
Construction large_clique_family(uint32_t delta, uint32_t k, uint32_t r, int part);

// C_{2a+3}-saturated 2(k+1)-regular circulant over super_sum_set(a, k).
Construction c_odd_cycle(uint32_t alpha, uint32_t k);

Construction petersen_construction();

// Replay a spec into a graph (labels identical to the original build).
Graph build_spec(const ConstructionSpec& spec);

// Build/check report: {"family", "params", "n", "degree", "edges", "target",
// "verdict", "certificate", "claimed_degree", "claimed_ok", "spec"}.
nlohmann::json verify_construction(const Construction& c, Exec exec = Exec::parallel);
nlohmann::json verify_construction(const ConstructionSpec& spec, Target target,
                                   Exec exec = Exec::parallel);

}  // namespace satforge
