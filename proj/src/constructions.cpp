#include "satforge/constructions.hpp"

#include <cstdlib>
#include <fstream>

namespace satforge {

const char* family_name(Family f) {
  switch (f) {
    case Family::cayley: return "cayley";
    case Family::join: return "join";
    case Family::blow_up: return "blow_up";
    case Family::empty: return "empty";
    case Family::petersen: return "petersen";
    case Family::g3: return "g3";
    case Family::h4: return "h4";
    case Family::gprime: return "gprime";
    case Family::super_sum: return "super_sum";
    case Family::recursive_clique: return "recursive_clique";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (int f = 0; f <= static_cast<int>(Family::recursive_clique); ++f)
    if (s == family_name(static_cast<Family>(f))) return static_cast<Family>(f);
  throw std::invalid_argument("unknown construction family: " + s);
}

nlohmann::json ConstructionSpec::to_json() const {
  nlohmann::json j{{"family", family_name(family)}};
  if (!params.empty()) j["params"] = params;
  if (set) j["set"] = set->to_json();
  if (!children.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : children) arr.push_back(c.to_json());
    j["children"] = arr;
  }
  return j;
}

ConstructionSpec ConstructionSpec::from_json(const nlohmann::json& j) {
  ConstructionSpec s;
  s.family = family_from_string(j.at("family").get<std::string>());
  if (j.contains("params")) s.params = j.at("params");
  if (j.contains("set")) s.set = SymmetricSet::from_json(j.at("set"));
  if (j.contains("children"))
    for (const auto& c : j.at("children")) s.children.push_back(from_json(c));
  return s;
}

BaseStore BaseStore::from_env() {
  if (const char* dir = std::getenv("SATFORGE_BASE_DIR")) return BaseStore(dir);
  return BaseStore("data/bases");
}

std::optional<SymmetricSet> BaseStore::lookup(uint32_t n, uint32_t s) const {
  auto path = dir_ / (std::to_string(n) + "_" + std::to_string(s) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  in >> j;
  return SymmetricSet::from_json(j);
}

void BaseStore::save(uint32_t n, uint32_t s, const SymmetricSet& set) const {
  std::filesystem::create_directories(dir_);
  auto path = dir_ / (std::to_string(n) + "_" + std::to_string(s) + ".json");
  nlohmann::json j = set.to_json();
  j["s"] = s;
  std::ofstream out(path);
  out << j.dump() << "\n";
}

namespace {

Construction cayley_construction(SymmetricSet set, Target target,
                                 uint32_t claimed_degree, std::string family,
                                 nlohmann::json params, Family tag) {
  Graph g = cayley_graph(set);
  ConstructionSpec spec{.family = tag, .params = params, .set = std::nullopt, .children = {}};
  if (tag == Family::cayley) spec.set = set;
  return Construction{.graph = std::move(g),
                      .spec = std::move(spec),
                      .target = target,
                      .claimed_degree = claimed_degree,
                      .family = std::move(family),
                      .params = std::move(params)};
}

SymmetricSet g3_set(uint32_t k, uint32_t r) {
  uint32_t n = 3 * k + r;
  std::vector<uint32_t> xs;
  if (r == 2) {
    for (uint32_t x = k + 1; x <= 2 * k + 1; ++x) xs.push_back(x);
  } else if (r == 1) {
    xs = {k, 2 * k + 1};
    for (uint32_t x = k + 2; x <= 2 * k - 1; ++x) xs.push_back(x);
  } else {
    xs = {k - 1, k + 1, 2 * k - 1, 2 * k + 1};
    for (uint32_t x = k + 3; x <= 2 * k - 3; ++x) xs.push_back(x);
  }
  return SymmetricSet(n, std::move(xs));
}

}  // namespace

Construction g3(uint32_t k, uint32_t r) {
  if (r > 2) throw UnsupportedParameters("g3: r must be 0, 1 or 2");
  if (r == 2 && k < 1) throw UnsupportedParameters("g3: r=2 requires k >= 1");
  if (r == 1 && k < 3) throw UnsupportedParameters("g3: r=1 requires k >= 3");
  if (r == 0 && k < 7) throw UnsupportedParameters("g3: r=0 requires k >= 7");
  nlohmann::json params{{"k", k}, {"r", r}};
  uint32_t degree = k + r - 1;
  if (r == 1 && k == 3) {
    // the 3k+1 = 10 case is the Petersen graph, not a circulant
    Construction c = petersen_construction();
    c.spec = ConstructionSpec{.family = Family::g3, .params = params};
    c.family = "g3";
    c.params = params;
    return c;
  }
  return cayley_construction(g3_set(k, r), {Target::Kind::clique, 3}, degree, "g3",
                             params, Family::g3);
}

Construction h4(uint32_t k) {
  if (k < 3) throw UnsupportedParameters("h4: k >= 3 required (n = 5k+4)");
  uint32_t n = 5 * k + 4;
  std::vector<uint32_t> xs{1, 2, n - 1, n - 2};
  for (uint32_t x = 6; x <= 5 * (k - 1) + 3; ++x)
    if (x % 5 == 1 || x % 5 == 3) xs.push_back(x);
  return cayley_construction(SymmetricSet(n, std::move(xs)),
                             {Target::Kind::clique, 4}, 2 * k + 2, "h4",
                             {{"k", k}}, Family::h4);
}

Construction gprime(uint32_t k) {
  if (k < 9) throw UnsupportedParameters("gprime: k >= 9 required");
  uint32_t n = 3 * k + 2;
  std::vector<uint32_t> xs{k - 1, k + 1, k + 3, 2 * k - 1, 2 * k + 1, 2 * k + 3};
  for (uint32_t x = k + 5; x <= 2 * k - 3; ++x) xs.push_back(x);
  nlohmann::json params{{"k", k}, {"substitution", "k+2 -> k+1"}};
  Construction c = cayley_construction(SymmetricSet(n, std::move(xs)),
                                       {Target::Kind::clique, 3}, k - 1, "gprime",
                                       params, Family::gprime);
  SaturationVerdict check = is_clique_saturated(c.graph, 3);
  if (!check.saturated())
    throw ConstructionDiscrepancy(
        "gprime(" + std::to_string(k) + "): repaired set is not K3-saturated", check);
  return c;
}

namespace {

Construction join_constructions(Construction a, Construction b, Target target,
                                uint32_t claimed_degree, std::string family,
                                nlohmann::json params) {
  Graph g = join(a.graph, b.graph);
  ConstructionSpec spec{.family = Family::join};
  spec.children = {std::move(a.spec), std::move(b.spec)};
  return Construction{.graph = std::move(g),
                      .spec = std::move(spec),
                      .target = target,
                      .claimed_degree = claimed_degree,
                      .family = std::move(family),
                      .params = std::move(params)};
}

ConstructionSpec empty_spec(uint32_t n) {
  return ConstructionSpec{.family = Family::empty, .params = {{"n", n}}};
}

}  // namespace

Construction k4_family(uint32_t n, const BaseStore* store) {
  if (n < 36) throw UnsupportedParameters("k4_family: n >= 36 required");
  nlohmann::json params{{"n", n}};
  uint32_t rem = n % 5;

  if (rem == 4) {
    Construction c = h4((n - 4) / 5);
    c.family = "k4";
    c.params = params;
    return c;
  }
  if (rem != 0) {
    // n = 5k + r + 1: join of g3(k, r) with an independent set of size 2k+1
    uint32_t r = rem - 1;
    uint32_t k = (n - r - 1) / 5;
    Construction base = g3(k, r);
    uint32_t nG = 3 * k + r;
    Construction c = join_constructions(std::move(base),
                                        Construction{.graph = empty_graph(2 * k + 1),
                                                     .spec = empty_spec(2 * k + 1),
                                                     .target = {Target::Kind::clique, 4},
                                                     .claimed_degree = 0,
                                                     .family = "empty",
                                                     .params = {}},
                                        {Target::Kind::clique, 4}, nG, "k4", params);
    return c;
  }

  // n divisible by 5: blow up a search-found base graph on a divisor of n.
  if (store) {
    std::vector<uint32_t> divisors;
    for (uint32_t b = 1; b <= n; ++b)
      if (n % b == 0) divisors.push_back(b);
    for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
      uint32_t b = *it;
      if (b < 5) continue;
      if (auto set = store->lookup(b, 4)) {
        uint32_t t = n / b;
        uint32_t d = static_cast<uint32_t>(set->size());
        Graph base = cayley_graph(*set);
        ConstructionSpec cspec{.family = Family::cayley, .set = *set};
        ConstructionSpec spec{.family = Family::blow_up, .params = {{"t", t}}};
        spec.children = {std::move(cspec)};
        params["base_n"] = b;
        params["t"] = t;
        return Construction{.graph = blow_up(base, t),
                            .spec = std::move(spec),
                            .target = {Target::Kind::clique, 4},
                            .claimed_degree = d * t,
                            .family = "k4",
                            .params = params};
      }
    }
  }
  throw UnsupportedParameters(
      "k4_family: n = " + std::to_string(n) +
      " is divisible by 5 and the base store has no graph on any divisor; run the "
      "clique-circulants search to populate it");
}

Construction k5_family(uint32_t n) {
  nlohmann::json params{{"n", n}};
  if (n % 6 == 5) {
    if (n < 59)
      throw UnsupportedParameters("k5_family: n = 5 (mod 6) requires n >= 59");
    uint32_t k = (n - 5) / 6;  // k >= 9
    Construction a = gprime(k);
    Construction b = g3(k + 1, 0);
    return join_constructions(std::move(a), std::move(b),
                              {Target::Kind::clique, 5}, 4 * k + 2, "k5", params);
  }
  if (n < 42)
    throw UnsupportedParameters("k5_family: n >= 42 required (n >= 59 when n = 5 mod 6)");
  uint32_t m = n % 6;
  uint32_t k = (n - m) / 6;  // k >= 7
  uint32_t r1 = std::min<uint32_t>(m, 2), r2 = m - r1;
  Construction a = g3(k, r1);
  Construction b = g3(k, r2);
  return join_constructions(std::move(a), std::move(b), {Target::Kind::clique, 5},
                            4 * k + r1 + r2 - 1, "k5", params);
}

namespace {

// Theorem "all large values", by induction on delta; r is split greedily
// with the g3 factor taking min(r, 2).
Construction large_part_i(uint32_t delta, uint32_t k, uint32_t r) {
  if (r > 2 * delta) throw UnsupportedParameters("large_clique_family: r out of range");
  if (delta == 1) return g3(k, r);
  uint32_t r1 = std::min<uint32_t>(r, 2), r2 = r - r1;
  Construction a = g3(k, r1);
  Construction b = large_part_i(delta - 1, k, r2);
  uint32_t degree = (3 * delta - 2) * k + r - 1;
  return join_constructions(std::move(a), std::move(b),
                            {Target::Kind::clique, 2 * delta + 1}, degree, "large-clique",
                            {{"delta", delta}, {"k", k}, {"r", r}, {"part", 1}});
}

Construction large_part_ii(uint32_t delta, uint32_t k, uint32_t r) {
  if (r < 1 || r > 2 * delta + 1)
    throw UnsupportedParameters("large_clique_family: r out of range");
  if (delta == 1) {
    // base case: the all-K4 join construction on 5k+r vertices
    Construction base = g3(k, r - 1);
    return join_constructions(std::move(base),
                              Construction{.graph = empty_graph(2 * k + 1),
                                           .spec = empty_spec(2 * k + 1),
                                           .target = {Target::Kind::clique, 4},
                                           .claimed_degree = 0,
                                           .family = "empty",
                                           .params = {}},
                              {Target::Kind::clique, 4}, 3 * k + r - 1, "large-clique",
                              {{"delta", delta}, {"k", k}, {"r", r}, {"part", 2}});
  }
  uint32_t r1 = std::min<uint32_t>(r - 1, 2), r2 = r - r1;
  Construction a = g3(k, r1);
  Construction b = large_part_ii(delta - 1, k, r2);
  uint32_t degree = 3 * delta * k + r - 1;
  return join_constructions(std::move(a), std::move(b),
                            {Target::Kind::clique, 2 * delta + 2}, degree, "large-clique",
                            {{"delta", delta}, {"k", k}, {"r", r}, {"part", 2}});
}

}  // namespace

Construction large_clique_family(uint32_t delta, uint32_t k, uint32_t r, int part) {
  if (delta < 1) throw UnsupportedParameters("large_clique_family: delta >= 1");
  if (k < 7) throw UnsupportedParameters("large_clique_family: k >= 7 required");
  if (part != 1 && part != 2)
    throw UnsupportedParameters("large_clique_family: part must be 1 or 2");
  Construction c = part == 1 ? large_part_i(delta, k, r) : large_part_ii(delta, k, r);
  nlohmann::json params{{"delta", delta}, {"k", k}, {"r", r}, {"part", part}};
  ConstructionSpec wrapped{.family = Family::recursive_clique, .params = params};
  wrapped.children = {std::move(c.spec)};
  c.spec = std::move(wrapped);
  c.family = "large-clique";
  c.params = params;
  return c;
}

Construction c_odd_cycle(uint32_t alpha, uint32_t k) {
  SymmetricSet s = super_sum_set(alpha, k);
  nlohmann::json params{{"alpha", alpha}, {"k", k}};
  return cayley_construction(std::move(s), {Target::Kind::cycle, 2 * alpha + 3},
                             2 * (k + 1), "odd-cycle", params, Family::super_sum);
}

Construction petersen_construction() {
  return Construction{.graph = petersen(),
                      .spec = ConstructionSpec{.family = Family::petersen},
                      .target = {Target::Kind::clique, 3},
                      .claimed_degree = 3,
                      .family = "petersen",
                      .params = nlohmann::json::object()};
}

Graph build_spec(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::cayley:
      if (!spec.set) throw std::invalid_argument("cayley spec without set");
      return cayley_graph(*spec.set);
    case Family::join: {
      if (spec.children.size() != 2) throw std::invalid_argument("join needs 2 children");
      return join(build_spec(spec.children[0]), build_spec(spec.children[1]));
    }
    case Family::blow_up: {
      if (spec.children.size() != 1)
        throw std::invalid_argument("blow_up needs 1 child");
      return blow_up(build_spec(spec.children[0]), spec.params.at("t").get<uint32_t>());
    }
    case Family::empty: return empty_graph(spec.params.at("n").get<uint32_t>());
    case Family::petersen: return petersen();
    case Family::g3:
      return g3(spec.params.at("k").get<uint32_t>(), spec.params.at("r").get<uint32_t>())
          .graph;
    case Family::h4: return h4(spec.params.at("k").get<uint32_t>()).graph;
    case Family::gprime: return gprime(spec.params.at("k").get<uint32_t>()).graph;
    case Family::super_sum:
      return cayley_graph(super_sum_set(spec.params.at("alpha").get<uint32_t>(),
                                        spec.params.at("k").get<uint32_t>()));
    case Family::recursive_clique:
      if (spec.children.size() != 1)
        throw std::invalid_argument("recursive_clique needs 1 child");
      return build_spec(spec.children[0]);
  }
  throw std::invalid_argument("build_spec: bad family");
}

nlohmann::json verify_construction(const Construction& c, Exec exec) {
  SaturationVerdict v = check_saturation(c.graph, c.target, exec);
  bool claimed_ok = v.saturated() && v.regular && *v.regular == c.claimed_degree;
  nlohmann::json j{{"family", c.family},
                   {"params", c.params},
                   {"n", c.graph.order()},
                   {"degree", v.regular ? nlohmann::json(*v.regular) : nlohmann::json(nullptr)},
                   {"edges", v.edge_count},
                   {"target", c.target.str()},
                   {"verdict", to_string(v.verdict)},
                   {"certificate", v.certificate},
                   {"claimed_degree", c.claimed_degree},
                   {"claimed_ok", claimed_ok},
                   {"spec", c.spec.to_json()}};
  return j;
}

nlohmann::json verify_construction(const ConstructionSpec& spec, Target target,
                                   Exec exec) {
  Graph g = build_spec(spec);
  SaturationVerdict v = check_saturation(g, target, exec);
  return nlohmann::json{
      {"family", family_name(spec.family)},
      {"params", spec.params},
      {"n", g.order()},
      {"degree", v.regular ? nlohmann::json(*v.regular) : nlohmann::json(nullptr)},
      {"edges", v.edge_count},
      {"target", target.str()},
      {"verdict", to_string(v.verdict)},
      {"certificate", v.certificate},
      {"spec", spec.to_json()}};
}

}  // namespace satforge
