#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "satforge/saturation.hpp"

using namespace satforge;

namespace {

Graph cycle_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_bipartite(uint32_t a, uint32_t b) {
  return join(empty_graph(a), empty_graph(b));
}

}  // namespace

TEST_CASE("Target parsing") {
  CHECK(Target::parse("clique:4") == Target{Target::Kind::clique, 4});
  CHECK(Target::parse("cycle:5").str() == "cycle:5");
  CHECK_THROWS_AS(Target::parse("girth:5"), std::invalid_argument);
  CHECK_THROWS_AS(Target::parse("clique4"), std::invalid_argument);
}

TEST_CASE("clique saturation: known graphs") {
  SaturationVerdict p3 = is_clique_saturated(petersen(), 3);
  CHECK(p3.saturated());
  CHECK(p3.regular == 3);
  CHECK(p3.edge_count == 15);

  SaturationVerdict c5 = is_clique_saturated(cycle_graph(5), 3);
  CHECK(c5.saturated());
  CHECK(c5.regular == 2);

  // Petersen is K4-free but not K4-saturated: common neighborhoods of
  // non-adjacent pairs are single vertices (girth 5), never an edge
  SaturationVerdict p4 = is_clique_saturated(petersen(), 4);
  CHECK(p4.verdict == Verdict::non_edge_unwitnessed);
  REQUIRE(p4.certificate.size() == 2);
  CHECK(!petersen().has_edge(p4.certificate[0], p4.certificate[1]));

  SaturationVerdict k4 = is_clique_saturated(complete_graph(4), 4);
  CHECK(k4.verdict == Verdict::contains_forbidden);
  CHECK(k4.certificate == std::vector<uint32_t>{0, 1, 2, 3});

  CHECK_THROWS_AS(is_clique_saturated(petersen(), 2), std::invalid_argument);
}

TEST_CASE("cycle saturation: known graphs") {
  SaturationVerdict v = is_cycle_saturated(cayley_graph(SymmetricSet(17, {1, 3, 14, 16})), 5);
  CHECK(v.saturated());
  CHECK(v.regular == 4);

  CHECK(is_cycle_saturated(complete_bipartite(3, 3), 5).saturated());
  CHECK(is_cycle_saturated(complete_bipartite(4, 7), 5).saturated());

  SaturationVerdict own = is_cycle_saturated(cycle_graph(5), 5);
  CHECK(own.verdict == Verdict::contains_forbidden);
  CHECK(own.certificate.size() == 5);

  CHECK_THROWS_AS(is_cycle_saturated(cycle_graph(5), 2), std::invalid_argument);
}

TEST_CASE("verdicts agree with the add-edge oracle on all graphs up to 5 vertices") {
  for (uint32_t n = 3; n <= 5; ++n) {
    uint64_t graphs = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t code = 0; code < graphs; ++code) {
      Graph g = oracle::graph_from_code(n, code);
      for (uint32_t s : {3u, 4u}) {
        Target t{Target::Kind::clique, s};
        CHECK(is_clique_saturated(g, s, Exec::serial).verdict == oracle::saturation(g, t));
      }
      for (uint32_t m : {3u, 4u, 5u}) {
        Target t{Target::Kind::cycle, m};
        CHECK(is_cycle_saturated(g, m, Exec::serial).verdict == oracle::saturation(g, t));
      }
    }
  }
}

TEST_CASE("verdicts agree with the oracle on random graphs; serial == parallel") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    uint32_t n = 5 + rng() % 4;  // up to 8
    Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * (rng() % 4) / 3.0);
    uint32_t s = 3 + rng() % 2;
    uint32_t m = 3 + rng() % 3;

    SaturationVerdict cs = is_clique_saturated(g, s, Exec::serial);
    SaturationVerdict cp = is_clique_saturated(g, s, Exec::parallel);
    CHECK(cs.verdict == oracle::saturation(g, {Target::Kind::clique, s}));
    CHECK(cp.verdict == cs.verdict);

    SaturationVerdict ys = is_cycle_saturated(g, m, Exec::serial);
    SaturationVerdict yp = is_cycle_saturated(g, m, Exec::parallel);
    CHECK(ys.verdict == oracle::saturation(g, {Target::Kind::cycle, m}));
    CHECK(yp.verdict == ys.verdict);
  }
}

TEST_CASE("monotone sanity: adding any non-edge to a saturated graph creates F") {
  std::mt19937 rng(42);
  int saturated_seen = 0;
  for (int trial = 0; trial < 4000 && saturated_seen < 25; ++trial) {
    uint32_t n = 4 + rng() % 4;
    Graph g = oracle::random_graph(rng, n, 0.3 + 0.5 * (rng() % 3) / 2.0);
    Target t = rng() % 2 ? Target{Target::Kind::clique, 3 + rng() % 2}
                         : Target{Target::Kind::cycle, 3 + rng() % 3};
    if (!check_saturation(g, t, Exec::serial).saturated()) continue;
    ++saturated_seen;
    for (uint32_t u = 0; u < n; ++u)
      for (uint32_t v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        Graph h = g;
        h.add_edge(u, v);
        CHECK(check_saturation(h, t, Exec::serial).verdict ==
              Verdict::contains_forbidden);
      }
  }
  CHECK(saturated_seen >= 10);
}

TEST_CASE("C3 and K3 saturation coincide") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng, 4 + rng() % 5, 0.2 + 0.6 * (rng() % 4) / 3.0);
    CHECK(is_clique_saturated(g, 3, Exec::serial).verdict ==
          is_cycle_saturated(g, 3, Exec::serial).verdict);
  }
}

TEST_CASE("hypotheses-to-graph bridge") {
  struct Inst {
    SymmetricSet s;
    uint32_t k;
  };
  std::vector<Inst> instances{{SymmetricSet(17, {1, 3, 14, 16}), 4},
                              {SymmetricSet(17, {6, 7, 8, 9, 10, 11}), 2},
                              {super_sum_set(2, 1), 6},
                              {SymmetricSet(21, {1, 6, 8, 13, 15, 20}), 4}};
  for (const auto& [s, k] : instances) {
    REQUIRE(check_construction_hypotheses(s, k).passes());
    SaturationVerdict v = is_cycle_saturated(cayley_graph(s), k + 1);
    CHECK(v.saturated());
    CHECK(v.regular == s.size());
  }
}

TEST_CASE("serial certificates are lexicographically least") {
  // a path P4 is K3-free; both (0,2) and (1,3)-style chords matter. The
  // serial scan must report the least failing non-edge.
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  SaturationVerdict v = is_clique_saturated(p4, 3, Exec::serial);
  CHECK(v.verdict == Verdict::non_edge_unwitnessed);
  CHECK(v.certificate == std::vector<uint32_t>{0, 3});  // (0,2),(1,3) witnessed; (0,3) not
}
