#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "satforge/saturation.hpp"
#include "satforge/search.hpp"

using namespace satforge;

namespace {

bool hits_include(const SearchResult& r, const std::vector<uint32_t>& xs) {
  for (const auto& h : r.hits)
    if (h.elements() == xs) return true;
  return false;
}

}  // namespace

TEST_CASE("cycle-sets search finds the published generators") {
  SearchResult r17 = find_cycle_sets(17, 4, SearchMode::first_hit);
  REQUIRE(r17.hits.size() == 1);
  CHECK(r17.hits[0].elements() == std::vector<uint32_t>{1, 3, 14, 16});

  SearchResult r21 = find_cycle_sets(21, 4, SearchMode::all_hits, 5);
  CHECK(hits_include(r21, {1, 6, 8, 13, 15, 20}));
  CHECK(r21.exhausted);

  CHECK_THROWS_AS(find_cycle_sets(17, 3), std::invalid_argument);
}

TEST_CASE("cycle-sets search certifies the published exceptions empty") {
  for (uint32_t n : {19u, 31u}) {
    SearchResult r = find_cycle_sets(n, 4, SearchMode::certify_empty);
    CHECK(r.exhausted);
    CHECK(r.hits.empty());
    CHECK(r.nodes_expanded == (uint64_t{1} << (n / 2)) - 1);
  }
}

TEST_CASE("certify-empty rejections confirmed by tuple brute force on a sample") {
  // re-check a random sample of the n=19 rejections with the literal
  // tuple-based definitions; none may be a false rejection
  std::mt19937 rng(7);
  uint32_t n = 19, reps = 9;
  int rechecked = 0;
  for (uint32_t mask = 1; mask < (1u << reps); ++mask) {
    if (rng() % 100 >= 2) continue;  // ~2% sample
    std::vector<uint32_t> xs;
    for (uint32_t i = 0; i < reps; ++i)
      if (mask >> i & 1) {
        xs.push_back(i + 1);
        xs.push_back(n - (i + 1));
      }
    std::sort(xs.begin(), xs.end());
    auto rk = oracle::restricted_sumset(n, xs, 4);
    std::set<uint32_t> expected;
    for (uint32_t x = 1; x < n; ++x) expected.insert(x);
    for (uint32_t x : xs) expected.erase(x);
    bool zero_free = !oracle::sumset(n, xs, 5).count(0);
    CHECK(!(rk == expected && zero_free));  // brute force also rejects
    ++rechecked;
  }
  CHECK(rechecked >= 5);
}

TEST_CASE("clique-circulants search") {
  SearchResult r19 = find_clique_circulants(19, 4);
  CHECK(r19.exhausted);
  CHECK(hits_include(r19, {1, 2, 6, 8, 11, 13, 17, 18}));  // h4(3) rediscovered

  SearchResult r10 = find_clique_circulants(10, 3);
  CHECK(r10.exhausted);  // full enumeration over 2^5 orbit subsets
  for (const auto& h : r10.hits)
    CHECK(is_clique_saturated(cayley_graph(h), 3).saturated());

  SearchResult r17 = find_clique_circulants(17, 3);
  CHECK(hits_include(r17, {6, 7, 8, 9, 10, 11}));
}

TEST_CASE("complete-(k,1) search") {
  SearchResult a = find_complete_k1_sets(17, 4);
  CHECK(hits_include(a, {1, 3, 14, 16}));
  SearchResult b = find_complete_k1_sets(17, 2);
  CHECK(hits_include(b, {6, 7, 8, 9, 10, 11}));
  SearchResult c = find_complete_k1_sets(5, 2);
  CHECK(hits_include(c, {1, 4}));
}

TEST_CASE("soundness: every hit replays through the full predicate") {
  SearchResult r = find_cycle_sets(27, 4, SearchMode::all_hits, 4);
  CHECK(!r.hits.empty());
  for (const auto& h : r.hits) {
    CHECK(check_construction_hypotheses(h, 4).passes());
    SaturationVerdict v = is_cycle_saturated(cayley_graph(h), 5);
    CHECK(v.saturated());
    CHECK(v.regular == h.size());
  }
  SearchResult q = find_complete_k1_sets(17, 4, SearchMode::all_hits, 3);
  for (const auto& h : q.hits) CHECK(is_complete_kl(h, 4, 1));
}

TEST_CASE("super family appears among the search hits") {
  for (uint32_t k = 1; k <= 3; ++k) {
    SymmetricSet s = super_sum_set(1, k);
    SearchResult r = find_cycle_sets(10 * k + 7, 4, SearchMode::all_hits, k + 1);
    CHECK(hits_include(r, s.elements()));
  }
}

TEST_CASE("budget caps the expansion") {
  SearchResult r = find_cycle_sets(31, 4, SearchMode::all_hits, 0, 40);
  CHECK(!r.exhausted);
  CHECK(r.nodes_expanded <= 40 + max_threads());
}

TEST_CASE("determinism and serial/parallel agreement") {
  SearchResult a = find_cycle_sets(33, 4, SearchMode::all_hits, 3, 0, Exec::serial);
  SearchResult b = find_cycle_sets(33, 4, SearchMode::all_hits, 3, 0, Exec::serial);
  SearchResult c = find_cycle_sets(33, 4, SearchMode::all_hits, 3, 0, Exec::parallel);
  REQUIRE(a.hits.size() == b.hits.size());
  REQUIRE(a.hits.size() == c.hits.size());
  for (size_t i = 0; i < a.hits.size(); ++i) {
    CHECK(a.hits[i] == b.hits[i]);
    CHECK(a.hits[i] == c.hits[i]);
  }
  CHECK(a.nodes_expanded == c.nodes_expanded);
}

TEST_CASE("first-hit returns the least hit of minimum size") {
  SearchResult r = find_cycle_sets(25, 4, SearchMode::first_hit);
  REQUIRE(r.hits.size() == 1);
  SearchResult all = find_cycle_sets(25, 4, SearchMode::all_hits, 5);
  REQUIRE(!all.hits.empty());
  CHECK(r.hits[0] == all.hits[0]);  // all-hits output is (size, lex)-sorted
}

TEST_CASE("search result json") {
  SearchResult r = find_cycle_sets(17, 4, SearchMode::first_hit);
  nlohmann::json j = r.to_json();
  CHECK(j["job"]["n"] == 17);
  CHECK(j["job"]["target"] == "cycle-sets");
  CHECK(j["exhausted"].is_boolean());
  CHECK(j["hits"].size() == 1);
  CHECK(j["hits"][0]["set"] == std::vector<uint32_t>{1, 3, 14, 16});
}

TEST_CASE("table reproduction") {
  TableArtifact art = reproduce_table();
  CHECK(art.ok);
  CHECK(art.rows.size() == 18);  // all odd n in 17..51

  int verified = 0, empty = 0;
  for (const auto& row : art.rows) {
    if (row.listed) {
      CHECK(row.listed_verified);
      ++verified;
    }
    if (row.n == 19 || row.n == 31 || row.n == 35) {
      CHECK(row.certified_empty);
      ++empty;
    } else {
      CHECK(row.search_hit.has_value());
    }
  }
  CHECK(verified == 15);
  CHECK(empty == 3);

  std::string csv = art.to_csv();
  CHECK(csv.find("certified-empty") != std::string::npos);
  CHECK(csv.find("n,listed_set") != std::string::npos);
  CHECK(csv.find("# diff") != std::string::npos);
}
