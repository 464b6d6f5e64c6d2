#include "ccflow/generators.hpp"
#include "ccflow/seeding.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ccflow;
using namespace ccflow::testutil;

TEST_SUITE_BEGIN("seeding");

namespace {

bool clustered_invariant_holds(const Graph& g, const SeedSet& seeds) {
  NodeId count = 0;
  const auto component = connected_components(g, &count);
  std::vector<std::size_t> component_size(count, 0);
  for (NodeId v = 0; v < g.node_count(); ++v) ++component_size[component[v]];

  std::vector<char> member(g.node_count(), 0);
  for (const NodeId s : seeds.members) member[s] = 1;
  for (const NodeId s : seeds.members) {
    if (component_size[component[s]] == 1) continue;
    bool has_seed_neighbor = false;
    for (const NodeId u : g.neighbors(s)) {
      if (member[u]) {
        has_seed_neighbor = true;
        break;
      }
    }
    if (!has_seed_neighbor) return false;
  }
  return true;
}

} // namespace

TEST_CASE("random seed set sizes are exact") {
  const Graph g = watts_strogatz(200, 6, 0.1, 1);
  Rng rng(5);
  CHECK(random_seed_set(g, 1.0, rng).members.size() == 200);
  CHECK(random_seed_set(g, 0.05, rng).members.size() == 10);
  CHECK(random_seed_set(g, 0.001, rng).members.size() == 1);  // rounded up, >= 1
}

TEST_CASE("identical streams give identical seed sets") {
  const Graph g = watts_strogatz(100, 4, 0.2, 2);
  Rng a(99), b(99);
  CHECK(random_seed_set(g, 0.1, a).members == random_seed_set(g, 0.1, b).members);
  Rng c(99), d(99);
  CHECK(random_clustered_seed_set(g, 0.1, c).members ==
        random_clustered_seed_set(g, 0.1, d).members);
}

TEST_CASE("seed fraction out of range is a parameter error") {
  const Graph g = path_graph(5);
  Rng rng(1);
  CHECK_THROWS_AS(random_seed_set(g, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(random_seed_set(g, 1.2, rng), std::invalid_argument);
  CHECK_THROWS_AS(random_clustered_seed_set(g, -0.5, rng), std::invalid_argument);
}

TEST_CASE("minimal clustered set is an edge's endpoints") {
  const Graph g = cycle_graph(10);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const SeedSet seeds = random_clustered_seed_set(g, 0.2, rng);  // size 2
    REQUIRE(seeds.members.size() == 2);
    CHECK(g.has_edge(seeds.members[0], seeds.members[1]));
  }
}

TEST_CASE("clustered seeds on the reference ring lattice keep the invariant") {
  const Graph g = watts_strogatz(20, 4, 0.0, 1);
  Rng rng(17);
  for (int draw = 0; draw < 1000; ++draw) {
    const SeedSet seeds = random_clustered_seed_set(g, 0.25, rng);
    REQUIRE(seeds.members.size() == 5);
    CHECK(clustered_invariant_holds(g, seeds));
  }
}

TEST_CASE("full-fraction clustered seeding selects everything") {
  const Graph g = watts_strogatz(30, 4, 0.3, 8);
  Rng rng(4);
  const SeedSet seeds = random_clustered_seed_set(g, 1.0, rng);
  CHECK(seeds.members.size() == 30);
}

TEST_CASE("clustered invariant holds across random connected graphs and fractions") {
  Rng master(2024);
  for (int round = 0; round < 300; ++round) {
    const NodeId n = 8 + static_cast<NodeId>(master.below(40));
    const double edge_p = 0.05 + master.unit() * 0.3;
    Rng graph_rng(master.next_u64());
    const Graph g = giant_component(gnp(n, edge_p, graph_rng));
    const double p = 0.1 + master.unit() * 0.9;
    if (g.node_count() < 2 || seed_target_size(g, p) < 2) continue;
    Rng rng(master.next_u64());
    const SeedSet seeds = random_clustered_seed_set(g, p, rng);
    CHECK(seeds.members.size() == seed_target_size(g, p));
    CHECK(clustered_invariant_holds(g, seeds));
  }
}

TEST_CASE("multi-patch growth restarts in fresh components") {
  // Two disconnected communities force at least one restart for fractions
  // above one half.
  const auto two = two_disconnected_ws(30, 4, 0.1, 5);
  Rng rng(6);
  for (int draw = 0; draw < 200; ++draw) {
    const SeedSet seeds = random_clustered_seed_set(two.graph, 0.8, rng);
    CHECK(seeds.members.size() == 48);
    CHECK(clustered_invariant_holds(two.graph, seeds));
  }
}

TEST_SUITE_END();
