#include <doctest.h>

#include "buchi/errors.hpp"
#include "buchi/generators.hpp"
#include "buchi/oracle.hpp"
#include "buchi/scc.hpp"
#include "exhaustive_oracle.hpp"
#include "test_util.hpp"

using namespace buchi;

namespace {

// Independent SCC oracle from the transitive closure: same SCC iff mutually
// reachable.
void check_against_closure(const ExplicitGBA& g) {
  auto sccs = scc_decompose(g);
  auto reach = testing::closure(g);
  auto seen = testing::reachable(g);

  std::vector<std::int32_t> scc_of(g.state_count(), -1);
  for (std::size_t c = 0; c < sccs.size(); ++c)
    for (std::uint32_t s : sccs[c].states)
      scc_of[s] = static_cast<std::int32_t>(c);

  for (std::uint32_t s = 0; s < g.state_count(); ++s)
    CHECK((scc_of[s] >= 0) == (seen[s] != 0));

  for (std::uint32_t a = 0; a < g.state_count(); ++a) {
    if (!seen[a])
      continue;
    for (std::uint32_t b = 0; b < g.state_count(); ++b) {
      if (!seen[b])
        continue;
      bool mutual = reach[a][b] && reach[b][a];
      CHECK((scc_of[a] == scc_of[b]) == mutual);
    }
  }
}

}  // namespace

TEST_CASE("single state without self-loop is one trivial SCC") {
  auto g = testing::make_gba(1, 1, 0, {}, {});
  auto sccs = scc_decompose(g);
  REQUIRE(sccs.size() == 1);
  CHECK_FALSE(sccs[0].nontrivial);
}

TEST_CASE("single state with self-loop is one non-trivial SCC") {
  auto g = testing::make_gba(1, 1, 0, {{0, 0}}, {});
  auto sccs = scc_decompose(g);
  REQUIRE(sccs.size() == 1);
  CHECK(sccs[0].nontrivial);
}

TEST_CASE("two joined 3-cycles decompose into two non-trivial SCCs in reachability order") {
  auto g = testing::make_gba(6, 1, 0,
                             {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}, {});
  auto sccs = scc_decompose(g);
  REQUIRE(sccs.size() == 2);
  CHECK(sccs[0].nontrivial);
  CHECK(sccs[1].nontrivial);
  // completion order: the downstream cycle {3,4,5} closes first
  CHECK(sccs[0].states == std::vector<std::uint32_t>{3, 4, 5});
  CHECK(sccs[1].states == std::vector<std::uint32_t>{0, 1, 2});
  check_against_closure(g);
}

TEST_CASE("decomposition matches the closure oracle on random instances up to n = 100") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenConfig cfg;
    cfg.states = 1 + static_cast<std::uint32_t>(seed * 97 % 100);
    cfg.avg_out_degree = 1.0 + (seed % 5) * 0.5;
    cfg.conditions = 1;
    cfg.acc_density = 0.3;
    cfg.seed = seed;
    check_against_closure(random_gba(cfg));
  }
}

TEST_CASE("unreachable states are not decomposed") {
  // 0 -> 1; 2 and 3 form an unreachable cycle
  auto g = testing::make_gba(4, 1, 0, {{0, 1}, {2, 3}, {3, 2}}, {});
  auto sccs = scc_decompose(g);
  std::size_t total = 0;
  for (const auto& c : sccs)
    total += c.states.size();
  CHECK(total == 2);
}

TEST_CASE("weakness: all states accepting is weak") {
  auto g = testing::make_gba(2, 1, 0, {{0, 1}, {1, 0}}, {{0, 1}, {1, 1}});
  CHECK(is_weak(g));
}

TEST_CASE("weakness: 2-cycle with one accepting state is not weak") {
  auto g = testing::make_gba(2, 1, 0, {{0, 1}, {1, 0}}, {{0, 1}});
  CHECK_FALSE(is_weak(g));
}

TEST_CASE("weakness is undefined for k != 1") {
  auto g = testing::make_gba(1, 2, 0, {{0, 0}}, {{0, 1}});
  CHECK_THROWS_AS(is_weak(g), ContractError);
}

TEST_CASE("weak automata have loops entirely inside or outside the accepting set") {
  // enumerate simple cycles on small weak instances
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg;
    cfg.states = 2 + static_cast<std::uint32_t>(seed % 9);
    cfg.avg_out_degree = 1.4;
    cfg.conditions = 1;
    cfg.acc_density = 0.5;
    cfg.seed = seed;
    auto g = weak_random(cfg);
    REQUIRE(is_weak(g));
    for (const auto& cycle : testing::enumerate_simple_cycles(g)) {
      std::size_t accepting = 0;
      for (std::uint32_t s : cycle)
        if (g.acc[s].contains(1))
          ++accepting;
      CHECK((accepting == 0 || accepting == cycle.size()));
    }
  }
}

TEST_CASE("SCC-based emptiness equals exhaustive lasso enumeration (Facts 2 and 4)") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig cfg;
    cfg.states = 1 + static_cast<std::uint32_t>(seed % 12);
    cfg.avg_out_degree = 0.5 + (seed % 6) * 0.4;
    cfg.conditions = static_cast<std::uint32_t>(seed % 3) + 1;
    cfg.acc_density = 0.15 + (seed % 4) * 0.2;
    cfg.seed = seed * 31 + 5;
    auto g = random_gba(cfg);
    CHECK(oracle_emptiness(g).is_empty() == !testing::exhaustive_nonempty(g));
  }
}
