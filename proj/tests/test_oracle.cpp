#include <doctest.h>

#include <algorithm>
#include <random>

#include "buchi/errors.hpp"
#include "buchi/generators.hpp"
#include "buchi/oracle.hpp"
#include "buchi/provider.hpp"
#include "exhaustive_oracle.hpp"
#include "test_util.hpp"

using namespace buchi;

TEST_CASE("accepting self-loop is a counterexample; DAGs are empty") {
  auto loop = testing::make_gba(1, 1, 0, {{0, 0}}, {{0, 1}});
  auto v = oracle_emptiness(loop);
  REQUIRE_FALSE(v.is_empty());
  ExplicitProvider p(loop);
  CHECK(validate_lasso(p, v));

  auto dag = testing::make_gba(4, 1, 0, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                               {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(oracle_emptiness(dag).is_empty());
}

TEST_CASE("oracle agrees with exhaustive enumeration on all instances with n <= 8") {
  for (std::uint64_t seed = 0; seed < 800; ++seed) {
    GenConfig cfg;
    cfg.states = 1 + static_cast<std::uint32_t>(seed % 8);
    cfg.avg_out_degree = 0.4 + (seed % 8) * 0.35;
    cfg.conditions = static_cast<std::uint32_t>(seed % 4);  // k = 0..3
    cfg.acc_density = 0.1 + (seed % 5) * 0.22;
    cfg.seed = seed * 977 + 3;
    auto g = random_gba(cfg);
    CHECK(oracle_emptiness(g).is_empty() == !testing::exhaustive_nonempty(g));
  }
}

TEST_CASE("oracle verdict is independent of successor order") {
  std::mt19937_64 rng(31337);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.states = 2 + static_cast<std::uint32_t>(seed % 25);
    cfg.avg_out_degree = 1.8;
    cfg.conditions = 1 + static_cast<std::uint32_t>(seed % 2);
    cfg.acc_density = 0.3;
    cfg.seed = seed;
    auto g = random_gba(cfg);
    bool base = oracle_emptiness(g).is_empty();
    for (int perm = 0; perm < 5; ++perm) {
      auto h = g;
      for (auto& list : h.succ)
        std::shuffle(list.begin(), list.end(), rng);
      CHECK(oracle_emptiness(h).is_empty() == base);
    }
  }
}

TEST_CASE("oracle lassos validate; mutated lassos do not") {
  std::uint32_t nonempty_seen = 0;
  for (std::uint64_t seed = 0; seed < 200 || nonempty_seen < 40; ++seed) {
    REQUIRE(seed < 5000);
    GenConfig cfg;
    cfg.states = 2 + static_cast<std::uint32_t>(seed % 20);
    cfg.avg_out_degree = 1.5;
    cfg.conditions = 1 + static_cast<std::uint32_t>(seed % 3);
    cfg.acc_density = 0.25;
    cfg.seed = seed * 7 + 1;
    auto g = random_gba(cfg);
    auto v = oracle_emptiness(g);
    if (v.is_empty())
      continue;
    ++nonempty_seen;
    ExplicitProvider p(g);
    CHECK(validate_lasso(p, v));

    // redirect one loop state to a non-successor
    const Lasso& l = *v.lasso();
    Lasso broken = l;
    std::uint32_t target = broken.loop.front().as_state();
    std::uint32_t bogus = (target + 1 + g.state_count()) % g.state_count();
    // make sure the replacement truly is a non-successor of the predecessor
    std::uint32_t pred =
        broken.loop.size() > 1 ? broken.loop[broken.loop.size() - 2].as_state()
                               : broken.prefix.back().as_state();
    const auto& plist = g.succ[pred];
    bool breaks = std::find(plist.begin(), plist.end(), bogus) == plist.end();
    if (breaks) {
      broken.loop.back() = StateDescriptor::of_state(bogus);
      CHECK_FALSE(validate_lasso(p, Verdict::counterexample(broken)));
    }
  }
}

TEST_CASE("validate_lasso checks all structural invariants") {
  auto g = testing::make_gba(3, 2, 0, {{0, 1}, {1, 2}, {2, 1}}, {{1, 1}, {2, 2}});
  ExplicitProvider p(g);

  auto lasso = [&](std::vector<std::uint32_t> pre, std::vector<std::uint32_t> loop) {
    Lasso l;
    for (auto s : pre)
      l.prefix.push_back(StateDescriptor::of_state(s));
    for (auto s : loop)
      l.loop.push_back(StateDescriptor::of_state(s));
    return Verdict::counterexample(std::move(l));
  };

  CHECK(validate_lasso(p, lasso({0}, {1, 2})));
  CHECK_FALSE(validate_lasso(p, lasso({1}, {2, 1})));     // prefix must start at init
  CHECK_FALSE(validate_lasso(p, lasso({0}, {2, 1})));     // 0 -> 2 is not an edge
  CHECK_FALSE(validate_lasso(p, lasso({0}, {1})));        // loop does not close (1 -> 1 missing)
  CHECK_FALSE(validate_lasso(p, lasso({0, 1}, {2})));     // loop misses condition 1
  CHECK_THROWS_AS(validate_lasso(p, Verdict::empty()), ContractError);
}

TEST_CASE("oracle lasso covers every condition on multi-condition instances") {
  // two conditions witnessed by different states of one cycle
  auto g = testing::make_gba(3, 2, 0, {{0, 1}, {1, 2}, {2, 1}}, {{1, 1}, {2, 2}});
  auto v = oracle_emptiness(g);
  REQUIRE_FALSE(v.is_empty());
  ExplicitProvider p(g);
  CHECK(validate_lasso(p, v));
  bool saw1 = false, saw2 = false;
  for (const auto& d : v.lasso()->loop) {
    saw1 |= g.acc[d.as_state()].contains(1);
    saw2 |= g.acc[d.as_state()].contains(2);
  }
  CHECK(saw1);
  CHECK(saw2);
}
