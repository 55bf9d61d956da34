#include <doctest.h>

#include <sstream>

#include "buchi/errors.hpp"
#include "buchi/generators.hpp"
#include "buchi/oracle.hpp"
#include "buchi/scc.hpp"
#include "test_util.hpp"

using namespace buchi;

TEST_CASE("generators are deterministic in the seed") {
  GenConfig cfg;
  cfg.states = 30;
  cfg.avg_out_degree = 2.0;
  cfg.conditions = 2;
  cfg.acc_density = 0.4;
  cfg.seed = 123;
  CHECK(to_text(random_gba(cfg)) == to_text(random_gba(cfg)));
  cfg.conditions = 1;
  CHECK(to_text(weak_random(cfg)) == to_text(weak_random(cfg)));
  CHECK(to_text(gen_trivial_accepting(12, 5, false)) == to_text(gen_trivial_accepting(12, 5, false)));
  CHECK(to_text(gen_nonacc_scc_chain(4, 3, 9)) == to_text(gen_nonacc_scc_chain(4, 3, 9)));
  cfg.seed = 124;
  CHECK(to_text(weak_random(cfg)) != to_text(weak_random(GenConfig{30, 2.0, 1, 0.4, 123})));
}

TEST_CASE("generator output parses back from its own serialization unchanged") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenConfig cfg;
    cfg.states = 5 + static_cast<std::uint32_t>(seed);
    cfg.avg_out_degree = 1.7;
    cfg.conditions = static_cast<std::uint32_t>(seed % 3);
    cfg.acc_density = 0.5;
    cfg.seed = seed;
    auto g = random_gba(cfg);
    g.validate();
    std::istringstream in(to_text(g));
    auto h = parse_gba(in);
    CHECK(to_text(h) == to_text(g));
  }
}

TEST_CASE("random_gba: zero density is empty; full density with cycles is not") {
  GenConfig cfg;
  cfg.states = 25;
  cfg.avg_out_degree = 2.0;
  cfg.conditions = 1;
  cfg.acc_density = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    cfg.seed = seed;
    CHECK(oracle_emptiness(random_gba(cfg)).is_empty());
  }
  cfg.acc_density = 1.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    cfg.seed = seed;
    auto g = random_gba(cfg);
    // non-empty exactly when some cycle is reachable
    bool has_reachable_cycle = false;
    for (const Scc& c : scc_decompose(g))
      has_reachable_cycle |= c.nontrivial;
    CHECK(oracle_emptiness(g).is_empty() == !has_reachable_cycle);
  }
}

TEST_CASE("weak_random emits weak automata for 100 seeds and sd-friendly structure") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.states = 3 + static_cast<std::uint32_t>(seed % 40);
    cfg.avg_out_degree = 1.6;
    cfg.conditions = 1;
    cfg.acc_density = 0.5;
    cfg.seed = seed;
    auto g = weak_random(cfg);
    g.validate();
    CHECK(is_weak(g));
  }
  GenConfig bad;
  bad.conditions = 2;
  CHECK_THROWS_AS(weak_random(bad), ContractError);
}

TEST_CASE("weak_random with all SCCs accepting and a cycle is non-empty") {
  GenConfig cfg;
  cfg.states = 12;
  cfg.avg_out_degree = 2.0;
  cfg.conditions = 1;
  cfg.acc_density = 1.0;  // every SCC accepting
  int nonempty = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    cfg.seed = seed;
    auto g = weak_random(cfg);
    bool cycle = false;
    for (const Scc& c : scc_decompose(g))
      cycle |= c.nontrivial;
    CHECK(oracle_emptiness(g).is_empty() == !cycle);
    nonempty += cycle;
  }
  CHECK(nonempty > 10);  // the config reliably produces cycles
}

TEST_CASE("gen_trivial_accepting: empty flag yields a weak all-trivial DAG") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen_trivial_accepting(20, seed, false);
    g.validate();
    CHECK(is_weak(g));
    CHECK(oracle_emptiness(g).is_empty());
    std::size_t trivial_accepting = 0;
    for (const Scc& c : scc_decompose(g))
      if (!c.nontrivial && g.acc[c.states[0]].contains(1))
        ++trivial_accepting;
    CHECK(trivial_accepting >= 20);
  }
}

TEST_CASE("gen_trivial_accepting: nonempty flag reaches the looping sink") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen_trivial_accepting(20, seed, true);
    g.validate();
    CHECK(is_weak(g));
    CHECK_FALSE(oracle_emptiness(g).is_empty());
  }
  CHECK_THROWS_AS(gen_trivial_accepting(1, 0, false), ContractError);
}

TEST_CASE("gen_nonacc_scc_chain: empty with exactly the requested non-trivial SCCs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::uint32_t n_sccs = 1 + static_cast<std::uint32_t>(seed % 6);
    const std::uint32_t size = 1 + static_cast<std::uint32_t>(seed % 5);
    auto g = gen_nonacc_scc_chain(n_sccs, size, seed);
    g.validate();
    CHECK(oracle_emptiness(g).is_empty());
    std::size_t nontrivial = 0;
    for (const Scc& c : scc_decompose(g)) {
      CHECK(c.nontrivial);  // every state sits on its ring
      ++nontrivial;
    }
    CHECK(nontrivial == n_sccs);
  }
}
