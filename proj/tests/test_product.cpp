#include <doctest.h>

#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "buchi/oracle.hpp"
#include "buchi/product.hpp"
#include "buchi/scc.hpp"
#include "buchi/scc_algos.hpp"
#include "test_util.hpp"

using namespace buchi;

namespace {

KripkeStructure one_state_kripke(const std::vector<std::string>& labels) {
  KripkeStructure m;
  m.succ = {{0}};
  m.labels = {make_prop_set(labels)};
  return m;
}

LabeledGBA self_loop_prop(const std::string& guard) {
  LabeledGBA a;
  a.graph.conditions = 1;
  a.graph.succ = {{0}};
  a.graph.acc.resize(1);
  a.graph.acc[0].insert(1);
  a.guards = {{parse_guard(guard)}};
  return a;
}

KripkeStructure random_kripke(std::mt19937_64& rng, std::uint32_t n) {
  KripkeStructure m;
  m.succ.resize(n);
  m.labels.resize(n);
  static const char* props[] = {"p", "q", "r"};
  for (std::uint32_t s = 0; s < n; ++s) {
    std::uint32_t degree = rng() % 3;
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i < degree; ++i) {
      auto t = static_cast<std::uint32_t>(rng() % n);
      if (seen.insert(t).second)
        m.succ[s].push_back(t);
    }
    std::vector<std::string> labels;
    for (const char* p : props)
      if (rng() % 2)
        labels.push_back(p);
    m.labels[s] = make_prop_set(labels);
  }
  return m;
}

LabeledGBA random_prop(std::mt19937_64& rng, std::uint32_t n) {
  static const char* guards[] = {"true", "p", "!p", "q", "p & q", "p | r", "!q | p", "r"};
  LabeledGBA a;
  a.graph.conditions = 1;
  a.graph.succ.resize(n);
  a.graph.acc.resize(n);
  a.guards.resize(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::uint32_t degree = 1 + rng() % 2;
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i < degree; ++i) {
      auto t = static_cast<std::uint32_t>(rng() % n);
      if (seen.insert(t).second) {
        a.graph.succ[s].push_back(t);
        a.guards[s].push_back(parse_guard(guards[rng() % 8]));
      }
    }
    if (rng() % 3 == 0)
      a.graph.acc[s].insert(1);
  }
  return a;
}

// Eager reference construction: every pair state, every synchronized edge.
ExplicitGBA eager_product(const KripkeStructure& m, const LabeledGBA& a) {
  const std::uint32_t n_a = a.graph.state_count();
  ExplicitGBA g;
  g.conditions = a.graph.conditions;
  g.succ.resize(m.state_count() * n_a);
  g.acc.resize(m.state_count() * n_a);
  auto id = [&](std::uint32_t u, std::uint32_t q) { return u * n_a + q; };
  g.init = id(m.init, a.graph.init);
  for (std::uint32_t u = 0; u < m.state_count(); ++u)
    for (std::uint32_t q = 0; q < n_a; ++q) {
      for (std::uint32_t j = 1; j <= g.conditions; ++j)
        if (a.graph.acc[q].contains(j))
          g.acc[id(u, q)].insert(j);
      for (std::uint32_t nu : m.succ[u])
        for (std::size_t e = 0; e < a.graph.succ[q].size(); ++e)
          if (a.guards[q][e].evaluate(m.labels[nu]))
            g.succ[id(u, q)].push_back(id(nu, a.graph.succ[q][e]));
    }
  return g;
}

}  // namespace

TEST_CASE("satisfied self-loop product is a one-state accepting loop") {
  auto m = one_state_kripke({"p"});
  auto a = self_loop_prop("p");
  ProductProvider p(m, a);
  auto init = p.initial();
  auto succs = p.post(init);
  REQUIRE(succs.size() == 1);
  CHECK(succs[0] == init);
  CHECK(p.acceptance(init).contains(1));
  CHECK(p.conditions() == 1);
  CHECK(p.render(init) == "(0,0)");
}

TEST_CASE("falsified guard leaves the product initial state without successors") {
  auto m = one_state_kripke({"p"});
  auto a = self_loop_prop("!p");
  ProductProvider p(m, a);
  CHECK(p.post(p.initial()).empty());
}

TEST_CASE("guards are evaluated on the target system state") {
  // 0 (no label) -> 1 (p); the guard p holds on the move into state 1
  KripkeStructure m;
  m.succ = {{1}, {1}};
  m.labels = {make_prop_set({}), make_prop_set({"p"})};
  auto a = self_loop_prop("p");
  ProductProvider p(m, a);
  auto succs = p.post(p.initial());
  REQUIRE(succs.size() == 1);
  CHECK(succs[0] == StateDescriptor::of_pair(1, 0));
}

TEST_CASE("on-the-fly product equals the eager construction on 200 random pairs") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 200; ++round) {
    auto m = random_kripke(rng, 2 + rng() % 14);
    auto a = random_prop(rng, 1 + rng() % 5);
    ProductProvider lazy(m, a);
    auto eager = eager_product(m, a);

    // walk the lazy product and compare successor lists pointwise
    std::unordered_set<std::uint64_t> visited;
    std::vector<StateDescriptor> stack{lazy.initial()};
    auto key = [](const StateDescriptor& d) {
      auto [u, q] = d.as_pair();
      return (static_cast<std::uint64_t>(u) << 32) | q;
    };
    auto eager_id = [&](const StateDescriptor& d) {
      auto [u, q] = d.as_pair();
      return u * a.graph.state_count() + q;
    };
    visited.insert(key(stack[0]));
    CHECK(eager_id(stack[0]) == eager.init);
    std::size_t lazy_states = 1;
    while (!stack.empty()) {
      auto d = stack.back();
      stack.pop_back();
      auto got = lazy.post(d);
      std::vector<std::uint32_t> got_ids, want = eager.succ[eager_id(d)];
      for (const auto& t : got)
        got_ids.push_back(eager_id(t));
      CHECK(got_ids == want);
      CHECK((lazy.acceptance(d) == eager.acc[eager_id(d)]));
      for (const auto& t : got)
        if (visited.insert(key(t)).second) {
          stack.push_back(t);
          ++lazy_states;
        }
    }
    (void)lazy_states;

    // emptiness of the on-the-fly product agrees with the oracle run on the
    // materialized product graph
    ProductProvider fresh(m, a);
    auto checked = ascc_check(fresh);
    CHECK(checked.verdict.is_empty() == oracle_emptiness(eager).is_empty());
    if (!checked.verdict.is_empty()) {
      ProductProvider v(m, a);
      CHECK(validate_lasso(v, checked.verdict));
    }
  }
}

TEST_CASE("label reads stay bounded by generated candidate pairs") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 50; ++round) {
    auto m = random_kripke(rng, 2 + rng() % 14);
    auto a = random_prop(rng, 1 + rng() % 5);
    ProductProvider lazy(m, a);
    std::unordered_set<std::string> visited;
    std::vector<StateDescriptor> stack{lazy.initial()};
    visited.insert(stack[0].bytes());
    std::uint64_t generated = 0;
    while (!stack.empty()) {
      auto d = stack.back();
      stack.pop_back();
      for (const auto& t : lazy.post(d)) {
        ++generated;
        if (visited.insert(t.bytes()).second)
          stack.push_back(t);
      }
    }
    CHECK(lazy.distinct_label_reads() <= lazy.candidate_pairs());
    CHECK(generated <= lazy.candidate_pairs());
  }
}

TEST_CASE("early detection reads labels of a fraction of a large system") {
  // long chain with the satisfying loop right at the start
  const std::uint32_t n = 50'000;
  KripkeStructure m;
  m.succ.resize(n);
  m.labels.resize(n);
  for (std::uint32_t s = 0; s + 1 < n; ++s)
    m.succ[s] = {s + 1};
  m.succ[0] = {0};  // tight loop at the initial state
  for (std::uint32_t s = 0; s < n; ++s)
    m.labels[s] = make_prop_set({"p"});
  auto a = self_loop_prop("p");
  ProductProvider lazy(m, a);
  // explore just the initial state's neighbourhood, as early detection would
  auto succs = lazy.post(lazy.initial());
  REQUIRE(!succs.empty());
  CHECK(lazy.distinct_label_reads() <= 2);
}

TEST_CASE("weakness transfers from a weak property automaton to the product") {
  std::mt19937_64 rng(555);
  int checked = 0;
  for (int round = 0; round < 120 && checked < 40; ++round) {
    auto m = random_kripke(rng, 2 + rng() % 10);
    auto a = random_prop(rng, 1 + rng() % 4);
    if (!is_weak(a.graph))
      continue;
    auto prod = eager_product(m, a);
    CHECK(is_weak(prod));
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("kripke text format round-trips") {
  std::istringstream in(
      "# sample\n"
      "kripke 3\n"
      "init 1\n"
      "label 0 p q\n"
      "label 2 r\n"
      "edge 0 1\nedge 1 2\nedge 2 0\n");
  auto m = parse_kripke(in);
  CHECK(m.init == 1);
  CHECK(m.labels[0] == make_prop_set({"p", "q"}));
  std::ostringstream out;
  write_kripke(out, m);
  std::istringstream in2(out.str());
  auto m2 = parse_kripke(in2);
  CHECK(m2.succ == m.succ);
  CHECK(m2.labels == m.labels);

  std::istringstream bad("kripke 2\nlabel 0 9bad\n");
  CHECK_THROWS_AS(parse_kripke(bad), ParseError);
}

TEST_CASE("labeled automaton format round-trips, quoting spaced guards") {
  LabeledGBA a;
  a.graph.conditions = 2;
  a.graph.succ = {{0, 1}, {0}};
  a.graph.acc.resize(2);
  a.graph.acc[1].insert(2);
  a.guards = {{parse_guard("p & !q"), parse_guard("true")}, {parse_guard("r")}};
  std::ostringstream out;
  write_labeled_gba(out, a);
  CHECK(out.str().find("\"p & !q\"") != std::string::npos);
  std::istringstream in(out.str());
  auto b = parse_labeled_gba(in);
  CHECK(b.graph.succ == a.graph.succ);
  CHECK(b.guards[0][0] == a.guards[0][0]);
  CHECK(b.guards[0][1] == a.guards[0][1]);
  CHECK(b.guards[1][0] == a.guards[1][0]);
  CHECK((b.graph.acc[1] == a.graph.acc[1]));

  // a missing guard defaults to true
  std::istringstream plain("gba 1 1\ninit 0\nacc 0 1\nedge 0 0\n");
  auto c = parse_labeled_gba(plain);
  CHECK(c.guards[0][0].is_constant_true());
}

TEST_CASE("product successor computation is order-stable across calls") {
  std::mt19937_64 rng(808);
  auto m = random_kripke(rng, 12);
  auto a = random_prop(rng, 4);
  ProductProvider p(m, a);
  auto first = p.post(p.initial());
  for (int i = 0; i < 5; ++i)
    CHECK(p.post(p.initial()) == first);
}
