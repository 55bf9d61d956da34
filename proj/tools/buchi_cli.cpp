// Command-line front end: emptiness checks, the ground-truth oracle,
// automaton generators, the benchmark harness and the differential tester.
//
// Exit codes: 0 = empty (or probably empty) / pass, 1 = counterexample /
// failures found, 2 = usage, configuration or contract error.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "buchi/bench.hpp"
#include "buchi/bitstate.hpp"
#include "buchi/degeneralize.hpp"
#include "buchi/errors.hpp"
#include "buchi/explicit_gba.hpp"
#include "buchi/generators.hpp"
#include "buchi/kripke.hpp"
#include "buchi/labeled_gba.hpp"
#include "buchi/oracle.hpp"
#include "buchi/product.hpp"
#include "buchi/scc.hpp"
#include "buchi/trace.hpp"

namespace {

using nlohmann::json;

json metrics_json(const buchi::Metrics& m) {
  return json{{"post_calls", m.post_calls},
              {"successors_generated", m.successors_generated},
              {"distinct_states", m.distinct_states},
              {"transitions_explored", m.transitions_explored},
              {"max_search_depth", m.max_search_depth},
              {"aux_bits_per_state", m.aux_bits_per_state},
              {"descriptor_bytes", m.descriptor_bytes},
              {"wall_seconds", m.wall_seconds}};
}

const char* verdict_word(const buchi::CheckResult& r) {
  if (!r.verdict.is_empty())
    return "counterexample";
  return r.approximate ? "probably-empty" : "empty";
}

json lasso_json(const buchi::Lasso& lasso, const buchi::AutomatonProvider& p) {
  json prefix = json::array(), loop = json::array();
  for (const auto& s : lasso.prefix)
    prefix.push_back(p.render(s));
  for (const auto& s : lasso.loop)
    loop.push_back(p.render(s));
  return json{{"prefix", prefix}, {"loop", loop}};
}

void print_result(const std::string& algo, const buchi::CheckResult& r,
                  const buchi::AutomatonProvider& p, bool as_json) {
  if (as_json) {
    json out{{"schema", 1},
             {"algorithm", algo},
             {"verdict", verdict_word(r)},
             {"approximate", r.approximate},
             {"weak_assumed", r.weak_assumed},
             {"metrics", metrics_json(r.metrics)}};
    if (const buchi::Lasso* l = r.verdict.lasso())
      out["counterexample"] = lasso_json(*l, p);
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::cout << "algorithm: " << algo << '\n';
  std::cout << "verdict: " << verdict_word(r) << '\n';
  if (const buchi::Lasso* l = r.verdict.lasso()) {
    std::cout << "prefix:";
    for (const auto& s : l->prefix)
      std::cout << ' ' << p.render(s);
    std::cout << "\nloop:";
    for (const auto& s : l->loop)
      std::cout << ' ' << p.render(s);
    std::cout << '\n';
  }
  if (r.weak_assumed && r.verdict.is_empty())
    std::cout << "note: verdict assumes the input is weak\n";
  const buchi::Metrics& m = r.metrics;
  std::cout << "post_calls: " << m.post_calls << '\n'
            << "successors_generated: " << m.successors_generated << '\n'
            << "distinct_states: " << m.distinct_states << '\n'
            << "transitions_explored: " << m.transitions_explored << '\n'
            << "max_search_depth: " << m.max_search_depth << '\n'
            << "aux_bits_per_state: " << m.aux_bits_per_state << '\n'
            << "descriptor_bytes: " << m.descriptor_bytes << '\n'
            << "wall_seconds: " << m.wall_seconds << '\n';
}

struct CheckArgs {
  std::string algo;
  std::string gba_path, ba_path, kripke_path, prop_path;
  std::uint32_t bitstate_bits = 20;
  std::uint32_t runs = 1;
  std::uint64_t seed = 0;
  bool as_json = false;
  std::string trace_path;
};

int do_check(const CheckArgs& args) {
  auto algo = buchi::algo_from_name(args.algo);
  if (!algo)
    throw buchi::ConfigError("unknown algorithm '" + args.algo + "'");

  std::shared_ptr<buchi::ExplicitGBA> gba;
  std::shared_ptr<buchi::KripkeStructure> kripke;
  std::shared_ptr<buchi::LabeledGBA> prop;
  std::unique_ptr<buchi::AutomatonProvider> provider;

  if (!args.gba_path.empty() || !args.ba_path.empty()) {
    const std::string& path = args.gba_path.empty() ? args.ba_path : args.gba_path;
    gba = std::make_shared<buchi::ExplicitGBA>(buchi::load_gba(path));
    if (!args.ba_path.empty() && gba->conditions != 1)
      throw buchi::ContractError("--ba expects a plain BA (k = 1); use --gba for k = " +
                                 std::to_string(gba->conditions));
    provider = std::make_unique<buchi::ExplicitProvider>(*gba);
  } else if (!args.kripke_path.empty() && !args.prop_path.empty()) {
    kripke = std::make_shared<buchi::KripkeStructure>(buchi::load_kripke(args.kripke_path));
    prop = std::make_shared<buchi::LabeledGBA>(buchi::load_labeled_gba(args.prop_path));
    provider = std::make_unique<buchi::ProductProvider>(*kripke, *prop);
  } else {
    throw buchi::ConfigError("check needs --gba/--ba FILE or --kripke FILE --prop FILE");
  }

  // The weak-only checks are unsound elsewhere, so the input is screened
  // before the search runs.
  if (buchi::algo_needs_weak(*algo)) {
    const buchi::ExplicitGBA& a = gba ? *gba : prop->graph;
    if (a.conditions != 1)
      throw buchi::ContractError("this check needs a plain BA (k = 1)");
    if (!buchi::is_weak(a))
      throw buchi::ContractError("input automaton is not weak; refusing a weak-only check");
  }

  std::ofstream trace_file;
  std::unique_ptr<buchi::StreamTraceSink> trace;
  buchi::RunParams params;
  params.bitstate_bits = args.bitstate_bits;
  params.bitstate_runs = args.runs;
  params.seed = args.seed;
  params.weak_checked = true;
  if (!args.trace_path.empty()) {
    trace_file.open(args.trace_path);
    if (!trace_file)
      throw buchi::ConfigError("cannot open trace file: " + args.trace_path);
    trace = std::make_unique<buchi::StreamTraceSink>(trace_file);
    params.trace = trace.get();
  }

  buchi::CheckResult result = buchi::run_algorithm(*algo, *provider, params);
  print_result(args.algo, result, *provider, args.as_json);
  return result.verdict.is_empty() ? 0 : 1;
}

struct GenArgs {
  std::string kind;
  std::uint32_t n = 20;
  double deg = 1.5;
  std::uint32_t k = 1;
  double dens = 0.3;
  std::uint32_t sccs = 3, size = 3;
  std::uint64_t seed = 0;
  bool nonempty = false;
  std::string out;
  bool manifest = false;
};

int do_gen(const GenArgs& args) {
  buchi::ExplicitGBA g;
  json params;
  if (args.kind == "random" || args.kind == "weak") {
    buchi::GenConfig cfg;
    cfg.states = args.n;
    cfg.avg_out_degree = args.deg;
    cfg.conditions = args.kind == "weak" ? 1 : args.k;
    cfg.acc_density = args.dens;
    cfg.seed = args.seed;
    g = args.kind == "weak" ? buchi::weak_random(cfg) : buchi::random_gba(cfg);
    params = {{"n", cfg.states}, {"deg", cfg.avg_out_degree}, {"k", cfg.conditions},
              {"dens", cfg.acc_density}};
  } else if (args.kind == "trivial-accepting") {
    g = buchi::gen_trivial_accepting(args.n, args.seed, args.nonempty);
    params = {{"n", args.n}, {"nonempty", args.nonempty}};
  } else if (args.kind == "nonacc-chain") {
    g = buchi::gen_nonacc_scc_chain(args.sccs, args.size, args.seed);
    params = {{"sccs", args.sccs}, {"size", args.size}};
  } else {
    throw buchi::ConfigError("unknown generator kind '" + args.kind + "'");
  }

  if (args.out == "-") {
    buchi::write_gba(std::cout, g);
  } else {
    std::ofstream out(args.out);
    if (!out)
      throw buchi::ConfigError("cannot open output file: " + args.out);
    buchi::write_gba(out, g);
  }

  if (args.manifest) {
    if (args.out == "-")
      throw buchi::ConfigError("--manifest needs a real output file");
    json manifest{{"schema", 1},
                  {"kind", args.kind},
                  {"seed", args.seed},
                  {"params", params},
                  {"oracle_verdict",
                   buchi::oracle_emptiness(g).is_empty() ? "empty" : "counterexample"}};
    std::ofstream mout(args.out + ".manifest.json");
    if (!mout)
      throw buchi::ConfigError("cannot open manifest file");
    mout << manifest.dump(2) << '\n';
  }
  return 0;
}

int do_oracle(const std::string& path, bool as_json) {
  auto g = buchi::load_gba(path);
  buchi::Verdict v = buchi::oracle_emptiness(g);
  buchi::ExplicitProvider provider(g);
  buchi::CheckResult result;
  result.verdict = std::move(v);
  print_result("oracle", result, provider, as_json);
  return result.verdict.is_empty() ? 0 : 1;
}

struct BenchArgs {
  std::string suite;
  std::string algos = "baseline,and,sd,gv,c99,ascc";
  std::string baseline = "baseline";
  std::string basis = "successors";
  std::uint32_t bitstate_bits = 20;
  std::uint32_t runs = 1;
  std::uint64_t seed = 0;
  bool as_json = false;
};

int do_bench(const BenchArgs& args) {
  auto suite = buchi::load_suite(args.suite);
  auto algos = buchi::parse_algo_list(args.algos);
  buchi::BenchOptions opts;
  if (args.basis == "successors")
    opts.basis = buchi::BenchOptions::Basis::Successors;
  else if (args.basis == "post-calls")
    opts.basis = buchi::BenchOptions::Basis::PostCalls;
  else if (args.basis == "wall")
    opts.basis = buchi::BenchOptions::Basis::WallTime;
  else
    throw buchi::ConfigError("unknown basis '" + args.basis + "'");
  opts.bitstate_bits = args.bitstate_bits;
  opts.bitstate_runs = args.runs;
  opts.seed = args.seed;

  buchi::BenchReport report = buchi::run_bench(suite, algos, opts);

  if (args.as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < report.instances.size(); ++i)
      for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
        const buchi::CheckResult& r = report.cells[i][a];
        rows.push_back({{"instance", report.instances[i]},
                        {"algorithm", buchi::algo_name(report.algorithms[a])},
                        {"verdict", verdict_word(r)},
                        {"metrics", metrics_json(r.metrics)}});
      }
    json totals = json::object();
    for (const auto& [label, total] : report.totals)
      totals[label] = total;
    json percents = json::object();
    for (const auto& [label, pct] : buchi::percent_rows(report.totals, args.baseline))
      percents[label] = pct;
    std::cout << json{{"schema", 1},
                      {"basis", args.basis},
                      {"cells", rows},
                      {"totals", totals},
                      {"percent", percents}}
                     .dump(2)
              << '\n';
    return 0;
  }

  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    std::cout << report.instances[i] << '\n';
    for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
      const buchi::CheckResult& r = report.cells[i][a];
      const buchi::Metrics& m = r.metrics;
      std::cout << "  " << buchi::algo_name(report.algorithms[a]) << ": " << verdict_word(r)
                << "  post=" << m.post_calls << " succ=" << m.successors_generated
                << " states=" << m.distinct_states << " trans=" << m.transitions_explored << '\n';
    }
  }
  std::cout << '\n' << buchi::format_percent_table(report.totals, args.baseline);
  return 0;
}

struct DiffArgs {
  std::uint64_t count = 1000;
  std::uint32_t max_n = 50;
  std::uint32_t max_k = 3;
  std::uint64_t seed = 0;
  bool no_minimize = false;
  std::string out_dir;
  bool as_json = false;
};

int do_diff(const DiffArgs& args) {
  buchi::DiffConfig cfg;
  cfg.count = args.count;
  cfg.max_states = args.max_n;
  cfg.max_conditions = args.max_k;
  cfg.seed = args.seed;
  cfg.minimize = !args.no_minimize;

  buchi::DiffSummary summary = buchi::run_differential(cfg);

  for (std::size_t i = 0; i < summary.failures.size(); ++i) {
    const buchi::DiffFailure& f = summary.failures[i];
    if (!args.out_dir.empty()) {
      std::string path = args.out_dir + "/fail_" + std::to_string(f.instance_index) + "_" +
                         f.algorithm + ".gba";
      std::ofstream out(path);
      if (out)
        buchi::write_gba(out, f.instance);
    }
  }

  if (args.as_json) {
    json fails = json::array();
    for (const auto& f : summary.failures)
      fails.push_back({{"instance_index", f.instance_index},
                       {"instance_seed", f.instance_seed},
                       {"algorithm", f.algorithm},
                       {"reason", f.reason},
                       {"instance", buchi::to_text(f.instance)}});
    std::cout << json{{"schema", 1},
                      {"instances", summary.instances},
                      {"checks", summary.checks},
                      {"disagreements", summary.failures.size()},
                      {"failures", fails}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "instances: " << summary.instances << '\n'
              << "checks: " << summary.checks << '\n'
              << "disagreements: " << summary.failures.size() << '\n';
    for (const auto& f : summary.failures) {
      std::cout << "FAIL " << f.algorithm << " seed=" << f.instance_seed << ": " << f.reason << '\n';
      buchi::write_gba(std::cout, f.instance);
    }
  }
  return summary.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit-state on-the-fly emptiness checks for (generalized) Büchi automata"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run one emptiness check");
  check->add_option("--algo", check_args.algo, "baseline|and|sd|gv|c99|ascc|bitstate-and|bitstate-sd")
      ->required();
  auto* gba_opt = check->add_option("--gba", check_args.gba_path, "generalized Büchi automaton file");
  auto* ba_opt = check->add_option("--ba", check_args.ba_path, "plain Büchi automaton file (k = 1)");
  auto* kripke_opt = check->add_option("--kripke", check_args.kripke_path, "Kripke structure file");
  auto* prop_opt = check->add_option("--prop", check_args.prop_path, "guarded property automaton file");
  gba_opt->excludes(ba_opt)->excludes(kripke_opt)->excludes(prop_opt);
  ba_opt->excludes(kripke_opt)->excludes(prop_opt);
  kripke_opt->needs(prop_opt);
  check->add_option("--bitstate-bits", check_args.bitstate_bits, "bitstate table exponent [10, 40]");
  check->add_option("--runs", check_args.runs, "bitstate repetitions with fresh hash seeds");
  check->add_option("--seed", check_args.seed, "bitstate hash seed");
  check->add_flag("--json", check_args.as_json, "machine-readable output");
  check->add_option("--trace", check_args.trace_path, "write a debug event trace to this file");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an automaton");
  gen->add_option("--kind", gen_args.kind, "random|weak|trivial-accepting|nonacc-chain")->required();
  gen->add_option("--n", gen_args.n, "state count (system states for trivial-accepting)");
  gen->add_option("--deg", gen_args.deg, "average out-degree");
  gen->add_option("--k", gen_args.k, "acceptance conditions");
  gen->add_option("--dens", gen_args.dens, "acceptance density");
  gen->add_option("--sccs", gen_args.sccs, "SCC count (nonacc-chain)");
  gen->add_option("--size", gen_args.size, "SCC size (nonacc-chain)");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_flag("--nonempty", gen_args.nonempty, "trivial-accepting: append a looping accepting sink");
  gen->add_option("--out", gen_args.out, "output file, '-' for stdout")->required();
  gen->add_flag("--manifest", gen_args.manifest, "write <out>.manifest.json with seed and oracle verdict");

  std::string oracle_path;
  bool oracle_json = false;
  auto* oracle = app.add_subcommand("oracle", "Ground-truth emptiness verdict");
  oracle->add_option("--gba", oracle_path, "automaton file")->required();
  oracle->add_flag("--json", oracle_json, "machine-readable output");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Compare algorithms over a suite");
  bench->add_option("--suite", bench_args.suite, "suite file, one instance per line")->required();
  bench->add_option("--algos", bench_args.algos, "comma-separated algorithm list");
  bench->add_option("--baseline", bench_args.baseline, "algorithm keying the 100% row");
  bench->add_option("--basis", bench_args.basis, "successors|post-calls|wall");
  bench->add_option("--bitstate-bits", bench_args.bitstate_bits, "bitstate table exponent");
  bench->add_option("--runs", bench_args.runs, "bitstate repetitions");
  bench->add_option("--seed", bench_args.seed, "bitstate hash seed");
  bench->add_flag("--json", bench_args.as_json, "machine-readable output");

  DiffArgs diff_args;
  auto* diff = app.add_subcommand("diff", "Differential test against the oracle");
  diff->add_option("--count", diff_args.count, "number of random instances");
  diff->add_option("--max-n", diff_args.max_n, "maximum state count");
  diff->add_option("--max-k", diff_args.max_k, "maximum acceptance conditions");
  diff->add_option("--seed", diff_args.seed, "suite seed");
  diff->add_flag("--no-minimize", diff_args.no_minimize, "keep failing instances unshrunk");
  diff->add_option("--out-dir", diff_args.out_dir, "write failing instances here");
  diff->add_flag("--json", diff_args.as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check)
      return do_check(check_args);
    if (*gen)
      return do_gen(gen_args);
    if (*oracle)
      return do_oracle(oracle_path, oracle_json);
    if (*bench)
      return do_bench(bench_args);
    if (*diff)
      return do_diff(diff_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
