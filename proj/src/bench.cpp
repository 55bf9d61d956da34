#include "buchi/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "buchi/bitstate.hpp"
#include "buchi/degeneralize.hpp"
#include "buchi/errors.hpp"
#include "buchi/ndfs.hpp"
#include "buchi/oracle.hpp"
#include "buchi/product.hpp"
#include "buchi/scc.hpp"
#include "buchi/scc_algos.hpp"
#include "text_format.hpp"

namespace buchi {

namespace {

constexpr std::pair<AlgoId, const char*> kAlgoNames[] = {
    {AlgoId::Baseline, "baseline"},   {AlgoId::And, "and"},
    {AlgoId::Sd, "sd"},               {AlgoId::Gv, "gv"},
    {AlgoId::C99, "c99"},             {AlgoId::Ascc, "ascc"},
    {AlgoId::BitstateAnd, "bitstate-and"}, {AlgoId::BitstateSd, "bitstate-sd"},
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  return x;
}

}  // namespace

const char* algo_name(AlgoId a) {
  for (auto [id, name] : kAlgoNames)
    if (id == a)
      return name;
  return "?";
}

std::optional<AlgoId> algo_from_name(std::string_view name) {
  for (auto [id, n] : kAlgoNames)
    if (name == n)
      return id;
  return std::nullopt;
}

std::vector<AlgoId> parse_algo_list(const std::string& csv) {
  std::vector<AlgoId> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string name = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!name.empty()) {
      auto id = algo_from_name(name);
      if (!id)
        throw ConfigError("unknown algorithm '" + name + "'");
      out.push_back(*id);
    }
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  if (out.empty())
    throw ConfigError("no algorithms selected");
  return out;
}

bool algo_needs_ba(AlgoId a) {
  return a == AlgoId::Baseline || a == AlgoId::And || a == AlgoId::Sd || a == AlgoId::Gv ||
         a == AlgoId::BitstateAnd || a == AlgoId::BitstateSd;
}

bool algo_needs_weak(AlgoId a) { return a == AlgoId::Sd || a == AlgoId::BitstateSd; }

CheckResult run_algorithm(AlgoId algo, AutomatonProvider& p, const RunParams& params) {
  NdfsOptions nopts;
  nopts.trace = params.trace;
  SccOptions sopts;
  sopts.trace = params.trace;
  switch (algo) {
    case AlgoId::Baseline:
      return ndfs_baseline(p, nopts);
    case AlgoId::And:
      return and_check(p, nopts);
    case AlgoId::Sd:
      return sd_check(p, params.weak_checked, nopts);
    case AlgoId::Gv:
      return gv_check(p, sopts);
    case AlgoId::C99:
      return c99_check(p, sopts);
    case AlgoId::Ascc:
      return ascc_check(p, sopts);
    case AlgoId::BitstateAnd:
      return bitstate_check(p, BitstateAlgo::And, params.bitstate_bits, params.bitstate_runs,
                            params.seed, nopts);
    case AlgoId::BitstateSd:
      return bitstate_check(p, BitstateAlgo::Sd, params.bitstate_bits, params.bitstate_runs,
                            params.seed, nopts);
  }
  throw ConfigError("unknown algorithm id");
}

// ---------------------------------------------------------------------------
// Suites

namespace {

std::uint64_t parse_kv(const detail::Line& line, const std::string& key, bool required,
                       std::uint64_t fallback = 0) {
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const std::string& tok = line.tokens[i];
    if (tok.rfind(key + "=", 0) == 0) {
      std::string value = tok.substr(key.size() + 1);
      try {
        return std::stoull(value);
      } catch (const std::exception&) {
        throw ParseError("bad value for " + key, line.number);
      }
    }
  }
  if (required)
    throw ParseError("missing " + key + "=", line.number);
  return fallback;
}

double parse_kv_double(const detail::Line& line, const std::string& key, double fallback) {
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const std::string& tok = line.tokens[i];
    if (tok.rfind(key + "=", 0) == 0) {
      try {
        return std::stod(tok.substr(key.size() + 1));
      } catch (const std::exception&) {
        throw ParseError("bad value for " + key, line.number);
      }
    }
  }
  return fallback;
}

bool has_flag(const detail::Line& line, const std::string& flag) {
  return std::find(line.tokens.begin() + 1, line.tokens.end(), flag) != line.tokens.end();
}

std::string joined(const detail::Line& line) {
  std::string out;
  for (const auto& t : line.tokens) {
    if (!out.empty())
      out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

std::vector<InstanceSpec> parse_suite(std::istream& in) {
  std::vector<InstanceSpec> out;
  for (const auto& line : detail::tokenize(in)) {
    InstanceSpec spec;
    spec.display = joined(line);
    const std::string& kw = line.tokens[0];
    if (kw == "gba") {
      detail::expect_tokens(line, 2);
      spec.kind = InstanceSpec::Kind::GbaFile;
      spec.path1 = line.tokens[1];
    } else if (kw == "product") {
      detail::expect_tokens(line, 3);
      spec.kind = InstanceSpec::Kind::ProductFiles;
      spec.path1 = line.tokens[1];
      spec.path2 = line.tokens[2];
    } else if (kw == "gen") {
      if (line.tokens.size() < 2)
        throw ParseError("gen line needs a generator kind", line.number);
      const std::string& kind = line.tokens[1];
      detail::Line rest = line;
      rest.tokens.erase(rest.tokens.begin());  // drop "gen" so kv search starts at the kind
      if (kind == "random" || kind == "weak") {
        spec.kind = kind == "random" ? InstanceSpec::Kind::GenRandom : InstanceSpec::Kind::GenWeak;
        spec.gen.states = static_cast<std::uint32_t>(parse_kv(rest, "n", true));
        spec.gen.avg_out_degree = parse_kv_double(rest, "deg", 1.5);
        spec.gen.conditions =
            kind == "weak" ? 1 : static_cast<std::uint32_t>(parse_kv(rest, "k", false, 1));
        spec.gen.acc_density = parse_kv_double(rest, "dens", 0.3);
        spec.gen.seed = parse_kv(rest, "seed", true);
      } else if (kind == "trivial-accepting") {
        spec.kind = InstanceSpec::Kind::GenTrivialAccepting;
        spec.n_sys = static_cast<std::uint32_t>(parse_kv(rest, "n", true));
        spec.seed = parse_kv(rest, "seed", true);
        spec.nonempty = has_flag(rest, "nonempty");
      } else if (kind == "nonacc-chain") {
        spec.kind = InstanceSpec::Kind::GenNonaccChain;
        spec.n_sccs = static_cast<std::uint32_t>(parse_kv(rest, "sccs", true));
        spec.scc_size = static_cast<std::uint32_t>(parse_kv(rest, "size", true));
        spec.seed = parse_kv(rest, "seed", true);
      } else {
        throw ParseError("unknown generator '" + kind + "'", line.number);
      }
    } else {
      throw ParseError("unknown suite keyword '" + kw + "'", line.number);
    }
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<InstanceSpec> load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open suite file: " + path);
  return parse_suite(in);
}

std::unique_ptr<AutomatonProvider> Instance::make_provider() const {
  if (gba)
    return std::make_unique<ExplicitProvider>(*gba);
  return std::make_unique<ProductProvider>(*kripke, *prop);
}

std::uint32_t Instance::conditions() const {
  return gba ? gba->conditions : prop->graph.conditions;
}

bool Instance::weak() const {
  const ExplicitGBA& a = gba ? *gba : prop->graph;
  return a.conditions == 1 && is_weak(a);
}

Instance materialize(const InstanceSpec& spec) {
  Instance inst;
  inst.display = spec.display;
  switch (spec.kind) {
    case InstanceSpec::Kind::GbaFile:
      inst.gba = std::make_shared<ExplicitGBA>(load_gba(spec.path1));
      break;
    case InstanceSpec::Kind::ProductFiles:
      inst.kripke = std::make_shared<KripkeStructure>(load_kripke(spec.path1));
      inst.prop = std::make_shared<LabeledGBA>(load_labeled_gba(spec.path2));
      break;
    case InstanceSpec::Kind::GenRandom:
      inst.gba = std::make_shared<ExplicitGBA>(random_gba(spec.gen));
      break;
    case InstanceSpec::Kind::GenWeak:
      inst.gba = std::make_shared<ExplicitGBA>(weak_random(spec.gen));
      break;
    case InstanceSpec::Kind::GenTrivialAccepting:
      inst.gba = std::make_shared<ExplicitGBA>(gen_trivial_accepting(spec.n_sys, spec.seed, spec.nonempty));
      break;
    case InstanceSpec::Kind::GenNonaccChain:
      inst.gba =
          std::make_shared<ExplicitGBA>(gen_nonacc_scc_chain(spec.n_sccs, spec.scc_size, spec.seed));
      break;
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Benchmark harness

BenchReport run_bench(const std::vector<InstanceSpec>& suite, const std::vector<AlgoId>& algorithms,
                      const BenchOptions& opts) {
  if (suite.empty())
    throw ConfigError("bench suite is empty");
  if (algorithms.empty())
    throw ConfigError("bench needs at least one algorithm");

  std::vector<Instance> instances;
  instances.reserve(suite.size());
  for (const auto& spec : suite)
    instances.push_back(materialize(spec));

  const bool want_ba = std::any_of(algorithms.begin(), algorithms.end(), algo_needs_ba);
  const bool want_weak = std::any_of(algorithms.begin(), algorithms.end(), algo_needs_weak);
  for (const Instance& inst : instances) {
    if (want_ba && inst.conditions() != 1)
      throw ContractError("suite instance '" + inst.display +
                          "' has k != 1 but a single-condition check was selected");
    if (want_weak && !inst.weak())
      throw ContractError("suite instance '" + inst.display +
                          "' is not weak but a weak-only check was selected");
  }

  BenchReport report;
  for (const Instance& inst : instances)
    report.instances.push_back(inst.display);
  report.algorithms = algorithms;
  report.cells.assign(instances.size(), std::vector<CheckResult>(algorithms.size()));

  const std::int64_t cell_count =
      static_cast<std::int64_t>(instances.size() * algorithms.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t cell = 0; cell < cell_count; ++cell) {
    std::size_t i = static_cast<std::size_t>(cell) / algorithms.size();
    std::size_t a = static_cast<std::size_t>(cell) % algorithms.size();
    RunParams params;
    params.bitstate_bits = opts.bitstate_bits;
    params.bitstate_runs = opts.bitstate_runs;
    params.seed = mix(opts.seed, cell);
    params.weak_checked = true;  // pre-flight above
    auto provider = instances[i].make_provider();
    report.cells[i][a] = run_algorithm(algorithms[a], *provider, params);
  }

  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    double total = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Metrics& m = report.cells[i][a].metrics;
      switch (opts.basis) {
        case BenchOptions::Basis::Successors:
          total += static_cast<double>(m.successors_generated);
          break;
        case BenchOptions::Basis::PostCalls:
          total += static_cast<double>(m.post_calls);
          break;
        case BenchOptions::Basis::WallTime:
          total += m.wall_seconds;
          break;
      }
    }
    report.totals.push_back({algo_name(algorithms[a]), total});
  }
  return report;
}

std::vector<std::pair<std::string, double>> percent_rows(
    const std::vector<std::pair<std::string, double>>& totals, const std::string& baseline) {
  double base = 0;
  bool found = false;
  for (const auto& [label, total] : totals)
    if (label == baseline) {
      base = total;
      found = true;
    }
  if (!found)
    throw ConfigError("baseline '" + baseline + "' is not in the totals");
  if (base == 0)
    throw ConfigError("baseline total is zero");
  std::vector<std::pair<std::string, double>> rows;
  for (const auto& [label, total] : totals)
    rows.push_back({label, total / base * 100.0});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  return rows;
}

std::string format_percent_table(const std::vector<std::pair<std::string, double>>& totals,
                                 const std::string& baseline) {
  auto rows = percent_rows(totals, baseline);
  std::size_t width = 9;
  for (const auto& [label, pct] : rows)
    width = std::max(width, label.size());
  std::ostringstream out;
  out << "algorithm";
  out << std::string(width - 9, ' ') << " | run-time\n";
  out << std::string(width, '-') << "-+---------\n";
  char buf[64];
  for (const auto& [label, pct] : rows) {
    std::snprintf(buf, sizeof buf, "%6.1f %%", pct);
    out << label << std::string(width - label.size(), ' ') << " | " << buf << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Differential testing

namespace {

struct AlgoOutcome {
  bool ran = false;
  bool empty = true;
  bool lasso_valid = true;
  std::string error;
};

AlgoOutcome run_named_on(const std::string& name, const ExplicitGBA& g,
                         const std::vector<NamedGbaCheck>& extra) {
  AlgoOutcome out;
  out.ran = true;
  try {
    const ExplicitGBA* target = &g;
    ExplicitGBA degen;
    auto id = algo_from_name(name);
    if (id && algo_needs_ba(*id) && g.conditions != 1) {
      degen = degeneralize(g);
      target = &degen;
    }
    ExplicitProvider provider(*target);
    CheckResult result;
    if (id) {
      RunParams params;
      params.weak_checked = true;
      result = run_algorithm(*id, provider, params);
    } else {
      for (const auto& [n, fn] : extra)
        if (n == name) {
          result = fn(provider);
          break;
        }
    }
    out.empty = result.verdict.is_empty();
    if (!out.empty) {
      ExplicitProvider fresh(*target);
      out.lasso_valid = validate_lasso(fresh, result.verdict);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// A check disagrees if its verdict differs from the oracle's, its lasso does
// not validate, or it throws.
std::optional<std::string> disagreement(const std::string& name, const ExplicitGBA& g,
                                        const std::vector<NamedGbaCheck>& extra) {
  // The weak-only check is exempt outside its contract, so shrinking cannot
  // drift a "failure" onto inputs where an Empty verdict is permitted.
  if (name == "sd" && (g.conditions != 1 || !is_weak(g)))
    return std::nullopt;
  bool oracle_empty = oracle_emptiness(g).is_empty();
  AlgoOutcome out = run_named_on(name, g, extra);
  if (!out.error.empty())
    return "exception: " + out.error;
  if (out.empty != oracle_empty)
    return std::string("verdict mismatch: oracle says ") + (oracle_empty ? "empty" : "counterexample");
  if (!out.lasso_valid)
    return std::string("counterexample does not validate");
  return std::nullopt;
}

// Greedy shrink: drop edges, then unreachable/irrelevant states, as long as
// the disagreement persists.
ExplicitGBA minimize_failure(ExplicitGBA g, const std::string& name,
                             const std::vector<NamedGbaCheck>& extra) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t s = 0; s < g.state_count() && !changed; ++s) {
      for (std::size_t i = 0; i < g.succ[s].size(); ++i) {
        ExplicitGBA candidate = g;
        candidate.succ[s].erase(candidate.succ[s].begin() + static_cast<std::ptrdiff_t>(i));
        if (disagreement(name, candidate, extra)) {
          g = std::move(candidate);
          changed = true;
          break;
        }
      }
    }
    // strip states that became unreachable
    std::vector<std::uint8_t> reachable(g.state_count(), 0);
    std::vector<std::uint32_t> queue{g.init};
    reachable[g.init] = 1;
    while (!queue.empty()) {
      std::uint32_t x = queue.back();
      queue.pop_back();
      for (std::uint32_t t : g.succ[x])
        if (!reachable[t]) {
          reachable[t] = 1;
          queue.push_back(t);
        }
    }
    std::vector<std::uint32_t> remap(g.state_count(), 0);
    std::uint32_t kept = 0;
    for (std::uint32_t s = 0; s < g.state_count(); ++s)
      if (reachable[s])
        remap[s] = kept++;
    if (kept < g.state_count()) {
      ExplicitGBA shrunk;
      shrunk.conditions = g.conditions;
      shrunk.init = remap[g.init];
      shrunk.succ.resize(kept);
      shrunk.acc.resize(kept);
      for (std::uint32_t s = 0; s < g.state_count(); ++s) {
        if (!reachable[s])
          continue;
        shrunk.acc[remap[s]] = g.acc[s];
        for (std::uint32_t t : g.succ[s])
          if (reachable[t])
            shrunk.succ[remap[s]].push_back(remap[t]);
      }
      if (disagreement(name, shrunk, extra)) {
        g = std::move(shrunk);
        changed = true;
      }
    }
  }
  return g;
}

GenConfig draw_config(std::uint64_t seed, const DiffConfig& cfg) {
  std::mt19937_64 rng(seed);
  GenConfig c;
  c.states = 1 + static_cast<std::uint32_t>(rng() % cfg.max_states);
  std::uniform_real_distribution<double> deg(0.0, 3.0);
  c.avg_out_degree = deg(rng);
  // k = 0 is legal and exercises the vacuous acceptance case, but rarely
  std::uint32_t kmax = std::max<std::uint32_t>(cfg.max_conditions, 1);
  c.conditions = (rng() % 20 == 0) ? 0 : 1 + static_cast<std::uint32_t>(rng() % kmax);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  double r = dens(rng);
  c.acc_density = r < 0.1 ? 0.0 : (r > 0.9 ? 1.0 : dens(rng));
  c.seed = rng();
  return c;
}

}  // namespace

DiffSummary run_differential(const DiffConfig& cfg, const std::vector<NamedGbaCheck>& extra) {
  DiffSummary summary;
  summary.instances = cfg.count;

  std::vector<std::vector<DiffFailure>> failures(cfg.count ? static_cast<std::size_t>(cfg.count) : 1);
  std::uint64_t checks = 0;

#pragma omp parallel for schedule(dynamic, 16) reduction(+ : checks)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cfg.count); ++i) {
    std::uint64_t instance_seed = mix(cfg.seed, static_cast<std::uint64_t>(i));
    GenConfig gen = draw_config(instance_seed, cfg);
    ExplicitGBA g = random_gba(gen);

    std::vector<std::string> names = {"ascc", "c99", "baseline", "and", "gv"};
    if (g.conditions == 1 && is_weak(g))
      names.push_back("sd");
    for (const auto& [n, fn] : extra)
      names.push_back(n);

    for (const std::string& name : names) {
      ++checks;
      if (auto why = disagreement(name, g, extra)) {
        DiffFailure f;
        f.instance_index = static_cast<std::uint64_t>(i);
        f.instance_seed = instance_seed;
        f.algorithm = name;
        f.reason = *why;
        f.instance = cfg.minimize ? minimize_failure(g, name, extra) : g;
        failures[static_cast<std::size_t>(i)].push_back(std::move(f));
      }
    }
  }

  summary.checks = checks;
  for (auto& per_instance : failures)
    for (auto& f : per_instance)
      summary.failures.push_back(std::move(f));
  return summary;
}

}  // namespace buchi
