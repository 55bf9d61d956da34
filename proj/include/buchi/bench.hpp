#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "buchi/check_result.hpp"
#include "buchi/generators.hpp"
#include "buchi/kripke.hpp"
#include "buchi/labeled_gba.hpp"
#include "buchi/provider.hpp"
#include "buchi/trace.hpp"

namespace buchi {

enum class AlgoId { Baseline, And, Sd, Gv, C99, Ascc, BitstateAnd, BitstateSd };

const char* algo_name(AlgoId a);
std::optional<AlgoId> algo_from_name(std::string_view name);
/// Comma-separated names; throws ConfigError on unknown ones.
std::vector<AlgoId> parse_algo_list(const std::string& csv);

/// True for the checks that require a single acceptance condition.
bool algo_needs_ba(AlgoId a);
/// True for the checks that are sound only on weak inputs.
bool algo_needs_weak(AlgoId a);

struct RunParams {
  std::uint32_t bitstate_bits = 20;
  std::uint32_t bitstate_runs = 1;
  std::uint64_t seed = 0;
  /// The caller has established weakness for the simple-DFS checks.
  bool weak_checked = false;
  TraceSink* trace = nullptr;
};

/// Dispatches to the selected check. Contract violations (wrong k, non-weak
/// input for a weak-only check when unverified) surface as exceptions.
CheckResult run_algorithm(AlgoId algo, AutomatonProvider& p, const RunParams& params = {});

// ---------------------------------------------------------------------------
// Suites

/// One instance line of a suite file:
///   gba <path>
///   product <kripke-path> <prop-path>
///   gen random n=<n> deg=<d> k=<k> dens=<p> seed=<s>
///   gen weak n=<n> deg=<d> dens=<p> seed=<s>
///   gen trivial-accepting n=<n> seed=<s> [nonempty]
///   gen nonacc-chain sccs=<c> size=<m> seed=<s>
struct InstanceSpec {
  enum class Kind { GbaFile, ProductFiles, GenRandom, GenWeak, GenTrivialAccepting, GenNonaccChain };
  Kind kind = Kind::GbaFile;
  std::string path1, path2;
  GenConfig gen;
  std::uint32_t n_sys = 0, n_sccs = 0, scc_size = 0;
  bool nonempty = false;
  std::uint64_t seed = 0;
  std::string display;
};

std::vector<InstanceSpec> parse_suite(std::istream& in);
std::vector<InstanceSpec> load_suite(const std::string& path);

/// A materialized instance: an explicit automaton, or a system/property pair
/// explored as an on-the-fly product.
struct Instance {
  std::string display;
  std::shared_ptr<const ExplicitGBA> gba;
  std::shared_ptr<const KripkeStructure> kripke;
  std::shared_ptr<const LabeledGBA> prop;

  std::unique_ptr<AutomatonProvider> make_provider() const;
  std::uint32_t conditions() const;
  /// Weakness of the (property) automaton; transfers to the product.
  bool weak() const;
};

Instance materialize(const InstanceSpec& spec);

// ---------------------------------------------------------------------------
// Benchmark harness

struct BenchOptions {
  enum class Basis { Successors, PostCalls, WallTime } basis = Basis::Successors;
  std::uint32_t bitstate_bits = 20;
  std::uint32_t bitstate_runs = 1;
  std::uint64_t seed = 0;
};

struct BenchReport {
  std::vector<std::string> instances;
  std::vector<AlgoId> algorithms;
  std::vector<std::vector<CheckResult>> cells;  // [instance][algorithm]
  std::vector<std::pair<std::string, double>> totals;  // per algorithm, basis sums
};

/// Runs every algorithm on every instance with the instance's fixed
/// exploration order. Cells are independent and may run on parallel worker
/// threads; assembly is deterministic. Applicability is checked up front:
/// single-condition checks reject suites with k != 1 instances, weak-only
/// checks reject suites with non-weak instances.
BenchReport run_bench(const std::vector<InstanceSpec>& suite, const std::vector<AlgoId>& algorithms,
                      const BenchOptions& opts = {});

/// Percentage summary in the style of a run-time comparison table: one row
/// per label, values as percentages of the baseline label's total, one
/// decimal, rows ascending. Throws ConfigError if the baseline is missing or
/// its total is zero.
std::string format_percent_table(const std::vector<std::pair<std::string, double>>& totals,
                                 const std::string& baseline);

/// Raw totals -> (label, percentage) rows, ascending.
std::vector<std::pair<std::string, double>> percent_rows(
    const std::vector<std::pair<std::string, double>>& totals, const std::string& baseline);

// ---------------------------------------------------------------------------
// Differential testing

struct DiffConfig {
  std::uint64_t count = 1000;
  std::uint32_t max_states = 50;
  std::uint32_t max_conditions = 3;
  std::uint64_t seed = 0;
  bool minimize = true;
};

struct DiffFailure {
  std::uint64_t instance_index = 0;
  std::uint64_t instance_seed = 0;
  std::string algorithm;
  std::string reason;
  ExplicitGBA instance;  // greedily minimized when enabled
};

struct DiffSummary {
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  std::vector<DiffFailure> failures;
};

/// A named check over a materialized automaton, for injecting variants into
/// the differential pool. Runs on k = 1 instances (degeneralized otherwise).
using NamedGbaCheck = std::pair<std::string, std::function<CheckResult(AutomatonProvider&)>>;

/// Generates seeded random instances with mixed sizes, degrees, k and
/// densities, runs every applicable algorithm plus the oracle on each, and
/// collects verdict disagreements and invalid lassos. Single-condition
/// checks run on the degeneralized automaton when k != 1. Instances run on
/// parallel worker threads; the summary is deterministic in the seed.
DiffSummary run_differential(const DiffConfig& cfg, const std::vector<NamedGbaCheck>& extra = {});

}  // namespace buchi
