#pragma once

#include "qaoaplus/ansatz.hpp"
#include "qaoaplus/instancegen.hpp"
#include "qaoaplus/optimize.hpp"
#include "qaoaplus/oracle.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qaoaplus {

enum class Strategy { random, fixing };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

// ---------------------------------------------------------------------------
// Single-instance runs

/**
 * Optimizes one instance. `random` runs one multistart at level p; `fixing`
 * runs the warm-start schedule 1..p and returns every level. Success
 * probability is always measured against the oracle's x_sol; an instance
 * without a unique, objective-consistent MEC is refused with a
 * PreconditionError describing the oracle's findings.
 */
std::vector<LevelResult> run_solve(const MecInstance &instance, unsigned p,
                                   Strategy strategy, Variant variant,
                                   const OptSettings &settings,
                                   const std::optional<Lambdas> &lambdas = std::nullopt);

/// Tail counterpart; x_sol is the unique argmax of the tail objective.
std::vector<LevelResult> run_tail_solve(const TailInstance &instance, unsigned p,
                                        Strategy strategy, Variant variant,
                                        const OptSettings &settings,
                                        const TailLambdas &lambdas);

/// Human-readable oracle diagnostics (used in refusals and `oracle` output).
std::string describe_report(const MecInstance &instance, const OracleReport &report);
std::string describe_tail_report(const TailInstance &instance,
                                 const TailOracleReport &report);

// ---------------------------------------------------------------------------
// Sweep configuration

/// Generated family: `count` instances with n sets over m elements.
struct SuiteSpec {
    unsigned n = 6;
    unsigned m = 12;
    unsigned count = 10;
};

struct SweepConfig {
    std::vector<std::string> instance_paths;
    std::vector<SuiteSpec> suites;
    std::uint64_t instance_seed = 1;
    unsigned p_min = 1;
    unsigned p_max = 7;
    std::vector<Strategy> strategies{Strategy::random};
    std::vector<Variant> variants{Variant::original};
    OptSettings settings;
    std::string output = "sweep.csv";
    std::string params_output; ///< optional parameter dump path
    std::optional<double> lambda1, lambda2, lambda3;
    double cost_max = 1.0; ///< tail suites only

    /// Throws DomainError / ShapeError on an unusable configuration.
    void validate() const;
};

using KeyValues = std::map<std::string, std::string>;

/// `key = value` lines; '#' starts a comment. Later keys win.
KeyValues parse_key_values(std::string_view text);

/// Applies keys on top of `base`. Unknown keys raise DomainError.
SweepConfig apply_config(SweepConfig base, const KeyValues &kv);

/// A sweep member: where it came from plus its id in output files.
struct NamedInstance {
    std::string id;
    MecInstance instance;
};

struct NamedTailInstance {
    std::string id;
    TailInstance instance;
};

/// Loads paths, then generates each suite. Suite member i uses seed
/// mix(instance_seed, n, m, i). Ids: file stem, or "n6_m12_i00".
std::vector<NamedInstance> resolve_instances(const SweepConfig &config);
std::vector<NamedTailInstance> resolve_tail_instances(const SweepConfig &config);

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kCsvHeader =
    "instance_id,n,m,p,strategy,variant,restarts,seed,best_fp,success_prob,status,wall_ms";
inline constexpr std::string_view kTailCsvExtra = "lambda1,lambda2,lambda3,planted_cost";

struct CsvRow {
    std::string instance_id;
    unsigned n = 0;
    unsigned m = 0;
    unsigned p = 0;
    std::string strategy;
    std::string variant;
    unsigned restarts = 0;
    std::uint64_t seed = 0;
    double best_fp = 0.0;
    double success_prob = 0.0;
    std::string status; ///< ok | failed | mean
    long long wall_ms = 0;
    /// Restarts dropped for non-finite values (metadata line only).
    unsigned failed_restarts = 0;
    /// Tail sweeps only: lambda1, lambda2, lambda3, planted_cost.
    std::vector<double> extra;
    /// Level optimum (data rows only; not serialized to CSV).
    Params params;
};

struct SweepResult {
    std::vector<CsvRow> rows;       ///< data rows, canonical order
    std::vector<CsvRow> aggregates; ///< MEAN rows, canonical order
    bool tail = false;
};

SweepResult run_sweep(const SweepConfig &config);
SweepResult run_tail_sweep(const SweepConfig &config);

/// Mean rows per (n, p, strategy, variant) over the ok data rows.
std::vector<CsvRow> aggregate_rows(const std::vector<CsvRow> &rows);

/// Full CSV text. `timestamp` goes into the first comment line only.
std::string format_csv(const SweepResult &result, const SweepConfig &config,
                       std::string_view timestamp);

/// Parses CSV produced by format_csv (comment lines skipped).
/// Throws ShapeError on a schema mismatch.
SweepResult parse_csv(std::string_view text);

// ---------------------------------------------------------------------------
// Plotting

struct PlotSpec {
    std::string title = "QAOA+ mean success probability";
    int width = 720;
    int height = 440;
};

/// Line chart of mean success probability against p, one series per
/// (n, strategy, variant). Throws ShapeError when there is nothing to plot.
std::string emit_plot(std::string_view csv_text, const PlotSpec &spec = {});

// ---------------------------------------------------------------------------
// Parameter dump

struct ParamRecord {
    std::string instance_id;
    unsigned p = 0;
    std::string strategy;
    std::string variant;
    Params raw;

    friend bool operator==(const ParamRecord &, const ParamRecord &) = default;
};

/// One line per record: wrapped gamma/beta for inspection, then the raw values.
std::string dump_parameters(const std::vector<ParamRecord> &records);
std::vector<ParamRecord> parse_parameter_dump(std::string_view text);
std::vector<ParamRecord> param_records(const SweepResult &result);

} // namespace qaoaplus
