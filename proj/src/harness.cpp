#include "qaoaplus/harness.hpp"

#include "qaoaplus/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <tuple>

namespace qaoaplus {

std::string_view to_string(Strategy s) {
    return s == Strategy::random ? "random" : "fixing";
}

Strategy parse_strategy(std::string_view text) {
    if (text == "random")
        return Strategy::random;
    if (text == "fixing")
        return Strategy::fixing;
    throw DomainError("unknown strategy '" + std::string(text) +
                                "' (expected random or fixing)");
}

namespace {

std::string mask_to_sets(Mask mask) {
    std::string out = "{";
    bool first = true;
    for (Mask b = mask; b != 0; b &= b - 1) {
        if (!first)
            out += ", ";
        out += "S" + std::to_string(std::countr_zero(b) + 1);
        first = false;
    }
    return out + "}";
}

std::string mask_list(const std::vector<Mask> &masks, std::size_t limit = 16) {
    std::string out = "[";
    for (std::size_t i = 0; i < masks.size() && i < limit; ++i) {
        if (i)
            out += ", ";
        out += mask_to_sets(masks[i]);
    }
    if (masks.size() > limit)
        out += ", ... (" + std::to_string(masks.size()) + " total)";
    return out + "]";
}

std::vector<LevelResult> optimize_levels(const CompiledAnsatz &ansatz, unsigned p,
                                         Strategy strategy, Mask x_sol,
                                         const OptSettings &settings) {
    if (strategy == Strategy::random)
        return {multistart(ansatz.with_level(p), x_sol, settings)};
    return parameter_fixing_schedule(ansatz, p, x_sol, settings);
}

} // namespace

std::string describe_report(const MecInstance &instance, const OracleReport &report) {
    std::ostringstream out;
    out << "sets: " << instance.num_sets() << "\n"
        << "universe: " << instance.universe_size() << "\n"
        << "feasible_count: " << report.feasible_masks.size() << "\n"
        << "exact_covers: " << mask_list(report.exact_covers) << "\n"
        << "mec: " << mask_list(report.mec_masks) << "\n"
        << "argmax: " << mask_list(report.argmax_masks) << "\n"
        << "argmax_value: " << format_double(report.argmax_value) << "\n"
        << "degenerate: " << (report.degenerate() ? "yes" : "no") << "\n";
    if (report.x_sol)
        out << "x_sol: " << *report.x_sol << "\n";
    else
        out << "x_sol: none\n";
    out << "accepted: " << (report.accepted() ? "yes" : "no") << "\n";
    return out.str();
}

std::string describe_tail_report(const TailInstance &instance,
                                 const TailOracleReport &report) {
    std::ostringstream out;
    out << "routes: " << instance.num_routes() << "\n"
        << "flights: " << instance.flight_count() << "\n"
        << "feasible_count: " << report.feasible_masks.size() << "\n"
        << "route_partitions: " << mask_list(report.route_partitions) << "\n"
        << "argmax: " << mask_list(report.argmax_masks) << "\n"
        << "argmax_value: " << format_double(report.argmax_value) << "\n"
        << "degenerate: " << (report.degenerate() ? "yes" : "no") << "\n";
    if (report.x_sol)
        out << "x_sol: " << *report.x_sol << "\n"
            << "x_sol_cost: " << format_double(selection_cost(instance, *report.x_sol))
            << "\n";
    else
        out << "x_sol: none\n";
    return out.str();
}

std::vector<LevelResult> run_solve(const MecInstance &instance, unsigned p,
                                   Strategy strategy, Variant variant,
                                   const OptSettings &settings,
                                   const std::optional<Lambdas> &lambdas) {
    if (p < 1)
        throw DomainError("level p must be at least 1");
    const Lambdas weights =
        lambdas ? *lambdas : default_lambdas(instance.num_sets(), instance.universe_size());
    const auto report = solve(instance, weights);
    if (!report.accepted())
        throw PreconditionError(
            "instance needs a unique exact cover that is also the unique objective "
            "argmax\n" +
            describe_report(instance, report));
    const auto ansatz = compile_ansatz(instance, weights, variant, p);
    return optimize_levels(ansatz, p, strategy, *report.x_sol, settings);
}

std::vector<LevelResult> run_tail_solve(const TailInstance &instance, unsigned p,
                                        Strategy strategy, Variant variant,
                                        const OptSettings &settings,
                                        const TailLambdas &lambdas) {
    if (p < 1)
        throw DomainError("level p must be at least 1");
    const auto report = solve_tail(instance, lambdas);
    if (!report.x_sol)
        throw PreconditionError("tail objective argmax is not unique\n" +
                                describe_tail_report(instance, report));
    const auto ansatz = compile_tail_ansatz(instance, lambdas, variant, p);
    return optimize_levels(ansatz, p, strategy, *report.x_sol, settings);
}

// ---------------------------------------------------------------------------
// Configuration

void SweepConfig::validate() const {
    if (instance_paths.empty() && suites.empty())
        throw DomainError("sweep needs at least one instance path or suite");
    if (p_min < 1 || p_max > 12 || p_min > p_max)
        throw DomainError("p range must satisfy 1 <= p_min <= p_max <= 12");
    if (strategies.empty())
        throw DomainError("no strategies selected");
    if (variants.empty())
        throw DomainError("no variants selected");
    for (const auto &s : suites)
        if (s.count == 0)
            throw DomainError("suite count must be positive");
    settings.validate();
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto end = s.find(sep, start);
        const auto piece =
            trim(s.substr(start, end == std::string_view::npos ? s.size() - start
                                                               : end - start));
        if (!piece.empty())
            out.emplace_back(piece);
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return out;
}

// Keeps empty lines so line numbers stay accurate.
std::vector<std::string> split_lines(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < s.size()) {
        auto end = s.find('\n', start);
        if (end == std::string_view::npos)
            end = s.size();
        auto line = s.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        out.emplace_back(line);
        start = end + 1;
    }
    return out;
}

template <typename T> T parse_number(const std::string &key, std::string_view text) {
    T value{};
    const char *first = text.data();
    const char *last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw DomainError("bad value '" + std::string(text) + "' for " + key);
    return value;
}

SuiteSpec parse_suite(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3)
        throw DomainError("suite must be n:m:count, got '" + std::string(text) + "'");
    return SuiteSpec{parse_number<unsigned>("suite n", parts[0]),
                     parse_number<unsigned>("suite m", parts[1]),
                     parse_number<unsigned>("suite count", parts[2])};
}

} // namespace

KeyValues parse_key_values(std::string_view text) {
    KeyValues kv;
    std::size_t line_no = 0;
    for (const auto &line : split_lines(text)) {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos)
            body = body.substr(0, hash);
        body = trim(body);
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected key = value");
        const auto key = trim(body.substr(0, eq));
        if (key.empty())
            throw ParseError(line_no, "empty key");
        kv[std::string(key)] = std::string(trim(body.substr(eq + 1)));
    }
    return kv;
}

SweepConfig apply_config(SweepConfig c, const KeyValues &kv) {
    for (const auto &[key, value] : kv) {
        if (key == "instances") {
            c.instance_paths = split(value, ',');
        } else if (key == "suites") {
            c.suites.clear();
            for (const auto &s : split(value, ','))
                c.suites.push_back(parse_suite(s));
        } else if (key == "instance_seed") {
            c.instance_seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "p_min") {
            c.p_min = parse_number<unsigned>(key, value);
        } else if (key == "p_max") {
            c.p_max = parse_number<unsigned>(key, value);
        } else if (key == "strategies") {
            c.strategies.clear();
            for (const auto &s : split(value, ','))
                c.strategies.push_back(parse_strategy(s));
        } else if (key == "variants") {
            c.variants.clear();
            for (const auto &v : split(value, ','))
                c.variants.push_back(parse_variant(v));
        } else if (key == "restarts") {
            c.settings.restarts = parse_number<unsigned>(key, value);
        } else if (key == "max_iterations") {
            c.settings.max_iterations = parse_number<unsigned>(key, value);
        } else if (key == "gradient_eps") {
            c.settings.gradient_eps = parse_number<double>(key, value);
        } else if (key == "convergence_tol") {
            c.settings.convergence_tol = parse_number<double>(key, value);
        } else if (key == "seed") {
            c.settings.rng_seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "output") {
            c.output = value;
        } else if (key == "params_output") {
            c.params_output = value;
        } else if (key == "lambda1") {
            c.lambda1 = parse_number<double>(key, value);
        } else if (key == "lambda2") {
            c.lambda2 = parse_number<double>(key, value);
        } else if (key == "lambda3") {
            c.lambda3 = parse_number<double>(key, value);
        } else if (key == "cost_max") {
            c.cost_max = parse_number<double>(key, value);
        } else {
            throw DomainError("unknown configuration key '" + key + "'");
        }
    }
    return c;
}

namespace {

std::string suite_member_id(const SuiteSpec &s, unsigned i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "n%u_m%u_i%02u", s.n, s.m, i);
    return buf;
}

GenSpec suite_member_spec(const SweepConfig &config, const SuiteSpec &s, unsigned i) {
    GenSpec g;
    g.n = s.n;
    g.m = s.m;
    g.seed = mix_seed({config.instance_seed, s.n, s.m, i});
    return g;
}

} // namespace

std::vector<NamedInstance> resolve_instances(const SweepConfig &config) {
    std::vector<NamedInstance> out;
    for (const auto &path : config.instance_paths)
        out.push_back({std::filesystem::path(path).stem().string(), load_instance(path)});
    for (const auto &s : config.suites)
        for (unsigned i = 0; i < s.count; ++i)
            out.push_back({suite_member_id(s, i), generate(suite_member_spec(config, s, i))});
    return out;
}

std::vector<NamedTailInstance> resolve_tail_instances(const SweepConfig &config) {
    std::vector<NamedTailInstance> out;
    for (const auto &path : config.instance_paths)
        out.push_back(
            {std::filesystem::path(path).stem().string(), load_tail_instance(path)});
    for (const auto &s : config.suites)
        for (unsigned i = 0; i < s.count; ++i)
            out.push_back({"tail_" + suite_member_id(s, i),
                           generate_tail(suite_member_spec(config, s, i), config.cost_max)
                               .instance});
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point since) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since)
        .count();
}

auto row_key(const CsvRow &r) {
    return std::tie(r.instance_id, r.p, r.strategy, r.variant);
}

CsvRow base_row(const std::string &id, unsigned n, unsigned m, unsigned p,
                Strategy strategy, Variant variant, const SweepConfig &config) {
    CsvRow row;
    row.instance_id = id;
    row.n = n;
    row.m = m;
    row.p = p;
    row.strategy = std::string(to_string(strategy));
    row.variant = std::string(to_string(variant));
    row.restarts = config.settings.restarts;
    row.seed = config.settings.rng_seed;
    return row;
}

// Runs every (strategy, variant) cell of one instance and appends rows.
// `solve_fn(p, strategy, variant)` returns the level results.
template <typename SolveFn>
void sweep_instance(const std::string &id, unsigned n, unsigned m,
                    const SweepConfig &config, const std::vector<double> &extra,
                    SolveFn &&solve_fn, std::vector<CsvRow> &rows) {
    auto fail_all = [&](Strategy s, Variant v, std::vector<unsigned> ps) {
        for (unsigned p : ps) {
            auto row = base_row(id, n, m, p, s, v, config);
            row.status = "failed";
            row.extra = extra;
            rows.push_back(std::move(row));
        }
    };
    std::vector<unsigned> levels(config.p_max - config.p_min + 1);
    std::iota(levels.begin(), levels.end(), config.p_min);

    for (Strategy s : config.strategies) {
        for (Variant v : config.variants) {
            if (s == Strategy::random) {
                for (unsigned p : levels) {
                    const auto start = Clock::now();
                    try {
                        const auto results = solve_fn(p, s, v);
                        auto row = base_row(id, n, m, p, s, v, config);
                        row.best_fp = results.back().best_fp;
                        row.success_prob = results.back().success_prob;
                        row.params = results.back().best_params;
                        row.failed_restarts = results.back().failed_restarts;
                        row.status = "ok";
                        row.wall_ms = elapsed_ms(start);
                        row.extra = extra;
                        rows.push_back(std::move(row));
                    } catch (const std::exception &) {
                        fail_all(s, v, {p});
                    }
                }
            } else {
                const auto start = Clock::now();
                try {
                    const auto results = solve_fn(config.p_max, s, v);
                    const long long per_level =
                        elapsed_ms(start) / static_cast<long long>(results.size());
                    for (const auto &r : results) {
                        if (r.p < config.p_min)
                            continue;
                        auto row = base_row(id, n, m, r.p, s, v, config);
                        row.best_fp = r.best_fp;
                        row.success_prob = r.success_prob;
                        row.params = r.best_params;
                        row.failed_restarts = r.failed_restarts;
                        row.status = "ok";
                        row.wall_ms = per_level;
                        row.extra = extra;
                        rows.push_back(std::move(row));
                    }
                } catch (const std::exception &) {
                    fail_all(s, v, levels);
                }
            }
        }
    }
}

void canonicalize(SweepResult &result) {
    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [](const CsvRow &a, const CsvRow &b) { return row_key(a) < row_key(b); });
    result.aggregates = aggregate_rows(result.rows);
}

} // namespace

SweepResult run_sweep(const SweepConfig &config) {
    config.validate();
    std::optional<Lambdas> override_weights;
    if (config.lambda1 || config.lambda2) {
        if (!(config.lambda1 && config.lambda2))
            throw DomainError("set both lambda1 and lambda2, or neither");
        override_weights = Lambdas(*config.lambda1, *config.lambda2);
    }
    SweepResult result;
    for (const auto &named : resolve_instances(config)) {
        const auto &inst = named.instance;
        sweep_instance(
            named.id, inst.num_sets(), inst.universe_size(), config, {},
            [&](unsigned p, Strategy s, Variant v) {
                return run_solve(inst, p, s, v, config.settings, override_weights);
            },
            result.rows);
    }
    canonicalize(result);
    return result;
}

SweepResult run_tail_sweep(const SweepConfig &config) {
    config.validate();
    const auto instances = resolve_tail_instances(config);
    // Weight validation happens for every instance before any simulation.
    std::vector<TailLambdas> weights;
    for (const auto &named : instances) {
        const auto defaults = default_tail_lambdas(named.instance);
        weights.emplace_back(config.lambda1.value_or(defaults.lambda1()),
                             config.lambda2.value_or(defaults.lambda2()),
                             config.lambda3.value_or(defaults.lambda3()));
    }
    SweepResult result;
    result.tail = true;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto &inst = instances[i].instance;
        const auto &w = weights[i];
        const auto report = solve_tail(inst, w);
        const double planted_cost =
            report.x_sol ? selection_cost(inst, *report.x_sol) : NAN;
        sweep_instance(
            instances[i].id, inst.num_routes(), inst.flight_count(), config,
            {w.lambda1(), w.lambda2(), w.lambda3(), planted_cost},
            [&](unsigned p, Strategy s, Variant v) {
                return run_tail_solve(inst, p, s, v, config.settings, w);
            },
            result.rows);
    }
    canonicalize(result);
    return result;
}

std::vector<CsvRow> aggregate_rows(const std::vector<CsvRow> &rows) {
    using Key = std::tuple<unsigned, unsigned, std::string, std::string>;
    std::map<Key, std::vector<const CsvRow *>> groups;
    for (const auto &r : rows)
        if (r.status == "ok")
            groups[{r.n, r.p, r.strategy, r.variant}].push_back(&r);

    std::vector<CsvRow> out;
    for (const auto &[key, members] : groups) {
        CsvRow agg;
        agg.instance_id = "MEAN";
        agg.n = std::get<0>(key);
        agg.p = std::get<1>(key);
        agg.strategy = std::get<2>(key);
        agg.variant = std::get<3>(key);
        agg.m = members.front()->m;
        agg.restarts = members.front()->restarts;
        agg.seed = members.front()->seed;
        double fp = 0.0, sp = 0.0;
        long long ms = 0;
        for (const auto *r : members) {
            if (r->m != agg.m)
                agg.m = 0; // mixed universes within one size class
            fp += r->best_fp;
            sp += r->success_prob;
            ms += r->wall_ms;
        }
        const auto count = static_cast<double>(members.size());
        agg.best_fp = fp / count;
        agg.success_prob = sp / count;
        agg.wall_ms = std::llround(static_cast<double>(ms) / count);
        agg.status = "mean";
        if (!members.front()->extra.empty()) {
            agg.extra.assign(members.front()->extra.size(), 0.0);
            for (const auto *r : members)
                for (std::size_t k = 0; k < agg.extra.size(); ++k)
                    agg.extra[k] += r->extra[k] / count;
        }
        out.push_back(std::move(agg));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV text

namespace {

std::string format_row(const CsvRow &r, bool tail) {
    std::string line = r.instance_id + ',' + std::to_string(r.n) + ',' +
                       std::to_string(r.m) + ',' + std::to_string(r.p) + ',' +
                       r.strategy + ',' + r.variant + ',' + std::to_string(r.restarts) +
                       ',' + std::to_string(r.seed) + ',' + format_double(r.best_fp) +
                       ',' + format_double(r.success_prob) + ',' + r.status + ',' +
                       std::to_string(r.wall_ms);
    if (tail) {
        for (std::size_t k = 0; k < 4; ++k)
            line += ',' + (k < r.extra.size() ? format_double(r.extra[k]) : "nan");
    }
    return line;
}

} // namespace

std::string format_csv(const SweepResult &result, const SweepConfig &config,
                       std::string_view timestamp) {
    const auto &s = config.settings;
    unsigned failed = 0;
    for (const auto &row : result.rows)
        failed += row.failed_restarts;
    std::string out = "# qaoaplus " + std::string(result.tail ? "tail-sweep" : "sweep") +
                      " generated " + std::string(timestamp) + "\n";
    out += "# mixer_order=ascending restarts=" + std::to_string(s.restarts) +
           " max_iterations=" + std::to_string(s.max_iterations) +
           " gradient_eps=" + format_double(s.gradient_eps) +
           " convergence_tol=" + format_double(s.convergence_tol) +
           " seed=" + std::to_string(s.rng_seed) +
           " instance_seed=" + std::to_string(config.instance_seed) +
           " failed_restarts=" + std::to_string(failed) + "\n";
    out += kCsvHeader;
    if (result.tail)
        out += "," + std::string(kTailCsvExtra);
    out += '\n';
    for (const auto &r : result.rows)
        out += format_row(r, result.tail) + '\n';
    for (const auto &r : result.aggregates)
        out += format_row(r, result.tail) + '\n';
    return out;
}

SweepResult parse_csv(std::string_view text) {
    SweepResult result;
    bool have_header = false;
    std::size_t columns = 0;
    std::size_t line_no = 0;
    for (const auto &line : split_lines(text)) {
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        if (!have_header) {
            if (line == kCsvHeader) {
                columns = 12;
            } else if (line == std::string(kCsvHeader) + "," + std::string(kTailCsvExtra)) {
                columns = 16;
                result.tail = true;
            } else {
                throw ShapeError("unexpected CSV header: " + line);
            }
            have_header = true;
            continue;
        }
        std::vector<std::string> f;
        {
            std::size_t start = 0;
            while (true) {
                const auto end = line.find(',', start);
                f.push_back(line.substr(start, end == std::string::npos ? std::string::npos
                                                                        : end - start));
                if (end == std::string::npos)
                    break;
                start = end + 1;
            }
        }
        if (f.size() != columns)
            throw ShapeError("CSV row has " + std::to_string(f.size()) +
                             " fields, expected " + std::to_string(columns));
        CsvRow r;
        try {
            r.instance_id = f[0];
            r.n = parse_number<unsigned>("n", f[1]);
            r.m = parse_number<unsigned>("m", f[2]);
            r.p = parse_number<unsigned>("p", f[3]);
            r.strategy = f[4];
            r.variant = f[5];
            r.restarts = parse_number<unsigned>("restarts", f[6]);
            r.seed = parse_number<std::uint64_t>("seed", f[7]);
            r.best_fp = parse_number<double>("best_fp", f[8]);
            r.success_prob = parse_number<double>("success_prob", f[9]);
            r.status = f[10];
            r.wall_ms = parse_number<long long>("wall_ms", f[11]);
            for (std::size_t k = 12; k < columns; ++k)
                r.extra.push_back(f[k] == "nan" ? NAN : parse_number<double>("extra", f[k]));
        } catch (const DomainError &e) {
            throw ShapeError("CSV line " + std::to_string(line_no) + ": " + e.what());
        }
        if (r.instance_id == "MEAN")
            result.aggregates.push_back(std::move(r));
        else
            result.rows.push_back(std::move(r));
    }
    if (!have_header)
        throw ShapeError("CSV has no header row");
    return result;
}

// ---------------------------------------------------------------------------
// Parameter dump

namespace {

std::string join_values(const std::vector<double> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += format_double(v[i]);
    }
    return out;
}

std::vector<double> parse_values(std::string_view text) {
    std::vector<double> out;
    for (const auto &piece : split(text, ','))
        out.push_back(parse_number<double>("parameter", piece));
    return out;
}

} // namespace

std::string dump_parameters(const std::vector<ParamRecord> &records) {
    std::string out;
    for (const auto &r : records) {
        const auto wrapped = wrapped_for_report(r.raw);
        out += r.instance_id + " p=" + std::to_string(r.p) + " strategy=" + r.strategy +
               " variant=" + r.variant + " gamma=" + join_values(wrapped.gammas) +
               " beta=" + join_values(wrapped.betas) +
               " raw_gamma=" + join_values(r.raw.gammas) +
               " raw_beta=" + join_values(r.raw.betas) + "\n";
    }
    return out;
}

std::vector<ParamRecord> parse_parameter_dump(std::string_view text) {
    std::vector<ParamRecord> out;
    std::size_t line_no = 0;
    for (const auto &line : split_lines(text)) {
        ++line_no;
        std::istringstream in(line);
        ParamRecord r;
        if (!(in >> r.instance_id))
            continue;
        std::string token;
        bool have_p = false;
        while (in >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos)
                throw ParseError(line_no, "expected key=value, got '" + token + "'");
            const auto key = token.substr(0, eq);
            const auto value = std::string_view(token).substr(eq + 1);
            if (key == "p") {
                r.p = parse_number<unsigned>("p", value);
                have_p = true;
            } else if (key == "strategy") {
                r.strategy = value;
            } else if (key == "variant") {
                r.variant = value;
            } else if (key == "raw_gamma") {
                r.raw.gammas = parse_values(value);
            } else if (key == "raw_beta") {
                r.raw.betas = parse_values(value);
            } else if (key != "gamma" && key != "beta") {
                throw ParseError(line_no, "unknown field '" + key + "'");
            }
        }
        if (!have_p)
            throw ParseError(line_no, "missing p=");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ParamRecord> param_records(const SweepResult &result) {
    std::vector<ParamRecord> out;
    for (const auto &row : result.rows)
        if (row.status == "ok")
            out.push_back({row.instance_id, row.p, row.strategy, row.variant, row.params});
    return out;
}

} // namespace qaoaplus
