// qaoaplus: command-line front end for the MEC / tail-assignment QAOA+ toolkit.

#include "qaoaplus/errors.hpp"
#include "qaoaplus/harness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>

using namespace qaoaplus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitOptimization = 2;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string join(const std::vector<double> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + format_double(v[i]);
    return out;
}

struct SweepArgs {
    std::string config_path;
    std::vector<std::string> overrides;
    KeyValues flags;
};

void add_sweep_options(CLI::App *cmd, SweepArgs &args) {
    cmd->add_option("--config", args.config_path, "key=value configuration file");
    cmd->add_option("--set", args.overrides, "override one key (key=value); repeatable");
    // Shorthand flags; each maps to the configuration key of the same name.
    for (const auto &[flag, key] : std::vector<std::pair<std::string, std::string>>{
             {"--out", "output"},
             {"--params-out", "params_output"},
             {"--instances", "instances"},
             {"--suites", "suites"},
             {"--instance-seed", "instance_seed"},
             {"--p-min", "p_min"},
             {"--p-max", "p_max"},
             {"--strategies", "strategies"},
             {"--variants", "variants"},
             {"--restarts", "restarts"},
             {"--max-iterations", "max_iterations"},
             {"--seed", "seed"},
             {"--lambda1", "lambda1"},
             {"--lambda2", "lambda2"},
             {"--lambda3", "lambda3"},
             {"--cost-max", "cost_max"}}) {
        cmd->add_option_function<std::string>(
            flag, [&args, key](const std::string &v) { args.flags[key] = v; },
            "sets '" + key + "'");
    }
}

SweepConfig build_config(const SweepArgs &args) {
    SweepConfig config;
    if (!args.config_path.empty())
        config = apply_config(config, parse_key_values(read_text_file(args.config_path)));
    KeyValues cli = args.flags;
    for (const auto &kv : args.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw DomainError("--set expects key=value, got '" + kv + "'");
        cli[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return apply_config(config, cli);
}

void write_sweep_outputs(const SweepResult &result, const SweepConfig &config) {
    write_text_file(config.output, format_csv(result, config, utc_timestamp()));
    std::cout << "wrote " << result.rows.size() << " data rows and "
              << result.aggregates.size() << " aggregate rows to " << config.output << "\n";
    if (!config.params_output.empty()) {
        write_text_file(config.params_output, dump_parameters(param_records(result)));
        std::cout << "wrote parameters to " << config.params_output << "\n";
    }
}

struct SolveArgs {
    std::string instance;
    bool tail = false;
    unsigned p = 1;
    std::string strategy = "random";
    std::string variant = "original";
    OptSettings settings;
    std::optional<double> lambda1, lambda2, lambda3;
};

void print_levels(const std::vector<LevelResult> &levels, const OptSettings &s) {
    std::cout << "# restarts=" << s.restarts << " max_iterations=" << s.max_iterations
              << " seed=" << s.rng_seed << " mixer_order=ascending\n";
    for (const auto &r : levels) {
        const auto wrapped = wrapped_for_report(r.best_params);
        std::cout << "p=" << r.p << " variant=" << to_string(r.variant)
                  << " best_fp=" << format_double(r.best_fp)
                  << " success_prob=" << format_double(r.success_prob)
                  << " failed_restarts=" << r.failed_restarts
                  << " gamma=" << join(wrapped.gammas) << " beta=" << join(wrapped.betas)
                  << "\n";
    }
}

int run_solve_command(const SolveArgs &a) {
    const auto strategy = parse_strategy(a.strategy);
    const auto variant = parse_variant(a.variant);
    if (a.tail) {
        const auto inst = load_tail_instance(a.instance);
        const auto d = default_tail_lambdas(inst);
        const TailLambdas w(a.lambda1.value_or(d.lambda1()), a.lambda2.value_or(d.lambda2()),
                            a.lambda3.value_or(d.lambda3()));
        print_levels(run_tail_solve(inst, a.p, strategy, variant, a.settings, w), a.settings);
    } else {
        const auto inst = load_instance(a.instance);
        std::optional<Lambdas> w;
        if (a.lambda1 || a.lambda2) {
            const auto d = default_lambdas(inst.num_sets(), inst.universe_size());
            w = Lambdas(a.lambda1.value_or(d.lambda1()), a.lambda2.value_or(d.lambda2()));
        }
        print_levels(run_solve(inst, a.p, strategy, variant, a.settings, w), a.settings);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA+ for minimum exact cover and tail assignment (exact statevector)"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto *solve_cmd = app.add_subcommand("solve", "optimize one instance");
    solve_cmd->add_option("--instance", solve_args.instance, "instance file")->required();
    solve_cmd->add_flag("--tail", solve_args.tail, "read route costs (tail assignment)");
    solve_cmd->add_option("--p", solve_args.p, "level (fixing: solves 1..p)");
    solve_cmd->add_option("--strategy", solve_args.strategy, "random | fixing");
    solve_cmd->add_option("--variant", solve_args.variant, "original | optimized");
    solve_cmd->add_option("--restarts", solve_args.settings.restarts);
    solve_cmd->add_option("--max-iterations", solve_args.settings.max_iterations);
    solve_cmd->add_option("--seed", solve_args.settings.rng_seed);
    solve_cmd->add_option("--lambda1", solve_args.lambda1);
    solve_cmd->add_option("--lambda2", solve_args.lambda2);
    solve_cmd->add_option("--lambda3", solve_args.lambda3);

    SweepArgs sweep_args, tail_args, dump_args;
    auto *sweep_cmd = app.add_subcommand("sweep", "MEC sweep over instances, levels, strategies");
    add_sweep_options(sweep_cmd, sweep_args);
    auto *tail_cmd = app.add_subcommand("tail-sweep", "tail-assignment sweep");
    add_sweep_options(tail_cmd, tail_args);
    auto *dump_cmd = app.add_subcommand("dump-params", "optimize and write optimal parameters");
    add_sweep_options(dump_cmd, dump_args);

    GenSpec gen;
    std::string gen_out;
    bool gen_tail = false;
    double gen_cost_max = 1.0;
    auto *gen_cmd = app.add_subcommand("generate", "random instance with a unique exact cover");
    gen_cmd->add_option("--n", gen.n, "number of sets")->required();
    gen_cmd->add_option("--m", gen.m, "universe size")->required();
    gen_cmd->add_option("--seed", gen.seed)->required();
    gen_cmd->add_option("--planted", gen.planted_size, "planted cover size");
    gen_cmd->add_option("--max-attempts", gen.max_attempts);
    gen_cmd->add_flag("--tail", gen_tail, "add route costs");
    gen_cmd->add_option("--cost-max", gen_cost_max);
    gen_cmd->add_option("--out", gen_out, "output path")->required();

    std::string oracle_instance;
    bool oracle_tail = false;
    auto *oracle_cmd = app.add_subcommand("oracle", "brute-force report for an instance");
    oracle_cmd->add_option("--instance", oracle_instance)->required();
    oracle_cmd->add_flag("--tail", oracle_tail);

    std::string plot_csv, plot_out;
    PlotSpec plot_spec;
    auto *plot_cmd = app.add_subcommand("plot", "render a sweep CSV as SVG");
    plot_cmd->add_option("--csv", plot_csv)->required();
    plot_cmd->add_option("--out", plot_out)->required();
    plot_cmd->add_option("--title", plot_spec.title);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd)
            return run_solve_command(solve_args);
        if (*sweep_cmd) {
            const auto config = build_config(sweep_args);
            write_sweep_outputs(run_sweep(config), config);
        } else if (*tail_cmd) {
            const auto config = build_config(tail_args);
            write_sweep_outputs(run_tail_sweep(config), config);
        } else if (*dump_cmd) {
            auto config = build_config(dump_args);
            if (dump_args.flags.count("output") && config.params_output.empty())
                config.params_output = config.output;
            if (config.params_output.empty())
                throw DomainError("dump-params needs --params-out or --out");
            const auto result = run_sweep(config);
            write_text_file(config.params_output, dump_parameters(param_records(result)));
            std::cout << "wrote parameters to " << config.params_output << "\n";
        } else if (*gen_cmd) {
            if (gen_tail) {
                const auto g = generate_tail(gen, gen_cost_max);
                write_text_file(gen_out, serialize_tail_instance(g.instance));
            } else {
                const auto g = generate_with_plant(gen);
                write_text_file(gen_out, serialize_instance(g.instance));
            }
            std::cout << "wrote " << gen_out << "\n";
        } else if (*oracle_cmd) {
            if (oracle_tail) {
                const auto inst = load_tail_instance(oracle_instance);
                std::cout << describe_tail_report(inst,
                                                  solve_tail(inst, default_tail_lambdas(inst)));
            } else {
                const auto inst = load_instance(oracle_instance);
                std::cout << describe_report(inst, solve(inst));
            }
        } else if (*plot_cmd) {
            write_text_file(plot_out, emit_plot(read_text_file(plot_csv), plot_spec));
            std::cout << "wrote " << plot_out << "\n";
        }
    } catch (const OptimizationError &e) {
        std::cerr << "optimization failed: " << e.what() << "\n";
        return kExitOptimization;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
