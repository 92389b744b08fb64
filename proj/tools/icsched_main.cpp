// icsched: analyze, decide, minimize, reduce, generate, crosscheck for
// non-preemptive scheduling of release/deadline jobs on identical machines.
//
// Exit codes: 0 feasible/success, 1 infeasible/mismatch, 2 usage, parse, or
// budget errors. Reports go to stdout (--json for a single JSON document);
// diagnostics go to stderr.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "icsched/analysis.hpp"
#include "icsched/bounds.hpp"
#include "icsched/crosscheck.hpp"
#include "icsched/dp_solver.hpp"
#include "icsched/errors.hpp"
#include "icsched/generator.hpp"
#include "icsched/io.hpp"
#include "icsched/oracle.hpp"
#include "icsched/reduction.hpp"
#include "icsched/validate.hpp"

namespace {

using nlohmann::json;
using namespace ics;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::int64_t default_budget() {
    const std::int64_t fallback = SolveOptions{}.budget;
    const char* env = std::getenv("SCHED_BUDGET");
    if (env == nullptr) return fallback;
    try {
        const std::int64_t value = std::stoll(env);
        if (value < 1) throw std::invalid_argument("non-positive");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("SCHED_BUDGET is not a positive integer: ") + env);
    }
}

json profile_to_json(const Instance& instance, const InstanceProfile& p) {
    return json{{"n", p.n},
                {"machines", instance.machines},
                {"ell", p.ell},
                {"t_max", p.t_max},
                {"looseness", p.looseness.str()},
                {"looseness_value", p.looseness.value()},
                {"slack", p.slack},
                {"height", p.height},
                {"window_too_short", p.window_too_short}};
}

json bounds_to_json(const Instance& instance, const InstanceProfile& p) {
    json out;
    out["slack_bound"] = p.n == 0 ? 0 : slack_height_bound(instance.machines, p.slack).value;
    if (p.n > 0 && !p.window_too_short && p.looseness >= Rational(1))
        out["looseness_bound"] =
            looseness_height_bound(instance.machines, std::max<Time>(p.ell, 1), p.looseness).value;
    else
        out["looseness_bound"] = nullptr;
    return out;
}

json stats_to_json(const SolveStats& stats, double wall_ms) {
    return json{{"dp_invoked", stats.dp_invoked},
                {"precheck_rejected", stats.precheck_rejected},
                {"memo_entries", stats.memo_entries},
                {"parts", stats.parts.size()},
                {"wall_ms", wall_ms}};
}

json schedule_to_json_value(const Schedule& schedule) {
    return json::parse(schedule_to_json(schedule));
}

void print_human(const json& report) {
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            std::cout << key << ":\n";
            for (const auto& [k2, v2] : value.items())
                std::cout << "  " << k2 << ": " << v2.dump() << "\n";
        } else {
            std::cout << key << ": " << value.dump() << "\n";
        }
    }
}

void emit(const json& report, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        print_human(report);
}

// Loads and structurally validates an instance file. WindowTooShort jobs are
// tolerated (they make the instance infeasible, not malformed).
Instance load_instance(const std::string& path) {
    Instance instance = read_instance_file(path);
    const ValidationReport report = validate(instance);
    for (const auto& v : report.violations)
        if (v.kind != Violation::Kind::WindowTooShort)
            throw ParseError("invalid instance: " + v.message);
    return instance;
}

int run_analyze(const std::string& path, bool as_json) {
    const Instance instance = load_instance(path);
    const InstanceProfile p = profile(instance);
    json report{{"command", "analyze"},
                {"input", path},
                {"profile", profile_to_json(instance, p)},
                {"bounds", bounds_to_json(instance, p)}};
    report["min_machines_lower_bound"] = min_machines_lower_bound(instance);
    emit(report, as_json);
    return kExitFeasible;
}

int run_decide(const std::string& path, const std::string& driver, bool witness,
               std::int64_t budget, bool as_json) {
    const Instance instance = load_instance(path);
    const InstanceProfile p = profile(instance);

    SolveOptions options;
    options.budget = budget;
    options.witness = witness;

    Stopwatch timer;
    SolveReport result;
    json precheck_report;
    if (driver == "plain") {
        result = decide(instance, options);
    } else {
        const PrecheckMode mode =
            driver == "looseness" ? PrecheckMode::Looseness : PrecheckMode::Slack;
        if (!p.window_too_short) {
            const PrecheckResult gate = precheck(instance, mode);
            precheck_report = json{{"mode", driver},
                                   {"height", gate.height},
                                   {"bound", gate.bound},
                                   {"pass", gate.pass}};
        }
        result = driver == "looseness" ? solve_bounded_looseness(instance, options)
                                       : solve_bounded_slack(instance, options);
    }
    const double wall = timer.ms();

    json report{{"command", "decide"},
                {"input", path},
                {"driver", driver},
                {"profile", profile_to_json(instance, p)},
                {"answer", result.outcome == Outcome::Feasible ? "feasible" : "infeasible"},
                {"stats", stats_to_json(result.stats, wall)}};
    if (!precheck_report.is_null()) report["precheck"] = precheck_report;
    if (witness && result.schedule) report["schedule"] = schedule_to_json_value(*result.schedule);
    emit(report, as_json);
    return result.outcome == Outcome::Feasible ? kExitFeasible : kExitInfeasible;
}

int run_minimize(const std::string& path, std::int64_t m_max, std::int64_t budget,
                 bool as_json) {
    const Instance instance = load_instance(path);
    const InstanceProfile p = profile(instance);

    SolveOptions options;
    options.budget = budget;

    Stopwatch timer;
    const std::int64_t lower = min_machines_lower_bound(instance);
    const auto best = min_machines(instance, m_max, options);
    const double wall = timer.ms();

    json report{{"command", "minimize"},
                {"input", path},
                {"profile", profile_to_json(instance, p)},
                {"lower_bound", lower},
                {"max", m_max},
                {"answer", best ? "feasible" : "infeasible"},
                {"wall_ms", wall}};
    report["min_machines"] = best ? json(*best) : json(nullptr);
    emit(report, as_json);
    return best ? kExitFeasible : kExitInfeasible;
}

int run_reduce(const std::string& bp_path, int c, const std::string& out_path, bool as_json) {
    std::ifstream in(bp_path);
    if (!in) throw ParseError("cannot open '" + bp_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const BinPackingInstance bp = parse_bin_packing(buffer.str());

    const ReductionOutput out = reduce_bin_packing(bp, c);
    const ReductionProperties props = verify_reduction(bp, out, c);
    write_file(out_path, instance_to_json(out.instance));

    json report{{"command", "reduce"},
                {"input", bp_path},
                {"out", out_path},
                {"c", c},
                {"a_sum", out.a_sum},
                {"big_b", out.big_b},
                {"trivial", out.trivial},
                {"jobs", out.instance.jobs.size()}};
    if (!out.trivial) {
        report["properties"] = json{{"job_count", props.job_count},
                                    {"job_count_ok", props.job_count_ok},
                                    {"looseness", props.looseness.str()},
                                    {"looseness_cap", props.looseness_cap.str()},
                                    {"looseness_ok", props.looseness_ok},
                                    {"height", props.height},
                                    {"height_cap", props.height_cap},
                                    {"height_ok", props.height_ok},
                                    {"agreeable_ok", props.agreeable_ok},
                                    {"all_ok", props.all_ok()}};
    }
    emit(report, as_json);
    return kExitFeasible;
}

int run_generate(std::uint64_t seed, std::int64_t n, int machines, const std::string& style_name,
                 Time sigma_max, const std::string& lambda_text, Time horizon,
                 const std::string& out_path, bool as_json) {
    GeneratorStyle style;
    if (style_name == "unconstrained") {
        style = GeneratorStyle::unconstrained();
    } else if (style_name == "slack") {
        style = GeneratorStyle::target_slack(sigma_max);
    } else if (style_name == "looseness") {
        style = GeneratorStyle::target_looseness(parse_rational(lambda_text));
    } else {
        throw std::invalid_argument("unknown style '" + style_name + "'");
    }

    const Instance instance = random_instance(seed, n, machines, style, horizon);
    const std::string text = instance_to_json(instance);
    if (out_path == "-")
        std::cout << text;
    else
        write_file(out_path, text);

    json report{{"command", "generate"}, {"seed", seed},       {"n", n},
                {"machines", machines},  {"style", style_name}, {"horizon", horizon},
                {"out", out_path}};
    if (out_path != "-") emit(report, as_json);
    return kExitFeasible;
}

int run_crosscheck_cmd(std::uint64_t seed, std::int64_t count, std::int64_t n_max, int m_max,
                       Time t_max, std::int64_t budget, bool as_json) {
    CrosscheckParams params;
    params.seed = seed;
    params.count = count;
    params.n_max = n_max;
    params.m_max = m_max;
    params.t_max = t_max;
    params.budget = budget;

    Stopwatch timer;
    const CrosscheckResult result = run_crosscheck(params);
    const double wall = timer.ms();

    json report{{"command", "crosscheck"},
                {"count", count},
                {"instances_run", result.instances_run},
                {"feasible", result.feasible},
                {"mismatches", result.mismatches.size()},
                {"bound_violations", result.bound_violations.size()},
                {"state_violations", result.state_violations.size()},
                {"witness_violations", result.witness_violations.size()},
                {"wall_ms", wall}};
    emit(report, as_json);

    if (!result.clean()) {
        // Serialize the first offender so the failure can be replayed.
        const CrosscheckFailure* failure = nullptr;
        for (const auto* list : {&result.mismatches, &result.bound_violations,
                                 &result.state_violations, &result.witness_violations})
            if (!list->empty() && failure == nullptr) failure = &list->front();
        std::cerr << "crosscheck failure at suite index " << failure->index << ": "
                  << failure->what << "\n";
        std::cout << instance_to_json(failure->instance);
        return kExitInfeasible;
    }
    return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact feasibility, height bounds, machine minimization, and instance tooling\n"
        "for non-preemptive scheduling with release times and deadlines"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit reports as a single JSON document");

    std::string path;
    std::string driver = "plain";
    bool witness = false;
    std::int64_t budget_flag = -1;  // -1: use SCHED_BUDGET or the default

    auto* analyze = app.add_subcommand("analyze", "profile an instance and report bounds");
    analyze->add_option("path", path, "instance file")->required();

    auto* decide_cmd = app.add_subcommand("decide", "decide feasibility");
    decide_cmd->add_option("path", path, "instance file")->required();
    decide_cmd->add_option("--driver", driver, "plain, looseness, or slack")
        ->check(CLI::IsMember({"plain", "looseness", "slack"}));
    decide_cmd->add_flag("--witness", witness, "emit a verified schedule when feasible");
    decide_cmd->add_option("--budget", budget_flag, "DP state budget override");

    std::int64_t m_max = 8;
    auto* minimize = app.add_subcommand("minimize", "find the least sufficient machine count");
    minimize->add_option("path", path, "instance file")->required();
    minimize->add_option("--max", m_max, "largest machine count to try")->required();
    minimize->add_option("--budget", budget_flag, "DP state budget override");

    std::string out_path = "-";
    int c_param = 1;
    auto* reduce = app.add_subcommand("reduce", "reduce a bin-packing instance to scheduling");
    reduce->add_option("bp_path", path, "bin-packing file")->required();
    reduce->add_option("--c", c_param, "looseness exponent (looseness 1 + (m*n)^-c)");
    reduce->add_option("--out", out_path, "output instance file")->required();

    std::uint64_t seed = 1;
    std::int64_t gen_n = 0;
    int gen_m = 1;
    std::string style_name = "unconstrained";
    Time sigma_max = 0;
    std::string lambda_text = "2";
    Time horizon = 16;
    auto* generate = app.add_subcommand("generate", "write a seeded random instance");
    generate->add_option("--seed", seed, "RNG seed");
    generate->add_option("--n", gen_n, "job count")->required();
    generate->add_option("--m", gen_m, "machine count")->required();
    generate->add_option("--style", style_name, "unconstrained, slack, or looseness")
        ->check(CLI::IsMember({"unconstrained", "slack", "looseness"}));
    generate->add_option("--sigma-max", sigma_max, "slack cap for --style slack");
    generate->add_option("--lambda-max", lambda_text, "looseness cap (rational p/q)");
    generate->add_option("--horizon", horizon, "release/processing range");
    generate->add_option("--out", out_path, "output file ('-' for stdout)");

    std::int64_t count = 100;
    std::int64_t n_max = 6;
    int cm_max = 3;
    Time ct_max = 12;
    auto* crosscheck =
        app.add_subcommand("crosscheck", "compare DP, drivers, and the brute-force oracle");
    crosscheck->add_option("--seed", seed, "suite seed");
    crosscheck->add_option("--count", count, "number of random instances");
    crosscheck->add_option("--n-max", n_max, "max jobs per instance (oracle-capped)");
    crosscheck->add_option("--m-max", cm_max, "max machines per instance");
    crosscheck->add_option("--t-max", ct_max, "time horizon of generated jobs");
    crosscheck->add_option("--budget", budget_flag, "DP state budget override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        const std::int64_t budget = budget_flag > 0 ? budget_flag : default_budget();
        if (analyze->parsed()) return run_analyze(path, as_json);
        if (decide_cmd->parsed()) return run_decide(path, driver, witness, budget, as_json);
        if (minimize->parsed()) return run_minimize(path, m_max, budget, as_json);
        if (reduce->parsed()) return run_reduce(path, c_param, out_path, as_json);
        if (generate->parsed())
            return run_generate(seed, gen_n, gen_m, style_name, sigma_max, lambda_text, horizon,
                                out_path, as_json);
        if (crosscheck->parsed())
            return run_crosscheck_cmd(seed, count, n_max, cm_max, ct_max, budget, as_json);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
