#include "icsched/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "icsched/analysis.hpp"
#include "icsched/validate.hpp"

namespace ics {

namespace {

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
    const __int128 r = static_cast<__int128>(a) * b;
    if (r > std::numeric_limits<std::int64_t>::max())
        return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(r);
}

// Least k >= 0 with e^k >= x (x >= 1). Safe for integer x: ln(x) is never
// within double noise of an integer unless x == 1.
std::int64_t ceil_ln(Time x) {
    if (x <= 1) return 0;
    return static_cast<std::int64_t>(std::ceil(std::log(static_cast<double>(x))));
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b;
}

bool reject_invalid(const Instance& instance) {
    const ValidationReport report = validate(instance);
    for (const auto& v : report.violations)
        if (v.kind != Violation::Kind::WindowTooShort)
            throw std::invalid_argument("invalid instance: " + v.message);
    return report.has_window_too_short();
}

}  // namespace

HeightBound looseness_height_bound(int machines, Time ell, const Rational& looseness) {
    if (machines < 1) throw std::invalid_argument("machines must be >= 1");
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (looseness < Rational(1)) throw std::invalid_argument("looseness must be >= 1");

    if (looseness == Rational(1))
        return {machines, HeightBound::Source::Degenerate};

    // ln(lambda) - ln(lambda - 1) == ln(p) - ln(p - q) for lambda = p/q.
    const double denom = std::log(static_cast<double>(looseness.num)) -
                         std::log(static_cast<double>(looseness.num - looseness.den));
    const double ratio = std::log(static_cast<double>(ell)) / denom;
    const double raw = 2.0 * machines * (ratio + 1.0);

    // Cap from 1/(ln lambda - ln(lambda-1)) <= lambda:
    // bound <= 2m*(lambda*ln(ell) + 1) <= 2m*(ceil(lambda)*(ceil(ln ell)+1) + 1).
    const std::int64_t lam_ceil = ceil_div(looseness.num, looseness.den);
    const std::int64_t cap = saturating_mul(
        2 * static_cast<std::int64_t>(machines),
        saturating_mul(lam_ceil, ceil_ln(ell) + 1) + 1);

    std::int64_t value = cap;
    if (std::isfinite(raw) && raw < 9.0e18) {
        // Floor after a relative margin: keeps exactly-integral values (e.g.
        // ln 8 / ln 2) intact while never under-reporting the bound.
        const double margin = 1e-9 * std::max(1.0, std::abs(raw));
        value = std::min(value, static_cast<std::int64_t>(std::floor(raw + margin)));
    }
    value = std::max<std::int64_t>(value, machines);
    return {value, HeightBound::Source::Looseness};
}

HeightBound slack_height_bound(int machines, Time sigma) {
    if (machines < 1) throw std::invalid_argument("machines must be >= 1");
    if (sigma < 0) throw std::invalid_argument("slack must be >= 0");
    const std::int64_t width = saturating_mul(2, sigma) == std::numeric_limits<std::int64_t>::max()
                                   ? std::numeric_limits<std::int64_t>::max()
                                   : 2 * sigma + 1;
    return {saturating_mul(width, machines), HeightBound::Source::Slack};
}

PrecheckResult precheck(const Instance& instance, PrecheckMode mode) {
    const InstanceProfile p = profile(instance);
    PrecheckResult result;
    result.mode = mode;
    result.height = p.height;
    if (p.n == 0) {
        result.bound = std::numeric_limits<std::int64_t>::max();
        return result;
    }

    std::int64_t bound = std::numeric_limits<std::int64_t>::max();
    if (mode == PrecheckMode::Looseness || mode == PrecheckMode::Both)
        bound = std::min(bound,
                         looseness_height_bound(instance.machines, p.ell, p.looseness).value);
    if (mode == PrecheckMode::Slack || mode == PrecheckMode::Both)
        bound = std::min(bound, slack_height_bound(instance.machines, p.slack).value);

    result.bound = bound;
    result.pass = p.height <= bound;
    return result;
}

namespace {

SolveReport solve_with_precheck(const Instance& instance, PrecheckMode mode,
                                const SolveOptions& options) {
    // Jobs that cannot fit their window make the answer immediate and keep
    // the looseness bound's lambda >= 1 precondition intact.
    if (reject_invalid(instance)) {
        SolveReport report;
        report.outcome = Outcome::Infeasible;
        return report;
    }

    const PrecheckResult gate = precheck(instance, mode);
    if (!gate.pass) {
        SolveReport report;
        report.outcome = Outcome::Infeasible;
        report.stats.precheck_rejected = true;
        report.stats.dp_invoked = false;
        return report;
    }
    SolveReport report = decide(instance, options);
    return report;
}

}  // namespace

SolveReport solve_bounded_looseness(const Instance& instance, const SolveOptions& options) {
    return solve_with_precheck(instance, PrecheckMode::Looseness, options);
}

SolveReport solve_bounded_slack(const Instance& instance, const SolveOptions& options) {
    return solve_with_precheck(instance, PrecheckMode::Slack, options);
}

std::int64_t min_machines_lower_bound(const Instance& instance) {
    if (instance.jobs.empty()) return 1;
    const InstanceProfile p = profile(instance);

    std::int64_t lb = 1;

    // Slack bound inverted: feasible => h <= (2*sigma+1)*m.
    if (!p.window_too_short && p.slack >= 0) {
        const std::int64_t width = 2 * p.slack + 1;
        lb = std::max(lb, ceil_div(p.height, width));
    }

    // Least m whose looseness bound reaches the height. The bound grows at
    // least linearly in m, so the scan ends within height steps.
    if (!p.window_too_short && p.looseness >= Rational(1)) {
        std::int64_t m = 1;
        while (looseness_height_bound(static_cast<int>(std::min<std::int64_t>(m, INT32_MAX)),
                                      std::max<Time>(p.ell, 1), p.looseness)
                   .value < p.height)
            ++m;
        lb = std::max(lb, m);
    }

    // Load: total work divided by the enclosing horizon.
    Time min_release = instance.jobs.front().release;
    Time max_deadline = instance.jobs.front().deadline;
    __int128 work = 0;
    for (const Job& j : instance.jobs) {
        min_release = std::min(min_release, j.release);
        max_deadline = std::max(max_deadline, j.deadline);
        work += j.processing;
    }
    const __int128 horizon = static_cast<__int128>(max_deadline) - min_release;
    if (horizon > 0) {
        const __int128 load = (work + horizon - 1) / horizon;
        if (load > std::numeric_limits<std::int64_t>::max())
            lb = std::numeric_limits<std::int64_t>::max();
        else
            lb = std::max(lb, static_cast<std::int64_t>(load));
    }
    return lb;
}

std::optional<std::int64_t> min_machines(const Instance& instance, std::int64_t m_max,
                                         const SolveOptions& options) {
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    if (reject_invalid(instance)) return std::nullopt;

    for (std::int64_t m = min_machines_lower_bound(instance); m <= m_max; ++m) {
        Instance candidate = instance;
        candidate.machines = static_cast<int>(std::min<std::int64_t>(m, INT32_MAX));
        if (decide(candidate, options).outcome == Outcome::Feasible) return m;
    }
    return std::nullopt;
}

}  // namespace ics
