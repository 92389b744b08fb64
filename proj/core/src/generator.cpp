#include "icsched/generator.hpp"

#include <random>
#include <stdexcept>

namespace ics {

namespace {

// uniform in [lo, hi] via rejection; identical streams across platforms,
// unlike std::uniform_int_distribution
Time draw(std::mt19937_64& rng, Time lo, Time hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<Time>(x % span);
}

}  // namespace

Instance random_instance(std::uint64_t seed, std::int64_t n, int machines,
                         const GeneratorStyle& style, Time horizon) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (machines < 1) throw std::invalid_argument("machines must be >= 1");
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (style.kind == GeneratorStyle::Kind::TargetSlack && style.sigma_max < 0)
        throw std::invalid_argument("sigma_max must be >= 0");
    if (style.kind == GeneratorStyle::Kind::TargetLooseness &&
        style.lambda_max < Rational(1))
        throw std::invalid_argument("lambda_max must be >= 1");

    std::mt19937_64 rng(seed);
    Instance instance;
    instance.machines = machines;
    instance.jobs.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        Job job;
        job.id = i;
        job.release = draw(rng, 0, horizon - 1);
        job.processing = draw(rng, 1, horizon);

        Time delta_max = 0;
        switch (style.kind) {
            case GeneratorStyle::Kind::Unconstrained:
                delta_max = horizon;
                break;
            case GeneratorStyle::Kind::TargetSlack:
                delta_max = style.sigma_max;
                break;
            case GeneratorStyle::Kind::TargetLooseness: {
                // window <= floor(lambda * p)  =>  delta <= floor(lambda*p) - p
                const __int128 scaled = static_cast<__int128>(style.lambda_max.num) *
                                        job.processing / style.lambda_max.den;
                delta_max = static_cast<Time>(scaled) - job.processing;
                break;
            }
        }
        const Time delta = delta_max > 0 ? draw(rng, 0, delta_max) : 0;
        job.deadline = job.release + job.processing + delta;
        instance.jobs.push_back(job);
    }
    return instance;
}

}  // namespace ics
