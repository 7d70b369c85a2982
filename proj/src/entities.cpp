#include "contextsim/entities.hpp"

#include <future>
#include <vector>

namespace contextsim {

namespace {

Outcome up_iff(bool condition) { return condition ? Outcome::Up : Outcome::Down; }

double draw_split(const VesselsConfig& config, SubstreamRng& rng) {
    return std::visit(
        [&](const auto& split) -> double {
            using S = std::decay_t<decltype(split)>;
            if constexpr (std::is_same_v<S, UniformSplit>) {
                const double lo = split.lo.value_or(0.0);
                const double hi = split.hi.value_or(config.total_volume);
                return lo + (hi - lo) * rng.next_unit();
            } else if constexpr (std::is_same_v<S, FixedSplit>) {
                return split.value;
            } else {
                return rng.next_unit() < split.prob_a ? split.a : split.b;
            }
        },
        config.split_distribution);
}

template <class Sampler>
std::array<PairCounts, 4> tally(const RunSpec& spec, unsigned threads, Sampler&& sample) {
    const unsigned n_chunks = std::max(1u, threads);
    std::array<PairCounts, 4> totals{};

    const auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::array<PairCounts, 4> local{};
        for (Pair pair : kAllPairs)
            for (std::uint64_t t = begin; t < end; ++t) {
                const OutcomePair o = sample(pair, t);
                local[static_cast<int>(o.pair)].cell(o.left, o.right) += 1;
            }
        return local;
    };

    if (n_chunks == 1) {
        totals = count_range(0, spec.trials);
    } else {
        std::vector<std::future<std::array<PairCounts, 4>>> futures;
        const std::uint64_t chunk = (spec.trials + n_chunks - 1) / n_chunks;
        for (std::uint64_t begin = 0; begin < spec.trials; begin += chunk) {
            const std::uint64_t end = std::min(begin + chunk, spec.trials);
            futures.push_back(std::async(std::launch::async, count_range, begin, end));
        }
        for (auto& f : futures) {
            const auto local = f.get();
            for (int p = 0; p < 4; ++p) totals[p] += local[p];
        }
    }
    return totals;
}

} // namespace

EntityKind entity_kind_from_string(const std::string& s) {
    if (s == "vessels") return EntityKind::Vessels;
    if (s == "soccer") return EntityKind::Soccer;
    throw ValidationError("unknown entity '" + s + "' (expected vessels or soccer)");
}

std::string to_string(EntityKind kind) {
    return kind == EntityKind::Vessels ? "vessels" : "soccer";
}

void VesselsConfig::validate() const {
    if (!(total_volume > 0)) throw ValidationError("total_volume must be positive");
    if (!(threshold > 0 && threshold < total_volume))
        throw ValidationError("threshold must lie strictly between 0 and total_volume");
    std::visit(
        [&](const auto& split) {
            using S = std::decay_t<decltype(split)>;
            if constexpr (std::is_same_v<S, UniformSplit>) {
                const double lo = split.lo.value_or(0.0);
                const double hi = split.hi.value_or(total_volume);
                if (lo < 0 || hi > total_volume || lo > hi)
                    throw ValidationError("split_distribution bounds outside [0, total_volume]");
            } else if constexpr (std::is_same_v<S, FixedSplit>) {
                if (split.value < 0 || split.value > total_volume)
                    throw ValidationError("split_distribution value outside [0, total_volume]");
            } else {
                if (split.a < 0 || split.a > total_volume || split.b < 0 ||
                    split.b > total_volume)
                    throw ValidationError("split_distribution points outside [0, total_volume]");
                if (split.prob_a < 0 || split.prob_a > 1)
                    throw ValidationError("split_distribution prob_a outside [0, 1]");
            }
        },
        split_distribution);
}

void SoccerConfig::validate() const {
    if (bribe_a.amount < 0 || bribe_b.amount < 0)
        throw ValidationError("bribe amount must be nonnegative");
    if (bribe_a.player_wealth < 0 || bribe_b.player_wealth < 0)
        throw ValidationError("player_wealth must be nonnegative");
}

OutcomePair vessels_sample(const VesselsConfig& config, Pair pair, std::uint64_t trial_index,
                           std::uint64_t seed) {
    SubstreamRng rng(seed, "vessels", static_cast<std::uint64_t>(pair), trial_index);
    const Outcome transparency = up_iff(config.transparent);

    switch (pair) {
    case Pair::P13: {
        // Both siphons compete for the water; x liters end up on the left.
        // The left test is strict (> threshold), the right one is not, so
        // exactly one side wins even at x == threshold.
        const double x = draw_split(config, rng);
        return OutcomePair{pair, up_iff(x > config.threshold),
                           up_iff(config.total_volume - x >= config.threshold)};
    }
    case Pair::P14:
        // A lone siphon drains the full connected volume.
        return OutcomePair{pair, Outcome::Up, transparency};
    case Pair::P23:
        return OutcomePair{pair, transparency, Outcome::Up};
    default:
        return OutcomePair{pair, transparency, transparency};
    }
}

OutcomePair soccer_sample(const SoccerConfig& config, Pair pair, std::uint64_t trial_index,
                          std::uint64_t seed) {
    SubstreamRng rng(seed, "soccer", static_cast<std::uint64_t>(pair), trial_index);
    const Outcome referee = up_iff(config.referee_bad_character);

    switch (pair) {
    case Pair::P13: {
        // Both teams are bribed to lose, but only one can. The more
        // effective bribe decides; ties fall to a fair coin.
        const double ea = SoccerConfig::effectiveness(config.bribe_a);
        const double eb = SoccerConfig::effectiveness(config.bribe_b);
        bool a_loses;
        if (ea > eb)
            a_loses = true;
        else if (eb > ea)
            a_loses = false;
        else
            a_loses = rng.next_unit() < 0.5;
        return OutcomePair{pair, up_iff(a_loses), up_iff(!a_loses)};
    }
    case Pair::P14:
        // A bribed alone: own-goals guarantee the loss.
        return OutcomePair{pair, Outcome::Up, referee};
    case Pair::P23:
        return OutcomePair{pair, referee, Outcome::Up};
    default:
        return OutcomePair{pair, referee, referee};
    }
}

RunResult run_entity(EntityKind entity, const EntityConfig& config, const RunSpec& spec,
                     unsigned threads) {
    spec.validate();
    std::array<PairCounts, 4> counts{};
    if (entity == EntityKind::Vessels) {
        const auto& cfg = std::get<VesselsConfig>(config);
        cfg.validate();
        counts = tally(spec, threads, [&](Pair pair, std::uint64_t t) {
            return vessels_sample(cfg, pair, t, spec.seed);
        });
    } else {
        const auto& cfg = std::get<SoccerConfig>(config);
        cfg.validate();
        counts = tally(spec, threads, [&](Pair pair, std::uint64_t t) {
            return soccer_sample(cfg, pair, t, spec.seed);
        });
    }

    RunResult result{entity, config, spec, empirical_table(counts), {}, Rat(0), {}, {}};
    result.correlations = correlation_vector(result.empirical.table);
    result.bell = bell_verdict(result.correlations);
    result.bell_value = result.bell.value;
    result.classicality = correlation_membership(result.correlations);
    return result;
}

} // namespace contextsim
