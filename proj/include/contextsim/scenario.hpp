#pragma once

#include "contextsim/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace contextsim {

/// Dichotomic outcome of a single experiment. Up maps to +1, Down to -1.
enum class Outcome : int { Up = +1, Down = -1 };

inline int outcome_sign(Outcome o) { return static_cast<int>(o); }

/// The four coincidence pairs of the scenario: a left experiment (1 or 2)
/// joined with a right experiment (3 or 4).
enum class Pair : int { P13 = 0, P14 = 1, P23 = 2, P24 = 3 };

inline constexpr std::array<Pair, 4> kAllPairs = {Pair::P13, Pair::P14, Pair::P23,
                                                  Pair::P24};

int left_observable(Pair p);  // 1 or 2
int right_observable(Pair p); // 3 or 4
std::string pair_label(Pair p); // "13", "14", "23", "24"
Pair pair_from_label(const std::string& label);

/// Fixed four-observable coincidence scenario. Observables 1 and 2 sit on
/// the left side, 3 and 4 on the right; the compatible pairs are exactly
/// the four left-right combinations.
struct Scenario {
    static constexpr int observable_count = 4;
    static const std::array<Pair, 4>& compatible_pairs() { return kAllPairs; }
};

/// Joint outcome distribution of one coincidence experiment. Entries are
/// listed as (left,right): uu, ud, du, dd.
template <class T>
struct CoincidenceDistribution {
    T uu{};
    T ud{};
    T du{};
    T dd{};

    /// Throws ValidationError naming the offending field.
    void validate(const std::string& context = {}) const {
        const auto where = [&](const char* field) {
            return context.empty() ? std::string(field) : context + "." + field;
        };
        if (uu < T(0)) throw ValidationError("negative probability in " + where("p_uu"));
        if (ud < T(0)) throw ValidationError("negative probability in " + where("p_ud"));
        if (du < T(0)) throw ValidationError("negative probability in " + where("p_du"));
        if (dd < T(0)) throw ValidationError("negative probability in " + where("p_dd"));
        const T sum = uu + ud + du + dd;
        if (abs_value<T>(sum - T(1)) > scalar_policy<T>::sum_tolerance)
            throw ValidationError("probabilities do not sum to 1 in " +
                                  (context.empty() ? std::string("distribution") : context));
    }

    T& entry(Outcome left, Outcome right) {
        if (left == Outcome::Up) return right == Outcome::Up ? uu : ud;
        return right == Outcome::Up ? du : dd;
    }
    const T& entry(Outcome left, Outcome right) const {
        return const_cast<CoincidenceDistribution&>(*this).entry(left, right);
    }
};

/// One distribution per compatible pair.
template <class T>
struct BehaviorTable {
    Scenario scenario{};
    std::array<CoincidenceDistribution<T>, 4> distributions{};
    std::array<bool, 4> present{false, false, false, false};

    void set(Pair p, CoincidenceDistribution<T> d) {
        distributions[static_cast<int>(p)] = std::move(d);
        present[static_cast<int>(p)] = true;
    }
    const CoincidenceDistribution<T>& at(Pair p) const {
        if (!present[static_cast<int>(p)])
            throw ValidationError("missing pair " + pair_label(p) + " in behavior table");
        return distributions[static_cast<int>(p)];
    }
    void validate() const {
        for (Pair p : kAllPairs) at(p).validate("pair " + pair_label(p));
    }
};

/// The four coincidence expectation values (E13, E14, E23, E24).
template <class T>
struct CorrelationVector {
    T e13{};
    T e14{};
    T e23{};
    T e24{};

    T component(Pair p) const {
        switch (p) {
        case Pair::P13: return e13;
        case Pair::P14: return e14;
        case Pair::P23: return e23;
        default: return e24;
        }
    }
    std::array<T, 4> components() const { return {e13, e14, e23, e24}; }

    void validate() const {
        static const char* names[4] = {"E13", "E14", "E23", "E24"};
        const std::array<T, 4> c = components();
        for (int i = 0; i < 4; ++i)
            if (c[i] < T(-1) || c[i] > T(1))
                throw ValidationError(std::string(names[i]) + " outside [-1, 1]");
    }

    bool operator==(const CorrelationVector&) const = default;
};

/// +-1-weighted average of the four joint outcome probabilities.
template <class T>
T expectation(const CoincidenceDistribution<T>& dist) {
    dist.validate();
    return dist.uu + dist.dd - dist.ud - dist.du;
}

template <class T>
CorrelationVector<T> correlation_vector(const BehaviorTable<T>& table) {
    return CorrelationVector<T>{
        expectation(table.at(Pair::P13)),
        expectation(table.at(Pair::P14)),
        expectation(table.at(Pair::P23)),
        expectation(table.at(Pair::P24)),
    };
}

/// |E13 - E14| + |E23 + E24|, in [0, 4].
template <class T>
T bell_quantity(const CorrelationVector<T>& e) {
    e.validate();
    return abs_value<T>(e.e13 - e.e14) + abs_value<T>(e.e23 + e.e24);
}

template <class T>
struct BellVerdict {
    bool violated = false;
    T value{};
};

/// Violated iff the Bell quantity exceeds the classical bound 2 (exactly on
/// the exact lane, beyond 1e-9 on the float lane).
template <class T>
BellVerdict<T> bell_verdict(const CorrelationVector<T>& e) {
    BellVerdict<T> v;
    v.value = bell_quantity(e);
    v.violated = v.value > T(2) + scalar_policy<T>::bell_tolerance;
    return v;
}

/// One recorded coincidence outcome.
struct CoincidenceSample {
    Pair pair;
    Outcome left;
    Outcome right;
};

struct PairCounts {
    std::uint64_t uu = 0;
    std::uint64_t ud = 0;
    std::uint64_t du = 0;
    std::uint64_t dd = 0;

    std::uint64_t total() const { return uu + ud + du + dd; }
    std::uint64_t& cell(Outcome left, Outcome right) {
        if (left == Outcome::Up) return right == Outcome::Up ? uu : ud;
        return right == Outcome::Up ? du : dd;
    }
    PairCounts& operator+=(const PairCounts& o) {
        uu += o.uu;
        ud += o.ud;
        du += o.du;
        dd += o.dd;
        return *this;
    }
    bool operator==(const PairCounts&) const = default;
};

/// Relative-frequency table plus the raw counts it came from. Frequencies
/// are exact rationals count/total, so downstream arithmetic stays exact.
struct EmpiricalTable {
    BehaviorTable<Rat> table;
    std::array<PairCounts, 4> counts{};
};

EmpiricalTable empirical_table(const std::vector<CoincidenceSample>& samples);
EmpiricalTable empirical_table(const std::array<PairCounts, 4>& counts);

} // namespace contextsim
