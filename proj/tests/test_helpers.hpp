#pragma once

#include "contextsim/classicality.hpp"
#include "contextsim/rng.hpp"
#include "contextsim/scenario.hpp"

#include <array>
#include <string>
#include <vector>

namespace contextsim::testing {

template <class T>
CoincidenceDistribution<T> dist(T uu, T ud, T du, T dd) {
    return CoincidenceDistribution<T>{uu, ud, du, dd};
}

/// Ideal connected-vessels table: (1,3) anti-correlated with an arbitrary
/// split, the other pairs deterministic (up, up).
inline BehaviorTable<Rat> vessels_ideal_table(Rat ud_weight = Rat(1, 2)) {
    BehaviorTable<Rat> t;
    t.set(Pair::P13, dist<Rat>(Rat(0), ud_weight, Rat(1) - ud_weight, Rat(0)));
    t.set(Pair::P14, dist<Rat>(Rat(1), Rat(0), Rat(0), Rat(0)));
    t.set(Pair::P23, dist<Rat>(Rat(1), Rat(0), Rat(0), Rat(0)));
    t.set(Pair::P24, dist<Rat>(Rat(1), Rat(0), Rat(0), Rat(0)));
    return t;
}

/// Ideal bribed-soccer-final table: identical coincidence statistics, with
/// the (1,3) outcome pinned to (up, down) by the stronger bribe.
inline BehaviorTable<Rat> soccer_ideal_table() { return vessels_ideal_table(Rat(1)); }

/// Table induced by a probability vector over the 16 deterministic atoms.
template <class T>
BehaviorTable<T> table_from_atom_weights(const std::array<T, 16>& mu) {
    const auto atoms = all_atoms();
    BehaviorTable<T> table;
    for (Pair p : kAllPairs) {
        const int i = left_observable(p);
        const int j = right_observable(p);
        CoincidenceDistribution<T> d{T(0), T(0), T(0), T(0)};
        for (int k = 0; k < 16; ++k) {
            const Outcome left = atoms[k].value(i) == +1 ? Outcome::Up : Outcome::Down;
            const Outcome right = atoms[k].value(j) == +1 ? Outcome::Up : Outcome::Down;
            d.entry(left, right) += mu[k];
        }
        table.set(p, d);
    }
    return table;
}

/// Random rational in [0, 1] with denominator <= max_den.
inline Rat random_rational(SubstreamRng& rng, unsigned max_den = 1000) {
    const auto den = 1 + rng.next_u64() % max_den;
    const auto num = rng.next_u64() % (den + 1);
    return Rat(num, den);
}

inline std::array<Rat, 16> random_atom_weights(SubstreamRng& rng) {
    std::array<Rat, 16> mu{};
    Rat total(0);
    while (total == 0) {
        for (auto& w : mu) {
            w = random_rational(rng, 100);
            total += w;
        }
    }
    for (auto& w : mu) w /= total;
    return mu;
}

/// Parses a 4-char sign label ("+-++") into +1/-1 components.
inline std::array<int, 4> signs_from_label(const std::string& label) {
    std::array<int, 4> s{};
    for (int k = 0; k < 4; ++k) s[k] = label[k] == '+' ? +1 : -1;
    return s;
}

/// Certificate audit for correlation membership: weights are nonnegative,
/// sum to one and reproduce E. Returns the max componentwise error.
template <class T>
T membership_reconstruction_error(const ClassicalityVerdict<T>& verdict,
                                  const CorrelationVector<T>& e) {
    T weight_sum(0);
    std::array<T, 4> sum = {T(0), T(0), T(0), T(0)};
    for (const auto& [label, w] : verdict.certificate->weights) {
        if (w < T(0)) return T(1); // negative weight: report as gross error
        const auto v = signs_from_label(label);
        for (int k = 0; k < 4; ++k) sum[k] += w * T(v[k]);
        weight_sum += w;
    }
    const std::array<T, 4> target = e.components();
    T err = abs_value<T>(weight_sum - T(1));
    for (int k = 0; k < 4; ++k) {
        const T gap = abs_value<T>(sum[k] - target[k]);
        if (gap > err) err = gap;
    }
    return err;
}

/// Certificate audit for Kolmogorov feasibility: the measure reproduces
/// every pairwise joint probability. Returns the max error.
template <class T>
T kolmogorov_reconstruction_error(const ClassicalityVerdict<T>& verdict,
                                  const BehaviorTable<T>& table) {
    std::array<T, 16> mu{};
    T weight_sum(0);
    for (const auto& [label, w] : verdict.certificate->weights) {
        if (w < T(0)) return T(1);
        mu[atom_index(*atom_from_label(label))] = w;
        weight_sum += w;
    }
    const BehaviorTable<T> reproduced = table_from_atom_weights(mu);
    T err = abs_value<T>(weight_sum - T(1));
    for (Pair p : kAllPairs) {
        const auto& a = table.at(p);
        const auto& b = reproduced.at(p);
        for (const T gap : {abs_value<T>(a.uu - b.uu), abs_value<T>(a.ud - b.ud),
                            abs_value<T>(a.du - b.du), abs_value<T>(a.dd - b.dd)})
            if (gap > err) err = gap;
    }
    return err;
}

} // namespace contextsim::testing
