#include "contextsim/scenario.hpp"

namespace contextsim {

int left_observable(Pair p) {
    return (p == Pair::P13 || p == Pair::P14) ? 1 : 2;
}

int right_observable(Pair p) {
    return (p == Pair::P13 || p == Pair::P23) ? 3 : 4;
}

std::string pair_label(Pair p) {
    return std::to_string(left_observable(p)) + std::to_string(right_observable(p));
}

Pair pair_from_label(const std::string& label) {
    for (Pair p : kAllPairs)
        if (pair_label(p) == label) return p;
    throw ValidationError("unknown coincidence pair '" + label +
                          "' (expected 13, 14, 23 or 24)");
}

EmpiricalTable empirical_table(const std::array<PairCounts, 4>& counts) {
    std::string uncovered;
    for (Pair p : kAllPairs) {
        if (counts[static_cast<int>(p)].total() == 0) {
            if (!uncovered.empty()) uncovered += ", ";
            uncovered += "(" + std::to_string(left_observable(p)) + "," +
                         std::to_string(right_observable(p)) + ")";
        }
    }
    if (!uncovered.empty())
        throw ValidationError("uncovered pair " + uncovered);

    EmpiricalTable result;
    result.counts = counts;
    for (Pair p : kAllPairs) {
        const PairCounts& c = counts[static_cast<int>(p)];
        const Rat n(c.total());
        result.table.set(p, CoincidenceDistribution<Rat>{Rat(c.uu) / n, Rat(c.ud) / n,
                                                         Rat(c.du) / n, Rat(c.dd) / n});
    }
    return result;
}

EmpiricalTable empirical_table(const std::vector<CoincidenceSample>& samples) {
    std::array<PairCounts, 4> counts{};
    for (const CoincidenceSample& s : samples)
        counts[static_cast<int>(s.pair)].cell(s.left, s.right) += 1;
    return empirical_table(counts);
}

} // namespace contextsim
