#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace contextsim;
using namespace contextsim::testing;

TEST_CASE("expectation of anti-correlated, correlated and uniform distributions") {
    CHECK(expectation(dist<Rat>(Rat(0), Rat(1, 2), Rat(1, 2), Rat(0))) == Rat(-1));
    CHECK(expectation(dist<Rat>(Rat(1), Rat(0), Rat(0), Rat(0))) == Rat(1));
    CHECK(expectation(dist<Rat>(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4))) == Rat(0));
    // Any anti-correlated split gives -1, not just the even one.
    CHECK(expectation(dist<Rat>(Rat(0), Rat(9, 10), Rat(1, 10), Rat(0))) == Rat(-1));
    CHECK(expectation(dist(0.0, 0.5, 0.5, 0.0)) == doctest::Approx(-1.0));
}

TEST_CASE("expectation rejects invalid distributions, naming the field") {
    CHECK_THROWS_WITH_AS(expectation(dist(0.2, -0.1, 0.5, 0.4)),
                         doctest::Contains("p_ud"), ValidationError);
    CHECK_THROWS_WITH_AS(expectation(dist<Rat>(Rat(1, 2), Rat(0), Rat(0), Rat(0))),
                         doctest::Contains("sum"), ValidationError);
    CHECK_THROWS_AS(expectation(dist(0.3, 0.3, 0.3, 0.3)), ValidationError);
    // Float lane tolerates honest rounding noise in the sum.
    CHECK(expectation(dist(0.1, 0.2, 0.3, 0.4)) == doctest::Approx(0.0));
}

TEST_CASE("correlation vectors of the worked example tables") {
    const auto vessels = correlation_vector(vessels_ideal_table());
    CHECK(vessels == CorrelationVector<Rat>{Rat(-1), Rat(1), Rat(1), Rat(1)});

    const auto soccer = correlation_vector(soccer_ideal_table());
    CHECK(soccer == CorrelationVector<Rat>{Rat(-1), Rat(1), Rat(1), Rat(1)});

    BehaviorTable<Rat> uniform;
    for (Pair p : kAllPairs)
        uniform.set(p, dist<Rat>(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)));
    CHECK(correlation_vector(uniform) ==
          CorrelationVector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("correlation vector of an incomplete table reports the missing pair") {
    BehaviorTable<Rat> table;
    table.set(Pair::P13, dist<Rat>(Rat(1), Rat(0), Rat(0), Rat(0)));
    table.set(Pair::P14, dist<Rat>(Rat(1), Rat(0), Rat(0), Rat(0)));
    table.set(Pair::P23, dist<Rat>(Rat(1), Rat(0), Rat(0), Rat(0)));
    CHECK_THROWS_WITH_AS(correlation_vector(table), doctest::Contains("24"),
                         ValidationError);
}

TEST_CASE("bell quantity on landmark vectors") {
    CHECK(bell_quantity(CorrelationVector<Rat>{Rat(-1), Rat(1), Rat(1), Rat(1)}) == Rat(4));
    CHECK(bell_quantity(CorrelationVector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1)}) == Rat(2));
    CHECK(bell_quantity(CorrelationVector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0)}) == Rat(0));
    CHECK_THROWS_WITH_AS(
        bell_quantity(CorrelationVector<double>{1.5, 0.0, 0.0, 0.0}),
        doctest::Contains("E13"), ValidationError);
}

TEST_CASE("bell verdict separates at the classical bound") {
    const auto violated = bell_verdict(CorrelationVector<Rat>{Rat(-1), Rat(1), Rat(1), Rat(1)});
    CHECK(violated.violated);
    CHECK(violated.value == Rat(4));

    const auto satisfied = bell_verdict(CorrelationVector<Rat>{Rat(1), Rat(1), Rat(1), Rat(-1)});
    CHECK_FALSE(satisfied.violated);
    CHECK(satisfied.value == Rat(0));

    // Independent arithmetic: |0.6 - (-0.6)| + |0.6 + 0.6| = 1.2 + 1.2.
    const double expected = std::abs(0.6 - (-0.6)) + std::abs(0.6 + 0.6);
    const auto mixed = bell_verdict(CorrelationVector<double>{0.6, -0.6, 0.6, 0.6});
    CHECK(mixed.violated);
    CHECK(mixed.value == doctest::Approx(expected));
    CHECK(mixed.value == doctest::Approx(2.4));
}

TEST_CASE("empirical tables aggregate counts into exact frequencies") {
    std::vector<CoincidenceSample> samples;
    for (int i = 0; i < 100; ++i)
        samples.push_back({Pair::P13, Outcome::Up, Outcome::Down});
    for (Pair p : {Pair::P14, Pair::P23, Pair::P24})
        samples.push_back({p, Outcome::Up, Outcome::Up});

    const EmpiricalTable t = empirical_table(samples);
    CHECK(t.table.at(Pair::P13).ud == Rat(1));
    CHECK(t.table.at(Pair::P13).uu == Rat(0));
    CHECK(t.counts[0].ud == 100);

    SUBCASE("half and half") {
        std::vector<CoincidenceSample> half = samples;
        for (int i = 0; i < 50; ++i) {
            half.push_back({Pair::P13, Outcome::Up, Outcome::Down});
            half.push_back({Pair::P13, Outcome::Down, Outcome::Up});
        }
        const EmpiricalTable h = empirical_table(half);
        CHECK(h.table.at(Pair::P13).ud == Rat(150, 200));
        CHECK(h.table.at(Pair::P13).du == Rat(50, 200));
        CHECK(expectation(h.table.at(Pair::P13)) == Rat(-1));
    }
}

TEST_CASE("empirical table with uncovered pairs is rejected") {
    std::vector<CoincidenceSample> samples = {
        {Pair::P13, Outcome::Up, Outcome::Down},
        {Pair::P14, Outcome::Up, Outcome::Up},
        {Pair::P23, Outcome::Up, Outcome::Up},
    };
    CHECK_THROWS_WITH_AS(empirical_table(samples), doctest::Contains("(2,4)"),
                         ValidationError);
}

TEST_CASE("expectation is linear in mixtures") {
    SubstreamRng rng(2024, "linearity", 0, 0);
    for (int i = 0; i < 1000; ++i) {
        const auto draw = [&rng]() {
            double a = rng.next_unit(), b = rng.next_unit(), c = rng.next_unit(),
                   d = rng.next_unit();
            const double s = a + b + c + d;
            return dist(a / s, b / s, c / s, d / s);
        };
        const auto p = draw();
        const auto q = draw();
        const double lambda = rng.next_unit();
        const auto mix = dist(lambda * p.uu + (1 - lambda) * q.uu,
                              lambda * p.ud + (1 - lambda) * q.ud,
                              lambda * p.du + (1 - lambda) * q.du,
                              lambda * p.dd + (1 - lambda) * q.dd);
        const double lhs = expectation(mix);
        const double rhs = lambda * expectation(p) + (1 - lambda) * expectation(q);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("bell quantity never exceeds 4 and the bound is attained") {
    SubstreamRng rng(2024, "bell-bound", 0, 0);
    for (int i = 0; i < 1000; ++i) {
        const auto u = [&rng]() { return 2.0 * rng.next_unit() - 1.0; };
        const CorrelationVector<double> e{u(), u(), u(), u()};
        CHECK(bell_quantity(e) <= 4.0);
    }
    CHECK(bell_quantity(CorrelationVector<Rat>{Rat(-1), Rat(1), Rat(1), Rat(1)}) == Rat(4));
}

TEST_CASE("bell quantity is invariant under global sign flip") {
    SubstreamRng rng(2024, "sign-flip", 0, 0);
    for (int i = 0; i < 1000; ++i) {
        const auto u = [&rng]() { return 2.0 * rng.next_unit() - 1.0; };
        const CorrelationVector<double> e{u(), u(), u(), u()};
        const CorrelationVector<double> flipped{-e.e13, -e.e14, -e.e23, -e.e24};
        CHECK(bell_quantity(e) == doctest::Approx(bell_quantity(flipped)).epsilon(1e-12));
    }
}

TEST_CASE("every deterministic assignment satisfies the bell inequality") {
    for (const HiddenVariableAtom& atom : all_atoms()) {
        const auto v = vertex_of(atom);
        const CorrelationVector<Rat> e{Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])};
        CHECK(bell_quantity(e) <= Rat(2));
    }
}
