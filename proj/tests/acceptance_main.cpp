// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "contextsim/entities.hpp"
#include "contextsim/liar.hpp"
#include "contextsim/report.hpp"
#include "test_helpers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace contextsim;
using namespace contextsim::testing;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& message) { g_notes.push_back(message); }

void require(bool condition, const std::string& message) {
    if (!condition) note("check failed: " + message);
}

void criterion(int index, const std::string& title, const std::function<void()>& body) {
    g_notes.clear();
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = g_notes.empty();
    if (!pass) ++g_failures;
    std::printf("%s  %d. %s (%.2fs)\n", pass ? "PASS" : "FAIL", index, title.c_str(), seconds);
    for (const auto& m : g_notes) std::printf("      %s\n", m.c_str());
    std::fflush(stdout);
}

std::string run_cli_capture(const std::string& args) {
    const std::string command = std::string(CONTEXTSIM_CLI_PATH) + " " + args;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {};
    std::string output;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    pclose(pipe);
    return output;
}

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const CorrelationVector<Rat> kIdeal{Rat(-1), Rat(1), Rat(1), Rat(1)};

void vessels_reproduction() {
    for (std::uint64_t seed : {1ull, 42ull, 8675309ull}) {
        const auto start = std::chrono::steady_clock::now();
        const RunResult r = run_entity(EntityKind::Vessels, VesselsConfig{}, RunSpec{10000, seed});
        const double secs = elapsed_seconds(start);
        require(r.correlations == kIdeal, "E = (-1, +1, +1, +1) exactly");
        require(r.bell_value == Rat(4), "bell quantity 4 exactly");
        require(r.bell.violated, "bell verdict violated");
        require(secs < 1.0, "runtime under 1 s (got " + std::to_string(secs) + ")");
    }
    const std::string out = run_cli_capture("simulate vessels --trials 10000 --seed 99");
    require(out.find("\"correlations\":{\"e13\":\"-1/1\",\"e14\":\"1/1\",\"e23\":\"1/1\","
                     "\"e24\":\"1/1\"}") != std::string::npos,
            "CLI reports the exact correlation vector");
    require(out.find("\"quantity\":\"4/1\"") != std::string::npos,
            "CLI reports bell quantity 4");
}

void soccer_reproduction() {
    const auto start = std::chrono::steady_clock::now();
    const RunResult r = run_entity(EntityKind::Soccer, SoccerConfig{}, RunSpec{10000, 5});
    const double secs = elapsed_seconds(start);
    require(r.bell_value == Rat(4), "bell quantity 4 exactly");
    require(r.correlations.e13 == Rat(-1), "E13 = -1");
    require(r.empirical.counts[0].ud == 10000, "(up, down) branch taken in every trial");
    require(secs < 1.0, "runtime under 1 s (got " + std::to_string(secs) + ")");
    const std::string out = run_cli_capture("simulate soccer --trials 10000 --seed 99");
    require(out.find("\"quantity\":\"4/1\"") != std::string::npos,
            "CLI reports bell quantity 4");
    require(out.find("\"ud\":10000") != std::string::npos,
            "CLI reports the deterministic (up, down) counts");
}

void classicality_certificates() {
    const auto verdict = correlation_membership(kIdeal);
    require(!verdict.classical(), "(-1,1,1,1) is nonclassical");
    if (verdict.witness) {
        const auto& facet = std::get<FacetWitness<Rat>>(*verdict.witness);
        require(facet.value == Rat(4), "witness value 4");
        require(facet.value > Rat(2), "witness exceeds the bound 2");
    }

    const auto vertices = deterministic_vertices();
    for (const auto& v : vertices) {
        const CorrelationVector<Rat> e{Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])};
        const auto vv = correlation_membership(e);
        require(vv.classical(), "vertex " + vertex_label(v) + " is classical");
        if (vv.classical())
            require(membership_reconstruction_error(vv, e) == Rat(0),
                    "vertex certificate reconstructs exactly");
    }

    SubstreamRng rng(1001, "acceptance-convex", 0, 0);
    for (int i = 0; i < 1000; ++i) {
        // Random rational convex combination of the vertices.
        std::array<Rat, 8> w{};
        Rat total(0);
        for (auto& x : w) {
            x = random_rational(rng, 64);
            total += x;
        }
        if (total == 0) w[0] = total = Rat(1);
        CorrelationVector<Rat> e{Rat(0), Rat(0), Rat(0), Rat(0)};
        for (int v = 0; v < 8; ++v) {
            const Rat weight = w[v] / total;
            e.e13 += weight * Rat(vertices[v][0]);
            e.e14 += weight * Rat(vertices[v][1]);
            e.e23 += weight * Rat(vertices[v][2]);
            e.e24 += weight * Rat(vertices[v][3]);
        }
        const auto exact = correlation_membership(e);
        if (!exact.classical()) {
            require(false, "rational convex combination judged nonclassical");
            break;
        }
        if (membership_reconstruction_error(exact, e) != Rat(0)) {
            require(false, "rational certificate reconstruction error nonzero");
            break;
        }

        const CorrelationVector<double> ef{to_double(e.e13), to_double(e.e14),
                                           to_double(e.e23), to_double(e.e24)};
        const auto floaty = correlation_membership(ef);
        if (!floaty.classical()) {
            require(false, "float convex combination judged nonclassical");
            break;
        }
        if (membership_reconstruction_error(floaty, ef) >= 1e-9) {
            require(false, "float certificate reconstruction error >= 1e-9");
            break;
        }
    }
}

void facet_lp_crosscheck() {
    const auto start = std::chrono::steady_clock::now();
    constexpr int kTotal = 100000;
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    const int chunk = (kTotal + static_cast<int>(workers) - 1) / static_cast<int>(workers);

    std::vector<std::future<int>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        const int begin = static_cast<int>(w) * chunk;
        const int end = std::min(kTotal, begin + chunk);
        futures.push_back(std::async(std::launch::async, [begin, end]() {
            int disagreements = 0;
            for (int i = begin; i < end; ++i) {
                SubstreamRng rng(2002, "acceptance-crosscheck", 0,
                                 static_cast<std::uint64_t>(i));
                const auto u = [&rng]() { return 2.0 * rng.next_unit() - 1.0; };
                const CorrelationVector<double> e{u(), u(), u(), u()};
                double max_facet = -10.0;
                for (const auto& f : chsh_facets(e)) max_facet = std::max(max_facet, f.value);
                const bool facet_classical = max_facet <= 2.0 + 1e-9;
                if (correlation_membership(e).classical() != facet_classical) ++disagreements;
            }
            return disagreements;
        }));
    }
    int disagreements = 0;
    for (auto& f : futures) disagreements += f.get();
    const double secs = elapsed_seconds(start);
    require(disagreements == 0,
            "LP and facet scan agree on all instances (disagreements: " +
                std::to_string(disagreements) + ")");
    require(secs < 10.0, "runtime under 10 s (got " + std::to_string(secs) + ")");
}

void kolmogorov_round_trip() {
    SubstreamRng rng(3003, "acceptance-roundtrip", 0, 0);
    for (int i = 0; i < 1000; ++i) {
        const auto table = table_from_atom_weights(random_atom_weights(rng));
        const auto verdict = kolmogorov_feasibility(table);
        if (!verdict.classical()) {
            require(false, "atom-generated table judged nonclassical at case " +
                               std::to_string(i));
            return;
        }
        if (kolmogorov_reconstruction_error(verdict, table) != Rat(0)) {
            require(false, "pairwise probabilities not reproduced exactly at case " +
                               std::to_string(i));
            return;
        }
    }
}

void double_liar_criteria() {
    const LiarEntity a = build_entity(LiarVariant::A);

    double total = 0.0;
    for (int sentence : {1, 2}) {
        for (bool value : {true, false}) {
            const double p = born_probability(a.projector(sentence, value), a.psi0);
            require(std::abs(p - 0.25) <= 1e-12, "born probability 1/4");
            total += p;
        }
    }
    require(std::abs(total - 1.0) <= 1e-12, "quarter probabilities sum to 1");

    const auto cycle = reasoning_cycle_states();
    const StateVector post = collapse(a.projector(1, true), a.psi0);
    require((post.amplitudes - cycle[0].amplitudes).norm() <= 1e-12,
            "collapse on (1, true) yields the first cycle state");

    // The truth cycle visits 1T -> 2F -> 1F -> 2T with period exactly 4,
    // entered at the measured point, from each of the four starts.
    const std::vector<TruthAssignment> order = {
        {TruthValue::True, TruthValue::Latent},
        {TruthValue::Latent, TruthValue::False},
        {TruthValue::False, TruthValue::Latent},
        {TruthValue::Latent, TruthValue::True},
    };
    const std::vector<std::pair<int, bool>> starts = {
        {1, true}, {2, false}, {1, false}, {2, true}};
    for (std::size_t s = 0; s < starts.size(); ++s) {
        const auto trace = truth_cycle(a, starts[s].first, starts[s].second, 8);
        for (std::size_t i = 0; i < trace.size(); ++i) {
            if (!(trace[i] == order[(s + i) % 4])) {
                require(false, "cycle order broken from start index " + std::to_string(s));
                break;
            }
        }
        for (std::size_t i = 0; i + 4 < trace.size(); ++i) {
            require(trace[i] == trace[i + 4], "period divides 4");
            require(!(trace[i] == trace[i + 1]), "period is not 1");
            require(!(trace[i] == trace[i + 2]), "period is not 2");
        }
    }

    SubstreamRng rng(4004, "acceptance-psi0", 0, 0);
    for (int i = 0; i < 100; ++i) {
        const double t = 100.0 * rng.next_unit();
        require((evolve(a.hamiltonian, t, a.psi0).amplitudes - a.psi0.amplitudes).norm() < 1e-10,
                "psi0 invariant at t = " + std::to_string(t));
    }

    require((a.hamiltonian.matrix - a.hamiltonian.matrix.adjoint()).cwiseAbs().maxCoeff() <=
                1e-12,
            "generator is Hermitian within 1e-12");
    const Eigen::MatrixXcd u = evolution_operator(a.hamiltonian, a.step_time);
    require((u * u.adjoint() - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() <=
                1e-10,
            "one-step evolution is unitary within 1e-10");
}

void coupled_liar_criteria() {
    const LiarEntity c = build_entity(LiarVariant::C);
    const auto [p, post] = measure(c, 1, true);
    require(std::abs(p - 0.5) <= 1e-12, "singlet measurement probability 1/2");
    require(std::abs(born_probability(c.projector(2, false), post) - 1.0) <= 1e-12,
            "sentence 2 false with certainty");

    const auto trace_c = truth_cycle(c, 1, true, 6);
    for (std::size_t i = 0; i + 2 < trace_c.size(); ++i) {
        require(trace_c[i] == trace_c[i + 2], "singlet cycle period divides 2");
        require(!(trace_c[i] == trace_c[i + 1]), "singlet cycle alternates");
    }

    const LiarEntity b = build_entity(LiarVariant::B);
    const auto trace_b = truth_cycle(b, 1, true, 6);
    for (std::size_t i = 0; i + 1 < trace_b.size(); ++i)
        require(trace_b[i] == trace_b[i + 1], "triplet cycle period 1");

    const StateVector stepped = reasoning_step(c, c.psi0);
    require(std::abs(std::abs(c.psi0.amplitudes.dot(stepped.amplitudes)) - 1.0) <= 1e-12,
            "singlet overlap modulus 1 after a step");
}

void cli_determinism() {
    const std::string args = "simulate vessels --trials 2500 --seed 31 --format json";
    const std::string first = run_cli_capture(args);
    const std::string second = run_cli_capture(args);
    require(!first.empty(), "simulate produced output");
    require(first == second, "repeated invocation is byte-identical");
    const std::string threaded = run_cli_capture(args + " --threads 4");
    require(first == threaded, "threaded invocation is byte-identical");

    const std::string soccer = run_cli_capture("simulate soccer --trials 999 --seed 77");
    require(soccer == run_cli_capture("simulate soccer --trials 999 --seed 77 --threads 3"),
            "soccer run is byte-identical across thread counts");
}

void property_suites() {
    // Expectation linearity.
    {
        SubstreamRng rng(5005, "acceptance-linearity", 0, 0);
        for (int i = 0; i < 1000; ++i) {
            const auto draw = [&rng]() {
                double a = rng.next_unit(), b = rng.next_unit(), c = rng.next_unit(),
                       d = rng.next_unit();
                const double s = a + b + c + d;
                return CoincidenceDistribution<double>{a / s, b / s, c / s, d / s};
            };
            const auto p = draw();
            const auto q = draw();
            const double lambda = rng.next_unit();
            const CoincidenceDistribution<double> mix{
                lambda * p.uu + (1 - lambda) * q.uu, lambda * p.ud + (1 - lambda) * q.ud,
                lambda * p.du + (1 - lambda) * q.du, lambda * p.dd + (1 - lambda) * q.dd};
            if (std::abs(expectation(mix) -
                         (lambda * expectation(p) + (1 - lambda) * expectation(q))) > 1e-12) {
                require(false, "expectation linearity");
                break;
            }
        }
    }
    // Bell quantity bounded by 4.
    {
        SubstreamRng rng(5006, "acceptance-bound", 0, 0);
        for (int i = 0; i < 1000; ++i) {
            const auto u = [&rng]() { return 2.0 * rng.next_unit() - 1.0; };
            if (bell_quantity(CorrelationVector<double>{u(), u(), u(), u()}) > 4.0) {
                require(false, "bell quantity bound");
                break;
            }
        }
    }
    // Every deterministic atom satisfies all 8 facets.
    for (const HiddenVariableAtom& atom : all_atoms()) {
        const auto v = vertex_of(atom);
        const CorrelationVector<Rat> e{Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])};
        for (const auto& f : chsh_facets(e))
            require(f.value <= Rat(2), "atom satisfies facet");
    }
    // Unitarity and group law of the evolution.
    {
        SubstreamRng rng(5007, "acceptance-unitarity", 0, 0);
        for (int i = 0; i < 1000; ++i) {
            Eigen::MatrixXcd m(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int cidx = 0; cidx < 4; ++cidx)
                    m(r, cidx) =
                        Complex(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
            const HermitianOperator h(Eigen::MatrixXcd((m + m.adjoint()) / 2.0));
            Eigen::VectorXcd v(4);
            for (int r = 0; r < 4; ++r)
                v(r) = Complex(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
            v.normalize();
            const StateVector psi(v);
            const double t = 10.0 * rng.next_unit() - 5.0;
            const double s = 10.0 * rng.next_unit() - 5.0;
            const StateVector once = evolve(h, t, psi);
            if (std::abs(once.norm() - 1.0) > 1e-10) {
                require(false, "unitarity");
                break;
            }
            if ((evolve(h, s, once).amplitudes - evolve(h, s + t, psi).amplitudes).norm() >
                1e-10) {
                require(false, "group law");
                break;
            }
        }
    }
    // Projector idempotence across all built entities.
    for (LiarVariant variant : {LiarVariant::A, LiarVariant::B, LiarVariant::C}) {
        const LiarEntity entity = build_entity(variant);
        for (int sentence : {1, 2}) {
            for (bool value : {true, false}) {
                const auto& p = entity.projector(sentence, value).matrix;
                require((p * p - p).cwiseAbs().maxCoeff() <= 1e-12, "projector idempotent");
            }
        }
    }
    // Tensor mixed-product identity.
    {
        SubstreamRng rng(5008, "acceptance-tensor", 0, 0);
        for (int i = 0; i < 1000; ++i) {
            Eigen::MatrixXcd a(2, 2), b(3, 3);
            for (int r = 0; r < 2; ++r)
                for (int cidx = 0; cidx < 2; ++cidx)
                    a(r, cidx) =
                        Complex(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
            for (int r = 0; r < 3; ++r)
                for (int cidx = 0; cidx < 3; ++cidx)
                    b(r, cidx) =
                        Complex(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
            Eigen::VectorXcd x(2), y(3);
            for (int r = 0; r < 2; ++r)
                x(r) = Complex(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
            for (int r = 0; r < 3; ++r)
                y(r) = Complex(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
            x.normalize();
            y.normalize();
            const Eigen::VectorXcd lhs =
                tensor_operator(a, b) * tensor_state(StateVector(x), StateVector(y)).amplitudes;
            const Eigen::VectorXcd rhs =
                tensor_state(StateVector(Eigen::VectorXcd((a * x).eval())),
                             StateVector(Eigen::VectorXcd((b * y).eval())))
                    .amplitudes;
            if ((lhs - rhs).norm() > 1e-12) {
                require(false, "tensor mixed-product identity");
                break;
            }
        }
    }
    // Exact anti-correlation of every competing-outcome sample.
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const OutcomePair v = vessels_sample(VesselsConfig{}, Pair::P13, t, 606);
        require(outcome_sign(v.left) * outcome_sign(v.right) == -1,
                "vessels (1,3) anti-correlated");
        const OutcomePair s = soccer_sample(SoccerConfig{}, Pair::P13, t, 606);
        require(outcome_sign(s.left) * outcome_sign(s.right) == -1,
                "soccer (1,3) anti-correlated");
    }
}

} // namespace

int main() {
    std::printf("acceptance suite, tool version %s\n", kToolVersion);
    criterion(1, "vessels reproduction: E = (-1,+1,+1,+1), bell = 4, < 1 s",
              vessels_reproduction);
    criterion(2, "soccer reproduction: bell = 4, (up,down) in all trials, < 1 s",
              soccer_reproduction);
    criterion(3, "classicality certificates: witness 4, vertices and convex mixes classical",
              classicality_certificates);
    criterion(4, "facet scan vs LP membership on 100000 random vectors, < 10 s",
              facet_lp_crosscheck);
    criterion(5, "kolmogorov round trip on 1000 atom-measure tables, exact",
              kolmogorov_round_trip);
    criterion(6, "double liar: quarters, collapse, 4-step cycle, invariant psi0, unitarity",
              double_liar_criteria);
    criterion(7, "coupled liars: singlet anti-alignment and period 2, triplet period 1",
              coupled_liar_criteria);
    criterion(8, "determinism: byte-identical canonical JSON across runs and thread counts",
              cli_determinism);
    criterion(9, "property suites: linearity, bounds, facets, unitarity, idempotence, "
                 "tensor identity, anti-correlation",
              property_suites);

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
