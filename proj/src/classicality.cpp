#include "contextsim/classicality.hpp"

#include "contextsim/simplex.hpp"

#include <algorithm>

namespace contextsim {

namespace {

int sign_from_bit(int bit) { return bit == 0 ? +1 : -1; }

// The 8 CHSH sign patterns: product of signs = -1.
std::array<std::array<int, 4>, 8> chsh_sign_patterns() {
    std::array<std::array<int, 4>, 8> patterns{};
    int k = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 4> s{sign_from_bit((mask >> 3) & 1), sign_from_bit((mask >> 2) & 1),
                             sign_from_bit((mask >> 1) & 1), sign_from_bit(mask & 1)};
        if (s[0] * s[1] * s[2] * s[3] == -1) patterns[k++] = s;
    }
    return patterns;
}

} // namespace

HiddenVariableAtom atom_from_index(int index) {
    HiddenVariableAtom atom{};
    for (int k = 0; k < 4; ++k)
        atom.assignment[k] = sign_from_bit((index >> (3 - k)) & 1);
    return atom;
}

int atom_index(const HiddenVariableAtom& atom) {
    int index = 0;
    for (int k = 0; k < 4; ++k)
        index = (index << 1) | (atom.assignment[k] == +1 ? 0 : 1);
    return index;
}

std::array<HiddenVariableAtom, 16> all_atoms() {
    std::array<HiddenVariableAtom, 16> atoms{};
    for (int i = 0; i < 16; ++i) atoms[i] = atom_from_index(i);
    return atoms;
}

std::string atom_label(const HiddenVariableAtom& atom) {
    std::string s(4, '+');
    for (int k = 0; k < 4; ++k) s[k] = atom.assignment[k] == +1 ? '+' : '-';
    return s;
}

std::optional<HiddenVariableAtom> atom_from_label(const std::string& label) {
    if (label.size() != 4) return std::nullopt;
    HiddenVariableAtom atom{};
    for (int k = 0; k < 4; ++k) {
        if (label[k] == '+') atom.assignment[k] = +1;
        else if (label[k] == '-') atom.assignment[k] = -1;
        else return std::nullopt;
    }
    return atom;
}

std::array<int, 4> vertex_of(const HiddenVariableAtom& atom) {
    const auto& l = atom.assignment;
    return {l[0] * l[2], l[0] * l[3], l[1] * l[2], l[1] * l[3]};
}

std::vector<std::array<int, 4>> deterministic_vertices() {
    std::vector<std::array<int, 4>> vertices;
    for (const HiddenVariableAtom& atom : all_atoms()) {
        const auto v = vertex_of(atom);
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
            vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());
    return vertices;
}

std::string vertex_label(const std::array<int, 4>& vertex) {
    std::string s(4, '+');
    for (int k = 0; k < 4; ++k) s[k] = vertex[k] == +1 ? '+' : '-';
    return s;
}

template <class T>
std::array<FacetValue<T>, 8> chsh_facets(const CorrelationVector<T>& e) {
    e.validate();
    const auto patterns = chsh_sign_patterns();
    const std::array<T, 4> c = e.components();
    std::array<FacetValue<T>, 8> out{};
    for (int i = 0; i < 8; ++i) {
        T value(0);
        for (int k = 0; k < 4; ++k) value += T(patterns[i][k]) * c[k];
        out[i] = FacetValue<T>{patterns[i], value};
    }
    return out;
}

template <class T>
FacetWitness<T> max_facet(const CorrelationVector<T>& e) {
    const auto facets = chsh_facets(e);
    const FacetValue<T>* best = &facets[0];
    for (const auto& f : facets)
        if (f.value > best->value) best = &f;
    return FacetWitness<T>{best->signs, best->value};
}

template <class T>
ClassicalityVerdict<T> correlation_membership(const CorrelationVector<T>& e) {
    e.validate();
    const auto vertices = deterministic_vertices();
    const std::size_t n = vertices.size();

    // Convex-combination feasibility: rows are the four correlation
    // components plus the normalization row.
    std::vector<std::vector<T>> a(5, std::vector<T>(n, T(0)));
    std::vector<T> b(5, T(0));
    const std::array<T, 4> target = e.components();
    for (std::size_t j = 0; j < n; ++j) {
        for (int k = 0; k < 4; ++k) a[k][j] = T(vertices[j][k]);
        a[4][j] = T(1);
    }
    for (int k = 0; k < 4; ++k) b[k] = target[k];
    b[4] = T(1);

    ClassicalityVerdict<T> verdict;
    if (auto weights = solve_equality_feasibility<T>(std::move(a), std::move(b))) {
        ClassicalCertificate<T> cert;
        for (std::size_t j = 0; j < n; ++j)
            if ((*weights)[j] != T(0)) cert.weights[vertex_label(vertices[j])] = (*weights)[j];
        verdict.certificate = std::move(cert);
    } else {
        verdict.witness = max_facet(e);
    }
    return verdict;
}

template <class T>
std::optional<MarginalWitness<T>> find_marginal_inconsistency(const BehaviorTable<T>& table) {
    // P(o_i = up) inferred from each context the observable appears in.
    const auto left_up = [](const CoincidenceDistribution<T>& d) { return d.uu + d.ud; };
    const auto right_up = [](const CoincidenceDistribution<T>& d) { return d.uu + d.du; };

    struct Check {
        int observable;
        Pair pair_a;
        Pair pair_b;
        bool left;
    };
    static const Check checks[4] = {
        {1, Pair::P13, Pair::P14, true},
        {2, Pair::P23, Pair::P24, true},
        {3, Pair::P13, Pair::P23, false},
        {4, Pair::P14, Pair::P24, false},
    };

    std::optional<MarginalWitness<T>> worst;
    T worst_gap(0);
    for (const Check& c : checks) {
        const T ma = c.left ? left_up(table.at(c.pair_a)) : right_up(table.at(c.pair_a));
        const T mb = c.left ? left_up(table.at(c.pair_b)) : right_up(table.at(c.pair_b));
        const T gap = abs_value<T>(ma - mb);
        if (gap > scalar_policy<T>::lp_tolerance && gap > worst_gap) {
            worst = MarginalWitness<T>{c.observable, c.pair_a, c.pair_b, ma, mb};
            worst_gap = gap;
        }
    }
    return worst;
}

template <class T>
ClassicalityVerdict<T> kolmogorov_feasibility(const BehaviorTable<T>& table) {
    table.validate();
    const auto atoms = all_atoms();

    // One variable per atom; rows: normalization plus the four joint
    // probabilities of each coincidence pair.
    std::vector<std::vector<T>> a;
    std::vector<T> b;
    a.emplace_back(16, T(1));
    b.push_back(T(1));

    const Outcome outcomes[2] = {Outcome::Up, Outcome::Down};
    for (Pair p : kAllPairs) {
        const auto& dist = table.at(p);
        const int i = left_observable(p);
        const int j = right_observable(p);
        for (Outcome left : outcomes) {
            for (Outcome right : outcomes) {
                std::vector<T> row(16, T(0));
                for (int k = 0; k < 16; ++k)
                    if (atoms[k].value(i) == outcome_sign(left) &&
                        atoms[k].value(j) == outcome_sign(right))
                        row[k] = T(1);
                a.push_back(std::move(row));
                b.push_back(dist.entry(left, right));
            }
        }
    }

    ClassicalityVerdict<T> verdict;
    if (auto mu = solve_equality_feasibility<T>(std::move(a), std::move(b))) {
        ClassicalCertificate<T> cert;
        for (int k = 0; k < 16; ++k)
            if ((*mu)[k] != T(0)) cert.weights[atom_label(atoms[k])] = (*mu)[k];
        verdict.certificate = std::move(cert);
        return verdict;
    }
    if (auto marginal = find_marginal_inconsistency(table)) {
        verdict.witness = *marginal;
        return verdict;
    }
    verdict.witness = max_facet(correlation_vector(table));
    return verdict;
}

template std::array<FacetValue<double>, 8> chsh_facets(const CorrelationVector<double>&);
template std::array<FacetValue<Rat>, 8> chsh_facets(const CorrelationVector<Rat>&);
template ClassicalityVerdict<double> correlation_membership(const CorrelationVector<double>&);
template ClassicalityVerdict<Rat> correlation_membership(const CorrelationVector<Rat>&);
template ClassicalityVerdict<double> kolmogorov_feasibility(const BehaviorTable<double>&);
template ClassicalityVerdict<Rat> kolmogorov_feasibility(const BehaviorTable<Rat>&);

} // namespace contextsim
