#pragma once

#include "contextsim/scenario.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace contextsim {

/// Deterministic hidden-variable assignment: one sign per observable.
struct HiddenVariableAtom {
    std::array<int, 4> assignment; // lambda_1..lambda_4, each +1 or -1

    int value(int observable) const { return assignment[observable - 1]; }
    bool operator==(const HiddenVariableAtom&) const = default;
};

/// Canonical enumeration of the 16 atoms, lexicographic in
/// (lambda_1, ..., lambda_4) with +1 before -1.
std::array<HiddenVariableAtom, 16> all_atoms();
HiddenVariableAtom atom_from_index(int index); // 0..15
int atom_index(const HiddenVariableAtom& atom);
std::string atom_label(const HiddenVariableAtom& atom);   // e.g. "+-++"
std::optional<HiddenVariableAtom> atom_from_label(const std::string& label);

/// Correlation vector produced by a deterministic assignment:
/// (l1*l3, l1*l4, l2*l3, l2*l4).
std::array<int, 4> vertex_of(const HiddenVariableAtom& atom);

/// The 8 distinct deterministic correlation vertices, ascending
/// lexicographic order. Every vertex has component product +1.
std::vector<std::array<int, 4>> deterministic_vertices();

std::string vertex_label(const std::array<int, 4>& vertex); // signs of (E13,E14,E23,E24)

/// One CHSH-class inequality s . E <= 2, identified by its sign pattern
/// (product of signs = -1).
template <class T>
struct FacetValue {
    std::array<int, 4> signs;
    T value;
};

/// Evaluates all 8 CHSH facets on E. Their maximum is the tight
/// correlation-polytope membership test value.
template <class T>
std::array<FacetValue<T>, 8> chsh_facets(const CorrelationVector<T>& e);

/// Certificate of classicality: nonnegative weights summing to one.
/// Keys are vertex labels (correlation membership) or atom labels
/// (Kolmogorov feasibility).
template <class T>
struct ClassicalCertificate {
    std::map<std::string, T> weights;
};

/// Witness of nonclassicality: a violated CHSH facet (value > bound 2).
template <class T>
struct FacetWitness {
    std::array<int, 4> signs;
    T value;
};

/// Witness of nonclassicality: the same observable shows different
/// marginals in two coincidence contexts, so no joint distribution can
/// reproduce the table.
template <class T>
struct MarginalWitness {
    int observable;
    Pair pair_a;
    Pair pair_b;
    T marginal_a; // P(observable = up) inferred from pair_a
    T marginal_b;
};

template <class T>
using NonClassicalWitness = std::variant<FacetWitness<T>, MarginalWitness<T>>;

template <class T>
struct ClassicalityVerdict {
    std::optional<ClassicalCertificate<T>> certificate;
    std::optional<NonClassicalWitness<T>> witness;

    bool classical() const { return certificate.has_value(); }
};

/// Decides membership of E in the convex hull of the deterministic
/// vertices by LP feasibility. Classical verdicts carry explicit convex
/// weights over vertices; nonclassical ones carry the maximally violated
/// CHSH facet.
template <class T>
ClassicalityVerdict<T> correlation_membership(const CorrelationVector<T>& e);

/// Decides whether a single probability measure over the 16 atoms
/// reproduces all four pairwise joint distributions. Classical verdicts
/// carry the measure; infeasible tables yield a marginal-inconsistency
/// witness when one exists, otherwise the maximally violated CHSH facet.
template <class T>
ClassicalityVerdict<T> kolmogorov_feasibility(const BehaviorTable<T>& table);

extern template std::array<FacetValue<double>, 8> chsh_facets(const CorrelationVector<double>&);
extern template std::array<FacetValue<Rat>, 8> chsh_facets(const CorrelationVector<Rat>&);
extern template ClassicalityVerdict<double> correlation_membership(const CorrelationVector<double>&);
extern template ClassicalityVerdict<Rat> correlation_membership(const CorrelationVector<Rat>&);
extern template ClassicalityVerdict<double> kolmogorov_feasibility(const BehaviorTable<double>&);
extern template ClassicalityVerdict<Rat> kolmogorov_feasibility(const BehaviorTable<Rat>&);

} // namespace contextsim
