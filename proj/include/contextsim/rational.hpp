#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace contextsim {

/// Exact rational scalar used on the exact arithmetic lane.
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an input value or structure breaks a documented invariant.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when textual input cannot be decoded at all.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Per-scalar numeric policy. The exact lane compares exactly; the float
/// lane uses the documented tolerances.
template <class T>
struct scalar_policy;

template <>
struct scalar_policy<double> {
    static constexpr bool exact = false;
    static constexpr double sum_tolerance = 1e-9;
    static constexpr double bell_tolerance = 1e-9;
    static constexpr double lp_tolerance = 1e-9;
};

template <>
struct scalar_policy<Rat> {
    static constexpr bool exact = true;
    static const Rat sum_tolerance;
    static const Rat bell_tolerance;
    static const Rat lp_tolerance;
};

inline const Rat scalar_policy<Rat>::sum_tolerance = Rat(0);
inline const Rat scalar_policy<Rat>::bell_tolerance = Rat(0);
inline const Rat scalar_policy<Rat>::lp_tolerance = Rat(0);

inline double to_double(double x) { return x; }
inline double to_double(const Rat& x) { return x.convert_to<double>(); }

template <class T>
T abs_value(const T& x) {
    return x < T(0) ? T(-x) : x;
}

/// Canonical textual form: "p/q" in lowest terms, q >= 1.
std::string format_rational(const Rat& r);

/// Accepts "p/q", plain integers ("3", "-2") and decimal literals
/// ("0.25", "-1.5e-2"), all decoded exactly.
Rat parse_rational(const std::string& text);

/// Non-throwing variant of parse_rational.
std::optional<Rat> try_parse_rational(const std::string& text);

} // namespace contextsim
