#include "contextsim/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace contextsim {

namespace {

using Int = boost::multiprecision::cpp_int;

Int pow10(unsigned n) {
    Int p = 1;
    for (unsigned i = 0; i < n; ++i) p *= 10;
    return p;
}

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// Decimal-only construction; cpp_int would read a leading 0 as octal.
Int parse_decimal_int(const std::string& s) {
    const bool negative = s[0] == '-';
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    Int value{s.substr(i)};
    return negative ? Int(-value) : value;
}

} // namespace

std::string format_rational(const Rat& r) {
    const Int num = numerator(r);
    const Int den = denominator(r); // cpp_rational keeps den > 0, lowest terms
    return num.str() + "/" + den.str();
}

std::optional<Rat> try_parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return std::nullopt;

    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
        const Int q = parse_decimal_int(den);
        if (q == 0) return std::nullopt;
        return Rat(parse_decimal_int(num), q);
    }

    if (is_integer_token(s)) return Rat(parse_decimal_int(s));

    // Decimal / scientific literal, decoded exactly: mantissa * 10^exponent.
    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mantissa = s.substr(0, e);
        const std::string etok = s.substr(e + 1);
        if (!is_integer_token(etok)) return std::nullopt;
        exponent = std::strtol(etok.c_str(), nullptr, 10);
    }
    std::string digits = mantissa;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits == "+" || digits == "-") return std::nullopt;
    if (!is_integer_token(digits)) return std::nullopt;

    Rat value{parse_decimal_int(digits)};
    if (exponent > 0)
        value *= Rat(pow10(static_cast<unsigned>(exponent)));
    else if (exponent < 0)
        value /= Rat(pow10(static_cast<unsigned>(-exponent)));
    return value;
}

Rat parse_rational(const std::string& text) {
    if (auto r = try_parse_rational(text)) return *r;
    throw ParseError("not a rational literal: '" + text + "'");
}

} // namespace contextsim
