#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "antisym/errors.hpp"

namespace antisym {

using Integer = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::mpq_rational;

/// Canonical text form: "p/q" in lowest terms with the sign on the numerator;
/// integers print without a denominator.
inline std::string to_string(const Rational& r) {
    return r.str();
}

/// n / d with the sign moved onto the numerator.
inline Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) {
        throw InvalidArgument("zero denominator");
    }
    return d < 0 ? Rational(Integer(-n), Integer(-d)) : Rational(n, d);
}

inline bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
        }
    }
    Integer value(std::string(text.substr(pos)));
    return negative ? Integer(-value) : value;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace detail

/// Parses "p" or "p/q" (q nonzero). Decimal points and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
    const std::string_view body = detail::trim(text);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        return Rational(detail::parse_integer(body, text));
    }
    const Integer num = detail::parse_integer(body.substr(0, slash), text);
    const Integer den = detail::parse_integer(body.substr(slash + 1), text);
    if (den == 0) {
        throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

/// Splits a comma-separated list, rejecting empty items.
inline std::vector<std::string_view> split_list(std::string_view text) {
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto item = detail::trim(text.substr(start, comma - start));
        if (item.empty()) {
            throw InvalidArgument("empty entry in list '" + std::string(text) + "'");
        }
        items.push_back(item);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return items;
}

} // namespace antisym
