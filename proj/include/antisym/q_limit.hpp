#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "antisym/errors.hpp"
#include "antisym/permutation.hpp"
#include "antisym/rational.hpp"

namespace antisym {

/// Specialization exponents (a_1, ..., a_k), all positive integers. Order
/// matters: it fixes the signs of both sides.
class ExponentVector {
  public:
    explicit ExponentVector(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw InvalidArgument("exponent vector must have at least one entry");
        }
        for (auto a : entries_) {
            if (a == 0) {
                throw InvalidArgument("exponents must be positive integers");
            }
        }
    }

    /// Parses "1,2,5".
    static ExponentVector parse(std::string_view text) {
        std::vector<std::uint64_t> entries;
        for (auto item : split_list(text)) {
            const Rational r = parse_rational(item);
            if (!is_integer(r) || r <= 0 || r > Rational(UINT32_MAX)) {
                throw InvalidArgument("expected a positive integer, got '" + std::string(item) + "'");
            }
            entries.push_back(numerator(r).convert_to<std::uint64_t>());
        }
        return ExponentVector(std::move(entries));
    }

    unsigned size() const { return static_cast<unsigned>(entries_.size()); }
    const std::vector<std::uint64_t>& entries() const { return entries_; }

    /// a_i, 1-based.
    std::uint64_t operator()(unsigned i) const { return entries_.at(i - 1); }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  private:
    std::vector<std::uint64_t> entries_;
};

/// sign * scalar * q^q_power * (1-q)^one_minus_q_exponent * prod [s]_q / prod [t]_q
/// where [s]_q = 1 + q + ... + q^(s-1). Multisets map a q-integer to its count.
struct QFactorization {
    int sign = 1;
    Rational scalar{1};
    std::uint64_t q_power = 0;
    std::map<std::uint64_t, unsigned> numerator_qints;
    std::map<std::uint64_t, unsigned> denominator_qints;
    int one_minus_q_exponent = 0;

    bool is_zero() const { return scalar == 0; }

    QFactorization times_one_minus_q(int power) const {
        QFactorization r(*this);
        r.one_minus_q_exponent += power;
        return r;
    }

    bool has_finite_limit() const { return is_zero() || one_minus_q_exponent >= 0; }

    /// Value at q -> 1: every [s]_q becomes s and q^m becomes 1.
    Rational limit_at_one() const {
        if (is_zero()) {
            return Rational(0);
        }
        if (one_minus_q_exponent < 0) {
            throw DivergentLimit("(1-q)^" + std::to_string(one_minus_q_exponent) + " has a pole at q = 1");
        }
        if (one_minus_q_exponent > 0) {
            return Rational(0);
        }
        Rational value = sign < 0 ? Rational(-scalar) : scalar;
        for (const auto& [s, count] : numerator_qints) {
            for (unsigned c = 0; c < count; ++c) {
                value *= s;
            }
        }
        for (const auto& [t, count] : denominator_qints) {
            for (unsigned c = 0; c < count; ++c) {
                value /= t;
            }
        }
        return value;
    }

    /// Exact value at a rational q != 1.
    Rational evaluate(const Rational& q) const {
        if (q == 1) {
            throw InvalidArgument("use limit_at_one() at q = 1");
        }
        auto power = [](const Rational& base, std::uint64_t e) {
            Rational r(1);
            for (std::uint64_t i = 0; i < e; ++i) {
                r *= base;
            }
            return r;
        };
        auto qint = [&](std::uint64_t s) { return Rational((1 - power(q, s)) / (1 - q)); };
        Rational value = sign < 0 ? Rational(-scalar) : scalar;
        value *= power(q, q_power);
        const Rational one_minus_q = 1 - q;
        for (int i = 0; i < one_minus_q_exponent; ++i) {
            value *= one_minus_q;
        }
        for (int i = one_minus_q_exponent; i < 0; ++i) {
            value /= one_minus_q;
        }
        for (const auto& [s, count] : numerator_qints) {
            for (unsigned c = 0; c < count; ++c) {
                value *= qint(s);
            }
        }
        for (const auto& [t, count] : denominator_qints) {
            for (unsigned c = 0; c < count; ++c) {
                value /= qint(t);
            }
        }
        return value;
    }
};

/// Suffix sums s_j = a_{pi(k)} + ... + a_{pi(k-j+1)} for j = 1..k.
inline std::vector<std::uint64_t> suffix_sums(const Permutation& pi, const ExponentVector& a) {
    if (pi.size() != a.size()) {
        throw LengthMismatch("permutation degree " + std::to_string(pi.size()) + " vs " +
                             std::to_string(a.size()) + " exponents");
    }
    const unsigned k = a.size();
    std::vector<std::uint64_t> sums;
    sums.reserve(k);
    std::uint64_t running = 0;
    for (unsigned j = 1; j <= k; ++j) {
        running += a(pi(k - j + 1));
        sums.push_back(running);
    }
    return sums;
}

/// One left-hand term at x_i = q^{a_i}:
/// sign(pi) q^{sum_i i a_{pi(i)}} / prod_j (1 - q^{s_j}), each 1 - q^s written as (1-q)[s]_q.
inline QFactorization specialize_lhs_term(const Permutation& pi, const ExponentVector& a) {
    QFactorization f;
    f.sign = pi.sign();
    for (unsigned i = 1; i <= a.size(); ++i) {
        f.q_power += i * a(pi(i));
    }
    for (auto s : suffix_sums(pi, a)) {
        ++f.denominator_qints[s];
    }
    f.one_minus_q_exponent = -static_cast<int>(a.size());
    return f;
}

/// The right-hand side at x_i = q^{a_i}. For i < j the Vandermonde factor
/// q^{a_j} - q^{a_i} is sign(a_i - a_j) q^{min} (1-q) [|a_i - a_j|]_q;
/// a repeated entry yields the zero encoding.
inline QFactorization specialize_rhs(const ExponentVector& a) {
    const unsigned k = a.size();
    QFactorization f;
    f.one_minus_q_exponent = -static_cast<int>(k);
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = i + 1; j <= k; ++j) {
            if (a(i) == a(j)) {
                f.scalar = 0;
                f.q_power = 0;
                return f;
            }
        }
    }
    int exponent = 0;
    for (unsigned i = 1; i <= k; ++i) {
        f.q_power += a(i);
        ++f.denominator_qints[a(i)];
        --exponent;
    }
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = i + 1; j <= k; ++j) {
            const auto lo = std::min(a(i), a(j));
            const auto hi = std::max(a(i), a(j));
            if (a(i) < a(j)) {
                f.sign = -f.sign;
            }
            f.q_power += lo;
            ++f.numerator_qints[hi - lo];
            ++exponent;
            ++f.denominator_qints[a(i) + a(j)];
            --exponent;
        }
    }
    f.one_minus_q_exponent = exponent;
    return f;
}

/// (1-q)^k times the left side, at q -> 1: sum_pi sign(pi) / prod_j s_j(pi).
inline Rational lhs_limit(const ExponentVector& a, unsigned workers = 0) {
    const int k = static_cast<int>(a.size());
    return reduce_over_permutations(
        a.size(), [&](const Permutation& pi) { return specialize_lhs_term(pi, a).times_one_minus_q(k).limit_at_one(); },
        [](const Rational& x, const Rational& y) { return Rational(x + y); }, workers);
}

/// (1-q)^k times the right side, at q -> 1.
inline Rational rhs_limit(const ExponentVector& a) {
    return specialize_rhs(a).times_one_minus_q(static_cast<int>(a.size())).limit_at_one();
}

struct LimitReport {
    ExponentVector a;
    Rational lhs;
    Rational rhs;
    bool equal = false;
    double elapsed_seconds = 0.0;

    unsigned k() const { return a.size(); }
};

inline LimitReport check_limit_identity(const ExponentVector& a, unsigned workers = 0) {
    const auto start = std::chrono::steady_clock::now();
    LimitReport report{a, lhs_limit(a, workers), rhs_limit(a)};
    report.equal = report.lhs == report.rhs;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace antisym
