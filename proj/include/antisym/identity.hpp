#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "antisym/errors.hpp"
#include "antisym/factored_rational.hpp"
#include "antisym/parallel.hpp"
#include "antisym/permutation.hpp"
#include "antisym/polynomial.hpp"

namespace antisym {

struct VerifyOptions {
    unsigned max_symbolic_k = 5;
    unsigned max_numeric_k = 9;
    unsigned workers = 0;
};

enum class VerifyMode { symbolic, numeric };

inline std::string to_string(VerifyMode mode) {
    return mode == VerifyMode::symbolic ? "symbolic" : "numeric";
}

struct VerificationReport {
    unsigned k = 0;
    VerifyMode mode = VerifyMode::symbolic;
    bool equal = false;
    std::uint64_t lhs_term_count = 0;
    std::optional<std::size_t> numerator_monomials;
    std::optional<std::size_t> points_tested;
    double elapsed_seconds = 0.0;
    /// First differing monomial (symbolic) or the failing point (numeric).
    std::optional<std::string> witness;
};

/// x1 x2^2 ... xk^k over (1 - xk)(1 - xk x(k-1)) ... (1 - xk ... x1).
inline FactoredRational lhs_base(unsigned k) {
    if (k == 0 || k > kMaxVariables) {
        throw InvalidArgument("k must lie in 1.." + std::to_string(kMaxVariables));
    }
    Monomial numerator;
    for (unsigned i = 1; i <= k; ++i) {
        numerator.set_exponent(i, i);
    }
    Denominator den;
    std::uint32_t mask = 0;
    for (unsigned j = 1; j <= k; ++j) {
        mask |= std::uint32_t{1} << (k - j);
        den.emplace(SubsetFactor::from_mask(mask), 1);
    }
    return FactoredRational(Polynomial::monomial(numerator), std::move(den));
}

/// sign(pi) * relabel(lhs_base(k), pi)
inline FactoredRational lhs_term(unsigned k, const Permutation& pi) {
    if (pi.size() != k) {
        throw LengthMismatch("permutation degree " + std::to_string(pi.size()) + " differs from k = " +
                             std::to_string(k));
    }
    FactoredRational term = relabel(lhs_base(k), pi);
    return pi.sign() < 0 ? -term : term;
}

inline FactoredRational build_lhs(unsigned k, unsigned workers = 0) {
    return antisymmetrize(lhs_base(k), k, workers);
}

/// x1...xk prod_{i<j}(xj - xi) over prod_i (1 - xi) prod_{i<j} (1 - xi xj).
inline FactoredRational build_rhs(unsigned k) {
    if (k == 0 || k > kMaxVariables) {
        throw InvalidArgument("k must lie in 1.." + std::to_string(kMaxVariables));
    }
    Monomial all;
    for (unsigned i = 1; i <= k; ++i) {
        all.set_exponent(i, 1);
    }
    Polynomial numerator = Polynomial::monomial(all);
    Denominator den;
    for (unsigned i = 1; i <= k; ++i) {
        den.emplace(SubsetFactor{i}, 1);
    }
    for (unsigned j = 2; j <= k; ++j) {
        for (unsigned i = 1; i < j; ++i) {
            numerator *= Polynomial::variable(j) - Polynomial::variable(i);
            den.emplace(SubsetFactor{i, j}, 1);
        }
    }
    return FactoredRational(std::move(numerator), std::move(den));
}

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace detail

/// Exact check of build_lhs(k) == build_rhs(k) by restricted cross-multiplication.
inline VerificationReport verify_symbolic(unsigned k, const VerifyOptions& options = {}) {
    if (k == 0) {
        throw InvalidArgument("k must be at least 1");
    }
    if (k > options.max_symbolic_k) {
        throw BudgetExceeded("symbolic verification limited to k <= " + std::to_string(options.max_symbolic_k));
    }
    const auto start = std::chrono::steady_clock::now();
    const FactoredRational lhs = build_lhs(k, options.workers);
    const FactoredRational rhs = build_rhs(k);
    const auto [left, right] = cross_multiply(lhs, rhs);

    VerificationReport report;
    report.k = k;
    report.mode = VerifyMode::symbolic;
    report.lhs_term_count = Permutation::factorial(k);
    report.numerator_monomials = lhs.numerator().size();
    report.equal = left == right;
    if (!report.equal) {
        const Polynomial diff = left - right;
        const Term& first = diff.terms().front();
        report.witness = to_string(first.coefficient) + "*" + first.monomial.to_string();
    }
    report.elapsed_seconds = detail::seconds_since(start);
    return report;
}

/// Draws the n/d coordinate sampler used by verify_numeric: d uniform in
/// 2..97, n uniform in 1..d-1.
inline Rational sample_unit_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(2, 97);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(1, d - 1);
    return Rational(num(rng), d);
}

/// Schwartz-Zippel style check: exact evaluation of both sides at `trials`
/// seeded random points of (0,1)^k. Points hitting a pole are redrawn.
inline VerificationReport verify_numeric(unsigned k, unsigned trials, std::uint64_t seed,
                                         const VerifyOptions& options = {}) {
    if (k == 0) {
        throw InvalidArgument("k must be at least 1");
    }
    if (trials == 0) {
        throw InvalidArgument("trials must be at least 1");
    }
    if (k > options.max_numeric_k) {
        throw BudgetExceeded("numeric verification limited to k <= " + std::to_string(options.max_numeric_k));
    }
    const auto start = std::chrono::steady_clock::now();

    const std::vector<Permutation> perms = enumerate(k);
    std::vector<FactoredRational> terms;
    terms.reserve(perms.size());
    std::set<std::uint32_t> factor_masks;
    for (const auto& pi : perms) {
        terms.push_back(lhs_term(k, pi));
        for (const auto& [factor, m] : terms.back().denominator()) {
            factor_masks.insert(factor.mask());
        }
    }
    const FactoredRational rhs = build_rhs(k);
    for (const auto& [factor, m] : rhs.denominator()) {
        factor_masks.insert(factor.mask());
    }

    // Sampling is sequential so the accepted points depend only on the seed.
    std::mt19937_64 rng(seed);
    std::vector<Point> points;
    std::uint64_t rejected = 0;
    while (points.size() < trials) {
        Point p(k);
        for (auto& x : p) {
            x = sample_unit_rational(rng);
        }
        PointEvaluator at(p);
        bool pole = false;
        for (std::uint32_t mask : factor_masks) {
            if (at.one_minus_product(mask) == 0) {
                pole = true;
                break;
            }
        }
        if (!pole) {
            points.push_back(std::move(p));
        } else if (++rejected > 100ULL * trials) {
            throw DegeneratePointExhaustion("too many sampled points hit a pole");
        }
    }

    std::vector<char> matches(points.size(), 0);
    parallel_for(points.size(), options.workers, [&](std::size_t i) {
        PointEvaluator at(points[i]);
        Rational lhs(0);
        for (const auto& term : terms) {
            lhs += term.evaluate(at);
        }
        matches[i] = lhs == rhs.evaluate(at);
    });

    VerificationReport report;
    report.k = k;
    report.mode = VerifyMode::numeric;
    report.lhs_term_count = terms.size();
    report.points_tested = points.size();
    report.equal = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!matches[i]) {
            report.equal = false;
            std::string w;
            for (const auto& x : points[i]) {
                w += (w.empty() ? "" : ",") + to_string(x);
            }
            report.witness = w;
            break;
        }
    }
    report.elapsed_seconds = detail::seconds_since(start);
    return report;
}

} // namespace antisym
