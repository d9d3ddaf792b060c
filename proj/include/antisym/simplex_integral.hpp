#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "antisym/errors.hpp"
#include "antisym/parallel.hpp"
#include "antisym/permutation.hpp"
#include "antisym/polynomial.hpp"
#include "antisym/rational.hpp"

namespace antisym {

/// Positive rational exponents (a_1, ..., a_k).
class RationalExponentVector {
  public:
    explicit RationalExponentVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw InvalidArgument("exponent vector must have at least one entry");
        }
        for (const auto& a : entries_) {
            if (a <= 0) {
                throw InvalidArgument("exponents must be positive, got " + to_string(a));
            }
        }
    }

    /// Parses "1/2,3/2" or "1,2,3".
    static RationalExponentVector parse(std::string_view text) {
        std::vector<Rational> entries;
        for (auto item : split_list(text)) {
            entries.push_back(parse_rational(item));
        }
        return RationalExponentVector(std::move(entries));
    }

    unsigned size() const { return static_cast<unsigned>(entries_.size()); }
    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& operator()(unsigned i) const { return entries_.at(i - 1); }

    bool all_integer() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Rational& a) { return is_integer(a); });
    }

    RationalExponentVector scaled(const Rational& lambda) const {
        std::vector<Rational> out;
        out.reserve(entries_.size());
        for (const auto& a : entries_) {
            out.emplace_back(a * lambda);
        }
        return RationalExponentVector(std::move(out));
    }

    friend bool operator==(const RationalExponentVector&, const RationalExponentVector&) = default;

  private:
    std::vector<Rational> entries_;
};

/// prod_{i<j} (a_i - a_j) / (prod_i a_i * prod_{i<j} (a_i + a_j))
inline Rational closed_form(const RationalExponentVector& a) {
    Rational num(1);
    Rational den(1);
    for (unsigned i = 1; i <= a.size(); ++i) {
        den *= a(i);
        for (unsigned j = i + 1; j <= a.size(); ++j) {
            num *= a(i) - a(j);
            den *= a(i) + a(j);
        }
    }
    return num / den;
}

/// sum over pi of sign(pi) / prod_j s_j(pi), s_j the suffix sums a_{pi(k)} + ... + a_{pi(k-j+1)}.
inline Rational perm_sum(const RationalExponentVector& a, unsigned workers = 0) {
    const unsigned k = a.size();
    return reduce_over_permutations(
        k,
        [&](const Permutation& pi) {
            Rational den(1);
            Rational running(0);
            for (unsigned j = 1; j <= k; ++j) {
                running += a(pi(k - j + 1));
                den *= running;
            }
            return Rational(pi.sign() / den);
        },
        [](const Rational& x, const Rational& y) { return Rational(x + y); }, workers);
}

/// (-1)^{k(k-1)/2}: the reversal sign relating the simplex integral to perm_sum.
inline int reversal_sign(unsigned k) {
    return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
}

/// det(t_i^{a_j - 1}) expanded in t_1..t_k (printed with variable name "t").
inline Polynomial det_polynomial(const RationalExponentVector& a) {
    if (!a.all_integer()) {
        throw NonIntegerExponent("determinant integrand needs integer exponents");
    }
    const unsigned k = a.size();
    std::vector<unsigned> powers(k);
    for (unsigned j = 1; j <= k; ++j) {
        powers[j - 1] = numerator(a(j)).convert_to<unsigned>() - 1;
    }
    std::vector<Term> terms;
    for (const auto& pi : enumerate(k)) {
        Monomial m;
        for (unsigned i = 1; i <= k; ++i) {
            m.set_exponent(i, powers[pi(i) - 1]);
        }
        terms.push_back({m, Rational(pi.sign())});
    }
    return Polynomial::from_terms(std::move(terms));
}

/// Integral of p over 0 <= t_1 <= ... <= t_k <= 1 by iterated antiderivatives:
/// round i integrates t_i from 0 to t_{i+1} (to 1 in the last round).
inline Rational nested_simplex_integrate(const Polynomial& p, unsigned k) {
    if (k == 0) {
        throw InvalidArgument("simplex dimension must be at least 1");
    }
    if (p.max_variable() > k) {
        throw IndexOutOfRange("integrand mentions t" + std::to_string(p.max_variable()) + " but k = " +
                              std::to_string(k));
    }
    Polynomial current = p;
    for (unsigned i = 1; i <= k; ++i) {
        std::vector<Term> next;
        next.reserve(current.size());
        for (const auto& t : current.terms()) {
            const unsigned e = t.monomial.exponent(i) + 1;
            Monomial m = t.monomial;
            m.set_exponent(i, 0);
            if (i < k) {
                m.set_exponent(i + 1, m.exponent(i + 1) + e);
            }
            next.push_back({m, Rational(t.coefficient / e)});
        }
        current = Polynomial::from_terms(std::move(next));
    }
    return current.coefficient(Monomial{});
}

struct MonteCarloEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Samples are drawn in fixed blocks, each with its own generator, so the
/// estimate depends only on (seed, samples).
inline constexpr std::uint64_t kMonteCarloBlock = 4096;
inline constexpr std::string_view kMonteCarloRng =
    "mt19937_64 per 4096-sample block, seeded by seed_seq{seed_lo, seed_hi, block_lo, block_hi}; 53-bit uniforms";

namespace detail {

inline double laplace_det(const std::vector<double>& m, unsigned n, unsigned row, std::uint32_t used_cols) {
    if (row == n) {
        return 1.0;
    }
    double sum = 0.0;
    int parity = 0;
    for (unsigned c = 0; c < n; ++c) {
        if (used_cols & (1U << c)) {
            continue;
        }
        const double entry = m[row * n + c];
        if (entry != 0.0) {
            const double minor = laplace_det(m, n, row + 1, used_cols | (1U << c));
            sum += (parity % 2 == 0 ? entry : -entry) * minor;
        }
        ++parity;
    }
    return sum;
}

inline double elimination_det(std::vector<double> m, unsigned n) {
    double det = 1.0;
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        for (unsigned r = col + 1; r < n; ++r) {
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) {
                pivot = r;
            }
        }
        if (m[pivot * n + col] == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (unsigned c = 0; c < n; ++c) {
                std::swap(m[col * n + c], m[pivot * n + c]);
            }
            det = -det;
        }
        det *= m[col * n + col];
        for (unsigned r = col + 1; r < n; ++r) {
            const double factor = m[r * n + col] / m[col * n + col];
            for (unsigned c = col; c < n; ++c) {
                m[r * n + c] -= factor * m[col * n + c];
            }
        }
    }
    return det;
}

/// Row-major n x n determinant: cofactor expansion up to 6x6, elimination above.
inline double float_det(const std::vector<double>& m, unsigned n) {
    return n <= 6 ? laplace_det(m, n, 0, 0) : elimination_det(m, n);
}

struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.count == 0.0) {
            return;
        }
        const double total = count + o.count;
        const double delta = o.mean - mean;
        mean += delta * o.count / total;
        m2 += o.m2 + delta * delta * count * o.count / total;
        count = total;
    }
};

} // namespace detail

/// Monte Carlo estimate of the simplex integral of det(t_i^{a_j - 1}): sorted
/// uniform points have density k! on the ordered simplex, so the integral is
/// mean / k!.
inline MonteCarloEstimate mc_estimate(const RationalExponentVector& a, std::uint64_t samples, std::uint64_t seed,
                                      unsigned workers = 0) {
    if (samples == 0) {
        throw InvalidArgument("Monte Carlo needs at least one sample");
    }
    const unsigned k = a.size();
    if (k > 31) {
        throw InvalidArgument("Monte Carlo limited to k <= 31");
    }
    std::vector<double> powers(k);
    for (unsigned j = 1; j <= k; ++j) {
        powers[j - 1] = a(j).convert_to<double>() - 1.0;
    }
    const std::uint64_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
    std::vector<detail::Moments> partial(blocks);
    parallel_for(blocks, workers, [&](std::size_t b) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(std::uint64_t{b} >> 32)};
        std::mt19937_64 engine(seq);
        const std::uint64_t begin = b * kMonteCarloBlock;
        const std::uint64_t end = std::min(samples, begin + kMonteCarloBlock);
        std::vector<double> t(k);
        std::vector<double> m(std::size_t{k} * k);
        detail::Moments acc;
        for (std::uint64_t s = begin; s < end; ++s) {
            for (auto& x : t) {
                x = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            }
            std::sort(t.begin(), t.end());
            for (unsigned i = 0; i < k; ++i) {
                for (unsigned j = 0; j < k; ++j) {
                    m[i * k + j] = std::pow(t[i], powers[j]);
                }
            }
            acc.add(detail::float_det(m, k));
        }
        partial[b] = acc;
    });
    detail::Moments total;
    for (const auto& p : partial) {
        total.merge(p);
    }
    const double kfact = static_cast<double>(Permutation::factorial(k));
    MonteCarloEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.estimate = total.mean / kfact;
    est.standard_error =
        samples > 1 ? std::sqrt(total.m2 / (total.count - 1.0)) / std::sqrt(total.count) / kfact : 0.0;
    return est;
}

enum class IntegralMethod { closed, perm_sum, nested, mc, all };

inline IntegralMethod parse_integral_method(std::string_view name) {
    if (name == "closed") return IntegralMethod::closed;
    if (name == "perm-sum") return IntegralMethod::perm_sum;
    if (name == "nested") return IntegralMethod::nested;
    if (name == "mc") return IntegralMethod::mc;
    if (name == "all") return IntegralMethod::all;
    throw InvalidArgument("unknown integral method '" + std::string(name) + "'");
}

inline std::string to_string(IntegralMethod m) {
    switch (m) {
    case IntegralMethod::closed: return "closed";
    case IntegralMethod::perm_sum: return "perm-sum";
    case IntegralMethod::nested: return "nested";
    case IntegralMethod::mc: return "mc";
    case IntegralMethod::all: return "all";
    }
    return "all";
}

/// |mc - exact| must not exceed this many standard errors.
inline constexpr double kMonteCarloStderrTolerance = 4.0;
/// Floor for the Monte Carlo tolerance when the integrand is identically zero
/// and floating-point cancellation leaves rounding noise only.
inline constexpr double kMonteCarloAbsoluteFloor = 1e-12;

struct IntegralReport {
    RationalExponentVector a;
    IntegralMethod method = IntegralMethod::all;
    Rational closed_form;
    Rational perm_sum;
    std::optional<Rational> nested;
    int sign_factor = 1;
    std::optional<MonteCarloEstimate> mc;
    bool agree = true;
    std::vector<std::string> failures;
    double elapsed_seconds = 0.0;
};

/// Runs closed_form and perm_sum always; the nested and Monte Carlo paths when
/// the method asks for them (integer exponents only). Agreement rules:
/// closed_form == perm_sum, nested == reversal_sign(k) * perm_sum, and
/// |mc - nested| <= 4 stderr.
inline IntegralReport cross_check(const RationalExponentVector& a, IntegralMethod method, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers = 0) {
    const auto start = std::chrono::steady_clock::now();
    const bool want_nested = method == IntegralMethod::nested || method == IntegralMethod::mc ||
                             method == IntegralMethod::all;
    const bool want_mc = method == IntegralMethod::mc || method == IntegralMethod::all;
    if (want_nested && !a.all_integer()) {
        throw NonIntegerExponent("nested and Monte Carlo paths need integer exponents");
    }
    IntegralReport report{a};
    report.method = method;
    report.closed_form = closed_form(a);
    report.perm_sum = perm_sum(a, workers);
    report.sign_factor = reversal_sign(a.size());
    if (report.closed_form != report.perm_sum) {
        report.failures.push_back("closed_form " + to_string(report.closed_form) + " != perm_sum " +
                                  to_string(report.perm_sum));
    }
    if (want_nested) {
        report.nested = nested_simplex_integrate(det_polynomial(a), a.size());
        if (*report.nested != report.sign_factor * report.perm_sum) {
            report.failures.push_back("nested " + to_string(*report.nested) + " != sign_factor * perm_sum");
        }
    }
    if (want_mc) {
        report.mc = mc_estimate(a, samples, seed, workers);
        const double exact = report.nested->convert_to<double>();
        const double tolerance =
            std::max(kMonteCarloStderrTolerance * report.mc->standard_error, kMonteCarloAbsoluteFloor);
        if (std::abs(report.mc->estimate - exact) > tolerance) {
            report.failures.push_back("Monte Carlo estimate outside 4 standard errors of the exact value");
        }
    }
    report.agree = report.failures.empty();
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace antisym
