#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "antisym/errors.hpp"
#include "antisym/polynomial.hpp"
#include "antisym/rational.hpp"

namespace antisym {

/// The polynomial 1 - prod_{i in S} x_i for a nonempty index set S.
///
/// S is held as a bitmask; bit (i - 1) stands for x_i.
class SubsetFactor {
  public:
    SubsetFactor(std::initializer_list<unsigned> indices)
        : SubsetFactor(std::vector<unsigned>(indices)) {}

    explicit SubsetFactor(const std::vector<unsigned>& indices) {
        for (unsigned i : indices) {
            if (i == 0 || i > kMaxVariables) {
                throw IndexOutOfRange("subset index " + std::to_string(i) + " outside 1.." +
                                      std::to_string(kMaxVariables));
            }
            mask_ |= std::uint32_t{1} << (i - 1);
        }
        if (mask_ == 0) {
            throw EmptySubset("subset factor needs at least one index");
        }
    }

    static SubsetFactor from_mask(std::uint32_t mask) {
        if (mask == 0) {
            throw EmptySubset("subset factor needs at least one index");
        }
        if (mask >> kMaxVariables) {
            throw IndexOutOfRange("subset mask uses indices above " + std::to_string(kMaxVariables));
        }
        SubsetFactor f;
        f.mask_ = mask;
        return f;
    }

    std::uint32_t mask() const { return mask_; }
    unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }
    bool contains(unsigned index) const { return index >= 1 && index <= 32 && (mask_ >> (index - 1)) & 1U; }

    std::vector<unsigned> indices() const {
        std::vector<unsigned> out;
        for (unsigned i = 1; i <= kMaxVariables; ++i) {
            if (contains(i)) {
                out.push_back(i);
            }
        }
        return out;
    }

    unsigned max_index() const { return static_cast<unsigned>(std::bit_width(mask_)); }

    /// prod_{i in S} x_i
    Monomial product() const {
        Monomial m;
        for (unsigned i : indices()) {
            m.set_exponent(i, 1);
        }
        return m;
    }

    /// 1 - prod_{i in S} x_i as a polynomial.
    Polynomial expand() const { return Polynomial(Rational(1)) - Polynomial::monomial(product()); }

    Rational evaluate(PointEvaluator& at) const { return at.one_minus_product(mask_); }

    /// Ordered by subset size, then by mask.
    friend std::strong_ordering operator<=>(const SubsetFactor& a, const SubsetFactor& b) {
        if (auto c = a.size() <=> b.size(); c != 0) {
            return c;
        }
        return a.mask_ <=> b.mask_;
    }
    friend bool operator==(const SubsetFactor&, const SubsetFactor&) = default;

    /// "(1 - x1*x2)"
    std::string to_string() const { return "(1 - " + product().to_string() + ")"; }

  private:
    SubsetFactor() = default;
    std::uint32_t mask_ = 0;
};

/// Multiset of subset factors: factor -> positive multiplicity.
using Denominator = std::map<SubsetFactor, unsigned>;

/// Expanded product of a multiset of subset factors.
inline Polynomial expand(const Denominator& factors) {
    Polynomial p(Rational(1));
    for (const auto& [factor, multiplicity] : factors) {
        for (unsigned m = 0; m < multiplicity; ++m) {
            p = p.times_one_minus(factor.product());
        }
    }
    return p;
}

/// Polynomial numerator over a product of structural factors (1 - prod x_S).
///
/// Denominators are never expanded or gcd-reduced. Zero is the zero numerator
/// with an empty denominator.
class FactoredRational {
  public:
    FactoredRational() = default;

    explicit FactoredRational(Polynomial numerator, Denominator denominator = {})
        : numerator_(std::move(numerator)) {
        if (numerator_.is_zero()) {
            return;
        }
        for (auto& [factor, multiplicity] : denominator) {
            if (multiplicity != 0) {
                denominator_.emplace(factor, multiplicity);
            }
        }
    }

    const Polynomial& numerator() const { return numerator_; }
    const Denominator& denominator() const { return denominator_; }
    bool is_zero() const { return numerator_.is_zero(); }

    unsigned multiplicity(const SubsetFactor& f) const {
        auto it = denominator_.find(f);
        return it == denominator_.end() ? 0 : it->second;
    }

    unsigned max_variable() const {
        unsigned v = numerator_.max_variable();
        for (const auto& [factor, m] : denominator_) {
            v = std::max(v, factor.max_index());
        }
        return v;
    }

    FactoredRational operator-() const {
        FactoredRational r(*this);
        r.numerator_ = -r.numerator_;
        return r;
    }

    FactoredRational scaled(const Rational& c) const {
        return FactoredRational(numerator_.scaled(c), denominator_);
    }

    /// Sum over the multiset-maximum of the two denominators: each numerator is
    /// multiplied by the factors its own denominator lacks.
    friend FactoredRational operator+(const FactoredRational& a, const FactoredRational& b) {
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        Denominator common = a.denominator_;
        for (const auto& [factor, m] : b.denominator_) {
            auto& slot = common[factor];
            slot = std::max(slot, m);
        }
        return FactoredRational(a.lifted_to(common) + b.lifted_to(common), common);
    }

    friend FactoredRational operator-(const FactoredRational& a, const FactoredRational& b) { return a + (-b); }

    FactoredRational& operator+=(const FactoredRational& other) { return *this = *this + other; }

    /// Structural identity (same numerator polynomial and same factor multiset).
    friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

    Rational evaluate(PointEvaluator& at) const {
        Rational den(1);
        for (const auto& [factor, m] : denominator_) {
            const Rational& v = factor.evaluate(at);
            if (v == 0) {
                throw PoleAtPoint("factor " + factor.to_string() + " vanishes at the point");
            }
            for (unsigned i = 0; i < m; ++i) {
                den *= v;
            }
        }
        return numerator_.evaluate(at) / den;
    }

    Rational evaluate(const Point& point) const {
        PointEvaluator at(point);
        return evaluate(at);
    }

    /// "(num) / ((1 - x1)*(1 - x1*x2)^2)"
    std::string to_string() const {
        if (denominator_.empty()) {
            return numerator_.to_string();
        }
        std::string den;
        for (const auto& [factor, m] : denominator_) {
            if (!den.empty()) {
                den += '*';
            }
            den += factor.to_string();
            if (m != 1) {
                den += '^' + std::to_string(m);
            }
        }
        return "(" + numerator_.to_string() + ") / (" + den + ")";
    }

  private:
    Polynomial lifted_to(const Denominator& common) const {
        Polynomial p = numerator_;
        for (const auto& [factor, m] : common) {
            const auto monomial = factor.product();
            for (unsigned i = multiplicity(factor); i < m; ++i) {
                p = p.times_one_minus(monomial);
            }
        }
        return p;
    }

    Polynomial numerator_;
    Denominator denominator_;
};

/// The two sides of the cross-multiplied equation a = b, restricted to the
/// factors the denominators do not share:
/// num_a * expand(den_b \ common) and num_b * expand(den_a \ common).
inline std::pair<Polynomial, Polynomial> cross_multiply(const FactoredRational& a, const FactoredRational& b) {
    auto surplus = [](const Denominator& mine, const FactoredRational& other) {
        Denominator extra;
        for (const auto& [factor, m] : mine) {
            const unsigned shared = other.multiplicity(factor);
            if (m > shared) {
                extra.emplace(factor, m - shared);
            }
        }
        return extra;
    };
    Polynomial left = a.numerator();
    for (const auto& [factor, m] : surplus(b.denominator(), a)) {
        for (unsigned i = 0; i < m; ++i) {
            left = left.times_one_minus(factor.product());
        }
    }
    Polynomial right = b.numerator();
    for (const auto& [factor, m] : surplus(a.denominator(), b)) {
        for (unsigned i = 0; i < m; ++i) {
            right = right.times_one_minus(factor.product());
        }
    }
    return {std::move(left), std::move(right)};
}

/// True iff a and b are equal as rational functions.
inline bool equivalent(const FactoredRational& a, const FactoredRational& b) {
    const auto [left, right] = cross_multiply(a, b);
    return left == right;
}

} // namespace antisym
