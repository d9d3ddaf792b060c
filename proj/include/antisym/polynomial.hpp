#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antisym/errors.hpp"
#include "antisym/monomial.hpp"
#include "antisym/rational.hpp"

namespace antisym {

/// Assignment of values to variables: point[i - 1] is the value of x_i.
using Point = std::vector<Rational>;

/// Evaluates monomials and subset products at a fixed point, caching powers
/// and products so that many expressions can share the work.
class PointEvaluator {
  public:
    explicit PointEvaluator(const Point& point)
        : point_(&point), powers_(point.size()) {}

    const Point& point() const { return *point_; }

    const Rational& value(unsigned index) const {
        if (index == 0 || index > point_->size()) {
            throw MissingAssignment("no value assigned to x" + std::to_string(index));
        }
        return (*point_)[index - 1];
    }

    const Rational& power(unsigned index, unsigned exponent) {
        const Rational& base = value(index);
        auto& table = powers_[index - 1];
        if (table.empty()) {
            table.emplace_back(1);
        }
        while (table.size() <= exponent) {
            table.push_back(table.back() * base);
        }
        return table[exponent];
    }

    Rational monomial(const Monomial& m) {
        Rational r(1);
        const auto& exps = m.exponents();
        for (unsigned i = 0; i < kMaxVariables; ++i) {
            if (exps[i] != 0) {
                r *= power(i + 1, exps[i]);
            }
        }
        return r;
    }

    /// 1 - prod_{i in mask} x_i, where bit (i - 1) of mask selects x_i.
    const Rational& one_minus_product(std::uint32_t mask) {
        auto it = subset_values_.find(mask);
        if (it != subset_values_.end()) {
            return it->second;
        }
        Rational product(1);
        for (unsigned i = 0; i < 32; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                product *= value(i + 1);
            }
        }
        return subset_values_.emplace(mask, Rational(1 - product)).first->second;
    }

  private:
    const Point* point_;
    std::vector<std::vector<Rational>> powers_;
    std::unordered_map<std::uint32_t, Rational> subset_values_;
};

struct Term {
    Monomial monomial;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are stored in strictly decreasing graded-lex order with nonzero
/// coefficients, so two polynomials are equal iff their term vectors are.
class Polynomial {
  public:
    Polynomial() = default;

    explicit Polynomial(Rational constant) {
        if (constant != 0) {
            terms_.push_back({Monomial{}, std::move(constant)});
        }
    }

    static Polynomial monomial(const Monomial& m, Rational coefficient = Rational(1)) {
        Polynomial p;
        if (coefficient != 0) {
            p.terms_.push_back({m, std::move(coefficient)});
        }
        return p;
    }

    static Polynomial variable(unsigned index) {
        return monomial(Monomial::variable(index));
    }

    /// Canonicalizes an arbitrary term list: sorts, merges equal monomials and
    /// drops zero coefficients.
    static Polynomial from_terms(std::vector<Term> terms) {
        Polynomial p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of m (0 when absent).
    Rational coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.monomial > key; });
        if (it != terms_.end() && it->monomial == m) {
            return it->coefficient;
        }
        return Rational(0);
    }

    unsigned max_variable() const {
        unsigned v = 0;
        for (const auto& t : terms_) {
            v = std::max(v, t.monomial.max_variable());
        }
        return v;
    }

    unsigned degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().monomial == t.monomial) {
                merged.back().coefficient += t.coefficient;
            } else {
                if (!merged.empty() && merged.back().coefficient == 0) {
                    merged.pop_back();
                }
                merged.push_back(std::move(t));
            }
        }
        if (!merged.empty() && merged.back().coefficient == 0) {
            merged.pop_back();
        }
        terms_ = std::move(merged);
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) {
            t.coefficient = -t.coefficient;
        }
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

    /// c * m * p; order is preserved so no resort is needed.
    Polynomial times(const Monomial& m, const Rational& c = Rational(1)) const {
        if (c == 0) {
            return {};
        }
        Polynomial r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            r.terms_.push_back({t.monomial * m, Rational(t.coefficient * c)});
        }
        return r;
    }

    Polynomial scaled(const Rational& c) const { return times(Monomial{}, c); }

    /// p * (1 - m), computed as a single merge.
    Polynomial times_one_minus(const Monomial& m) const { return merge(*this, times(m), true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& large = a.size() <= b.size() ? b : a;
        if (small.size() == 1) {
            return large.times(small.terms_.front().monomial, small.terms_.front().coefficient);
        }
        std::vector<Term> products;
        products.reserve(a.size() * b.size());
        for (const auto& s : small.terms_) {
            for (const auto& l : large.terms_) {
                products.push_back({s.monomial * l.monomial, Rational(s.coefficient * l.coefficient)});
            }
        }
        return from_terms(std::move(products));
    }

    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Rational evaluate(PointEvaluator& at) const {
        Rational sum(0);
        for (const auto& t : terms_) {
            sum += t.coefficient * at.monomial(t.monomial);
        }
        return sum;
    }

    /// Exact value at the point; every variable of the polynomial needs a value.
    Rational evaluate(const Point& point) const {
        PointEvaluator at(point);
        return evaluate(at);
    }

    /// "x1^2 - 1/2*x1*x2 + 3", terms in decreasing graded-lex order; "0" when empty.
    std::string to_string(std::string_view var = "x") const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& t : terms_) {
            const bool negative = t.coefficient < 0;
            if (out.empty()) {
                if (negative) {
                    out += '-';
                }
            } else {
                out += negative ? " - " : " + ";
            }
            const Rational magnitude = negative ? Rational(-t.coefficient) : t.coefficient;
            if (t.monomial.is_one()) {
                out += antisym::to_string(magnitude);
            } else {
                if (magnitude != 1) {
                    out += antisym::to_string(magnitude);
                    out += '*';
                }
                out += t.monomial.to_string(var);
            }
        }
        return out;
    }

  private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        Polynomial r;
        r.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            const auto cmp = ia->monomial <=> ib->monomial;
            if (cmp > 0) {
                r.terms_.push_back(*ia++);
            } else if (cmp < 0) {
                r.terms_.push_back({ib->monomial, subtract ? Rational(-ib->coefficient) : ib->coefficient});
                ++ib;
            } else {
                Rational c = subtract ? Rational(ia->coefficient - ib->coefficient)
                                      : Rational(ia->coefficient + ib->coefficient);
                if (c != 0) {
                    r.terms_.push_back({ia->monomial, std::move(c)});
                }
                ++ia;
                ++ib;
            }
        }
        for (; ia != a.terms_.end(); ++ia) {
            r.terms_.push_back(*ia);
        }
        for (; ib != b.terms_.end(); ++ib) {
            r.terms_.push_back({ib->monomial, subtract ? Rational(-ib->coefficient) : ib->coefficient});
        }
        return r;
    }

    std::vector<Term> terms_;
};

} // namespace antisym
