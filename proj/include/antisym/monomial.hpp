#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "antisym/errors.hpp"

namespace antisym {

/// Largest variable index a Monomial can carry (variables are x1..x16).
inline constexpr unsigned kMaxVariables = 16;

/// Power product x1^e1 * ... * x16^e16 with a dense exponent array.
///
/// Ordering is graded lexicographic: higher total degree is greater; ties are
/// broken by the exponent of x1, then x2, and so on. The ordering is
/// multiplicative, so multiplying every monomial of a sorted sequence by the
/// same monomial keeps it sorted.
class Monomial {
  public:
    using Exponent = std::uint16_t;

    Monomial() = default;

    /// Builds from (variable index, exponent) pairs; repeated indices multiply.
    Monomial(std::initializer_list<std::pair<unsigned, unsigned>> powers) {
        for (const auto& [index, exponent] : powers) {
            set_exponent(index, exponent + this->exponent(index));
        }
    }

    static Monomial variable(unsigned index, unsigned exponent = 1) {
        Monomial m;
        m.set_exponent(index, exponent);
        return m;
    }

    /// Exponent of x_index; 0 for any index past the last stored variable.
    unsigned exponent(unsigned index) const {
        check_index(index);
        return exponents_[index - 1];
    }

    void set_exponent(unsigned index, unsigned exponent) {
        check_index(index);
        if (exponent > std::numeric_limits<Exponent>::max()) {
            throw std::overflow_error("monomial exponent overflow");
        }
        degree_ -= exponents_[index - 1];
        exponents_[index - 1] = static_cast<Exponent>(exponent);
        degree_ += exponent;
    }

    unsigned degree() const { return degree_; }

    bool is_one() const { return degree_ == 0; }

    /// Highest variable index with a nonzero exponent, 0 for the constant monomial.
    unsigned max_variable() const {
        for (unsigned i = kMaxVariables; i > 0; --i) {
            if (exponents_[i - 1] != 0) {
                return i;
            }
        }
        return 0;
    }

    const std::array<Exponent, kMaxVariables>& exponents() const { return exponents_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (unsigned i = 0; i < kMaxVariables; ++i) {
            const unsigned e = unsigned{a.exponents_[i]} + b.exponents_[i];
            if (e > std::numeric_limits<Exponent>::max()) {
                throw std::overflow_error("monomial exponent overflow");
            }
            r.exponents_[i] = static_cast<Exponent>(e);
        }
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) {
            return a.degree_ <=> b.degree_;
        }
        return std::lexicographical_compare_three_way(a.exponents_.begin(), a.exponents_.end(),
                                                      b.exponents_.begin(), b.exponents_.end());
    }

    /// "x1^2*x3"; the constant monomial prints as "1".
    std::string to_string(std::string_view var = "x") const {
        if (is_one()) {
            return "1";
        }
        std::string out;
        for (unsigned i = 0; i < kMaxVariables; ++i) {
            if (exponents_[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += '*';
            }
            out += var;
            out += std::to_string(i + 1);
            if (exponents_[i] != 1) {
                out += '^';
                out += std::to_string(exponents_[i]);
            }
        }
        return out;
    }

  private:
    static void check_index(unsigned index) {
        if (index == 0 || index > kMaxVariables) {
            throw IndexOutOfRange("variable index " + std::to_string(index) +
                                  " outside 1.." + std::to_string(kMaxVariables));
        }
    }

    std::array<Exponent, kMaxVariables> exponents_{};
    std::uint32_t degree_ = 0;
};

} // namespace antisym
