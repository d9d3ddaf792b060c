#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antisym/errors.hpp"
#include "antisym/factored_rational.hpp"
#include "antisym/parallel.hpp"
#include "antisym/polynomial.hpp"

namespace antisym {

/// Bijection of {1..k} stored as its image sequence (pi(1), ..., pi(k)).
class Permutation {
  public:
    explicit Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (unsigned v : images_) {
            if (v == 0 || v > images_.size() || seen[v]) {
                throw InvalidArgument("image sequence is not a permutation of 1.." +
                                      std::to_string(images_.size()));
            }
            seen[v] = true;
        }
    }

    static Permutation identity(unsigned k) {
        std::vector<unsigned> images(k);
        std::iota(images.begin(), images.end(), 1U);
        return Permutation(std::move(images), Unchecked{});
    }

    /// The index-th permutation of S_k in lexicographic order (index 0 is the identity).
    static Permutation unrank(unsigned k, std::uint64_t index) {
        std::vector<unsigned> pool(k);
        std::iota(pool.begin(), pool.end(), 1U);
        std::vector<unsigned> images;
        images.reserve(k);
        for (unsigned remaining = k; remaining > 0; --remaining) {
            const std::uint64_t block = factorial(remaining - 1);
            const auto pick = static_cast<std::size_t>(index / block);
            if (pick >= pool.size()) {
                throw IndexOutOfRange("permutation rank out of range");
            }
            index %= block;
            images.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        return Permutation(std::move(images), Unchecked{});
    }

    static std::uint64_t factorial(unsigned k) {
        std::uint64_t f = 1;
        for (unsigned i = 2; i <= k; ++i) {
            f *= i;
        }
        return f;
    }

    unsigned size() const { return static_cast<unsigned>(images_.size()); }
    const std::vector<unsigned>& images() const { return images_; }

    /// pi(i), 1-based.
    unsigned operator()(unsigned i) const { return images_.at(i - 1); }

    /// (-1)^(number of inversions)
    int sign() const {
        bool odd = false;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            for (std::size_t j = i + 1; j < images_.size(); ++j) {
                odd ^= images_[i] > images_[j];
            }
        }
        return odd ? -1 : 1;
    }

    Permutation inverse() const {
        std::vector<unsigned> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) {
            inv[images_[i] - 1] = static_cast<unsigned>(i + 1);
        }
        return Permutation(std::move(inv), Unchecked{});
    }

    /// (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) {
            throw LengthMismatch("composing permutations of different degree");
        }
        std::vector<unsigned> images(a.size());
        for (unsigned i = 1; i <= a.size(); ++i) {
            images[i - 1] = a(b(i));
        }
        return Permutation(std::move(images), Unchecked{});
    }

    /// Advances to the lexicographic successor; false after the last one.
    bool next() { return std::next_permutation(images_.begin(), images_.end()); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    /// "2 3 1"
    std::string to_string() const {
        std::string out;
        for (unsigned v : images_) {
            if (!out.empty()) {
                out += ' ';
            }
            out += std::to_string(v);
        }
        return out;
    }

  private:
    struct Unchecked {};
    Permutation(std::vector<unsigned> images, Unchecked) : images_(std::move(images)) {}

    std::vector<unsigned> images_;
};

/// All k! permutations in lexicographic order, identity first.
inline std::vector<Permutation> enumerate(unsigned k) {
    if (k == 0) {
        throw InvalidArgument("permutation degree must be at least 1");
    }
    std::vector<Permutation> all;
    all.reserve(Permutation::factorial(k));
    Permutation p = Permutation::identity(k);
    do {
        all.push_back(p);
    } while (p.next());
    return all;
}

/// Reduces map(pi) over S_k along the lexicographic prefix tree: at every node
/// the children (ordered by the next image) are combined by a left fold. The
/// subtrees below depth two run in parallel; the fold shape never depends on
/// `workers`, so neither does the result.
template <class Map, class Combine>
auto reduce_over_permutations(unsigned k, Map&& map, Combine&& combine, unsigned workers = 0)
    -> decltype(map(std::declval<const Permutation&>())) {
    using T = decltype(map(std::declval<const Permutation&>()));
    if (k == 0) {
        throw InvalidArgument("permutation degree must be at least 1");
    }
    auto subtree = [&](auto&& self, std::vector<unsigned>& prefix, std::uint32_t used) -> T {
        if (prefix.size() == k) {
            return map(Permutation(prefix));
        }
        std::optional<T> acc;
        for (unsigned v = 1; v <= k; ++v) {
            if (used & (std::uint32_t{1} << v)) {
                continue;
            }
            prefix.push_back(v);
            T part = self(self, prefix, used | (std::uint32_t{1} << v));
            prefix.pop_back();
            acc = acc ? combine(*acc, part) : std::move(part);
        }
        return std::move(*acc);
    };

    const unsigned depth = std::min(k, 2U);
    std::vector<std::vector<unsigned>> prefixes;
    {
        std::vector<unsigned> p = Permutation::identity(k).images();
        do {
            std::vector<unsigned> head(p.begin(), p.begin() + depth);
            if (prefixes.empty() || prefixes.back() != head) {
                prefixes.push_back(std::move(head));
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<std::optional<T>> parts(prefixes.size());
    parallel_for(prefixes.size(), workers, [&](std::size_t i) {
        std::vector<unsigned> prefix = prefixes[i];
        std::uint32_t used = 0;
        for (unsigned v : prefix) {
            used |= std::uint32_t{1} << v;
        }
        parts[i] = subtree(subtree, prefix, used);
    });

    if (depth == 1) {
        return std::move(*parts.front());
    }
    // Fold siblings sharing a first image, then fold across first images.
    std::optional<T> total;
    std::size_t i = 0;
    while (i < prefixes.size()) {
        std::optional<T> group;
        const unsigned first = prefixes[i].front();
        for (; i < prefixes.size() && prefixes[i].front() == first; ++i) {
            group = group ? combine(*group, *parts[i]) : std::move(*parts[i]);
        }
        total = total ? combine(*total, *group) : std::move(*group);
    }
    return std::move(*total);
}

/// Substitutes x_i -> x_{pi(i)}; variables must lie within 1..k.
inline Monomial relabel(const Monomial& m, const Permutation& pi) {
    if (m.max_variable() > pi.size()) {
        throw IndexOutOfRange("x" + std::to_string(m.max_variable()) + " outside 1.." + std::to_string(pi.size()));
    }
    Monomial r;
    for (unsigned i = 1; i <= pi.size(); ++i) {
        if (const unsigned e = m.exponent(i); e != 0) {
            r.set_exponent(pi(i), e);
        }
    }
    return r;
}

inline Polynomial relabel(const Polynomial& p, const Permutation& pi) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        terms.push_back({relabel(t.monomial, pi), t.coefficient});
    }
    return Polynomial::from_terms(std::move(terms));
}

/// S -> pi(S)
inline SubsetFactor relabel(const SubsetFactor& f, const Permutation& pi) {
    if (f.max_index() > pi.size()) {
        throw IndexOutOfRange("subset index " + std::to_string(f.max_index()) + " outside 1.." +
                              std::to_string(pi.size()));
    }
    std::uint32_t mask = 0;
    for (unsigned i : f.indices()) {
        mask |= std::uint32_t{1} << (pi(i) - 1);
    }
    return SubsetFactor::from_mask(mask);
}

inline FactoredRational relabel(const FactoredRational& e, const Permutation& pi) {
    Denominator den;
    for (const auto& [factor, m] : e.denominator()) {
        den.emplace(relabel(factor, pi), m);
    }
    return FactoredRational(relabel(e.numerator(), pi), std::move(den));
}

/// sum over pi in S_k of sign(pi) * relabel(e, pi).
inline FactoredRational antisymmetrize(const FactoredRational& e, unsigned k, unsigned workers = 0) {
    if (e.max_variable() > k) {
        throw IndexOutOfRange("expression mentions x" + std::to_string(e.max_variable()) +
                              " but k = " + std::to_string(k));
    }
    return reduce_over_permutations(
        k,
        [&](const Permutation& pi) {
            FactoredRational term = relabel(e, pi);
            return pi.sign() < 0 ? -term : term;
        },
        [](const FactoredRational& a, const FactoredRational& b) { return a + b; }, workers);
}

} // namespace antisym
