// Prints the q -> 1 limit of both sides for every increasing exponent vector
// with entries up to 5, next to the closed-form product.
#include <iostream>
#include <vector>

#include "antisym/antisym.hpp"

int main() {
    using namespace antisym;
    std::vector<std::vector<std::uint64_t>> vectors;
    for (std::uint64_t a = 1; a <= 5; ++a) {
        for (std::uint64_t b = a + 1; b <= 5; ++b) {
            vectors.push_back({a, b});
            for (std::uint64_t c = b + 1; c <= 5; ++c) {
                vectors.push_back({a, b, c});
            }
        }
    }
    for (const auto& entries : vectors) {
        const ExponentVector a(entries);
        std::vector<Rational> as_rational(entries.begin(), entries.end());
        const auto report = check_limit_identity(a);
        std::cout << "a = (";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::cout << (i ? "," : "") << entries[i];
        }
        std::cout << ")  lhs " << to_string(report.lhs) << "  rhs " << to_string(report.rhs) << "  closed "
                  << to_string(closed_form(RationalExponentVector(as_rational))) << "\n";
    }
}
