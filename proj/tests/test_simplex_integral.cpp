#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "antisym/simplex_integral.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace antisym {
namespace {

using testing::c;
using testing::q;
using testing::x;

RationalExponentVector rv(std::vector<Rational> a) { return RationalExponentVector(std::move(a)); }

TEST(RationalExponentVector, Parse) {
    EXPECT_EQ(RationalExponentVector::parse("1/2,3/2").entries(), (std::vector<Rational>{q(1, 2), q(3, 2)}));
    EXPECT_TRUE(RationalExponentVector::parse("1,2").all_integer());
    EXPECT_FALSE(RationalExponentVector::parse("1,4/3").all_integer());
    EXPECT_THROW(RationalExponentVector::parse("0.5"), InvalidArgument);
    EXPECT_THROW(RationalExponentVector::parse("1,-2"), InvalidArgument);
    EXPECT_THROW(RationalExponentVector::parse("1,0/3"), InvalidArgument);
}

TEST(ClosedForm, Examples) {
    EXPECT_EQ(closed_form(rv({1, 2})), q(-1, 6));
    EXPECT_EQ(closed_form(rv({2, 2})), 0);
    EXPECT_EQ(closed_form(rv({1, 2, 3})), q(-1, 180));
    EXPECT_EQ(closed_form(rv({q(1, 2), q(3, 2)})), q(-2, 3));
}

TEST(PermSum, Examples) {
    EXPECT_EQ(perm_sum(rv({5})), q(1, 5));
    EXPECT_EQ(perm_sum(rv({1, 2})), q(-1, 6));
    EXPECT_EQ(perm_sum(rv({1, 2, 3})), oracle::brute_force_suffix_sum({1, 2, 3}));
    EXPECT_EQ(perm_sum(rv({1, 2, 3})), q(-1, 180));
}

TEST(DetPolynomial, Examples) {
    EXPECT_EQ(det_polynomial(rv({1, 2})), x(2) - x(1));
    EXPECT_EQ(det_polynomial(rv({1, 3})), x(2) * x(2) - x(1) * x(1));
    EXPECT_EQ(det_polynomial(rv({1, 2, 3})), (x(2) - x(1)) * (x(3) - x(1)) * (x(3) - x(2)));
    EXPECT_EQ(det_polynomial(rv({1, 2})).to_string("t"), "-t1 + t2");
    EXPECT_THROW(det_polynomial(rv({q(1, 2), 2})), NonIntegerExponent);
}

TEST(NestedSimplexIntegrate, Examples) {
    EXPECT_EQ(nested_simplex_integrate(c(1), 2), q(1, 2));
    EXPECT_EQ(nested_simplex_integrate(x(2) - x(1), 2), q(1, 6));
    const Polynomial vdm = (x(2) - x(1)) * (x(3) - x(1)) * (x(3) - x(2));
    EXPECT_EQ(nested_simplex_integrate(vdm, 3), q(1, 180));
    EXPECT_EQ(q(1, 180), abs(perm_sum(rv({1, 2, 3}))));
    EXPECT_THROW(nested_simplex_integrate(x(3), 2), IndexOutOfRange);
}

TEST(NestedSimplexIntegrate, SimplexVolume) {
    for (unsigned k = 1; k <= 6; ++k) {
        EXPECT_EQ(nested_simplex_integrate(c(1), k), Rational(1) / Permutation::factorial(k));
    }
}

TEST(NestedSimplexIntegrate, MatchesPrefixSumFormulaOnMonomials) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<unsigned> exp(0, 5);
    for (unsigned k = 1; k <= 5; ++k) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<unsigned> e(k);
            Monomial m;
            for (unsigned i = 0; i < k; ++i) {
                e[i] = exp(rng);
                m.set_exponent(i + 1, e[i]);
            }
            EXPECT_EQ(nested_simplex_integrate(Polynomial::monomial(m), k), oracle::simplex_monomial_integral(e));
        }
    }
}

TEST(NestedSimplexIntegrate, ReversalSignAgainstPermSum) {
    for (const std::vector<unsigned>& a : std::vector<std::vector<unsigned>>{{1, 2}, {2, 4}, {3, 1, 2}, {1, 5, 2, 4}}) {
        const std::vector<Rational> ar(a.begin(), a.end());
        const Rational nested = nested_simplex_integrate(det_polynomial(rv(ar)), static_cast<unsigned>(a.size()));
        EXPECT_EQ(nested, oracle::simplex_det_integral(a));
        EXPECT_EQ(nested, reversal_sign(static_cast<unsigned>(a.size())) * perm_sum(rv(ar)));
    }
    EXPECT_EQ(nested_simplex_integrate(det_polynomial(rv({2, 4})), 2), q(1, 24));
}

TEST(IntegralProperties, ClosedFormEqualsPermSumWithRationals) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(1, 20);
    std::uniform_int_distribution<int> den(1, 7);
    for (unsigned k = 1; k <= 5; ++k) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Rational> a;
            for (unsigned i = 0; i < k; ++i) a.emplace_back(num(rng), den(rng));
            EXPECT_EQ(closed_form(rv(a)), perm_sum(rv(a)));
            EXPECT_EQ(perm_sum(rv(a)), oracle::brute_force_suffix_sum(a));
        }
    }
}

TEST(IntegralProperties, AlternationAndHomogeneity) {
    const auto a = rv({q(1, 3), 2, q(5, 2), 4});
    auto swapped = a.entries();
    std::swap(swapped[1], swapped[3]);
    EXPECT_EQ(closed_form(rv(swapped)), -closed_form(a));
    EXPECT_EQ(perm_sum(rv(swapped)), -perm_sum(a));

    const auto ai = rv({1, 3, 4});
    auto si = ai.entries();
    std::swap(si[0], si[1]);
    EXPECT_EQ(det_polynomial(rv(si)), -det_polynomial(ai));

    for (const Rational& lambda : {q(2), q(3, 7), q(5, 2)}) {
        EXPECT_EQ(closed_form(a.scaled(lambda)), closed_form(a) / (lambda * lambda * lambda * lambda));
    }
}

TEST(IntegralProperties, RepeatedEntriesVanish) {
    EXPECT_EQ(perm_sum(rv({2, 2})), 0);
    EXPECT_EQ(perm_sum(rv({1, q(3, 2), q(3, 2)})), 0);
    EXPECT_TRUE(det_polynomial(rv({3, 1, 3})).is_zero());
}

TEST(MonteCarlo, Examples) {
    const auto e12 = mc_estimate(rv({1, 2}), 1000000, 7);
    EXPECT_LE(std::abs(e12.estimate - 1.0 / 6.0), 3 * e12.standard_error);
    const auto e22 = mc_estimate(rv({2, 2}), 100000, 7);
    EXPECT_LE(std::abs(e22.estimate), std::max(3 * e22.standard_error, 1e-12));
    const auto e3 = mc_estimate(rv({3}), 100000, 7);
    EXPECT_LE(std::abs(e3.estimate - 1.0 / 3.0), 3 * e3.standard_error);
}

TEST(MonteCarlo, NormalizationPinnedByVolume) {
    // k = 1, a = (1): constant integrand 1 over [0,1].
    const auto est = mc_estimate(rv({1}), 20000, 1);
    EXPECT_DOUBLE_EQ(est.estimate, 1.0);
    EXPECT_EQ(est.standard_error, 0.0);
}

TEST(MonteCarlo, DeterministicAcrossWorkers) {
    const auto a = rv({1, 3, 4});
    const auto one = mc_estimate(a, 50000, 99, 1);
    const auto many = mc_estimate(a, 50000, 99, 5);
    EXPECT_EQ(one.estimate, many.estimate);
    EXPECT_EQ(one.standard_error, many.standard_error);
    EXPECT_NE(mc_estimate(a, 50000, 100).estimate, one.estimate);
}

TEST(MonteCarlo, EliminationMatchesCofactorExpansion) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<double> m(n * n);
        for (auto& v : m) v = u(rng);
        EXPECT_NEAR(detail::laplace_det(m, n, 0, 0), detail::elimination_det(m, n), 1e-12);
    }
}

TEST(MonteCarlo, LargeKUsesElimination) {
    const auto a = rv({1, 2, 3, 4, 5, 6, 7});
    const double exact = nested_simplex_integrate(det_polynomial(a), 7).convert_to<double>();
    const auto est = mc_estimate(a, 20000, 3);
    EXPECT_LE(std::abs(est.estimate - exact), 4 * est.standard_error);
}

TEST(CrossCheck, Examples) {
    const auto r12 = cross_check(rv({1, 2}), IntegralMethod::all, 100000, 7);
    EXPECT_TRUE(r12.agree);
    EXPECT_EQ(r12.closed_form, q(-1, 6));
    EXPECT_EQ(r12.perm_sum, q(-1, 6));
    EXPECT_EQ(*r12.nested, q(1, 6));
    EXPECT_EQ(r12.sign_factor, -1);
    ASSERT_TRUE(r12.mc.has_value());

    const auto r123 = cross_check(rv({1, 2, 3}), IntegralMethod::nested, 0, 0);
    EXPECT_EQ(r123.closed_form, q(-1, 180));
    EXPECT_EQ(*r123.nested, q(1, 180));
    EXPECT_EQ(r123.sign_factor, -1);
    EXPECT_FALSE(r123.mc.has_value());

    const auto r24 = cross_check(rv({2, 4}), IntegralMethod::nested, 0, 0);
    EXPECT_EQ(r24.perm_sum, q(-1, 24));
    EXPECT_EQ(*r24.nested, q(1, 24));
}

TEST(CrossCheck, RationalExponents) {
    const auto r = cross_check(rv({q(1, 2), q(3, 2)}), IntegralMethod::closed, 0, 0);
    EXPECT_TRUE(r.agree);
    EXPECT_EQ(r.closed_form, q(-2, 3));
    EXPECT_FALSE(r.nested.has_value());
    EXPECT_THROW(cross_check(rv({q(1, 2), 2}), IntegralMethod::nested, 0, 0), NonIntegerExponent);
}

TEST(CrossCheck, MethodNames) {
    EXPECT_EQ(parse_integral_method("perm-sum"), IntegralMethod::perm_sum);
    EXPECT_EQ(to_string(IntegralMethod::mc), "mc");
    EXPECT_THROW(parse_integral_method("simpson"), InvalidArgument);
}

} // namespace
} // namespace antisym
