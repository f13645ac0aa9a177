#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "qlab/builders.hpp"
#include "qlab/partition_oracle.hpp"

using namespace qlab;

namespace
{

const IntegerRing Z;

Series<IntegerRing> zs(std::initializer_list<long> v)
{
    return Series<IntegerRing>::from_ints(Z, v);
}

Series<IntegerRing> from_dense(const brute::Dense &d)
{
    return Series<IntegerRing>(Z, std::vector<Integer>(d.begin(), d.end()));
}

} // namespace

TEST(Pochhammer, SmallOrders)
{
    EXPECT_EQ(pochhammer(1, Z, 8), from_dense(brute::brute_pochhammer(1, 8)));
    EXPECT_EQ(pochhammer(1, Z, 8), zs({1, -1, -1, 0, 0, 1, 0, 1}));
    EXPECT_EQ(pochhammer(2, Z, 8), zs({1, 0, -1, 0, -1, 0, 0, 0}));
    EXPECT_EQ(pochhammer(7, Z, 1), zs({1}));
    EXPECT_THROW(pochhammer(0, Z, 8), std::invalid_argument);
}

TEST(Pochhammer, MatchesTruncatedProduct)
{
    for (long a : {1, 2, 3, 4}) {
        EXPECT_EQ(pochhammer(a, Z, 300), from_dense(brute::brute_pochhammer(static_cast<std::size_t>(a), 300)))
            << "a=" << a;
    }
}

TEST(Pochhammer, IsSparse)
{
    const auto f = pochhammer(1, Z, 100000);
    // 2 sqrt(2N/3) nonzero terms, give or take
    EXPECT_LE(f.nonzero_count(), 520u);
    EXPECT_GE(f.nonzero_count(), 500u);
}

TEST(EtaQuotient, AIsF1OverF4)
{
    const auto q = eta_quotient(EtaQuotient{}.times_f(1, 1).times_f(4, -1), Z, 9);
    EXPECT_EQ(q, zs({1, -1, -1, 0, 1, 0, -1, 1, 2}));
    const auto brute = brute::dense_mul(brute::brute_pochhammer(1, 200), brute::brute_inverse_pochhammer(4, 200));
    EXPECT_EQ(eta_quotient(EtaQuotient{}.times_f(1, 1).times_f(4, -1), Z, 200), from_dense(brute));
}

TEST(EtaQuotient, TrivialAndReciprocal)
{
    EXPECT_EQ(eta_quotient(EtaQuotient{}, Z, 5), one(Z, 5));
    const auto phi = evaluate("f2^5/(f1^2*f4^2)", Z, 400);
    const auto recip = evaluate("f1^2*f4^2/f2^5", Z, 400);
    EXPECT_EQ(mul(phi, recip), one(Z, 400));
}

TEST(EtaQuotient, MonomialPrefactor)
{
    // -2 q^3 f1 to order 8
    EtaQuotient t;
    t.times_scalar(-2).times_q(3).times_f(1, 1);
    EXPECT_EQ(eta_quotient(t, Z, 8), zs({0, 0, 0, -2, 2, 2, 0, 0}));
    EXPECT_TRUE(eta_quotient(t, Z, 3).is_zero());
}

TEST(EtaQuotient, NegativeExponentMatchesGeometricProduct)
{
    const auto brute = brute::brute_inverse_pochhammer(3, 120);
    EXPECT_EQ(evaluate("f3^-1", Z, 120), from_dense(brute));
    EXPECT_EQ(evaluate("1/f3", Z, 120), from_dense(brute));
}

TEST(Theta, SumForms)
{
    EXPECT_EQ(theta(ThetaKind::PhiPlus, Z, 10), zs({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    EXPECT_EQ(theta(ThetaKind::PsiPlus, Z, 11), zs({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(theta(ThetaKind::PhiMinus, Z, 5), zs({1, -2, 0, 0, 2}));
    EXPECT_EQ(theta(ThetaKind::PsiMinus, Z, 7), zs({1, -1, 0, -1, 0, 0, 1}));
}

TEST(Theta, ProductFormsAgreeToOrder2000)
{
    const std::size_t n = 2000;
    EXPECT_EQ(theta(ThetaKind::PhiMinus, Z, n), evaluate("f1^2/f2", Z, n));
    EXPECT_EQ(theta(ThetaKind::PsiMinus, Z, n), evaluate("f1*f4/f2", Z, n));
    EXPECT_EQ(theta(ThetaKind::PsiPlus, Z, n), evaluate("f2^2/f1", Z, n));
    EXPECT_EQ(theta(ThetaKind::PhiPlus, Z, n), evaluate("f2^5/(f1^2*f4^2)", Z, n));
}

TEST(ASeries, FirstCoefficients)
{
    const auto a = a_series(Z, 9);
    EXPECT_EQ(a, zs({1, -1, -1, 0, 1, 0, -1, 1, 2}));
    EXPECT_EQ(a[0], 1);
    EXPECT_EQ(a[5], 0);
}

TEST(ASeries, RingIndependent)
{
    EXPECT_EQ(reduce_mod(a_series(Z, 5000), 3), a_series(ModRing(3), 5000));
}

TEST(ASeries, ModRingScalesToOrder100000)
{
    const auto a = a_series(ModRing(3), 100000);
    EXPECT_EQ(a.order(), 100000u);
    EXPECT_EQ(a[8], 2u);
}
