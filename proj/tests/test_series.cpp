#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "qlab/builders.hpp"
#include "qlab/series.hpp"

using namespace qlab;

namespace
{

const IntegerRing Z;

Series<IntegerRing> zs(std::initializer_list<long> v)
{
    return Series<IntegerRing>::from_ints(Z, v);
}

Series<ModRing> ms(std::uint32_t m, std::initializer_list<long> v)
{
    return Series<ModRing>::from_ints(ModRing(m), v);
}

Series<IntegerRing> from_dense(const brute::Dense &d)
{
    return Series<IntegerRing>(Z, std::vector<Integer>(d.begin(), d.end()));
}

// Random series with small coefficients and a unit constant term.
Series<IntegerRing> random_unit_series(std::mt19937 &rng, std::size_t order)
{
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<Integer> c(order);
    for (auto &x : c) {
        x = coeff(rng);
    }
    c[0] = (rng() % 2) ? 1 : -1;
    return Series<IntegerRing>(Z, std::move(c));
}

} // namespace

TEST(ModRing, RejectsSmallModulus)
{
    EXPECT_THROW(ModRing(1), std::invalid_argument);
    EXPECT_THROW(ModRing(0), std::invalid_argument);
    EXPECT_NO_THROW(ModRing(2));
}

TEST(ModRing, CanonicalResidues)
{
    const ModRing r(3);
    EXPECT_EQ(r.from_int(-1), 2u);
    EXPECT_EQ(r.from_int(4), 1u);
    EXPECT_EQ(r.from_integer(Integer(-7)), 2u);
    EXPECT_EQ(r.inverse(2), 2u);
    EXPECT_EQ(ModRing(10).inverse(3), 7u);
    EXPECT_THROW(ModRing(9).inverse(3), std::domain_error);
}

TEST(SeriesAdd, TruncatesToShorterOperand)
{
    EXPECT_EQ(add(zs({1, 2, 3}), zs({0, 1})), zs({1, 3}));
    const auto s = zs({4, 5, 6, 7});
    EXPECT_EQ(add(s, zero(Z, 3)), truncate(s, 3));
    EXPECT_EQ(add(ms(3, {2, 2}), ms(3, {2, 1})), ms(3, {1, 0}));
}

TEST(SeriesAdd, RingMismatchThrows)
{
    EXPECT_THROW(add(ms(3, {1}), ms(5, {1})), std::invalid_argument);
    EXPECT_THROW(mul(ms(3, {1}), ms(5, {1})), std::invalid_argument);
    EXPECT_THROW(divide(ms(3, {1}), ms(5, {1})), std::invalid_argument);
}

TEST(SeriesMul, Telescoping)
{
    const auto one_minus_q = zs({1, -1, 0, 0, 0});
    const auto geometric = zs({1, 1, 1, 1, 1});
    EXPECT_EQ(mul(one_minus_q, geometric), zs({1, 0, 0, 0, 0}));
}

TEST(SeriesMul, F1TimesInverseIsOne)
{
    const auto f1 = pochhammer(1, Z, 100);
    EXPECT_EQ(mul(f1, invert(f1)), one(Z, 100));
}

TEST(SeriesMul, F1SquaredMatchesBruteForce)
{
    const auto brute = brute::dense_mul(brute::brute_pochhammer(1, 6), brute::brute_pochhammer(1, 6));
    const auto f1 = pochhammer(1, Z, 6);
    EXPECT_EQ(mul(f1, f1), from_dense(brute));
    EXPECT_EQ(mul(f1, f1), zs({1, -2, -1, 2, 1, 2}));
}

TEST(SeriesMul, SparseAndDenseAgree)
{
    std::mt19937 rng(7);
    const std::size_t n = 300;
    const auto dense = random_unit_series(rng, n);
    const auto sparse = pochhammer(2, Z, n);
    const auto expected = brute::dense_mul(std::vector<Integer>(dense.coeffs().begin(), dense.coeffs().end()),
                                             std::vector<Integer>(sparse.coeffs().begin(), sparse.coeffs().end()));
    EXPECT_EQ(mul(dense, sparse), from_dense(expected));
    EXPECT_EQ(mul(sparse, dense), from_dense(expected));
}

TEST(SeriesInvert, GeometricSeries)
{
    EXPECT_EQ(invert(zs({1, -1, 0, 0})), zs({1, 1, 1, 1}));
}

TEST(SeriesInvert, InverseOfF4IsPartitionsInQ4)
{
    const auto p = brute::partition_numbers(4);
    const auto inv = invert(pochhammer(4, Z, 16));
    for (std::size_t n = 0; n < 16; ++n) {
        if (n % 4 == 0) {
            EXPECT_EQ(inv[n], p[n / 4]) << "n=" << n;
        } else {
            EXPECT_EQ(inv[n], 0) << "n=" << n;
        }
    }
    EXPECT_EQ(inv[0], 1);
    EXPECT_EQ(inv[4], 1);
    EXPECT_EQ(inv[8], 2);
    EXPECT_EQ(inv[12], 3);
}

TEST(SeriesInvert, SelfInverseUnitModThree)
{
    EXPECT_EQ(invert(ms(3, {2, 0, 0})), ms(3, {2, 0, 0}));
}

TEST(SeriesInvert, NonUnitConstantTermNamesTheValue)
{
    try {
        invert(zs({2, 1}));
        FAIL() << "expected domain_error";
    } catch (const std::domain_error &e) {
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    }
    EXPECT_THROW(invert(ms(3, {0, 1})), std::domain_error);
    EXPECT_THROW(invert(ms(6, {3, 1})), std::domain_error);
}

TEST(SeriesPow, SmallCases)
{
    const auto s = zs({3, 1, 4, 1, 5});
    EXPECT_EQ(pow(s, 0), one(Z, 5));
    EXPECT_EQ(pow(zs({1, 1, 0, 0, 0}), 2), zs({1, 2, 1, 0, 0}));
}

TEST(SeriesPow, F1CubedIsJacobi)
{
    const std::size_t n = 40;
    const auto brute = brute::brute_pochhammer(1, n);
    const auto cube = brute::dense_mul(brute::dense_mul(brute, brute), brute);
    const auto got = pow(pochhammer(1, Z, n), 3);
    EXPECT_EQ(got, from_dense(cube));
    // sum (-1)^k (2k+1) q^{k(k+1)/2}
    for (long k = 0; k * (k + 1) / 2 < static_cast<long>(n); ++k) {
        EXPECT_EQ(got[static_cast<std::size_t>(k * (k + 1) / 2)], (k % 2 ? -1 : 1) * (2 * k + 1));
    }
    EXPECT_EQ(truncate(got, 7), zs({1, -3, 0, 5, 0, 0, -7}));
}

TEST(SeriesShift, Basics)
{
    EXPECT_EQ(shift(zs({1, 2, 3}), 1), zs({0, 1, 2}));
    EXPECT_EQ(shift(zs({1, 2, 3}), 0), zs({1, 2, 3}));
    EXPECT_EQ(shift(zs({1, 1, 1}), 3), zs({0, 0, 0}));
    EXPECT_EQ(shift(zs({1, 1, 1}), 7), zs({0, 0, 0}));
}

TEST(SeriesReduceMod, Basics)
{
    EXPECT_EQ(reduce_mod(zs({4, -1, 3}), 3), ms(3, {1, 2, 0}));
    EXPECT_TRUE(reduce_mod(zero(Z, 10), 3).is_zero());
    EXPECT_EQ(reduce_mod(zero(Z, 10), 3).order(), 10u);
}

TEST(SeriesReduceMod, ExactAndNativeAgreeOnASeries)
{
    const std::size_t n = 3000;
    EXPECT_EQ(reduce_mod(a_series(Z, n), 3), a_series(ModRing(3), n));
    EXPECT_EQ(reduce_mod(a_series(Z, n), 7), a_series(ModRing(7), n));
}

TEST(SeriesProperties, InverseRoundTrip)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        const auto a = random_unit_series(rng, n);
        EXPECT_EQ(mul(a, invert(a)), one(Z, n)) << "trial " << trial;
    }
}

TEST(SeriesProperties, RingAxiomsUpToTruncation)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_unit_series(rng, 1 + rng() % 30);
        const auto b = random_unit_series(rng, 1 + rng() % 30);
        const auto c = random_unit_series(rng, 1 + rng() % 30);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(SeriesProperties, ReduceModIsHomomorphism)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t m = 2 + rng() % 10;
        const auto a = random_unit_series(rng, 1 + rng() % 30);
        const auto b = random_unit_series(rng, 1 + rng() % 30);
        EXPECT_EQ(reduce_mod(a * b, m), reduce_mod(a, m) * reduce_mod(b, m));
        EXPECT_EQ(reduce_mod(a + b, m), reduce_mod(a, m) + reduce_mod(b, m));
    }
}

TEST(SeriesProperties, PowExponentsAdd)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> e(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_unit_series(rng, 1 + rng() % 25);
        const long e1 = e(rng);
        const long e2 = e(rng);
        EXPECT_EQ(pow(a, e1 + e2), mul(pow(a, e1), pow(a, e2))) << e1 << " " << e2;
    }
}

TEST(SeriesProperties, ModRingInverseRoundTrip)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const ModRing ring(3);
        const std::size_t n = 1 + rng() % 50;
        std::vector<std::uint32_t> c(n);
        for (auto &x : c) {
            x = rng() % 3;
        }
        c[0] = 1 + rng() % 2;
        const Series<ModRing> a(ring, c);
        EXPECT_EQ(mul(a, invert(a)), one(ring, n));
    }
}
