#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "stacklab/bivariate.hpp"
#include "stacklab/errors.hpp"
#include "stacklab/genfun.hpp"
#include "stacklab/series.hpp"

namespace stacklab {
namespace {

std::vector<long> as_longs(const PowerSeries& s) {
  std::vector<long> out;
  for (const Integer& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

// Random series with small signed coefficients and a random density.
PowerSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::bernoulli_distribution nonzero(std::uniform_real_distribution<double>(0.1, 1.0)(rng));
  std::vector<Integer> c(order + 1);
  for (auto& x : c) x = nonzero(rng) ? coeff(rng) : 0;
  // occasionally huge, to exercise multi-limb arithmetic
  if (order > 0 && nonzero(rng)) c[order / 2] = Integer("123456789012345678901234567890") * coeff(rng);
  return PowerSeries(order, std::move(c));
}

PowerSeries random_unit(std::mt19937_64& rng, std::size_t order) {
  std::vector<Integer> c(random_series(rng, order).release());
  c[0] = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  return PowerSeries(order, std::move(c));
}

PowerSeries q_poch_inf(std::size_t order) { return pochhammer(PochhammerBase::Positive, 1, kInfinite, 1, order); }

TEST(PowerSeries, ConstructionChecksLength) {
  EXPECT_THROW(PowerSeries(3, std::vector<Integer>(3)), UsageError);
  EXPECT_EQ(PowerSeries(3).coeffs().size(), 4u);
  EXPECT_TRUE(PowerSeries(5).is_zero());
  EXPECT_THROW((void)PowerSeries(2).at(3), UsageError);
}

TEST(PowerSeries, TruncateShiftDilate) {
  const PowerSeries a = PowerSeries::from_list(5, {1, 2, 3});
  EXPECT_EQ(as_longs(a.truncated(1)), (std::vector<long>{1, 2}));
  EXPECT_THROW((void)a.truncated(6), UsageError);
  EXPECT_EQ(as_longs(a.shifted(2)), (std::vector<long>{0, 0, 1, 2, 3, 0}));
  EXPECT_EQ(as_longs(a.dilated(2)), (std::vector<long>{1, 0, 2, 0, 3, 0}));
}

TEST(PsMul, DifferenceOfSquares) {
  const PowerSeries a = PowerSeries::from_list(2, {1, 1});
  const PowerSeries b = PowerSeries::from_list(2, {1, -1});
  EXPECT_EQ(as_longs(ps_mul(a, b)), (std::vector<long>{1, 0, -1}));
}

TEST(PsMul, PartitionsTimesEulerFunctionIsOne) {
  const PowerSeries p = ps_inverse(q_poch_inf(50));
  EXPECT_EQ(ps_mul(p, q_poch_inf(50)), PowerSeries::one(50));
}

TEST(PsMul, SquareOfPartitionSeries) {
  const auto p = oracle::partition_numbers(5);
  const PowerSeries ps(5, std::vector<Integer>(p.begin(), p.end()));
  EXPECT_EQ(as_longs(ps_mul(ps, ps)), (std::vector<long>{1, 2, 5, 10, 20, 36}));
}

TEST(PsMul, OrderMismatchIsUsageError) {
  EXPECT_THROW(ps_mul(PowerSeries(3), PowerSeries(4)), UsageError);
}

TEST(PsMul, MatchesNaiveInt64Product) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t order = 1 + rng() % 40;
    oracle::Poly a(order + 1), b(order + 1);
    std::vector<Integer> ca, cb;
    for (std::size_t i = 0; i <= order; ++i) {
      a[i] = static_cast<long>(rng() % 201) - 100;
      b[i] = static_cast<long>(rng() % 201) - 100;
      ca.emplace_back(static_cast<long>(a[i]));
      cb.emplace_back(static_cast<long>(b[i]));
    }
    const oracle::Poly expected = oracle::poly_mul(a, b);
    const PowerSeries got = ps_mul(PowerSeries(order, ca), PowerSeries(order, cb));
    for (std::size_t i = 0; i <= order; ++i) ASSERT_EQ(got[i].get_si(), expected[i]) << "trial " << trial;
  }
}

TEST(PsInverse, GeometricSeries) {
  EXPECT_EQ(as_longs(ps_inverse(PowerSeries::from_list(4, {1, -1}))), (std::vector<long>{1, 1, 1, 1, 1}));
}

TEST(PsInverse, EulerFunctionGivesPartitionNumbers) {
  EXPECT_EQ(as_longs(ps_inverse(q_poch_inf(5))), (std::vector<long>{1, 1, 2, 3, 5, 7}));
}

TEST(PsInverse, OneIsItsOwnInverse) {
  for (std::size_t n : {0u, 1u, 17u}) EXPECT_EQ(ps_inverse(PowerSeries::one(n)), PowerSeries::one(n));
}

TEST(PsInverse, NonUnitConstantTermIsDomainError) {
  EXPECT_THROW(ps_inverse(PowerSeries::from_list(3, {2, 1})), DomainError);
  EXPECT_THROW(ps_inverse(PowerSeries::from_list(3, {0, 1})), DomainError);
}

TEST(PsInverse, NegativeUnit) {
  const PowerSeries a = PowerSeries::from_list(6, {-1, 3, 0, 2});
  EXPECT_EQ(ps_mul(a, ps_inverse(a)), PowerSeries::one(6));
}

TEST(Pochhammer, FiniteProducts) {
  EXPECT_EQ(as_longs(pochhammer(PochhammerBase::Positive, 1, 2, 1, 3)), (std::vector<long>{1, -1, -1, 1}));
  EXPECT_EQ(as_longs(pochhammer(PochhammerBase::Negative, 1, 1, 1, 2)), (std::vector<long>{1, 1, 0}));
  EXPECT_EQ(pochhammer(PochhammerBase::Positive, 3, 0, 2, 5), PowerSeries::one(5));
}

TEST(Pochhammer, PentagonalNumberTheorem) {
  EXPECT_EQ(as_longs(q_poch_inf(6)), (std::vector<long>{1, -1, -1, 0, 0, 1, 0}));
  // sum_k (-1)^k q^{k(3k-1)/2} over all integers k
  const std::size_t order = 300;
  std::vector<Integer> expected(order + 1);
  for (long k = -20; k <= 20; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e <= static_cast<long>(order)) expected[e] += (k % 2 == 0) ? 1 : -1;
  }
  EXPECT_EQ(q_poch_inf(order), PowerSeries(order, expected));
}

TEST(Pochhammer, Errors) {
  EXPECT_THROW(pochhammer(PochhammerBase::Positive, 0, kInfinite, 1, 4), DomainError);
  EXPECT_THROW(pochhammer(PochhammerBase::Positive, 0, 3, 1, 4), DomainError);
  EXPECT_THROW(pochhammer(PochhammerBase::Positive, 1, 3, 0, 4), UsageError);
  EXPECT_EQ(pochhammer(PochhammerBase::Positive, 0, 0, 1, 4), PowerSeries::one(4));
  // (-1; q)_1 = 2
  EXPECT_EQ(as_longs(pochhammer(PochhammerBase::Negative, 0, 1, 1, 2)), (std::vector<long>{2, 0, 0}));
}

TEST(Pochhammer, MatchesNaiveProducts) {
  const std::size_t len = 40;
  for (std::size_t offset = 1; offset <= 3; ++offset) {
    for (std::size_t step = 1; step <= 3; ++step) {
      for (int sign : {-1, 1}) {
        oracle::Poly expected = oracle::binomial(len, 0, 0);
        for (std::size_t e = offset; e < len; e += step) expected = oracle::poly_mul(expected, oracle::binomial(len, e, sign));
        const auto base = sign < 0 ? PochhammerBase::Positive : PochhammerBase::Negative;
        const PowerSeries got = pochhammer(base, offset, kInfinite, step, len - 1);
        for (std::size_t i = 0; i < len; ++i) ASSERT_EQ(got[i].get_si(), expected[i]);
      }
    }
  }
}

TEST(PsCumsum, Examples) {
  EXPECT_EQ(as_longs(ps_cumsum(PowerSeries::from_list(3, {1}))), (std::vector<long>{1, 1, 1, 1}));
  EXPECT_EQ(as_longs(ps_cumsum(PowerSeries::from_list(6, {0, 1, 1, 2, 3, 5, 9}))),
            (std::vector<long>{0, 1, 2, 4, 7, 12, 21}));
  EXPECT_EQ(as_longs(ps_cumsum(PowerSeries::from_list(1, {0, -1}))), (std::vector<long>{0, -1}));
}

TEST(PsCumsum, IsMultiplicationByGeometricSeries) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries a = random_series(rng, rng() % 30);
    const PowerSeries geo = ps_inverse(PowerSeries::from_list(a.order(), {1, -1}));
    EXPECT_EQ(ps_cumsum(a), ps_mul(a, geo));
  }
}

TEST(RingProperty, AssociativeCommutativeDistributive) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t order = rng() % 35;
    const PowerSeries a = random_series(rng, order);
    const PowerSeries b = random_series(rng, order);
    const PowerSeries c = random_series(rng, order);
    ASSERT_EQ(ps_mul(a, b), ps_mul(b, a));
    ASSERT_EQ(ps_mul(ps_mul(a, b), c), ps_mul(a, ps_mul(b, c)));
    ASSERT_EQ(ps_mul(a, b + c), ps_mul(a, b) + ps_mul(a, c));
    ASSERT_EQ(a + b - b, a);
    ASSERT_EQ(ps_mul(a, PowerSeries::one(order)), a);
  }
}

TEST(RingProperty, InverseIsTwoSided) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t order = rng() % 40;
    const PowerSeries a = random_unit(rng, order);
    const PowerSeries b = ps_inverse(a);
    ASSERT_EQ(ps_mul(a, b), PowerSeries::one(order));
    ASSERT_EQ(ps_mul(b, a), PowerSeries::one(order));
    ASSERT_EQ(ps_inverse(b), a);
  }
}

TEST(RingProperty, EulerFunctionInversePair) {
  for (std::size_t n : {0u, 1u, 10u, 200u}) {
    EXPECT_EQ(ps_mul(q_poch_inf(n), ps_inverse(q_poch_inf(n))), PowerSeries::one(n));
  }
}

TEST(RingProperty, EulerOddDistinctIdentity) {
  // (-q; q)_inf (q; q^2)_inf = 1
  for (std::size_t n : {0u, 5u, 100u, 400u}) {
    const PowerSeries distinct = pochhammer(PochhammerBase::Negative, 1, kInfinite, 1, n);
    const PowerSeries odd = pochhammer(PochhammerBase::Positive, 1, kInfinite, 2, n);
    EXPECT_EQ(ps_mul(distinct, odd), PowerSeries::one(n)) << "order " << n;
  }
}

TEST(Json, RoundTripsHugeCoefficients) {
  const PowerSeries p = series(Variant::P, 400);
  const nlohmann::json j = to_json(p);
  EXPECT_EQ(j.at("order"), 400);
  EXPECT_TRUE(j.at("coeffs").at(400).is_string());
  EXPECT_EQ(power_series_from_json(j), p);
  EXPECT_EQ(power_series_from_json(nlohmann::json::parse(j.dump())), p);
}

TEST(Json, MalformedInputIsUsageError) {
  EXPECT_THROW(power_series_from_json(nlohmann::json{{"order", 2}, {"coeffs", {"1", "2"}}}), UsageError);
  EXPECT_THROW(power_series_from_json(nlohmann::json{{"order", 1}, {"coeffs", {"1", "x"}}}), UsageError);
  EXPECT_THROW(power_series_from_json(nlohmann::json{{"coeffs", {"1"}}}), UsageError);
  EXPECT_THROW(power_series_from_json(nlohmann::json::array()), UsageError);
}

TEST(Bivariate, WindowMustContainZero) {
  EXPECT_THROW(BivariateSeries({1, 3}, 4), UsageError);
  EXPECT_THROW(BivariateSeries({-3, -1}, 4), UsageError);
  const BivariateSeries b({-2, 2}, 4);
  EXPECT_THROW((void)b.at(3), UsageError);
}

TEST(Bivariate, SufficientWindow) {
  EXPECT_EQ(sufficient_window(10), (XWindow{-7, 8}));
  EXPECT_EQ(sufficient_window(0), (XWindow{-2, 3}));
  EXPECT_EQ(sufficient_window(500), (XWindow{-34, 35}));
}

TEST(Bivariate, ConstantTermOfPureSlice) {
  const PowerSeries s = PowerSeries::from_list(6, {3, 1, 4, 1, 5});
  EXPECT_EQ(constant_term_x(BivariateSeries::monomial({-1, 1}, 6, 0, s)), s);
}

TEST(Bivariate, ProductDropsOutsideWindow) {
  const XWindow w{-1, 1};
  const PowerSeries one = PowerSeries::one(3);
  const BivariateSeries x = BivariateSeries::monomial(w, 3, 1, one);
  const BivariateSeries x2 = x * x;
  EXPECT_TRUE(constant_term_x(x2).is_zero());
  EXPECT_TRUE(x2.at(1).is_zero());
  const BivariateSeries inv = BivariateSeries::monomial(w, 3, -1, one);
  EXPECT_EQ(constant_term_x(x * inv), one);
}

TEST(Bivariate, ConstantTermGivesShiftedStacks) {
  const std::size_t order = 10;
  const XWindow w = sufficient_window(order);
  const BivariateSeries base = neg_inverse_x_product(w, order) * xq_product_inverse(w, order);
  const BivariateSeries qx = BivariateSeries::monomial(w, order, 1, PowerSeries::monomial(order, 1));
  EXPECT_EQ(constant_term_x(qx * base), series(Variant::H, order) - PowerSeries::one(order));
  EXPECT_EQ(constant_term_x(base), series(Variant::HS, order));
}

TEST(Bivariate, ConstantTermIndependentOfWindow) {
  for (std::size_t order : {5u, 30u, 120u}) {
    const XWindow small = sufficient_window(order);
    const XWindow big{small.x_min - 6, small.x_max + 9};
    const auto term = [order](XWindow w) {
      return constant_term_x(neg_inverse_x_product(w, order) * xq_product_inverse(w, order));
    };
    EXPECT_EQ(term(small), term(big)) << "order " << order;
  }
}

TEST(Bivariate, ExpansionsMatchDefiningProducts) {
  // x = 1 specialisation: (-1; q)_inf = sum_r q^{r(r-1)/2}/(q)_r, 1/(q; q)_inf = sum_m q^m/(q)_m
  const std::size_t order = 60;
  const XWindow w{-20, 60};
  const auto sum_slices = [&](const BivariateSeries& b) {
    PowerSeries total(order);
    for (int k = w.x_min; k <= w.x_max; ++k) total += b.at(k);
    return total;
  };
  EXPECT_EQ(sum_slices(neg_inverse_x_product(w, order)), pochhammer(PochhammerBase::Negative, 0, kInfinite, 1, order));
  EXPECT_EQ(sum_slices(neg_xq_product(w, order)), pochhammer(PochhammerBase::Negative, 1, kInfinite, 1, order));
  EXPECT_EQ(sum_slices(xq_product_inverse(w, order)), ps_inverse(q_poch_inf(order)));
}

}  // namespace
}  // namespace stacklab
