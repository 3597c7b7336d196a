#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "hfpt/errors.hpp"
#include "hfpt/frobenius.hpp"
#include "test_support.hpp"

using namespace hfpt;
using testing_support::R;

namespace {

std::uint64_t ipow(std::uint64_t p, int e) {
  std::uint64_t q = 1;
  while (e-- > 0) q *= p;
  return q;
}

LineArrangement arrangement(std::uint32_t p, const std::string& slopes, std::vector<std::int64_t> mults) {
  return LineArrangement(p, parse_slope_list(slopes), std::move(mults));
}

std::vector<std::int64_t> oracle_slopes(const LineArrangement& a) {
  std::vector<std::int64_t> out;
  for (const auto& s : a.slopes()) out.push_back(s.is_infinity() ? -1 : static_cast<std::int64_t>(s.value()));
  return out;
}

LineArrangement random_arrangement(std::mt19937_64& rng, std::uint32_t p, int max_mult) {
  std::vector<Slope> pts{Slope::infinity()};
  for (std::uint32_t v = 0; v < p; ++v) pts.push_back(Slope::finite(v));
  std::shuffle(pts.begin(), pts.end(), rng);
  const std::size_t ell = 1 + rng() % pts.size();
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(ell), pts.end());
  std::vector<std::int64_t> m(ell);
  for (auto& a : m) a = 1 + static_cast<std::int64_t>(rng() % max_mult);
  return LineArrangement(p, pts, m);
}

}  // namespace

TEST(LineArrangementValidation, RejectsBadInput) {
  EXPECT_THROW(arrangement(4, "0,1", {1, 1}), DomainError);
  EXPECT_THROW(arrangement(3, "0,3", {1, 1}), DomainError);
  EXPECT_THROW(arrangement(3, "1,1", {1, 1}), DomainError);
  EXPECT_THROW(arrangement(3, "0,1", {1}), DomainError);
  EXPECT_THROW(arrangement(3, "0,1", {1, 0}), DomainError);
}

TEST(Nu, SingleLine) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int e = 1; e <= 3; ++e) {
      EXPECT_EQ(nu(arrangement(p, "0", {1}), e).nu, ipow(p, e) - 1);
    }
  }
}

TEST(Nu, MonomialXCubedY) {
  const auto r = nu(arrangement(3, "0,inf", {3, 1}), 2);
  EXPECT_EQ(r.q, 9u);
  EXPECT_EQ(r.nu, 2u);
}

TEST(Nu, FourLinesOverF3) {
  const auto arr = arrangement(3, "0,1,2,inf", {1, 1, 1, 1});
  EXPECT_EQ(nu(arr, 1).nu, 0u);
  EXPECT_EQ(nu(arr, 2).nu, 2u);
  EXPECT_EQ(nu(arr, 3).nu, 8u);
}

TEST(FptBracket, Examples) {
  const auto b = fpt_bracket(arrangement(3, "0,1,2,inf", {1, 1, 1, 1}), 3);
  EXPECT_EQ(b.lower, R("8/27"));
  EXPECT_EQ(b.upper, R("1/3"));
  EXPECT_TRUE(b.contains(R("1/3")));

  const auto m = fpt_bracket(arrangement(3, "0,inf", {3, 1}), 2);
  EXPECT_EQ(m.lower, R("2/9"));
  EXPECT_EQ(m.upper, R("1/3"));

  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto snc = fpt_bracket(arrangement(p, "0,inf", {1, 1}), 1);
    EXPECT_EQ(snc.lower, Rational(p - 1, p));
    EXPECT_EQ(snc.upper, Rational(1));
  }
}

TEST(SharplyFPure, Examples) {
  const auto snc = sharply_fpure_at(arrangement(5, "0,inf", {1, 1}), R("1"), 1);
  EXPECT_TRUE(snc.witnessed);
  EXPECT_EQ(snc.e, 1);

  const auto at_fpt = sharply_fpure_at(arrangement(3, "0,1,2,inf", {1, 1, 1, 1}), R("1/3"), 3);
  EXPECT_FALSE(at_fpt.witnessed);
  EXPECT_EQ(at_fpt.e, 3);

  const auto mono = sharply_fpure_at(arrangement(2, "0,inf", {3, 1}), R("1/3"), 2);
  EXPECT_TRUE(mono.witnessed);
  EXPECT_EQ(mono.e, 2);
}

TEST(SharplyFPure, RejectsLambdaOutsideUnitInterval) {
  EXPECT_THROW(sharply_fpure_at(arrangement(3, "0", {1}), R("0"), 1), DomainError);
  EXPECT_THROW(sharply_fpure_at(arrangement(3, "0", {1}), R("3/2"), 1), DomainError);
}

TEST(VerifyHmBound, Examples) {
  EXPECT_TRUE(verify_hm_bound(arrangement(3, "0,1,2,inf", {1, 1, 1, 1}), 2));
  EXPECT_TRUE(verify_hm_bound(arrangement(7, "0,1,inf", {1, 1, 1}), 1));
  EXPECT_THROW(verify_hm_bound(arrangement(5, "0", {1}), 1), DomainError);
}

TEST(Budget, ExceedingItReportsTheLimitingQ) {
  OracleConfig cfg;
  cfg.budget = 1000;
  try {
    nu(arrangement(5, "0,1,2", {1, 1, 1}), 4, cfg);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& ex) {
    EXPECT_EQ(ex.limiting_q(), 625u);
  }
  cfg.max_e = 2;
  cfg.budget = 100'000'000;
  EXPECT_THROW(nu(arrangement(5, "0,1,2", {1, 1, 1}), 3, cfg), BudgetExceeded);
}

TEST(Budget, EnvironmentOverride) {
  ::setenv("HFPT_ORACLE_BUDGET", "1234", 1);
  EXPECT_EQ(OracleConfig::from_environment().budget, 1234u);
  ::unsetenv("HFPT_ORACLE_BUDGET");
  EXPECT_EQ(OracleConfig::from_environment().budget, OracleConfig{}.budget);
}

TEST(Nu, MatchesNaiveBivariateExpansion) {
  std::mt19937_64 rng(31);
  OracleConfig cfg;
  cfg.max_e = 6;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int i = 0; i < 25; ++i) {
      const auto arr = random_arrangement(rng, p, 4);
      for (int e = 1; ipow(p, e) <= 81; ++e) {
        const auto q = ipow(p, e);
        EXPECT_EQ(nu(arr, e, cfg).nu, oracle::nu_naive(p, oracle_slopes(arr), arr.mults(), q))
            << "p=" << p << " e=" << e << " degree " << arr.degree();
      }
    }
  }
}

TEST(Nu, ConfigurationsAgree) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    const std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[i % 4];
    const auto arr = random_arrangement(rng, p, 5);
    const int e = p <= 3 ? 5 : 3;
    OracleConfig ref;
    ref.power = fp::PowerMethod::kSquareAndMultiply;
    const auto expected = nu(arr, e, ref).nu;
    for (auto mul : {fp::MulStrategy::kSchoolbook, fp::MulStrategy::kKaratsuba}) {
      OracleConfig cfg;
      cfg.mul = mul;
      EXPECT_EQ(nu(arr, e, cfg).nu, expected);
    }
  }
}

TEST(Nu, NestingThresholdAndPowers) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 120; ++i) {
    const std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[i % 4];
    const auto arr = random_arrangement(rng, p, 4);
    const int emax = p <= 3 ? 4 : 2;
    std::uint64_t prev = 0;
    for (int e = 1; e <= emax; ++e) {
      const auto r = nu(arr, e);
      EXPECT_TRUE(power_outside_frobenius_ideal(arr, r.nu, r.q));
      EXPECT_FALSE(power_outside_frobenius_ideal(arr, r.nu + 1, r.q));
      if (e > 1) {
        EXPECT_LE(p * prev, r.nu);
        EXPECT_LE(r.nu, p * prev + p - 1);
      }
      prev = r.nu;
      for (std::int64_t k = 2; k <= 3; ++k) {
        EXPECT_EQ(nu(arr.power(k), e).nu, r.nu / static_cast<std::uint64_t>(k));
      }
    }
  }
}
