#pragma once

#include <cstdint>
#include <vector>

#include "hfpt/fp_poly.hpp"
#include "hfpt/rational.hpp"
#include "hfpt/slope.hpp"
#include "hfpt/thresholds.hpp"

namespace hfpt {

/// Lines through the origin of A²_{F_p}: slope s is the line x - s·y, slope
/// infinity is y = 0. The associated form is f = ∏ (x - s_i y)^{a_i} · y^{a_∞}.
class LineArrangement {
 public:
  LineArrangement(std::uint32_t p, std::vector<Slope> slopes, std::vector<std::int64_t> mults);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<Slope>& slopes() const noexcept { return slopes_; }
  const std::vector<std::int64_t>& mults() const noexcept { return profile_.mults(); }
  const MultiplicityProfile& profile() const noexcept { return profile_; }
  std::int64_t ell() const noexcept { return profile_.ell(); }
  std::int64_t degree() const noexcept { return profile_.degree(); }

  /// The arrangement of f^k.
  LineArrangement power(std::int64_t k) const;

  friend bool operator==(const LineArrangement& a, const LineArrangement& b) {
    return a.p_ == b.p_ && a.slopes_ == b.slopes_ && a.mults() == b.mults();
  }

 private:
  std::uint32_t p_;
  std::vector<Slope> slopes_;
  MultiplicityProfile profile_;
};

/// Size limits for the oracle. The cost estimate for level e is p·d·q.
struct OracleConfig {
  int max_e = 5;
  std::uint64_t budget = 100'000'000;
  fp::MulStrategy mul = fp::MulStrategy::kSchoolbook;
  fp::PowerMethod power = fp::PowerMethod::kFrobeniusDigits;

  /// Defaults, with `budget` overridden by HFPT_ORACLE_BUDGET when set.
  static OracleConfig from_environment();
};

/// ν_f(q) = max{N : f^N ∉ (x^q, y^q)} at q = p^e.
struct NuRecord {
  int e = 0;
  std::uint64_t q = 0;
  std::uint64_t nu = 0;

  friend bool operator==(const NuRecord&, const NuRecord&) = default;
};

/// fpt(f) ∈ (lower, upper] with lower = ν/q, upper = (ν+1)/q.
struct ThresholdBracket {
  Rational lower;
  Rational upper;
  NuRecord record;

  bool contains(const Rational& t) const { return lower < t && t <= upper; }
};

/// Whether f^N has a monomial outside (x^q, y^q); the predicate ν is the threshold of.
bool power_outside_frobenius_ideal(const LineArrangement& arr, std::uint64_t n, std::uint64_t q,
                                   const OracleConfig& cfg = {});

NuRecord nu(const LineArrangement& arr, int e, const OracleConfig& cfg = {});

ThresholdBracket fpt_bracket(const LineArrangement& arr, int e, const OracleConfig& cfg = {});

struct FPureVerdict {
  bool witnessed = false;  ///< yes(e); otherwise no witness up to e_max (not a proof of failure)
  int e = 0;               ///< the least witnessing level, or e_max when not witnessed
};

/// Looks for e <= e_max with ⌈λ(p^e - 1)⌉ <= ν(p^e). Requires 0 < λ <= 1.
FPureVerdict sharply_fpure_at(const LineArrangement& arr, const Rational& lambda, int e_max,
                              const OracleConfig& cfg = {});

/// (ν+1)/q >= (2p - ℓ + 2)/(dp). Rejects degenerate arrangements.
bool verify_hm_bound(const LineArrangement& arr, int e, const OracleConfig& cfg = {});

}  // namespace hfpt
