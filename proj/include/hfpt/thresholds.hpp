#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hfpt/coeffsets.hpp"
#include "hfpt/rational.hpp"
#include "hfpt/slope.hpp"

namespace hfpt {

/// Multiplicities a_1..a_ℓ of distinct lines through the origin; d = Σ a_i.
class MultiplicityProfile {
 public:
  explicit MultiplicityProfile(std::vector<std::int64_t> mults);

  const std::vector<std::int64_t>& mults() const noexcept { return mults_; }
  std::int64_t ell() const noexcept { return static_cast<std::int64_t>(mults_.size()); }
  std::int64_t degree() const noexcept { return degree_; }
  std::int64_t max_mult() const noexcept;
  /// Some line carries at least half of the total degree (2a_i >= d).
  bool is_degenerate() const noexcept { return 2 * max_mult() >= degree_; }

  MultiplicityProfile scaled(std::int64_t k) const;

 private:
  std::vector<std::int64_t> mults_;
  std::int64_t degree_ = 0;
};

/// Rational weights q_i ∈ (0,1] on distinct lines, with slopes optionally attached.
struct WeightedArrangement {
  explicit WeightedArrangement(std::vector<Rational> weights, std::optional<std::vector<Slope>> slopes = std::nullopt);

  std::vector<Rational> weights;
  std::optional<std::vector<Slope>> slopes;
};

Rational lct_line_arrangement(const MultiplicityProfile& profile);

/// 1/a_i when some 2a_i >= d (then fpt = lct = 1/a_i), otherwise nullopt.
std::optional<Rational> fpt_degenerate(const MultiplicityProfile& profile);

/// (2p - ℓ + 2)/(dp). Rejects degenerate profiles and non-prime p.
Rational hara_monsky_lower(const MultiplicityProfile& profile, std::uint64_t p);

/// Λ for the t₀ computation: an explicit finite list, or D(I) for a finite I.
using LambdaSpec = std::variant<std::vector<Rational>, CoeffSetSpec>;

struct T0Report {
  bool vacuous = false;  ///< no λ ∈ Λ lies below any 2/d; any p is admissible
  Rational t0;
  std::int64_t witness_d = 0;
  Rational witness_lambda;
  std::string lambda_source;
};

/// min over d > 2 and λ ∈ Λ with 0 < λ < 2/d of 2/d - λ.
/// Ties go to the smallest d, then the largest λ.
T0Report t0(const LambdaSpec& lambda);

bool klt_weighted(const WeightedArrangement& w);

bool klt_scaled(const MultiplicityProfile& profile, const Rational& lambda);

}  // namespace hfpt
