#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hfpt/frobenius.hpp"
#include "hfpt/rational.hpp"
#include "hfpt/thresholds.hpp"

namespace hfpt {

/// (P¹, Σ q_i P_i) with distinct points P_i.
struct P1Pair {
  explicit P1Pair(std::vector<Rational> coeffs);
  std::vector<Rational> coeffs;
};

struct P1Classification {
  bool log_fano = false;
  bool klt = false;
};

P1Classification classify_p1(const P1Pair& pair);

/// (A¹, Σ c_i · origin) is sharply F-pure iff the total coefficient is at most 1.
bool sharply_fpure_A1(std::span<const Rational> coeffs);

/// Points of P¹ become lines through the origin of the affine cone.
WeightedArrangement cone_transfer(const P1Pair& pair);

enum class Verdict { kStronglyFRegular, kNotKlt, kInconclusive };
enum class Reason { kBoundaryReduction, kDegenerateLemma, kHaraMonskyRule, kOracleEscalation, kNone };

std::string to_string(Verdict v);
std::string to_string(Reason r);

/// lhs <relation> rhs, with both sides exact.
struct Inequality {
  std::string lhs_label;
  Rational lhs;
  std::string relation;
  std::string rhs_label;
  Rational rhs;

  /// Re-evaluates the relation with exact arithmetic.
  bool holds() const;
};

struct Certificate {
  Verdict verdict = Verdict::kInconclusive;
  Reason reason = Reason::kNone;
  std::uint64_t p = 0;
  std::optional<Inequality> decisive;
  std::optional<NuRecord> oracle_record;
  Rational lambda;                   ///< 1/c
  std::vector<std::int64_t> g_mults; ///< B = λ·G
  std::int64_t g_degree = 0;
  std::string note;
};

/// Rule chain: not klt → boundary reduction → degenerate lemma → Hara–Monsky
/// comparison → Frobenius oracle (only when slopes are attached and e_max > 0).
Certificate certify_sfr(const WeightedArrangement& w, std::uint64_t p, int e_max,
                        const OracleConfig& cfg = {});

}  // namespace hfpt
