#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hfpt/coeffsets.hpp"
#include "hfpt/rational.hpp"

namespace hfpt {

/// One prefix visited by the Q-search together with its best completion.
struct SearchTraceEntry {
  int ell = 0;
  std::vector<Rational> prefix;  ///< the ℓ-1 smallest coefficients, ascending
  Rational last;                 ///< largest admissible final coefficient
  Rational total;
};

struct QMaxResult {
  Rational q;
  std::vector<Rational> witness;  ///< ascending
  std::vector<SearchTraceEntry> trace;
};

/// Q = max 𝒮 where 𝒮 is the set of sums Σ q_i < 2 of coefficients q_i ∈ D(I) ∩ (0,1)
/// with Σ_{i≠j} q_i > 1 for every j. Throws DomainError if 𝒮 is empty.
QMaxResult q_max(const CoeffSetSpec& set);

/// Whether `coeffs` are all in D(I) ∩ (0,1), sum below 2, and every
/// (ℓ-1)-subsum exceeds 1; i.e. their sum belongs to 𝒮.
bool admissible_sum(std::span<const Rational> coeffs, const CoeffSetSpec& set);

struct BoundReport {
  CoeffSetSpec set;
  Rational epsilon;
  Rational q;
  std::vector<Rational> witness;
  Rational p0_exact;  ///< ((1-ε)/ε) · 1/(1 - Q/2)
  std::int64_t p0 = 0;
  std::vector<SearchTraceEntry> trace;
};

BoundReport p0(const CoeffSetSpec& set);

struct SimpleBound {
  Rational m;
  std::int64_t bound = 0;              ///< ⌈1/m⌉, equal to 2n² - n
  std::vector<Rational> per_degree;    ///< m_d for d = 3 .. 2n-1
};

/// t₀-style minimum for Λ = D({1/n}) by slice enumeration. Requires n >= 3.
SimpleBound hyperstandard_simple_bound(std::int64_t n);

struct PerturbationReport {
  std::int64_t n = 0;
  Rational x;
  std::vector<Rational> j_set;
};

/// Largest x = 1/k (k >= 2) such that no a ∈ D(I) ∩ (0,1) lies in any
/// ((p-x)/(q-x), p/q), 2 <= q <= N, 1 <= p < q.
PerturbationReport safe_perturbation(const CoeffSetSpec& set, std::int64_t n);

/// Elements of D(I) ∩ (0, (N-1)/N] that fall strictly inside one of the open
/// intervals ((p-x)/(q-x), p/q); empty when x is admissible.
std::vector<Rational> perturbation_violations(const CoeffSetSpec& set, std::int64_t n, const Rational& x);

}  // namespace hfpt
