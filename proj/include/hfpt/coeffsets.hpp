#pragma once

#include <optional>
#include <vector>

#include "hfpt/rational.hpp"

namespace hfpt {

/// A finite set I of rationals in the open interval (0,1), kept sorted and
/// duplicate-free. Generates the hyperstandard set D(I).
class CoeffSetSpec {
 public:
  CoeffSetSpec() = default;
  /// Sorts and deduplicates; throws DomainError if any element is outside (0,1).
  explicit CoeffSetSpec(std::vector<Rational> elements);

  const std::vector<Rational>& elements() const noexcept { return elements_; }
  bool empty() const noexcept { return elements_.empty(); }

  friend bool operator==(const CoeffSetSpec&, const CoeffSetSpec&) = default;

 private:
  std::vector<Rational> elements_;
};

/// I₊: all nonnegative integer combinations of elements of I lying in [0,1].
/// Always contains 0 (the empty sum).
struct PlusClosure {
  std::vector<Rational> elements;
};

/// D(I) ∩ [0, cutoff), eagerly materialized and sorted.
struct DsetSlice {
  CoeffSetSpec source;
  Rational cutoff;
  std::vector<Rational> elements;
};

PlusClosure plus_closure(const CoeffSetSpec& set);

/// Elements (m-1+f)/m of D(I) strictly below `cutoff`. Requires 0 <= cutoff < 1.
DsetSlice dset_below(const CoeffSetSpec& set, const Rational& cutoff);

/// max(D(I) ∩ [floor, bound)), or nullopt if empty. Requires floor <= bound < 1.
std::optional<Rational> largest_below(const CoeffSetSpec& set, const Rational& bound, const Rational& floor);

/// min(I ∪ {1/2}), which is also the smallest positive element of D(I).
Rational min_positive(const CoeffSetSpec& set);

/// Membership v ∈ D(I) for a single rational.
bool dset_contains(const CoeffSetSpec& set, const Rational& value);

/// Checks D(D(I)) ∩ [0,cutoff) == D(I) ∩ [0,cutoff). Requires 0 <= cutoff < 1.
bool ddi_check(const CoeffSetSpec& set, const Rational& cutoff);

}  // namespace hfpt
