#include "hfpt/coeffsets.hpp"

#include <algorithm>
#include <set>

#include "hfpt/errors.hpp"

namespace hfpt {

namespace {

const Rational kZero{0};
const Rational kOne{1};

void require_cutoff(const Rational& cutoff) {
  if (cutoff < kZero || cutoff >= kOne) {
    throw DomainError("cutoff " + cutoff.to_string() + " must lie in [0,1); the slice would be infinite");
  }
}

// Largest m >= 1 with (m-1+f)/m < bound, i.e. m < (1-f)/(1-bound); 0 when none.
mpz_class largest_index_below(const Rational& f, const Rational& bound) {
  const Rational limit = (kOne - f) / (kOne - bound);
  mpz_class m = limit.ceil() - 1;
  return m < 1 ? mpz_class(0) : m;
}

}  // namespace

CoeffSetSpec::CoeffSetSpec(std::vector<Rational> elements) : elements_(std::move(elements)) {
  sort_unique(elements_);
  for (const auto& e : elements_) {
    if (e <= kZero || e >= kOne) {
      throw DomainError("coefficient " + e.to_string() + " is not in the open interval (0,1)");
    }
  }
}

PlusClosure plus_closure(const CoeffSetSpec& set) {
  // Breadth-first over sums; every summand is >= min(I) so depth is bounded by 1/min(I).
  std::set<Rational> seen{kZero};
  std::vector<Rational> frontier{kZero};
  while (!frontier.empty()) {
    std::vector<Rational> next;
    for (const auto& s : frontier) {
      for (const auto& i : set.elements()) {
        Rational t = s + i;
        if (t > kOne) break;
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return PlusClosure{{seen.begin(), seen.end()}};
}

DsetSlice dset_below(const CoeffSetSpec& set, const Rational& cutoff) {
  require_cutoff(cutoff);
  std::vector<Rational> out;
  for (const auto& f : plus_closure(set).elements) {
    if (f >= kOne) continue;
    const mpz_class top = largest_index_below(f, cutoff);
    for (mpz_class m = 1; m <= top; ++m) {
      out.push_back((Rational(m, mpz_class(1)) - kOne + f) / Rational(m, mpz_class(1)));
    }
  }
  sort_unique(out);
  return DsetSlice{set, cutoff, std::move(out)};
}

std::optional<Rational> largest_below(const CoeffSetSpec& set, const Rational& bound, const Rational& floor) {
  if (bound >= kOne) throw DomainError("bound " + bound.to_string() + " must be < 1");
  if (floor > bound) throw DomainError("floor " + floor.to_string() + " exceeds bound " + bound.to_string());
  if (bound <= kZero) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& f : plus_closure(set).elements) {
    if (f >= kOne) continue;
    const mpz_class m = largest_index_below(f, bound);
    if (m == 0) continue;
    const Rational mm(m, mpz_class(1));
    Rational v = (mm - kOne + f) / mm;
    if (!best || v > *best) best = std::move(v);
  }
  if (best && *best < floor) return std::nullopt;
  return best;
}

Rational min_positive(const CoeffSetSpec& set) {
  const Rational half{1, 2};
  if (set.empty()) return half;
  return std::min(set.elements().front(), half);
}

bool dset_contains(const CoeffSetSpec& set, const Rational& value) {
  if (value < kZero || value > kOne) return false;
  const auto closure = plus_closure(set).elements;
  auto in_closure = [&](const Rational& f) { return std::binary_search(closure.begin(), closure.end(), f); };
  // (m-1+f)/m == 1 forces f == 1 for every m.
  if (value == kOne) return in_closure(kOne);
  // f = 1 - m(1-v) must stay >= 0, so m <= 1/(1-v).
  const mpz_class top = (kOne / (kOne - value)).floor();
  for (mpz_class m = 1; m <= top; ++m) {
    if (in_closure(kOne - Rational(m, mpz_class(1)) * (kOne - value))) return true;
  }
  return false;
}

bool ddi_check(const CoeffSetSpec& set, const Rational& cutoff) {
  require_cutoff(cutoff);
  const DsetSlice inner = dset_below(set, cutoff);
  std::vector<Rational> positive;
  for (const auto& v : inner.elements) {
    if (v.is_positive()) positive.push_back(v);
  }
  const DsetSlice outer = dset_below(CoeffSetSpec(std::move(positive)), cutoff);
  return outer.elements == inner.elements;
}

}  // namespace hfpt
