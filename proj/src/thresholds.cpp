#include "hfpt/thresholds.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hfpt/errors.hpp"

namespace hfpt {

MultiplicityProfile::MultiplicityProfile(std::vector<std::int64_t> mults) : mults_(std::move(mults)) {
  if (mults_.empty()) throw DomainError("a line arrangement needs at least one line");
  for (auto a : mults_) {
    if (a < 1) throw DomainError("multiplicities must be positive");
    degree_ += a;
  }
}

std::int64_t MultiplicityProfile::max_mult() const noexcept { return *std::max_element(mults_.begin(), mults_.end()); }

MultiplicityProfile MultiplicityProfile::scaled(std::int64_t k) const {
  std::vector<std::int64_t> m = mults_;
  for (auto& a : m) a *= k;
  return MultiplicityProfile(std::move(m));
}

WeightedArrangement::WeightedArrangement(std::vector<Rational> w, std::optional<std::vector<Slope>> s)
    : weights(std::move(w)), slopes(std::move(s)) {
  if (weights.empty()) throw DomainError("a weighted arrangement needs at least one line");
  for (const auto& q : weights) {
    if (!q.is_positive() || q > Rational(1)) {
      throw DomainError("weight " + q.to_string() + " is not in (0,1]");
    }
  }
  if (slopes) {
    if (slopes->size() != weights.size()) throw DomainError("slope and weight lists differ in length");
    if (std::set<Slope>(slopes->begin(), slopes->end()).size() != slopes->size()) {
      throw DomainError("slopes must be pairwise distinct");
    }
  }
}

Rational lct_line_arrangement(const MultiplicityProfile& profile) {
  return std::min(Rational(2, profile.degree()), Rational(1, profile.max_mult()));
}

std::optional<Rational> fpt_degenerate(const MultiplicityProfile& profile) {
  if (!profile.is_degenerate()) return std::nullopt;
  return Rational(1, profile.max_mult());
}

Rational hara_monsky_lower(const MultiplicityProfile& profile, std::uint64_t p) {
  if (profile.is_degenerate()) {
    throw DomainError("Hara-Monsky bound needs 2a_i < d for every line; use fpt_degenerate");
  }
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const auto pp = static_cast<long>(p);
  return Rational(mpz_class(2 * pp - profile.ell() + 2), mpz_class(profile.degree()) * pp);
}

namespace {

struct Candidate {
  Rational gap;
  std::int64_t d;
  Rational lambda;
};

// Keeps the smallest gap; ties to smaller d, then larger λ.
void consider(std::optional<Candidate>& best, Candidate c) {
  if (!best || c.gap < best->gap || (c.gap == best->gap && (c.d < best->d || (c.d == best->d && c.lambda > best->lambda)))) {
    best = std::move(c);
  }
}

std::string describe(const LambdaSpec& spec) {
  if (const auto* list = std::get_if<std::vector<Rational>>(&spec)) {
    std::string s = "list{";
    for (std::size_t i = 0; i < list->size(); ++i) s += (i ? "," : "") + (*list)[i].to_string();
    return s + "}";
  }
  const auto& set = std::get<CoeffSetSpec>(spec);
  std::string s = "D({";
  for (std::size_t i = 0; i < set.elements().size(); ++i) s += (i ? "," : "") + set.elements()[i].to_string();
  return s + "})";
}

}  // namespace

T0Report t0(const LambdaSpec& spec) {
  Rational smallest;
  if (const auto* list = std::get_if<std::vector<Rational>>(&spec)) {
    if (list->empty()) throw DomainError("Λ must be nonempty");
    for (const auto& l : *list) {
      if (!l.is_positive() || l > Rational(1)) throw DomainError("Λ element " + l.to_string() + " is not in (0,1]");
    }
    smallest = *std::min_element(list->begin(), list->end());
  } else {
    smallest = min_positive(std::get<CoeffSetSpec>(spec));
  }

  // Only d <= 2/min(Λ) can have some λ below 2/d.
  const std::int64_t d_max = to_int64((Rational(2) / smallest).floor());
  std::optional<Candidate> best;
  for (std::int64_t d = 3; d <= d_max; ++d) {
    const Rational two_over_d(2, d);
    std::optional<Rational> lambda;
    if (const auto* list = std::get_if<std::vector<Rational>>(&spec)) {
      for (const auto& l : *list) {
        if (l < two_over_d && (!lambda || l > *lambda)) lambda = l;
      }
    } else {
      lambda = largest_below(std::get<CoeffSetSpec>(spec), two_over_d, Rational(0));
      if (lambda && lambda->is_zero()) lambda.reset();
    }
    if (lambda) consider(best, Candidate{two_over_d - *lambda, d, *lambda});
  }

  T0Report report;
  report.lambda_source = describe(spec);
  if (!best) {
    report.vacuous = true;
    return report;
  }
  report.t0 = best->gap;
  report.witness_d = best->d;
  report.witness_lambda = best->lambda;
  return report;
}

bool klt_weighted(const WeightedArrangement& w) {
  for (const auto& q : w.weights) {
    if (q >= Rational(1)) return false;
  }
  return sum(w.weights) < Rational(2);
}

bool klt_scaled(const MultiplicityProfile& profile, const Rational& lambda) {
  return lambda < lct_line_arrangement(profile);
}

}  // namespace hfpt
