#include "hfpt/effective_bounds.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hfpt/errors.hpp"

namespace hfpt {

namespace {

const Rational kOne{1};
const Rational kTwo{2};

std::vector<Rational> positive_slice(const CoeffSetSpec& set, const Rational& cutoff) {
  std::vector<Rational> out;
  for (auto& v : dset_below(set, cutoff).elements) {
    if (v.is_positive()) out.push_back(std::move(v));
  }
  return out;
}

struct Best {
  Rational total;
  std::vector<Rational> witness;
};

class QSearch {
 public:
  QSearch(const CoeffSetSpec& set, std::vector<SearchTraceEntry>& trace) : set_(set), trace_(trace) {}

  void run(int ell, const std::vector<Rational>& pool) {
    ell_ = ell;
    pool_ = &pool;
    prefix_.clear();
    descend(0, Rational(0));
  }

  const std::optional<Best>& best() const { return best_; }

 private:
  // Chooses the (ℓ-1) smallest coefficients in ascending order.
  void descend(std::size_t from, const Rational& partial) {
    const auto remaining = static_cast<long>(ell_ - 1 - static_cast<int>(prefix_.size()));
    if (remaining == 0) {
      complete(partial);
      return;
    }
    for (std::size_t i = from; i < pool_->size(); ++i) {
      const Rational& v = (*pool_)[i];
      // The rest of the prefix and the last coefficient are all >= v.
      if (partial + v * Rational(remaining + 1) >= kTwo) break;
      prefix_.push_back(v);
      descend(i, partial + v);
      prefix_.pop_back();
    }
  }

  void complete(const Rational& partial) {
    // Dropping the largest coefficient must leave more than 1, so 2 - partial < 1.
    if (partial <= kOne) return;
    const std::optional<Rational> last = largest_below(set_, kTwo - partial, prefix_.back());
    if (!last || !last->is_positive()) return;
    std::vector<Rational> candidate = prefix_;
    candidate.push_back(*last);
    if (!admissible_sum(candidate, set_)) return;
    Rational total = partial + *last;
    trace_.push_back(SearchTraceEntry{ell_, prefix_, *last, total});
    if (!best_ || total > best_->total || (total == best_->total && candidate < best_->witness)) {
      best_ = Best{std::move(total), std::move(candidate)};
    }
  }

  const CoeffSetSpec& set_;
  std::vector<SearchTraceEntry>& trace_;
  int ell_ = 0;
  const std::vector<Rational>* pool_ = nullptr;
  std::vector<Rational> prefix_;
  std::optional<Best> best_;
};

}  // namespace

bool admissible_sum(std::span<const Rational> coeffs, const CoeffSetSpec& set) {
  if (coeffs.empty()) return false;
  for (const auto& c : coeffs) {
    if (!c.is_positive() || c >= kOne || !dset_contains(set, c)) return false;
  }
  const Rational total = sum(coeffs);
  if (total >= kTwo) return false;
  for (const auto& c : coeffs) {
    if (total - c <= kOne) return false;
  }
  return true;
}

QMaxResult q_max(const CoeffSetSpec& set) {
  const Rational eps = min_positive(set);
  const int ell_max = static_cast<int>(to_int64((kTwo / eps).floor()));
  QMaxResult result;
  QSearch search(set, result.trace);
  for (int ell = 3; ell <= ell_max; ++ell) {
    // Sorted q_1 <= ... <= q_ℓ with sum < 2 forces q_{ℓ-1} < 1 - (ℓ-2)ε/2.
    const Rational cutoff = kOne - Rational(ell - 2) * eps / kTwo;
    if (!cutoff.is_positive()) break;
    const std::vector<Rational> pool = positive_slice(set, cutoff);
    search.run(ell, pool);
  }
  if (!search.best()) throw DomainError("the admissible sum set is empty");
  result.q = search.best()->total;
  result.witness = search.best()->witness;
  return result;
}

BoundReport p0(const CoeffSetSpec& set) {
  QMaxResult qm = q_max(set);
  BoundReport report;
  report.set = set;
  report.epsilon = min_positive(set);
  report.q = qm.q;
  report.witness = std::move(qm.witness);
  report.trace = std::move(qm.trace);
  report.p0_exact = ((kOne - report.epsilon) / report.epsilon) * (kOne / (kOne - report.q / kTwo));
  report.p0 = to_int64(report.p0_exact.floor());
  return report;
}

SimpleBound hyperstandard_simple_bound(std::int64_t n) {
  if (n < 3) throw DomainError("n must be at least 3 (n = 1, 2 reduce to standard coefficients)");
  const CoeffSetSpec set({Rational(1, n)});
  SimpleBound out;
  std::optional<Rational> m;
  for (std::int64_t d = 3; d <= 2 * n - 1; ++d) {
    const Rational two_over_d(2, d);
    const std::optional<Rational> lambda = largest_below(set, two_over_d, Rational(0));
    if (!lambda || lambda->is_zero()) {
      throw std::logic_error("no positive element of D({1/n}) below 2/d");
    }
    Rational md = two_over_d - *lambda;
    if (!m || md < *m) m = md;
    out.per_degree.push_back(std::move(md));
  }
  out.m = *m;
  out.bound = to_int64((kOne / out.m).ceil());
  if (out.m != Rational(mpz_class(1), mpz_class(2 * n - 1) * n) || out.bound != 2 * n * n - n) {
    throw std::logic_error("slice minimum " + out.m.to_string() + " disagrees with 1/((2n-1)n)");
  }
  return out;
}

std::vector<Rational> perturbation_violations(const CoeffSetSpec& set, std::int64_t n, const Rational& x) {
  const Rational top(n - 1, n);
  std::vector<Rational> bad;
  for (const auto& a : positive_slice(set, Rational(n, n + 1))) {
    if (a > top) continue;
    for (std::int64_t q = 2; q <= n; ++q) {
      for (std::int64_t p = 1; p < q; ++p) {
        const Rational left = (Rational(p) - x) / (Rational(q) - x);
        if (left < a && a < Rational(p, q)) bad.push_back(a);
      }
    }
  }
  sort_unique(bad);
  return bad;
}

PerturbationReport safe_perturbation(const CoeffSetSpec& set, std::int64_t n) {
  if (n < 2) throw DomainError("N must be at least 2");
  constexpr std::int64_t kMaxK = 1'000'000;
  // a <= (p-x)/(q-x) for a < p/q is x <= (p - aq)/(1 - a).
  std::optional<Rational> x_cap;
  const Rational top(n - 1, n);
  for (const auto& a : positive_slice(set, Rational(n, n + 1))) {
    if (a > top) continue;
    for (std::int64_t q = 2; q <= n; ++q) {
      for (std::int64_t p = 1; p < q; ++p) {
        if (!(a < Rational(p, q))) continue;
        Rational cap = (Rational(p) - a * Rational(q)) / (kOne - a);
        if (!x_cap || cap < *x_cap) x_cap = std::move(cap);
      }
    }
  }
  std::int64_t k = 2;
  if (x_cap) k = std::max<std::int64_t>(2, to_int64((kOne / *x_cap).ceil()));
  if (k > kMaxK) throw DomainError("no admissible x = 1/k with k <= 10^6");
  const Rational x(1, k);
  if (!perturbation_violations(set, n, x).empty()) {
    throw std::logic_error("closed-form perturbation bound failed direct verification");
  }

  PerturbationReport report{n, x, {}};
  for (std::int64_t q = 2; q <= n; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      report.j_set.push_back((Rational(p) - x) / (Rational(q) - x));
      report.j_set.push_back(Rational(p, q));
    }
  }
  sort_unique(report.j_set);
  return report;
}

}  // namespace hfpt
