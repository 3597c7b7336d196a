#include "hfpt/frobenius.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "hfpt/errors.hpp"

namespace hfpt {

namespace {

std::uint64_t checked_q(const LineArrangement& arr, int e, const OracleConfig& cfg) {
  if (e < 1) throw DomainError("Frobenius level e must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > cfg.budget) throw BudgetExceeded("q = p^e overflows the oracle budget", q);
    q *= arr.p();
  }
  if (e > cfg.max_e) {
    throw BudgetExceeded("level e = " + std::to_string(e) + " exceeds the configured maximum " +
                             std::to_string(cfg.max_e),
                         q);
  }
  const auto cost = static_cast<long double>(arr.p()) * static_cast<long double>(arr.degree()) * static_cast<long double>(q);
  if (cost > static_cast<long double>(cfg.budget)) {
    throw BudgetExceeded("estimated cost p*d*q for q = " + std::to_string(q) + " exceeds budget " +
                             std::to_string(cfg.budget),
                         q);
  }
  return q;
}

// Dehomogenization at y = 1: the coefficient of x^u in g^N is that of x^u y^{Nd-u} in f^N.
fp::Poly dehomogenized(const LineArrangement& arr, std::size_t limit, const OracleConfig& cfg) {
  std::vector<std::uint32_t> roots;
  std::vector<std::uint64_t> mults;
  for (std::size_t i = 0; i < arr.slopes().size(); ++i) {
    if (arr.slopes()[i].is_infinity()) continue;
    roots.push_back(arr.slopes()[i].value());
    mults.push_back(static_cast<std::uint64_t>(arr.mults()[i]));
  }
  return fp::from_roots(roots, mults, arr.p(), limit, cfg.mul);
}

bool outside(const fp::Poly& g, std::int64_t d, std::uint32_t p, std::uint64_t n, std::uint64_t q,
             const OracleConfig& cfg) {
  const fp::Poly h = fp::pow_trunc(g, n, p, static_cast<std::size_t>(q), cfg.power, cfg.mul);
  // u must satisfy u < q and Nd - u < q.
  const auto total = static_cast<long double>(n) * static_cast<long double>(d);
  std::uint64_t u0 = 0;
  if (total >= static_cast<long double>(q)) u0 = n * static_cast<std::uint64_t>(d) - q + 1;
  for (std::uint64_t u = u0; u < h.size() && u < q; ++u) {
    if (h[u] != 0) return true;
  }
  return false;
}

}  // namespace

LineArrangement::LineArrangement(std::uint32_t p, std::vector<Slope> slopes, std::vector<std::int64_t> mults)
    : p_(p), slopes_(std::move(slopes)), profile_(std::move(mults)) {
  if (!is_prime(p_)) throw DomainError(std::to_string(p_) + " is not prime");
  if (slopes_.size() != profile_.mults().size()) throw DomainError("slope and multiplicity lists differ in length");
  if (slopes_.size() > static_cast<std::size_t>(p_) + 1) {
    throw DomainError("at most p+1 distinct lines exist over F_" + std::to_string(p_));
  }
  for (const auto& s : slopes_) {
    if (!s.is_infinity() && s.value() >= p_) {
      throw DomainError("slope " + s.to_string() + " is not an element of F_" + std::to_string(p_));
    }
  }
  if (std::set<Slope>(slopes_.begin(), slopes_.end()).size() != slopes_.size()) {
    throw DomainError("slopes must be pairwise distinct");
  }
}

LineArrangement LineArrangement::power(std::int64_t k) const {
  if (k < 1) throw DomainError("power must be positive");
  return LineArrangement(p_, slopes_, profile_.scaled(k).mults());
}

OracleConfig OracleConfig::from_environment() {
  OracleConfig cfg;
  if (const char* env = std::getenv("HFPT_ORACLE_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("HFPT_ORACLE_BUDGET is not an integer: ") + env);
    }
  }
  return cfg;
}

bool power_outside_frobenius_ideal(const LineArrangement& arr, std::uint64_t n, std::uint64_t q,
                                   const OracleConfig& cfg) {
  const fp::Poly g = dehomogenized(arr, static_cast<std::size_t>(q), cfg);
  return outside(g, arr.degree(), arr.p(), n, q, cfg);
}

NuRecord nu(const LineArrangement& arr, int e, const OracleConfig& cfg) {
  const std::uint64_t q = checked_q(arr, e, cfg);
  const auto d = static_cast<std::uint64_t>(arr.degree());
  const fp::Poly g = dehomogenized(arr, static_cast<std::size_t>(q), cfg);
  auto probe = [&](std::uint64_t n) { return outside(g, arr.degree(), arr.p(), n, q, cfg); };

  // Any monomial of f^N with Nd > 2(q-1) has an exponent >= q.
  std::uint64_t lo = 0;
  std::uint64_t hi = 2 * (q - 1) / d;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (probe(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (!probe(lo) || probe(lo + 1)) {
    throw std::logic_error("membership predicate is not monotone at N = " + std::to_string(lo));
  }
  return NuRecord{e, q, lo};
}

ThresholdBracket fpt_bracket(const LineArrangement& arr, int e, const OracleConfig& cfg) {
  const NuRecord r = nu(arr, e, cfg);
  const mpz_class q(static_cast<unsigned long>(r.q));
  return ThresholdBracket{Rational(mpz_class(static_cast<unsigned long>(r.nu)), q),
                          Rational(mpz_class(static_cast<unsigned long>(r.nu + 1)), q), r};
}

FPureVerdict sharply_fpure_at(const LineArrangement& arr, const Rational& lambda, int e_max, const OracleConfig& cfg) {
  if (!lambda.is_positive() || lambda > Rational(1)) throw DomainError("λ must lie in (0,1]");
  if (e_max < 1) throw DomainError("e_max must be positive");
  for (int e = 1; e <= e_max; ++e) {
    const NuRecord r = nu(arr, e, cfg);
    const mpz_class need = (lambda * Rational(mpz_class(static_cast<unsigned long>(r.q - 1)), mpz_class(1))).ceil();
    if (need <= mpz_class(static_cast<unsigned long>(r.nu))) return FPureVerdict{true, e};
  }
  return FPureVerdict{false, e_max};
}

bool verify_hm_bound(const LineArrangement& arr, int e, const OracleConfig& cfg) {
  const Rational bound = hara_monsky_lower(arr.profile(), arr.p());
  return fpt_bracket(arr, e, cfg).upper >= bound;
}

}  // namespace hfpt
