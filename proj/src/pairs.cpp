#include "hfpt/pairs.hpp"

#include <algorithm>

#include "hfpt/errors.hpp"

namespace hfpt {

P1Pair::P1Pair(std::vector<Rational> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) throw DomainError("a P1 pair needs at least one point");
  for (const auto& q : coeffs) {
    if (!q.is_positive()) throw DomainError("coefficient " + q.to_string() + " must be positive");
  }
}

P1Classification classify_p1(const P1Pair& pair) {
  P1Classification c;
  c.klt = std::all_of(pair.coeffs.begin(), pair.coeffs.end(), [](const Rational& q) { return q < Rational(1); });
  // deg(-(K + B)) = 2 - Σ q_i
  c.log_fano = c.klt && sum(pair.coeffs) < Rational(2);
  return c;
}

bool sharply_fpure_A1(std::span<const Rational> coeffs) {
  for (const auto& c : coeffs) {
    if (!c.is_positive()) throw DomainError("coefficients must be positive");
  }
  return sum(coeffs) <= Rational(1);
}

WeightedArrangement cone_transfer(const P1Pair& pair) { return WeightedArrangement(pair.coeffs); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kStronglyFRegular:
      return "strongly_F_regular";
    case Verdict::kNotKlt:
      return "not_klt";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::kBoundaryReduction:
      return "boundary_reduction";
    case Reason::kDegenerateLemma:
      return "degenerate_lemma";
    case Reason::kHaraMonskyRule:
      return "hara_monsky_rule";
    case Reason::kOracleEscalation:
      return "oracle_escalation";
    case Reason::kNone:
      return "none";
  }
  return "?";
}

bool Inequality::holds() const {
  if (relation == "<") return lhs < rhs;
  if (relation == "<=") return lhs <= rhs;
  if (relation == ">") return lhs > rhs;
  if (relation == ">=") return lhs >= rhs;
  return false;
}

Certificate certify_sfr(const WeightedArrangement& w, std::uint64_t p, int e_max, const OracleConfig& cfg) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const auto ell = static_cast<std::int64_t>(w.weights.size());
  if (w.slopes && static_cast<std::uint64_t>(ell) > p + 1) {
    throw DomainError("more lines than points of P1(F_p)");
  }

  Certificate cert;
  cert.p = p;
  if (!klt_weighted(w)) {
    cert.verdict = Verdict::kNotKlt;
    cert.note = "some coefficient is >= 1 or the total is >= 2";
    return cert;
  }

  // (a) drop the heaviest line; the others restrict to (A¹, Σ q_i · O).
  const auto heaviest = std::max_element(w.weights.begin(), w.weights.end());
  const Rational others = sum(w.weights) - *heaviest;
  if (others <= Rational(1)) {
    cert.verdict = Verdict::kStronglyFRegular;
    cert.reason = Reason::kBoundaryReduction;
    cert.decisive = Inequality{"sum_{i!=j} q_i", others, "<=", "1", Rational(1)};
    return cert;
  }

  // B = (1/c)·G with c the lcm of the denominators.
  mpz_class c = 1;
  for (const auto& q : w.weights) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), q.denominator().get_mpz_t());
  cert.lambda = Rational(mpz_class(1), c);
  std::vector<std::int64_t> b;
  for (const auto& q : w.weights) b.push_back(to_int64(q.numerator() * (c / q.denominator())));
  const MultiplicityProfile g(b);
  cert.g_mults = b;
  cert.g_degree = g.degree();

  // (b)
  if (g.is_degenerate()) {
    const Rational fpt = *fpt_degenerate(g);
    if (cert.lambda < fpt) {
      cert.verdict = Verdict::kStronglyFRegular;
      cert.reason = Reason::kDegenerateLemma;
      cert.decisive = Inequality{"lambda", cert.lambda, "<", "1/b_max", fpt};
      return cert;
    }
  } else {
    // (c)
    const Rational hm = hara_monsky_lower(g, p);
    if (cert.lambda < hm) {
      cert.verdict = Verdict::kStronglyFRegular;
      cert.reason = Reason::kHaraMonskyRule;
      cert.decisive = Inequality{"lambda", cert.lambda, "<", "(2p-l+2)/(d_G p)", hm};
      return cert;
    }
    cert.decisive = Inequality{"lambda", cert.lambda, ">=", "(2p-l+2)/(d_G p)", hm};
  }

  // (d)
  if (w.slopes && e_max > 0) {
    const LineArrangement arr(static_cast<std::uint32_t>(p), *w.slopes, b);
    for (int e = 1; e <= e_max; ++e) {
      NuRecord r;
      try {
        r = nu(arr, e, cfg);
      } catch (const BudgetExceeded& ex) {
        cert.note = std::string("oracle stopped: ") + ex.what();
        return cert;
      }
      const Rational lower(mpz_class(static_cast<unsigned long>(r.nu)), mpz_class(static_cast<unsigned long>(r.q)));
      cert.oracle_record = r;
      if (lower > cert.lambda) {
        cert.verdict = Verdict::kStronglyFRegular;
        cert.reason = Reason::kOracleEscalation;
        cert.decisive = Inequality{"nu/q", lower, ">", "lambda", cert.lambda};
        return cert;
      }
    }
    cert.note = "oracle found no witness up to e_max";
  } else {
    cert.note = "formula rules do not apply; attach slopes for oracle escalation";
  }
  return cert;
}

}  // namespace hfpt
