// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "hfpt/coeffsets.hpp"
#include "hfpt/effective_bounds.hpp"
#include "hfpt/frobenius.hpp"
#include "hfpt/pairs.hpp"
#include "hfpt/thresholds.hpp"
#include "test_support.hpp"

using namespace hfpt;
using testing_support::I;
using testing_support::R;
using testing_support::Rs;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

Json run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != 0) throw std::runtime_error("hfpt " + args[0] + " exited " + std::to_string(code) + ": " + err.str());
  return Json::parse(out.str());
}

std::uint64_t ipow(std::uint64_t p, int e) {
  std::uint64_t q = 1;
  while (e-- > 0) q *= p;
  return q;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

LineArrangement all_rational_lines(std::uint32_t p) {
  std::vector<Slope> s;
  for (std::uint32_t v = 0; v < p; ++v) s.push_back(Slope::finite(v));
  s.push_back(Slope::infinity());
  return LineArrangement(p, s, std::vector<std::int64_t>(p + 1, 1));
}

std::string witness_text(const Json& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i].get<std::string>();
  return s + "}";
}

// ---------------------------------------------------------------------------

void criterion_p0_standard(Check& c) {
  const Json o = run_cli({"p0", "--set", ""})["outputs"];
  c.expect(o["epsilon"] == "1/2", "epsilon " + o["epsilon"].get<std::string>());
  c.expect(o["Q"] == "59/30", "Q " + o["Q"].get<std::string>());
  c.expect(o["witness"] == Json::parse(R"(["1/2","2/3","4/5"])"), "witness " + witness_text(o["witness"]));
  c.expect(o["p0"] == 30, "p0 = " + o["p0"].dump() + " (p0_exact " + o["p0_exact"].get<std::string>() +
                              "), expected 30");
}

void criterion_p0_third(Check& c) {
  const Json o = run_cli({"p0", "--set", "1/3"})["outputs"];
  c.expect(o["epsilon"] == "1/3", "epsilon " + o["epsilon"].get<std::string>());
  c.expect(o["Q"] == "209/105", "Q = " + o["Q"].get<std::string>() + ", expected 209/105");
  c.expect(o["witness"] == Json::parse(R"(["1/3","4/5","6/7"])"),
           "witness " + witness_text(o["witness"]) + ", expected {1/3, 4/5, 6/7}");
  c.expect(o["p0"] == 420, "p0 = " + o["p0"].dump() + ", expected 420");
  for (const char* target : {"89/45", "167/84"}) {
    bool seen = false;
    for (const auto& t : o["search_trace"]) seen = seen || t["sum"] == target;
    c.expect(seen, std::string("sum ") + target + " not in search trace");
  }
}

void criterion_t0(Check& c) {
  const auto a = t0(LambdaSpec{I("")});
  c.expect(!a.vacuous && a.t0 == R("1/6") && a.witness_d == 3 && a.witness_lambda == R("1/2"),
           "t0(D(∅)) = " + a.t0.to_string() + " at d=" + std::to_string(a.witness_d));
  const auto b = t0(LambdaSpec{I("1/3")});
  c.expect(!b.vacuous && b.t0 == R("1/15"), "t0(D({1/3})) = " + b.t0.to_string());
}

void criterion_simple_bound(Check& c) {
  for (std::int64_t n = 3; n <= 10; ++n) {
    const auto r = hyperstandard_simple_bound(n);
    const Rational expected = n == 3 ? R("1/15") : Rational(1, (2 * n - 1) * n);
    c.expect(r.m == expected, "n=" + std::to_string(n) + " m=" + r.m.to_string());
    c.expect(r.bound == 2 * n * n - n, "n=" + std::to_string(n) + " bound=" + std::to_string(r.bound));
  }
}

void criterion_third_slice(Check& c) {
  const auto got = dset_below(I("1/3"), R("9/10")).elements;
  c.expect(got == Rs("0,1/3,1/2,2/3,3/4,7/9,4/5,5/6,6/7,13/15,7/8,8/9"), "slice differs");
  c.expect(got.size() == 12, "slice has " + std::to_string(got.size()) + " elements");
}

void criterion_all_lines(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto arr = all_rational_lines(p);
    for (int e = 1; e <= (p == 5 ? 2 : 3); ++e) {
      const auto b = fpt_bracket(arr, e);
      const std::string at = "p=" + std::to_string(p) + " e=" + std::to_string(e);
      c.expect(b.record.nu == ipow(p, e - 1) - 1, at + " nu=" + std::to_string(b.record.nu));
      c.expect(b.contains(Rational(1, p)), at + " bracket misses 1/p");
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 30.0, "took " + std::to_string(t) + " s");
}

// Image of a point of P¹(F_p) under [[a,b],[c,d]]; points are [s:1] and ∞ = [1:0].
Slope moebius(const Slope& s, const std::array<std::uint64_t, 4>& m, std::uint32_t p) {
  const auto [a, b, cc, d] = m;
  std::uint64_t num = 0, den = 0;
  if (s.is_infinity()) {
    num = a;
    den = cc;
  } else {
    num = (a * s.value() + b) % p;
    den = (cc * s.value() + d) % p;
  }
  if (den == 0) return Slope::infinity();
  std::uint64_t inv = 1, base = den, exp = p - 2;
  while (exp > 0) {
    if (exp & 1) inv = inv * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return Slope::finite(static_cast<std::uint32_t>(num * inv % p));
}

void criterion_property_suite(Check& c) {
  std::mt19937_64 rng(1000003);
  const std::array<std::uint32_t, 4> primes{2, 3, 5, 7};
  int instances = 0;
  int failures = 0;
  auto fail = [&](const std::string& what) {
    if (++failures <= 5) c.expect(false, what);
  };
  for (; instances < 1200; ++instances) {
    const std::uint32_t p = primes[instances % primes.size()];
    std::vector<Slope> pts{Slope::infinity()};
    for (std::uint32_t v = 0; v < p; ++v) pts.push_back(Slope::finite(v));
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::size_t ell = 1 + rng() % std::min<std::size_t>(pts.size(), 5);
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(ell), pts.end());
    std::vector<std::int64_t> mults(ell);
    for (auto& a : mults) a = 1 + static_cast<std::int64_t>(rng() % 3);
    const LineArrangement arr(p, pts, mults);

    std::array<std::uint64_t, 4> g{};
    do {
      for (auto& x : g) x = rng() % p;
    } while ((g[0] * g[3] + p * p - g[1] * g[2] % p) % p == 0);
    std::vector<Slope> moved;
    for (const auto& s : pts) moved.push_back(moebius(s, g, p));
    const LineArrangement relabeled(p, moved, mults);

    const std::string tag = "instance " + std::to_string(instances) + " (p=" + std::to_string(p) + ")";
    const Rational lct = lct_line_arrangement(arr.profile());
    const int emax = p <= 3 ? 4 : 2;
    std::uint64_t prev = 0;
    for (int e = 1; e <= emax; ++e) {
      const auto b = fpt_bracket(arr, e);
      const auto n = b.record.nu;
      const auto q = b.record.q;
      if (e > 1 && !(p * prev <= n && n <= p * prev + p - 1)) fail(tag + ": nesting");
      prev = n;
      if (!power_outside_frobenius_ideal(arr, n, q) || power_outside_frobenius_ideal(arr, n + 1, q)) {
        fail(tag + ": threshold property");
      }
      if (nu(relabeled, e).nu != n) fail(tag + ": projective relabeling");
      for (std::int64_t k = 2; k <= 3; ++k) {
        if (nu(arr.power(k), e).nu != n / static_cast<std::uint64_t>(k)) fail(tag + ": power rule");
      }
      if (!(b.lower < lct)) fail(tag + ": lower bracket not below lct");
      if (!arr.profile().is_degenerate() && !verify_hm_bound(arr, e)) fail(tag + ": Hara-Monsky bound");
    }
  }
  c.expect(instances >= 1000, "only " + std::to_string(instances) + " instances");
  if (failures > 0) c.detail << " (" << failures << " failures total)";
  c.ok = c.ok && failures == 0;
}

void criterion_degenerate_pinching(Check& c) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const LineArrangement arr(p, {Slope::finite(0), Slope::infinity()}, {3, 1});
    for (int e = 1; e <= 3; ++e) {
      const auto b = fpt_bracket(arr, e);
      const std::string at = "p=" + std::to_string(p) + " e=" + std::to_string(e);
      c.expect(b.contains(R("1/3")), at + " misses 1/3");
      c.expect(b.upper - b.lower == Rational(1, static_cast<long>(ipow(p, e))), at + " width");
    }
  }
}

void criterion_effective_bound(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t certified = 0;
  for (const auto& s : {"", "1/3", "1/2"}) {
    const auto set = I(s);
    const auto report = p0(set);
    const Rational eps = min_positive(set);
    const auto max_ell = to_int64((Rational(2) / eps).floor());
    std::vector<Rational> pool;
    for (const auto& v : dset_below(set, R("19/20")).elements) {
      if (v.is_positive()) pool.push_back(v);
    }
    std::vector<std::vector<Rational>> arrangements;
    std::vector<Rational> chosen;
    auto rec = [&](auto&& self, std::size_t from, const Rational& total) -> void {
      if (!chosen.empty()) arrangements.push_back(chosen);
      if (static_cast<std::int64_t>(chosen.size()) == max_ell) return;
      for (std::size_t i = from; i < pool.size(); ++i) {
        const Rational next = total + pool[i];
        if (next >= Rational(2)) break;
        chosen.push_back(pool[i]);
        self(self, i, next);
        chosen.pop_back();
      }
    };
    rec(rec, 0, Rational(0));

    for (std::int64_t p = report.p0 + 1; p < report.p0 + 50; ++p) {
      if (!is_prime(static_cast<std::uint64_t>(p))) continue;
      for (const auto& weights : arrangements) {
        const WeightedArrangement w(weights);
        if (!klt_weighted(w)) continue;
        const auto cert = certify_sfr(w, static_cast<std::uint64_t>(p), 0);
        const bool formula_rule = cert.reason == Reason::kBoundaryReduction ||
                                  cert.reason == Reason::kDegenerateLemma ||
                                  cert.reason == Reason::kHaraMonskyRule;
        if (cert.verdict != Verdict::kStronglyFRegular || !formula_rule || !cert.decisive->holds()) {
          std::string ws;
          for (const auto& q : weights) ws += q.to_string() + " ";
          c.expect(false, "I={" + std::string(s) + "} p=" + std::to_string(p) + " weights " + ws + to_string(cert.verdict));
        } else {
          ++certified;
        }
      }
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 120.0, "took " + std::to_string(t) + " s");
  c.detail << (c.ok ? "" : "; ") << certified << " certificates";
}

std::vector<Rational> from_fracs(const std::vector<oracle::Frac>& v) {
  std::vector<Rational> out;
  for (const auto& f : v) out.push_back(testing_support::from_frac(f));
  return out;
}

void criterion_brute_force(Check& c) {
  for (const auto& s : {"", "1/3", "1/2", "2/5"}) {
    const auto gens = testing_support::to_fracs(Rs(s));
    const auto pool = oracle::dset_by_denominator(gens, 210, oracle::Frac(1, 1000000), oracle::Frac(1));
    const auto eps = testing_support::to_frac(min_positive(I(s)));
    const auto best = oracle::max_admissible_sum(pool, static_cast<int>(2 * eps.d / eps.n));
    const auto got = q_max(I(s));
    const std::string tag = "I={" + std::string(s) + "}";
    c.expect(best.has_value() && got.q == testing_support::from_frac(best->total),
             tag + " Q " + got.q.to_string() + " vs brute force");
    c.expect(best.has_value() && got.witness == from_fracs(best->witness), tag + " witness differs");

    for (const auto& cut : {"1/2", "4/5", "9/10", "19/20"}) {
      const auto expected = from_fracs(oracle::dset_by_denominator(gens, 60, oracle::Frac(0), testing_support::to_frac(R(cut))));
      std::vector<Rational> actual;
      for (const auto& v : dset_below(I(s), R(cut)).elements) {
        if (v.denominator() <= 60) actual.push_back(v);
      }
      c.expect(actual == expected, tag + " slice below " + cut);
    }
  }
}

void criterion_ddi(Check& c) {
  for (const auto& s : {"", "1/3", "1/2,1/3"}) {
    for (const auto& cut : {"1/2", "2/3", "4/5"}) {
      c.expect(ddi_check(I(s), R(cut)), "I={" + std::string(s) + "} c=" + cut);
    }
  }
}

void criterion_perturbation(Check& c) {
  int verified = 0;
  for (const auto& s : {"", "1/3", "1/2", "2/5", "1/2,1/3"}) {
    for (std::int64_t n = 2; n <= 8; ++n) {
      const auto r = safe_perturbation(I(s), n);
      const Rational top(n - 1, n);
      for (const auto& a : dset_below(I(s), top + Rational(1, 1000 * n * n)).elements) {
        if (!a.is_positive() || a > top) continue;
        for (std::int64_t q = 2; q <= n; ++q) {
          for (std::int64_t p = 1; p < q; ++p) {
            const Rational lo = (Rational(p) - r.x) / (Rational(q) - r.x);
            if (lo < a && a < Rational(p, q)) {
              c.expect(false, "I={" + std::string(s) + "} N=" + std::to_string(n) + " x=" + r.x.to_string() +
                                  " a=" + a.to_string());
            }
          }
        }
      }
      ++verified;
    }
  }
  c.detail << (c.ok ? "" : "; ") << verified << " (I, N) cases";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"p0 for standard coefficients", criterion_p0_standard},
      {"p0 for I = {1/3} with case sums in trace", criterion_p0_third},
      {"t0 for D(∅) and D({1/3})", criterion_t0},
      {"hyperstandard simple bound n = 3..10", criterion_simple_bound},
      {"D({1/3}) slice below 9/10", criterion_third_slice},
      {"all-lines arrangement brackets contain 1/p", criterion_all_lines},
      {"oracle property suite", criterion_property_suite},
      {"degenerate pinching for x^3 y", criterion_degenerate_pinching},
      {"certification above p0 by formula rules", criterion_effective_bound},
      {"brute-force equivalence for q_max and dset_below", criterion_brute_force},
      {"D(D(I)) identity", criterion_ddi},
      {"safe perturbation postcondition", criterion_perturbation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    std::ostringstream line;
    line << (c.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << " (" << std::fixed
         << std::setprecision(2) << seconds_since(start) << " s)";
    const std::string detail = c.detail.str();
    if (!detail.empty()) line << ": " << detail;
    std::cout << line.str() << '\n';
    if (!c.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
