#include "cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hfpt/coeffsets.hpp"
#include "hfpt/effective_bounds.hpp"
#include "hfpt/errors.hpp"
#include "hfpt/frobenius.hpp"
#include "hfpt/pairs.hpp"
#include "hfpt/thresholds.hpp"

namespace hfpt::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string set, below, lambda_list, slopes, mults, lambda, weights, coeffs;
  std::int64_t n = 0, big_n = 0;
  std::uint64_t p = 0;
  int e = 0, emax = 0;
  bool json = false;
};

/// A parsed invocation: the canonical echo of its inputs and the deferred computation.
struct Prepared {
  std::string command;
  std::string format;
  Json inputs;
  std::function<Json()> compute;
};

template <typename F>
auto usage_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::vector<Rational> rationals_arg(const std::string& text) {
  return usage_guard([&] { return parse_rational_list(text); });
}

Rational rational_arg(const std::string& text) {
  return usage_guard([&] { return Rational::parse(text); });
}

std::vector<Slope> slopes_arg(const std::string& text) {
  return usage_guard([&] { return parse_slope_list(text); });
}

std::vector<std::int64_t> ints_arg(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& r : rationals_arg(text)) {
    if (!r.is_integer()) throw UsageError("expected an integer list, got '" + text + "'");
    out.push_back(usage_guard([&] { return to_int64(r.numerator()); }));
  }
  return out;
}

Json slopes_json(const std::vector<Slope>& slopes) {
  Json out = Json::array();
  for (const auto& s : slopes) out.push_back(s.to_string());
  return out;
}

// Arrangement inputs stay unvalidated until compute time: a bad prime is a domain error.
struct ArrangementArgs {
  std::uint64_t p;
  std::vector<Slope> slopes;
  std::vector<std::int64_t> mults;

  Json echo() const { return Json{{"p", p}, {"slopes", slopes_json(slopes)}, {"mults", mults}}; }
  LineArrangement build() const {
    if (p > 0xffffffffULL) throw DomainError("p is too large for the oracle");
    return LineArrangement(static_cast<std::uint32_t>(p), slopes, mults);
  }
};

ArrangementArgs arrangement_args(const Options& o) {
  return ArrangementArgs{o.p, slopes_arg(o.slopes), ints_arg(o.mults)};
}

Json profile_outputs(const LineArrangement& arr) {
  const auto& profile = arr.profile();
  Json out{{"lct", to_json(lct_line_arrangement(profile))}};
  const auto degenerate = fpt_degenerate(profile);
  out["fpt_degenerate"] = degenerate ? to_json(*degenerate) : Json(nullptr);
  out["hara_monsky_lower"] = profile.is_degenerate() ? Json(nullptr) : to_json(hara_monsky_lower(profile, arr.p()));
  return out;
}

Prepared prepare_from(const std::string& command, const Options& o) {
  Prepared prep{command, o.format, Json::object(), {}};
  if (command == "dset") {
    auto set = rationals_arg(o.set);
    auto below = rational_arg(o.below);
    prep.inputs = Json{{"set", to_json(set)}, {"below", to_json(below)}};
    prep.compute = [set, below] {
      const CoeffSetSpec spec(set);
      return Json{{"elements", to_json(dset_below(spec, below).elements)},
                  {"plus_closure", to_json(plus_closure(spec).elements)},
                  {"min_positive", to_json(min_positive(spec))},
                  {"ddi_identity", ddi_check(spec, below)}};
    };
  } else if (command == "t0") {
    const bool has_set = !o.set.empty() || o.lambda_list.empty();
    if (!o.set.empty() && !o.lambda_list.empty()) throw UsageError("t0 takes either --set or --lambda-list");
    if (has_set) {
      auto set = rationals_arg(o.set);
      prep.inputs = Json{{"set", to_json(set)}};
      prep.compute = [set] { return to_json(t0(LambdaSpec(CoeffSetSpec(set)))); };
    } else {
      auto list = rationals_arg(o.lambda_list);
      prep.inputs = Json{{"lambda_list", to_json(list)}};
      prep.compute = [list] { return to_json(t0(LambdaSpec(list))); };
    }
  } else if (command == "p0") {
    auto set = rationals_arg(o.set);
    prep.inputs = Json{{"set", to_json(set)}};
    prep.compute = [set] { return to_json(p0(CoeffSetSpec(set))); };
  } else if (command == "hsb") {
    prep.inputs = Json{{"n", o.n}};
    prep.compute = [n = o.n] { return to_json(hyperstandard_simple_bound(n)); };
  } else if (command == "nu" || command == "bracket") {
    auto arr = arrangement_args(o);
    prep.inputs = arr.echo();
    prep.inputs["e"] = o.e;
    const bool bracket = command == "bracket";
    prep.compute = [arr, e = o.e, bracket] {
      const LineArrangement a = arr.build();
      const auto cfg = OracleConfig::from_environment();
      const ThresholdBracket b = fpt_bracket(a, e, cfg);
      Json out{{"nu", b.record.nu}, {"q", b.record.q}, {"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}};
      if (bracket) out.update(profile_outputs(a));
      return out;
    };
  } else if (command == "fpure-at") {
    auto arr = arrangement_args(o);
    auto lambda = rational_arg(o.lambda);
    prep.inputs = arr.echo();
    prep.inputs["lambda"] = to_json(lambda);
    prep.inputs["emax"] = o.emax;
    prep.compute = [arr, lambda, emax = o.emax] {
      const FPureVerdict v = sharply_fpure_at(arr.build(), lambda, emax, OracleConfig::from_environment());
      return Json{{"verdict", v.witnessed ? "yes" : "no_up_to"}, {"e", v.e}};
    };
  } else if (command == "certify") {
    auto weights = rationals_arg(o.weights);
    std::optional<std::vector<Slope>> slopes;
    if (!o.slopes.empty()) slopes = slopes_arg(o.slopes);
    const int emax = slopes ? (o.emax > 0 ? o.emax : 3) : 0;
    prep.inputs = Json{{"weights", to_json(weights)}, {"p", o.p}};
    if (slopes) {
      prep.inputs["slopes"] = slopes_json(*slopes);
      prep.inputs["emax"] = emax;
    }
    prep.compute = [weights, slopes, p = o.p, emax] {
      return to_json(certify_sfr(WeightedArrangement(weights, slopes), p, emax, OracleConfig::from_environment()));
    };
  } else if (command == "perturb") {
    auto set = rationals_arg(o.set);
    prep.inputs = Json{{"set", to_json(set)}, {"N", o.big_n}};
    prep.compute = [set, n = o.big_n] { return to_json(safe_perturbation(CoeffSetSpec(set), n)); };
  } else if (command == "classify-p1") {
    auto coeffs = rationals_arg(o.coeffs);
    prep.inputs = Json{{"coeffs", to_json(coeffs)}};
    prep.compute = [coeffs] {
      const P1Pair pair(coeffs);
      const P1Classification c = classify_p1(pair);
      return Json{{"log_fano", c.log_fano}, {"klt", c.klt}, {"cone_klt", klt_weighted(cone_transfer(pair))}};
    };
  } else if (command == "paper-check") {
    prep.inputs = Json{{"json", o.json}};
    if (!o.json) prep.format = "table";
  } else {
    throw UsageError("unknown subcommand '" + command + "'");
  }
  return prep;
}

struct ParseOutcome {
  std::optional<Prepared> prepared;
  int exit_code = 0;
};

ParseOutcome parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact threshold and effective-bound computations for line arrangements", "hfpt"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto set_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--set", o.set, "Comma-separated coefficient set I, e.g. \"1/3,1/2\"");
    if (required) opt->required();
  };
  auto arrangement = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Prime characteristic")->required();
    sub->add_option("--slopes", o.slopes, "Slopes, e.g. 0,1,inf")->required();
    sub->add_option("--mults", o.mults, "Multiplicities aligned with slopes")->required();
  };

  auto* dset = app.add_subcommand("dset", "Slice D(I) ∩ [0, below)");
  set_opt(dset, true);
  dset->add_option("--below", o.below, "Strict upper cutoff < 1")->required();

  auto* t0c = app.add_subcommand("t0", "Gap constant t0 for a finite list or D(I)");
  auto* t0_set = t0c->add_option("--set", o.set, "Coefficient set I (Λ = D(I))");
  auto* t0_list = t0c->add_option("--lambda-list", o.lambda_list, "Explicit finite Λ");
  t0_set->excludes(t0_list);

  auto* p0c = app.add_subcommand("p0", "Effective characteristic bound p0(I)");
  set_opt(p0c, true);

  auto* hsb = app.add_subcommand("hsb", "Gap minimum for D({1/n})");
  hsb->add_option("--n", o.n, "n >= 3")->required();

  for (const char* name : {"nu", "bracket"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "nu" ? "Frobenius threshold nu(p^e)" : "F-pure threshold bracket");
    arrangement(sub);
    sub->add_option("--e", o.e, "Frobenius level")->required();
  }

  auto* fpure = app.add_subcommand("fpure-at", "Search for a sharp F-purity witness at λ");
  arrangement(fpure);
  fpure->add_option("--lambda", o.lambda, "λ in (0,1]")->required();
  fpure->add_option("--emax", o.emax, "Largest level to try")->required();

  auto* certify = app.add_subcommand("certify", "Strong F-regularity certificate");
  certify->add_option("--weights", o.weights, "Coefficients q_i")->required();
  certify->add_option("--p", o.p, "Prime characteristic")->required();
  certify->add_option("--slopes", o.slopes, "Slopes enabling oracle escalation");
  certify->add_option("--emax", o.emax, "Oracle levels (default 3 with slopes)");

  auto* perturb = app.add_subcommand("perturb", "Safe perturbation x and J-set");
  set_opt(perturb, true);
  perturb->add_option("--N", o.big_n, "N >= 2")->required();

  auto* p1 = app.add_subcommand("classify-p1", "Log Fano / klt classification on P1");
  p1->add_option("--coeffs", o.coeffs, "Coefficients of distinct points")->required();

  auto* check = app.add_subcommand("paper-check", "Regenerate the published worked examples");
  check->add_flag("--json", o.json, "Emit JSON instead of a table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return ParseOutcome{std::nullopt, app.exit(e, out, err)};
  } catch (const CLI::CallForAllHelp& e) {
    return ParseOutcome{std::nullopt, app.exit(e, out, err)};
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return ParseOutcome{std::nullopt, 2};
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "t0" && t0_set->count() == 0 && t0_list->count() == 0) {
    err << "usage error: t0 needs --set or --lambda-list\n";
    return ParseOutcome{std::nullopt, 2};
  }
  try {
    return ParseOutcome{prepare_from(command, o), 0};
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return ParseOutcome{std::nullopt, 2};
  }
}

Json provenance(const Prepared& prep, const Json& outputs) {
  Json prov = Json::object();
  for (const auto& [key, value] : outputs.items()) prov[key] = "computed";
  for (const auto& row : regression_table()) {
    if (row.args.empty() || row.args.front() != prep.command || row.key.empty() || row.corrected) continue;
    if (!outputs.contains(row.key) || outputs.at(row.key) != row.published) continue;
    std::ostringstream sink;
    const ParseOutcome other = parse(row.args, sink, sink);
    if (other.prepared && other.prepared->inputs == prep.inputs) prov[row.key] = "paper-example";
  }
  return prov;
}

void render_table(const Json& report, std::ostream& out) {
  out << "command: " << report.at("command").get<std::string>() << "\n";
  for (const auto& section : {"inputs", "outputs"}) {
    if (!report.contains(section)) continue;
    out << section << ":\n";
    for (const auto& [key, value] : report.at(section).items()) {
      out << "  " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  if (report.contains("error")) out << "error: " << report.at("error").get<std::string>() << "\n";
}

int run_paper_check(const Prepared& prep, std::ostream& out) {
  const auto results = run_regression();
  const bool ok = std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == "mismatch"; });
  if (prep.format == "table") {
    for (const auto& r : results) {
      out << "[" << r.status << "] " << r.row->id << ": " << r.row->description << "\n";
      out << "    published=" << r.row->published.dump();
      if (r.row->corrected) out << " corrected=" << r.row->corrected->dump();
      out << " actual=" << r.actual.dump() << "\n";
      if (!r.row->note.empty()) out << "    note: " << r.row->note << "\n";
    }
    out << (ok ? "paper-check: all rows reproduce\n" : "paper-check: MISMATCH\n");
  } else {
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row{{"id", r.row->id},
               {"description", r.row->description},
               {"published", r.row->published},
               {"actual", r.actual},
               {"status", r.status}};
      if (r.row->corrected) row["corrected"] = *r.row->corrected;
      if (!r.row->note.empty()) row["note"] = r.row->note;
      rows.push_back(std::move(row));
    }
    Json report{{"command", "paper-check"}, {"inputs", prep.inputs}, {"outputs", {{"all_reproduce", ok}, {"rows", rows}}}};
    out << report.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed = parse(args, out, err);
  if (!parsed.prepared) return parsed.exit_code;
  const Prepared& prep = *parsed.prepared;
  if (prep.command == "paper-check") return run_paper_check(prep, out);

  Json report{{"command", prep.command}, {"inputs", prep.inputs}};
  int code = 0;
  try {
    Json outputs = prep.compute();
    report["outputs"] = outputs;
    report["provenance"] = provenance(prep, outputs);
  } catch (const DomainError& e) {
    report["error"] = e.what();
    code = 1;
  }
  if (prep.format == "table") {
    render_table(report, out);
  } else {
    out << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace hfpt::cli
