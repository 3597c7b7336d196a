#include "hfpt/json_io.hpp"

#include "hfpt/errors.hpp"

namespace hfpt {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

Json to_json(const CoeffSetSpec& set) { return to_json(set.elements()); }

Json to_json(const LineArrangement& arr) {
  Json slopes = Json::array();
  for (const auto& s : arr.slopes()) slopes.push_back(s.to_string());
  return Json{{"p", arr.p()}, {"slopes", slopes}, {"mults", arr.mults()}};
}

Json to_json(const NuRecord& r) { return Json{{"e", r.e}, {"q", r.q}, {"nu", r.nu}}; }

Json to_json(const ThresholdBracket& b) {
  return Json{{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}, {"record", to_json(b.record)}};
}

Json to_json(const T0Report& r) {
  if (r.vacuous) {
    return Json{{"vacuous", true}, {"note", "vacuous: any p admissible"}, {"lambda_source", r.lambda_source}};
  }
  return Json{{"vacuous", false},
              {"t0", to_json(r.t0)},
              {"witness_d", r.witness_d},
              {"witness_lambda", to_json(r.witness_lambda)},
              {"lambda_source", r.lambda_source}};
}

Json to_json(const SearchTraceEntry& t) {
  return Json{{"ell", t.ell}, {"prefix", to_json(t.prefix)}, {"last", to_json(t.last)}, {"sum", to_json(t.total)}};
}

Json to_json(const BoundReport& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace) trace.push_back(to_json(t));
  return Json{{"I", to_json(r.set)},
              {"epsilon", to_json(r.epsilon)},
              {"Q", to_json(r.q)},
              {"witness", to_json(r.witness)},
              {"p0_exact", to_json(r.p0_exact)},
              {"p0", r.p0},
              {"search_trace", trace}};
}

Json to_json(const SimpleBound& b) {
  return Json{{"m", to_json(b.m)}, {"bound", b.bound}, {"m_per_degree", to_json(b.per_degree)}};
}

Json to_json(const PerturbationReport& r) {
  return Json{{"N", r.n}, {"x", to_json(r.x)}, {"J", to_json(r.j_set)}};
}

Json to_json(const Certificate& c) {
  Json out{{"verdict", to_string(c.verdict)}, {"reason", to_string(c.reason)}, {"p", c.p}};
  if (c.decisive) {
    out["decisive"] = Json{{"lhs_label", c.decisive->lhs_label},
                           {"lhs", to_json(c.decisive->lhs)},
                           {"relation", c.decisive->relation},
                           {"rhs_label", c.decisive->rhs_label},
                           {"rhs", to_json(c.decisive->rhs)}};
  }
  if (!c.g_mults.empty()) {
    out["lambda"] = to_json(c.lambda);
    out["G_mults"] = c.g_mults;
    out["d_G"] = c.g_degree;
  }
  if (c.oracle_record) out["oracle"] = to_json(*c.oracle_record);
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("expected a rational string \"a/b\"");
  return Rational::parse(j.get<std::string>());
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

LineArrangement arrangement_from_json(const Json& j) {
  try {
    std::vector<Slope> slopes;
    for (const auto& s : j.at("slopes")) slopes.push_back(Slope::parse(s.get<std::string>()));
    return LineArrangement(j.at("p").get<std::uint32_t>(), std::move(slopes),
                           j.at("mults").get<std::vector<std::int64_t>>());
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed arrangement JSON: ") + e.what());
  }
}

}  // namespace hfpt
