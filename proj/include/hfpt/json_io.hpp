#pragma once

#include <vector>

#include <json.hpp>

#include "hfpt/coeffsets.hpp"
#include "hfpt/effective_bounds.hpp"
#include "hfpt/frobenius.hpp"
#include "hfpt/pairs.hpp"
#include "hfpt/rational.hpp"
#include "hfpt/thresholds.hpp"

namespace hfpt {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& values);
Json to_json(const CoeffSetSpec& set);
Json to_json(const LineArrangement& arr);
Json to_json(const NuRecord& r);
Json to_json(const ThresholdBracket& b);
Json to_json(const T0Report& r);
Json to_json(const BoundReport& r);
Json to_json(const SimpleBound& b);
Json to_json(const PerturbationReport& r);
Json to_json(const Certificate& c);
Json to_json(const SearchTraceEntry& t);

Rational rational_from_json(const Json& j);
std::vector<Rational> rationals_from_json(const Json& j);
/// Reads {p, slopes: ["0","inf",...], mults: [...]}.
LineArrangement arrangement_from_json(const Json& j);

}  // namespace hfpt
