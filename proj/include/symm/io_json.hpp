#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "symm/attainability.hpp"
#include "symm/inequalities.hpp"
#include "symm/search.hpp"

namespace symm {

using Json = nlohmann::ordered_json;

/// Exact rationals serialize as "p/q" strings (lossless round-trips);
/// binary64 values serialize as JSON numbers.
Json to_json(const MeansTuple<Rational>& s);
Json to_json(const MeansTuple<double>& s);
Json to_json(const RootTuple<Rational>& y);
Json to_json(const RootTuple<double>& y);
Json to_json(const AttainVerdict& v);
Json to_json(const IneqReport& rep);
Json to_json(const SearchRecord& rec);
Json to_json(const SearchConfig& cfg);

MeansTuple<Rational> means_from_json(const Json& j);
RootTuple<Rational> roots_from_json(const Json& j);

/// Key/value map describing an effective run configuration; embedded into
/// every persisted artifact together with the tool version.
using ConfigEcho = std::map<std::string, std::string>;

/// JSONL: one config line, then one line per record, in restart order.
/// Deterministic for a fixed config.
std::string search_records_jsonl(const SearchConfig& cfg, const std::vector<SearchRecord>& records,
                                 const ConfigEcho& extra);

/// CSV with a leading "# config ..." comment line and an n,k,normalized_ratio
/// header.
std::string kev_table_csv(const std::vector<KevRow>& rows, const ConfigEcho& extra);

}  // namespace symm
