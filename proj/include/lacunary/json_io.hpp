#pragma once

// Structured-text (JSON) forms of the domain types. Parsers take the JSON
// path of the value so schema errors name the offending field.

#include <string>
#include <vector>

#include <json.hpp>

#include "lacunary/dependence.hpp"
#include "lacunary/forge.hpp"
#include "lacunary/relations.hpp"
#include "lacunary/series.hpp"
#include "lacunary/sets.hpp"

namespace lacunary::io {

using nlohmann::json;

/// Accepts a JSON integer or a decimal string.
Integer parse_integer(const json& j, const std::string& path);
std::uint64_t parse_u64(const json& j, const std::string& path);
std::int64_t parse_i64(const json& j, const std::string& path);
unsigned parse_exponent(const json& j, const std::string& path);

/// Field lookup that raises InvalidArgument naming `path.key` when missing.
const json& require(const json& obj, const std::string& key,
                    const std::string& path);

ExponentSet parse_set(const json& j, const std::string& path);
Coefficient parse_coefficient(const json& j, const std::string& path);
SeriesSpec parse_series(const json& j, const std::string& path);
IndexPair parse_pair(const json& j, const std::string& path);
std::vector<IndexPair> parse_pairs(const json& j, const std::string& path);
/// {base, constant?, terms: [{weight?, i, j, set?, coeff?}]}
LinearFormSpec parse_form(const json& j, const std::string& path);

json to_json(const Integer& n);
json to_json(const Rational& q);
json to_json(const ExponentSet& s);
json to_json(const Coefficient& c);
json to_json(const SeriesSpec& s);
json to_json(const IndexPair& p);
json to_json(const FixedPointValue& v, std::size_t render_count);
json to_json(const RenderedDigits& r);
json to_json(const LemmaOneWitness& w);
json to_json(const CongruenceSystem& s);
json to_json(const ForgeCertificate& c);
json to_json(const DependencyCertificate& c);
json to_json(const EquationSolution& s);
json to_json(const RelationSearch& r);

}  // namespace lacunary::io
