#include "lacunary/job.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "lacunary/error.hpp"
#include "lacunary/json_io.hpp"

#ifndef LACUNARY_VERSION
#define LACUNARY_VERSION "0.0.0"
#endif

namespace lacunary {

namespace {

using nlohmann::json;
using io::require;

struct Outcome {
  json result;
  int exit_code = kExitOk;
};

std::uint64_t opt_u64(const json& spec, const char* key, std::uint64_t fallback) {
  return spec.contains(key) ? io::parse_u64(spec[key], key) : fallback;
}

std::size_t positive_size(const json& spec, const char* key) {
  const auto v = io::parse_u64(require(spec, key, ""), key);
  if (v < 1) throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "': must be >= 1");
  return static_cast<std::size_t>(v);
}

LinearFormSpec form_from(const json& spec) {
  json f = {{"base", spec.contains("base") ? spec["base"] : json(2)},
            {"terms", require(spec, "terms", "")}};
  if (spec.contains("constant")) f["constant"] = spec["constant"];
  return io::parse_form(f, "");
}

SearchBudget budget_from(const json& spec) {
  SearchBudget b;
  b.scan = opt_u64(spec, "scan_budget", b.scan);
  b.factor = opt_u64(spec, "factor_budget", b.factor);
  return b;
}

Outcome cmd_eval(const json& spec) {
  const LinearFormSpec form = form_from(spec);
  const std::size_t digits = positive_size(spec, "digits");
  const std::size_t render = spec.contains("render")
                                 ? io::parse_u64(spec["render"], "render")
                                 : digits;
  const FixedPointValue v = eval_linear_form(form, digits);
  return {{{"value", io::to_json(v, render)}}};
}

Outcome cmd_digits(const json& spec) {
  const LinearFormSpec form = form_from(spec);
  const std::size_t count = positive_size(spec, "count");
  const FixedPointValue v = eval_linear_form(form, count);
  const RenderedDigits r = render_digits(v, count);
  return {{{"base", form.base},
           {"count", count},
           {"rendered", io::to_json(r)},
           {"error_bound", io::to_json(v.error_bound)}}};
}

Outcome cmd_gaps(const json& spec) {
  const LinearFormSpec form = form_from(spec);
  const auto start = io::parse_u64(require(spec, "start", ""), "start");
  const auto end = io::parse_u64(require(spec, "end", ""), "end");
  json runs = json::array();
  for (const auto& r : gap_scan(form, start, end))
    runs.push_back(json::array({r.start, r.length}));
  json result = {{"runs", runs}};
  if (spec.contains("window")) {
    const json& w = spec["window"];
    const Integer center = io::parse_integer(require(w, "center", "window"),
                                             "window.center");
    const auto N = io::parse_u64(require(w, "N", "window"), "window.N");
    result["window"] = {{"center", io::to_json(center)},
                        {"N", N},
                        {"clear", exclusion_window_check(form, center, N)}};
  }
  return {result};
}

Outcome cmd_forge(const json& spec) {
  ForgeRequest req;
  req.i0 = io::parse_u64(require(spec, "i0", ""), "i0");
  req.j0 = io::parse_exponent(require(spec, "j0", ""), "j0");
  req.N = io::parse_u64(require(spec, "N", ""), "N");
  if (spec.contains("d")) req.d = io::parse_integer(spec["d"], "d");
  if (spec.contains("h")) req.h = io::parse_integer(spec["h"], "h");
  if (spec.contains("p_min")) req.p_min = io::parse_integer(spec["p_min"], "p_min");
  if (spec.contains("family")) req.family = io::parse_pairs(spec["family"], "family");
  req.q_attempts = opt_u64(spec, "q_attempts", req.q_attempts);
  if (spec.contains("require_above_alpha"))
    req.require_above_alpha = spec["require_above_alpha"].get<bool>();
  req.budget = budget_from(spec);

  const ForgeCertificate cert = forge(req);
  json result = io::to_json(cert);
  result["certificate_verified"] = verify_certificate(cert);
  return {result, cert.window_clear ? kExitOk : kExitViolationOrNotFound};
}

Outcome cmd_check(const json& spec) {
  const FamilyIndex family(io::parse_pairs(require(spec, "family", ""), "family"));
  const FamilyVerdict verdict = check_family(family);
  json ci = json::array();
  for (const auto& v : verdict.condition_i) {
    ci.push_back({{"pairs", json::array({io::to_json(family[v.first]),
                                         io::to_json(family[v.second])})},
                  {"u", io::to_json(v.u)},
                  {"v", io::to_json(v.v)}});
  }
  json sq = json::array();
  for (const auto& p : verdict.square_pairs) sq.push_back(io::to_json(p));
  json result = {{"condition_i", {{"holds", verdict.condition_i.empty()},
                                  {"violations", ci}}},
                 {"condition_ii", {{"holds", verdict.square_pairs.size() <= 1},
                                   {"square_pairs", sq}}},
                 {"independent_for_all_sets", verdict.independent_for_all_sets()}};
  if (spec.contains("sets")) {
    const json& sets = spec["sets"];
    if (!sets.is_array() || sets.size() != family.size())
      throw Error(ErrorCode::InvalidArgument,
                  "field 'sets': expected one set per family pair");
    json finite = json::array();
    for (std::size_t k = 0; k < sets.size(); ++k) {
      const ExponentSet s = io::parse_set(sets[k], "sets[" + std::to_string(k) + "]");
      if (s.finite()) finite.push_back(io::to_json(family[k]));
    }
    // A finite set makes its series rational, hence dependent with 1.
    result["finite_sets"] = finite;
  }
  return {result, verdict.independent_for_all_sets() ? kExitOk
                                                     : kExitViolationOrNotFound};
}

Outcome cmd_counterexample(const json& spec) {
  IndexPair a, b;
  if (spec.contains("pairs")) {
    const auto pairs = io::parse_pairs(spec["pairs"], "pairs");
    if (pairs.size() != 2)
      throw Error(ErrorCode::InvalidArgument, "field 'pairs': expected two pairs");
    a = pairs[0];
    b = pairs[1];
  } else {
    a = io::parse_pair(require(spec, "pair1", ""), "pair1");
    b = io::parse_pair(require(spec, "pair2", ""), "pair2");
  }
  const auto base = io::parse_u64(require(spec, "base", ""), "base");
  const std::size_t precision = positive_size(spec, "precision");
  try {
    const DependencyCertificate cert = build_counterexample(a, b, base, precision);
    return {{{"certificate", io::to_json(cert)}},
            cert.verified ? kExitOk : kExitViolationOrNotFound};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
    return {{{"certificate", nullptr}, {"reason", e.what()}},
            kExitViolationOrNotFound};
  }
}

Outcome cmd_diophantine(const json& spec) {
  auto u = [&](const char* key) { return io::parse_u64(require(spec, key, ""), key); };
  const auto i0 = u("i0");
  const auto j0 = io::parse_exponent(require(spec, "j0", ""), "j0");
  const auto i = u("i");
  const auto j = io::parse_exponent(require(spec, "j", ""), "j");
  const auto sols =
      enumerate_equation_solutions(i0, j0, i, j, u("u_max"), u("x_max"));
  json list = json::array();
  Integer largest = 0;
  for (const auto& s : sols) {
    list.push_back(io::to_json(s));
    largest = std::max(largest, s.x);
  }
  return {{{"solutions", list},
           {"count", sols.size()},
           {"empirical_bound", {{"M", io::to_json(largest)},
                                {"label", "empirical bound (scan up to x_max)"}}}}};
}

FixedPointValue parse_literal(const std::string& text, std::uint64_t base,
                              const json& entry, const std::string& path) {
  if (base > 36)
    throw Error(ErrorCode::InvalidArgument,
                "field '" + path + "': literal digits need base <= 36");
  std::string whole = text, frac;
  if (auto dot = text.find('.'); dot != std::string::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
  }
  auto digits = [&](const std::string& s) {
    Integer v = 0;
    for (char ch : s) {
      const int d = std::isdigit(static_cast<unsigned char>(ch))
                        ? ch - '0'
                        : std::tolower(static_cast<unsigned char>(ch)) - 'a' + 10;
      if (d < 0 || static_cast<std::uint64_t>(d) >= base)
        throw Error(ErrorCode::InvalidArgument,
                    "field '" + path + "': bad digit '" + std::string(1, ch) + "'");
      v = v * make_integer(base) + d;
    }
    return v;
  };
  FixedPointValue v;
  v.base = base;
  v.scale = std::max<std::size_t>(frac.size(), 1);
  v.mantissa = digits(whole) * ipow(base, v.scale) +
               digits(frac) * ipow(base, v.scale - frac.size());
  if (entry.contains("error_bound")) {
    v.error_bound = Rational(entry["error_bound"].get<std::string>());
    v.error_bound.canonicalize();
  } else {
    v.error_bound = Rational(Integer(1), ipow(base, v.scale));
    v.error_bound.canonicalize();
  }
  return v;
}

Outcome cmd_hunt(const json& spec) {
  const auto base = io::parse_u64(require(spec, "base", ""), "base");
  if (base < 2) throw Error(ErrorCode::InvalidArgument, "field 'base': must be >= 2");
  RelationQuery query;
  query.precision = positive_size(spec, "precision");
  query.coeff_bound = io::parse_integer(require(spec, "coeff_bound", ""), "coeff_bound");
  const json& vals = require(spec, "values", "");
  if (!vals.is_array())
    throw Error(ErrorCode::InvalidArgument, "field 'values': expected an array");
  const std::size_t digits = spec.contains("digits")
                                 ? io::parse_u64(spec["digits"], "digits")
                                 : query.precision;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const std::string path = "values[" + std::to_string(k) + "]";
    const json& e = vals[k];
    if (e.contains("constant")) {
      query.values.push_back(FixedPointValue::exact(
          base, io::parse_integer(e["constant"], path + ".constant"),
          digits + kGuardDigits));
    } else if (e.contains("literal")) {
      query.values.push_back(
          parse_literal(e["literal"].get<std::string>(), base, e, path + ".literal"));
    } else {
      query.values.push_back(eval_series(io::parse_series(e, path), base, digits));
    }
  }
  const RelationSearch found = find_relation(query);
  json result = io::to_json(found);
  if (found.relation) {
    result["verified"] = verify_relation(query.values, found.relation->coefficients).pass;
  }
  return {result, found.relation ? kExitOk : kExitViolationOrNotFound};
}

const std::map<std::string, std::function<Outcome(const json&)>>& commands() {
  static const std::map<std::string, std::function<Outcome(const json&)>> table = {
      {"eval", cmd_eval},
      {"digits", cmd_digits},
      {"gaps", cmd_gaps},
      {"forge", cmd_forge},
      {"check", cmd_check},
      {"counterexample", cmd_counterexample},
      {"diophantine", cmd_diophantine},
      {"hunt", cmd_hunt},
  };
  return table;
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k)
      flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Report run_job(const json& spec) {
  Report report;
  report.body = {{"tool", "lacunary"}, {"version", LACUNARY_VERSION}, {"spec", spec}};
  auto fail = [&](int code, const std::string& kind, const std::string& msg) {
    report.exit_code = code;
    report.body["error"] = {{"code", kind}, {"message", msg}};
  };
  try {
    if (!spec.is_object())
      throw Error(ErrorCode::InvalidArgument, "job spec must be a JSON object");
    const std::string command = require(spec, "command", "").get<std::string>();
    report.body["command"] = command;
    auto it = commands().find(command);
    if (it == commands().end())
      throw Error(ErrorCode::InvalidArgument,
                  "field 'command': unknown command \"" + command + "\"");
    Outcome out = it->second(spec);
    report.exit_code = out.exit_code;
    report.body["result"] = std::move(out.result);
  } catch (const Error& e) {
    fail(e.is_budget() ? kExitBudget : kExitInputError,
         std::string(to_string(e.code())), e.what());
  } catch (const json::exception& e) {
    fail(kExitInputError, "InvalidArgument", e.what());
  }
  report.body["exit_code"] = report.exit_code;
  return report;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  flatten(report.body, "", out);
  return out.str();
}

}  // namespace lacunary
