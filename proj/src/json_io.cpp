#include "lacunary/json_io.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "lacunary/error.hpp"

namespace lacunary::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, "field '" + path + "': " + what);
}

std::string field(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t k) {
  return path + "[" + std::to_string(k) + "]";
}

long parse_long(const json& j, const std::string& path) {
  const std::int64_t v = parse_i64(j, path);
  if (v < std::numeric_limits<long>::min() || v > std::numeric_limits<long>::max())
    bad(path, "out of range");
  return static_cast<long>(v);
}

}  // namespace

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(field(path, key), "missing");
  return *it;
}

Integer parse_integer(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return make_integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return make_integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) bad(path, "empty integer string");
    for (std::size_t t = start; t < s.size(); ++t) {
      if (!std::isdigit(static_cast<unsigned char>(s[t])))
        bad(path, "not a decimal integer: \"" + s + "\"");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  }
  bad(path, "expected an integer or a decimal string");
}

std::uint64_t parse_u64(const json& j, const std::string& path) {
  const Integer v = parse_integer(j, path);
  if (!fits_u64(v)) bad(path, "must be a nonnegative 64-bit integer");
  return to_u64(v);
}

std::int64_t parse_i64(const json& j, const std::string& path) {
  const Integer v = parse_integer(j, path);
  if (!mpz_fits_slong_p(v.get_mpz_t())) bad(path, "out of 64-bit range");
  return v.get_si();
}

unsigned parse_exponent(const json& j, const std::string& path) {
  const std::uint64_t v = parse_u64(j, path);
  if (v > 1'000'000) bad(path, "exponent unreasonably large");
  return static_cast<unsigned>(v);
}

ExponentSet parse_set(const json& j, const std::string& path) {
  if (j.is_string()) return parse_set(json{{"kind", j}}, path);
  const std::string kind = require(j, "kind", path).get<std::string>();
  std::optional<Integer> min;
  if (j.contains("min")) min = parse_integer(j["min"], field(path, "min"));
  auto u64 = [&](const char* key) {
    return parse_u64(require(j, key, path), field(path, key));
  };
  try {
    if (kind == "naturals") return ExponentSet(set_kind::Naturals{}, min);
    if (kind == "primes") return ExponentSet(set_kind::Primes{}, min);
    if (kind == "primes_in_ap")
      return ExponentSet(set_kind::PrimesInAP{u64("d"), u64("h")}, min);
    if (kind == "progression")
      return ExponentSet(set_kind::Progression{u64("d"), u64("h")}, min);
    if (kind == "squarefree") return ExponentSet(set_kind::Squarefree{}, min);
    if (kind == "explicit") {
      const json& vals = require(j, "values", path);
      if (!vals.is_array()) bad(field(path, "values"), "expected an array");
      std::vector<Integer> values;
      for (std::size_t k = 0; k < vals.size(); ++k)
        values.push_back(parse_integer(vals[k], index(field(path, "values"), k)));
      return ExponentSet(set_kind::Explicit{std::move(values)}, min);
    }
    if (kind == "geometric") {
      return ExponentSet(
          set_kind::Geometric{u64("u"), parse_exponent(require(j, "j", path),
                                                       field(path, "j"))},
          min);
    }
    if (kind == "pell_x") return ExponentSet(set_kind::PellX{u64("D")}, min);
    if (kind == "pell_y")
      return ExponentSet(set_kind::PellY{u64("D"), u64("scale")}, min);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::SquareD) {
      if (std::string(e.what()).find("field '") != std::string::npos) throw;
      bad(path, e.what());
    }
    throw;
  }
  bad(field(path, "kind"), "unknown set kind \"" + kind + "\"");
}

Coefficient parse_coefficient(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Coefficient::constant(parse_long(j, path));
    if (j.is_string() && j.get<std::string>() == "alternating")
      return Coefficient::alternating(1);
    const std::string kind = require(j, "kind", path).get<std::string>();
    const long value =
        j.contains("value") ? parse_long(j["value"], field(path, "value")) : 1;
    if (kind == "constant") return Coefficient::constant(value);
    if (kind == "alternating") return Coefficient::alternating(value);
    if (kind == "table") {
      const json& entries = require(j, "entries", path);
      if (!entries.is_object()) bad(field(path, "entries"), "expected an object");
      std::map<Integer, long> table;
      for (const auto& [key, val] : entries.items()) {
        const std::string p = field(field(path, "entries"), key);
        table[parse_integer(json(key), p)] = parse_long(val, p);
      }
      const long fallback = j.contains("fallback")
                                ? parse_long(j["fallback"], field(path, "fallback"))
                                : 1;
      return Coefficient::table(std::move(table), fallback);
    }
    bad(field(path, "kind"), "unknown coefficient kind \"" + kind + "\"");
  } catch (const Error& e) {
    if (std::string(e.what()).find("field '") != std::string::npos) throw;
    bad(path, e.what());
  }
}

SeriesSpec parse_series(const json& j, const std::string& path) {
  SeriesSpec s;
  s.i = parse_u64(require(j, "i", path), field(path, "i"));
  s.j = parse_exponent(require(j, "j", path), field(path, "j"));
  if (s.i < 1) bad(field(path, "i"), "must be >= 1");
  if (s.j < 2) bad(field(path, "j"), "must be >= 2");
  if (j.contains("set")) s.set = parse_set(j["set"], field(path, "set"));
  if (j.contains("coeff"))
    s.coeff = parse_coefficient(j["coeff"], field(path, "coeff"));
  return s;
}

IndexPair parse_pair(const json& j, const std::string& path) {
  IndexPair p;
  if (j.is_array()) {
    if (j.size() != 2) bad(path, "expected [i, j]");
    p.i = parse_u64(j[0], index(path, 0));
    p.j = parse_exponent(j[1], index(path, 1));
  } else {
    p.i = parse_u64(require(j, "i", path), field(path, "i"));
    p.j = parse_exponent(require(j, "j", path), field(path, "j"));
  }
  if (p.i < 1) bad(path, "i must be >= 1");
  if (p.j < 2) bad(path, "j must be >= 2");
  return p;
}

std::vector<IndexPair> parse_pairs(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of pairs");
  std::vector<IndexPair> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(parse_pair(j[k], index(path, k)));
  return out;
}

LinearFormSpec parse_form(const json& j, const std::string& path) {
  LinearFormSpec f;
  f.base = parse_u64(require(j, "base", path), field(path, "base"));
  if (f.base < 2) bad(field(path, "base"), "must be >= 2");
  if (j.contains("constant"))
    f.constant = parse_integer(j["constant"], field(path, "constant"));
  const json& terms = require(j, "terms", path);
  if (!terms.is_array()) bad(field(path, "terms"), "expected an array");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string p = index(field(path, "terms"), k);
    LinearTerm t{Integer(1), parse_series(terms[k], p)};
    if (terms[k].contains("weight"))
      t.weight = parse_integer(terms[k]["weight"], field(p, "weight"));
    f.terms.push_back(std::move(t));
  }
  return f;
}

json to_json(const Integer& n) { return n.get_str(); }

json to_json(const Rational& q) { return q.get_str(); }

json to_json(const ExponentSet& s) {
  json j = {{"kind", s.name()}};
  std::visit(overloaded{
                 [&](const set_kind::PrimesInAP& k) {
                   j["d"] = k.d;
                   j["h"] = k.h;
                 },
                 [&](const set_kind::Progression& k) {
                   j["d"] = k.d;
                   j["h"] = k.h;
                 },
                 [&](const set_kind::Explicit& k) {
                   json vals = json::array();
                   for (const auto& v : k.values) vals.push_back(to_json(v));
                   j["values"] = vals;
                 },
                 [&](const set_kind::Geometric& k) {
                   j["u"] = k.u;
                   j["j"] = k.j;
                 },
                 [&](const set_kind::PellX& k) { j["D"] = k.D; },
                 [&](const set_kind::PellY& k) {
                   j["D"] = k.D;
                   j["scale"] = k.scale;
                 },
                 [](const auto&) {},
             },
             s.kind());
  if (s.min()) j["min"] = to_json(*s.min());
  return j;
}

json to_json(const Coefficient& c) {
  return std::visit(
      overloaded{
          [](const Coefficient::Constant& k) {
            return json{{"kind", "constant"}, {"value", k.value}};
          },
          [](const Coefficient::Alternating& k) {
            return json{{"kind", "alternating"}, {"value", k.value}};
          },
          [](const Coefficient::Table& k) {
            json entries = json::object();
            for (const auto& [n, v] : k.entries) entries[n.get_str()] = v;
            return json{{"kind", "table"},
                        {"entries", entries},
                        {"fallback", k.fallback}};
          },
      },
      c.kind());
}

json to_json(const SeriesSpec& s) {
  return {{"i", s.i}, {"j", s.j}, {"set", to_json(s.set)},
          {"coeff", to_json(s.coeff)}};
}

json to_json(const IndexPair& p) { return json::array({p.i, p.j}); }

json to_json(const RenderedDigits& r) {
  json j = {{"negative", r.negative},
            {"integer_part", to_json(r.integer_part)},
            {"certain_digits", r.certain}};
  if (r.base <= 36) {
    j["digits"] = r.str();
  } else {
    j["digits"] = r.digits;
  }
  return j;
}

json to_json(const FixedPointValue& v, std::size_t render_count) {
  // Enough decimal places to show the certain part in base 10.
  const double per_digit = std::log10(static_cast<double>(v.base));
  const auto places = static_cast<std::size_t>(
      static_cast<double>(std::min(render_count, v.scale)) * per_digit);
  return {{"base", v.base},
          {"scale", v.scale},
          {"mantissa", to_json(v.mantissa)},
          {"error_bound", to_json(v.error_bound)},
          {"decimal", v.to_decimal(std::max<std::size_t>(places, 1))},
          {"base_digits", to_json(render_digits(v, std::min(render_count, v.scale)))}};
}

json to_json(const LemmaOneWitness& w) {
  return {{"k", w.k}, {"u", w.u}, {"v", w.v}, {"p", to_json(w.p)},
          {"x", to_json(w.x)}, {"value", to_json(w.value())}};
}

json to_json(const CongruenceSystem& s) {
  json ws = json::array();
  std::uint64_t l = 1;
  for (const auto& w : s.witnesses) {
    if (l == s.N) ++l;
    json jw = to_json(w);
    jw["l"] = l++;
    ws.push_back(jw);
  }
  json cs = json::array();
  for (const auto& c : s.congruences())
    cs.push_back({{"residue", to_json(c.residue)}, {"modulus", to_json(c.modulus)}});
  return {{"i0", s.i0},          {"j0", s.j0},
          {"N", s.N},            {"d", to_json(s.d)},
          {"h", to_json(s.h)},   {"witnesses", ws},
          {"congruences", cs},   {"alpha", to_json(s.alpha)},
          {"x", to_json(s.x)}};
}

json to_json(const ForgeCertificate& c) {
  json viol = json::array();
  for (const auto& v : c.violations) {
    viol.push_back({{"u", v.u}, {"sign", v.sign}, {"pair", to_json(v.pair)},
                    {"k", to_json(v.k)}});
  }
  json rejected = json::array();
  for (const auto& q : c.rejected_q) rejected.push_back(to_json(q));
  json family = json::array();
  for (const auto& p : c.request.family) family.push_back(to_json(p));
  return {{"system", to_json(c.system)},
          {"q", to_json(c.q.q)},
          {"n0", to_json(c.q.n0)},
          {"q_probable_prime", c.q.probable},
          {"center", to_json(c.center)},
          {"family", family},
          {"exclusion_violations", viol},
          {"rejected_q", rejected},
          {"window_clear", c.window_clear}};
}

json to_json(const DependencyCertificate& c) {
  return {{"kind", to_string(c.kind)},
          {"pairs", json::array({to_json(c.first), to_json(c.second)})},
          {"t1", to_json(c.t1)},
          {"t2", to_json(c.t2)},
          {"relation", json::array({to_json(c.w0), to_json(c.w1), to_json(c.w2)})},
          {"base", c.base},
          {"precision", c.precision},
          {"residual", to_json(c.residual)},
          {"error_bound", to_json(c.error_bound)},
          {"verified", c.verified}};
}

json to_json(const EquationSolution& s) {
  return {{"x", to_json(s.x)}, {"y", to_json(s.y)}, {"u", s.u},
          {"sign", s.sign < 0 ? "-" : "+"}};
}

json to_json(const RelationSearch& r) {
  json j = {{"coeff_bound", to_json(r.coeff_bound)},
            {"precision", r.precision},
            {"residual_floor", to_json(r.residual_floor)},
            {"lattice_floor_sq", to_json(r.lattice_floor_sq)},
            {"relation_norm_sq", to_json(r.relation_norm_sq)},
            {"bound_certified", r.bound_certified()}};
  if (r.relation) {
    json cs = json::array();
    for (const auto& c : r.relation->coefficients) cs.push_back(to_json(c));
    j["relation"] = {{"coefficients", cs},
                     {"residual", to_json(r.relation->residual)},
                     {"tolerance", to_json(r.relation->tolerance)}};
  } else {
    j["relation"] = nullptr;
  }
  return j;
}

}  // namespace lacunary::io
