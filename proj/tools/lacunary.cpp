// lacunary: batch front-end. Reads a JSON job spec, writes a JSON (or text)
// report, and exits 0 (ok), 1 (violation / nothing found), 2 (bad input) or
// 3 (budget exhausted).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lacunary/job.hpp"

namespace {

using nlohmann::json;

// Overrides the first field of `keys` already present in the spec, or the
// first key when none is.
void override_field(json& spec, std::initializer_list<const char*> keys,
                    std::uint64_t value) {
  for (const char* k : keys) {
    if (spec.contains(k)) {
      spec[k] = value;
      return;
    }
  }
  spec[*keys.begin()] = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lacunary series toolkit: evaluation, prime/congruence "
               "certificates, dependence checks and relation hunting"};
  app.set_version_flag("--version", std::string(LACUNARY_VERSION));

  std::string command;
  std::string spec_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t precision = 0;
  std::uint64_t budget = 0;

  app.add_option("command", command,
                 "eval | digits | gaps | forge | check | counterexample | "
                 "diophantine | hunt (defaults to the spec's \"command\")");
  app.add_option("--spec", spec_path, "Job spec file ('-' for stdin)")->required();
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--precision", precision,
                 "Override the spec's precision/digits/count field");
  app.add_option("--budget", budget,
                 "Override the spec's search budget (q_attempts for forge, "
                 "scan_budget otherwise)");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : lacunary::kExitInputError;
  }

  std::string text;
  if (spec_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(spec_path, std::ios::binary);
    if (!in) {
      std::cerr << "lacunary: cannot read spec file " << spec_path << "\n";
      return lacunary::kExitInputError;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    std::cerr << "lacunary: spec is not valid JSON: " << e.what() << "\n";
    return lacunary::kExitInputError;
  }
  if (!command.empty() && spec.is_object()) spec["command"] = command;
  if (spec.is_object()) {
    if (precision > 0) override_field(spec, {"precision", "digits", "count"}, precision);
    if (budget > 0) {
      if (spec.value("command", "") == "forge") {
        spec["q_attempts"] = budget;
      } else {
        spec["scan_budget"] = budget;
      }
    }
  }

  const lacunary::Report report = lacunary::run_job(spec);
  const std::string rendered =
      format == "text" ? lacunary::render_text(report) : report.body.dump(2) + "\n";

  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "lacunary: cannot write " << out_path << "\n";
      return lacunary::kExitInputError;
    }
    out << rendered;
  }
  if (report.body.contains("error"))
    std::cerr << "lacunary: " << report.body["error"]["message"].get<std::string>() << "\n";
  return report.exit_code;
}
