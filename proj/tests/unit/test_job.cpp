#include <doctest.h>

#include <json.hpp>

#include "lacunary/job.hpp"

using namespace lacunary;
using nlohmann::json;

namespace {

Report run(const char* text) { return run_job(json::parse(text)); }

}  // namespace

TEST_CASE("eval job") {
  const Report r = run(R"({"command":"eval","base":2,"digits":40,"terms":[{"weight":1,"i":1,"j":2}]})");
  CHECK(r.exit_code == kExitOk);
  CHECK(r.body["result"]["value"]["base_digits"]["digits"] ==
        "1001000010000001000000001000000000010000");
  CHECK(r.body["tool"] == "lacunary");
}

TEST_CASE("replays are byte-identical") {
  const char* specs[] = {
      R"({"command":"forge","i0":1,"j0":2,"N":2,"family":[[1,2],[2,2],[1,3]]})",
      R"({"command":"check","family":[[1,2],[4,2],[2,3]]})",
      R"({"command":"hunt","base":2,"precision":60,"coeff_bound":100,"values":[{"constant":1},{"constant":3}]})",
      R"({"command":"gaps","base":2,"start":1,"end":200,"terms":[{"weight":1,"i":1,"j":2}]})",
  };
  for (const char* s : specs) {
    const std::string a = run(s).body.dump(2);
    const std::string b = run(s).body.dump(2);
    CHECK(a == b);
  }
}

TEST_CASE("exit codes") {
  CHECK(run(R"({"command":"check","family":[[1,2],[4,2]]})").exit_code == kExitViolationOrNotFound);
  CHECK(run(R"({"command":"check","family":[[1,2],[2,4]]})").exit_code == kExitOk);
  CHECK(run(R"({"command":"check","family":[[1,2],[2,3]]})").exit_code == kExitViolationOrNotFound);
  CHECK(run(R"({"command":"nope"})").exit_code == kExitInputError);
  CHECK(run(R"([1,2,3])").exit_code == kExitInputError);
  CHECK(run(R"({"command":"eval","base":1,"digits":4,"terms":[]})").exit_code == kExitInputError);
  CHECK(run(R"({"command":"counterexample","pair1":[1,3],"pair2":[2,3],"base":2,"precision":50})")
            .exit_code == kExitViolationOrNotFound);
  const Report budget = run(
      R"({"command":"forge","i0":1,"j0":2,"N":3,"family":[[1,2]],"q_attempts":1})");
  CHECK(budget.exit_code == kExitBudget);
  CHECK(budget.body["error"]["code"] == "BudgetExceeded");
}

TEST_CASE("error messages name the offending field") {
  const Report r = run(R"({"command":"eval","base":2,"digits":10,"terms":[{"weight":1,"i":1}]})");
  CHECK(r.exit_code == kExitInputError);
  const std::string msg = r.body["error"]["message"];
  CHECK(msg.find("terms[0].j") != std::string::npos);
}

TEST_CASE("diophantine job reports the empirical bound") {
  const Report r = run(R"({"command":"diophantine","i0":1,"j0":3,"i":1,"j":2,"u_max":1,"x_max":500})");
  REQUIRE(r.exit_code == kExitOk);
  CHECK(r.body["result"]["count"] == 1);
  CHECK(r.body["result"]["empirical_bound"]["M"] == "2");
}

TEST_CASE("text rendering flattens the report") {
  const Report r = run(R"({"command":"check","family":[[1,2],[2,4]]})");
  const std::string text = render_text(r);
  CHECK(text.find("exit_code: 0") != std::string::npos);
  CHECK(text.find("result.independent_for_all_sets: true") != std::string::npos);
}
