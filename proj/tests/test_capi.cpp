#include <doctest.h>

#include <json.hpp>
#include <string>

#include "wcpieces.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  wcp_string_free(s);
  return out;
}

struct Handle {
  wcp_root_system* rs = nullptr;
  ~Handle() { wcp_root_system_destroy(rs); }
};

} // namespace

TEST_CASE("create/destroy and error codes") {
  Handle h;
  CHECK(wcp_root_system_create("A2", &h.rs) == WCP_OK);
  CHECK(wcp_rank(h.rs) == 2);
  CHECK(wcp_positive_root_count(h.rs) == 3);
  CHECK(wcp_cartan_entry(h.rs, 1, 2) == -1);

  wcp_root_system* bad = nullptr;
  CHECK(wcp_root_system_create("Q7", &bad) == WCP_ERR_INVALID_ARG);
  CHECK(std::string(wcp_last_error()).find("bad type") != std::string::npos);
  CHECK(wcp_root_system_create("B1", &bad) == WCP_ERR_INVALID_ARG);
}

TEST_CASE("bound refusal carries the group order") {
  Handle h;
  REQUIRE(wcp_root_system_create("E8", &h.rs) == WCP_OK);
  char* out = nullptr;
  CHECK(wcp_pieces_json(h.rs, 0, 0, &out) == WCP_ERR_BOUND_EXCEEDED);
  CHECK(std::string(wcp_last_error()).find("696729600") != std::string::npos);
}

TEST_CASE("pieces JSON round-trips") {
  Handle h;
  REQUIRE(wcp_root_system_create("A2", &h.rs) == WCP_OK);
  char* out = nullptr;
  REQUIRE(wcp_pieces_json(h.rs, 1, 0, &out) == WCP_OK);
  const std::string text = take(out);
  const json parsed = json::parse(text);
  CHECK(parsed.size() == 13);
  CHECK(parsed[0]["J"] == json::array({1, 2}));
  CHECK(parsed[0]["w"] == "-");
  // Parsing the emitted JSON and re-serialising is the identity.
  CHECK(json::parse(parsed.dump()) == parsed);
  CHECK(json::parse(parsed.dump()).dump() == parsed.dump());
}

TEST_CASE("chain endpoint") {
  Handle h;
  REQUIRE(wcp_root_system_create("A2", &h.rs) == WCP_OK);
  char* out = nullptr;
  REQUIRE(wcp_beta_chain_json(h.rs, "1", "2", &out) == WCP_OK);
  const json chain = json::parse(take(out));
  CHECK(chain["w_J"] == "1");
  CHECK(chain["terminal"] == json::array());
  CHECK(chain["steps"].size() == 3);
  // Not a minimal representative: precondition violation.
  CHECK(wcp_beta_chain_json(h.rs, "1", "1", &out) == WCP_ERR_INVALID_ARG);
}

TEST_CASE("count endpoints") {
  Handle h;
  REQUIRE(wcp_root_system_create("A1", &h.rs) == WCP_OK);
  char* out = nullptr;
  REQUIRE(wcp_count_group_json(h.rs, 0, &out) == WCP_OK);
  CHECK(json::parse(take(out))["coeffs"] == json::array({1, 1, 1, 1}));
  REQUIRE(wcp_count_boundary_json(h.rs, 0, &out) == WCP_OK);
  CHECK(json::parse(take(out))["str"] == "1 + q");
  REQUIRE(wcp_count_piece_json(h.rs, "-", "1", 0, &out) == WCP_OK);
  CHECK(json::parse(take(out))["coeffs"] == json::array({1, 1}));
}

TEST_CASE("closure endpoints") {
  Handle h;
  REQUIRE(wcp_root_system_create("A2", &h.rs) == WCP_OK);
  char* out = nullptr;
  REQUIRE(wcp_closure_contains_json(h.rs, "1|2|-", "1|1 2|-", 0, &out) == WCP_OK);
  json res = json::parse(take(out));
  CHECK(res["contains"] == true);
  CHECK(res["witness"]["u"] == "-");
  CHECK(res["witness"]["v"] == "-");

  REQUIRE(wcp_closure_contains_json(h.rs, "-|1|-", "1|1 2|-", 0, &out) == WCP_OK);
  CHECK(json::parse(take(out))["contains"] == false);

  CHECK(wcp_closure_contains_json(h.rs, "oops", "1|1 2|-", 0, &out) == WCP_ERR_INVALID_ARG);

  REQUIRE(wcp_coxeter_piece_closure_json(h.rs, 2, "1 2", 0, &out) == WCP_OK);
  CHECK(json::parse(take(out)).size() == 4);
}

TEST_CASE("coxeter endpoints") {
  Handle h;
  REQUIRE(wcp_root_system_create("A3", &h.rs) == WCP_OK);
  char* out = nullptr;
  REQUIRE(wcp_coxeter_list_json(h.rs, &out) == WCP_OK);
  CHECK(json::parse(take(out)).size() == 4);
  REQUIRE(wcp_coxeter_wj_json(h.rs, 2, &out) == WCP_OK);
  json wj = json::parse(take(out));
  CHECK(wj["wJ"] == "1 3 2");
  CHECK(wj["layers"] == json::array({json::array({2}), json::array({1, 3})}));
  REQUIRE(wcp_conjugating_word_json(h.rs, "1 2 3", "3 2 1", 2, &out) == WCP_OK);
  const std::string word = json::parse(take(out))["word"];
  CHECK(word.find('2') == std::string::npos);
  REQUIRE(wcp_check_layer_chain_json(h.rs, 2, &out) == WCP_OK);
  CHECK(json::parse(take(out))["status"] == "pass");
}

TEST_CASE("case endpoints") {
  Handle h;
  REQUIRE(wcp_root_system_create("G2", &h.rs) == WCP_OK);
  char* out = nullptr;
  REQUIRE(wcp_case_fixture(h.rs, 1, &out) == WCP_OK);
  const std::string fixture = take(out);
  CHECK(fixture.find("case G2 1") != std::string::npos);
  CHECK(fixture.find("lambda: 1 0") != std::string::npos);
  REQUIRE(wcp_case_report_json(h.rs, 1, &out) == WCP_OK);
  CHECK(json::parse(take(out))["status"] == "pass");

  Handle hb;
  REQUIRE(wcp_root_system_create("B3", &hb.rs) == WCP_OK);
  CHECK(wcp_case_fixture(hb.rs, 1, &out) == WCP_ERR_UNCOVERED_CASE);
}

TEST_CASE("verify endpoint") {
  char* out = nullptr;
  int all_pass = 0;
  REQUIRE(wcp_verify_json("counts", "A2", 4, 0, 1, &out, &all_pass) == WCP_OK);
  CHECK(all_pass == 1);
  const json reports = json::parse(take(out));
  CHECK(reports.size() == 1);
  CHECK(reports[0]["status"] == "pass");
  CHECK(reports[0]["name"] == "A2 point counts");

  CHECK(wcp_verify_json("bogus", nullptr, 4, 0, 1, &out, &all_pass) == WCP_ERR_INVALID_ARG);
}
