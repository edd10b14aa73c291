#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftalg/audit/registry.hpp"
#include "shiftalg/audit/report.hpp"
#include "shiftalg/element.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace shiftalg;
using namespace shiftalg::audit;

namespace {

Status status_from_name(const std::string& name) {
  if (name == "PASS") return Status::pass;
  if (name == "FAIL") return Status::fail;
  if (name == "AMENDED") return Status::amended;
  if (name == "VACUOUS") return Status::vacuous;
  if (name == "OUT-OF-SCOPE") return Status::out_of_scope;
  throw std::invalid_argument("bad status name in fixture: " + name);
}

std::string fixture_path(const char* name) {
  return std::string(SHIFTALG_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("default run reproduces the pinned status table") {
  std::vector<ClaimReport> reports = run_audit(AuditConfig{});
  const auto& expected = expected_statuses();
  REQUIRE(reports.size() == expected.size());

  for (const ClaimReport& r : reports) {
    auto it = expected.find(r.id);
    REQUIRE_MESSAGE(it != expected.end(), r.id);
    CHECK_MESSAGE(r.status == it->second, r.id, ": ", to_string(r.status));
    CHECK_FALSE(r.crashed);
    CHECK_FALSE(r.anchor.empty());
    CHECK_FALSE(r.quote.empty());
    CHECK_FALSE(r.notes.empty());
    // Anything that is not a clean PASS must explain itself.
    if (r.status != Status::pass) CHECK_FALSE(r.witness.empty());
  }

  // Reports come back sorted and without duplicates.
  std::vector<std::string> ids;
  for (const ClaimReport& r : reports) ids.push_back(r.id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

TEST_CASE("expected statuses match the committed fixture") {
  std::ifstream in(fixture_path("expected_statuses.txt"));
  REQUIRE(in.good());
  std::map<std::string, Status> fixture;
  std::string id, status;
  while (in >> id >> status) fixture[id] = status_from_name(status);
  CHECK(fixture == expected_statuses());
}

TEST_CASE("statement key map matches the committed fixture") {
  std::ifstream in(fixture_path("claim_map.txt"));
  REQUIRE(in.good());
  std::map<std::string, std::string> key_to_claim;
  std::string key, id;
  while (in >> key >> id) {
    CHECK(key_to_claim.emplace(key, id).second); // each key maps to one claim
  }
  REQUIRE_FALSE(key_to_claim.empty());

  const auto& keys = statement_keys();
  std::size_t total = 0;
  for (const auto& [claim, list] : keys) {
    CHECK(expected_statuses().count(claim) == 1);
    for (const std::string& k : list) {
      ++total;
      auto it = key_to_claim.find(k);
      REQUIRE_MESSAGE(it != key_to_claim.end(), k);
      CHECK(it->second == claim);
    }
  }
  CHECK(total == key_to_claim.size());
}

TEST_CASE("structured output is byte-identical across runs") {
  AuditConfig cfg;
  cfg.seed = 7;
  std::string a = render_structured(run_audit(cfg), cfg).dump(2);
  std::string b = render_structured(run_audit(cfg), cfg).dump(2);
  CHECK(a == b);
}

TEST_CASE("claim filter runs exactly the requested checks") {
  AuditConfig cfg;
  cfg.claims = {"JAC", "UME"};
  std::vector<ClaimReport> reports = run_audit(cfg);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].id == "JAC");
  CHECK(reports[1].id == "UME");

  cfg.claims = {"NO-SUCH-CLAIM"};
  CHECK_THROWS_AS(run_audit(cfg), std::invalid_argument);
}

TEST_CASE("witnesses do not depend on which other claims run") {
  AuditConfig full;
  full.seed = 2024;
  AuditConfig just_jac = full;
  just_jac.claims = {"JAC"};

  nlohmann::ordered_json from_full;
  for (const ClaimReport& r : run_audit(full))
    if (r.id == "JAC") from_full = r.witness;
  std::vector<ClaimReport> solo = run_audit(just_jac);
  REQUIRE(solo.size() == 1);
  CHECK(solo[0].witness == from_full);
}

TEST_CASE("config validation") {
  AuditConfig cfg;
  cfg.window = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = AuditConfig{};
  cfg.window = 9;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = AuditConfig{};
  cfg.n = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = AuditConfig{};
  cfg.n = 300;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  CHECK_NOTHROW(validate(AuditConfig{}));
}

TEST_CASE("a broken product flips the corner claim without aborting") {
  AuditHooks hooks;
  hooks.mul = [](const Element&, const Element&) { return Element::zero(); };
  AuditConfig cfg;
  cfg.claims = {"CORNER-CORNER"};
  std::vector<ClaimReport> reports = run_audit(cfg, hooks);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::fail);
  CHECK_FALSE(reports[0].crashed);
}

TEST_CASE("a throwing check is reported, not propagated") {
  AuditHooks hooks;
  hooks.mul = [](const Element&, const Element&) -> Element {
    throw std::runtime_error("injected failure");
  };
  AuditConfig cfg;
  cfg.claims = {"CORNER-CORNER"};
  std::vector<ClaimReport> reports = run_audit(cfg, hooks);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::fail);
  CHECK(reports[0].crashed);
  REQUIRE(reports[0].witness.contains("exception"));
  CHECK(reports[0].witness["exception"].get<std::string>().find("injected failure") !=
        std::string::npos);
}

TEST_CASE("text rendering carries every claim and status") {
  std::vector<ClaimReport> reports = run_audit(AuditConfig{});
  std::string table = render_text(reports);
  for (const ClaimReport& r : reports) {
    CHECK(table.find(r.id) != std::string::npos);
  }
  CHECK(table.find("OUT-OF-SCOPE") != std::string::npos);
  CHECK(table.find("AMENDED") != std::string::npos);
}

TEST_CASE("structured document shape") {
  AuditConfig cfg;
  cfg.claims = {"CENTRAL"};
  nlohmann::ordered_json doc = render_structured(run_audit(cfg), cfg);
  CHECK(doc["version"] == "1");
  CHECK(doc["config"]["window"] == 5);
  CHECK(doc["config"]["n"] == 64);
  CHECK(doc["config"]["eps"] == "3/10");
  REQUIRE(doc["claims"].size() == 1);
  const auto& claim = doc["claims"][0];
  CHECK(claim["id"] == "CENTRAL");
  CHECK(claim["status"] == "PASS");
  CHECK(claim.contains("anchor"));
  CHECK(claim.contains("quote"));
  CHECK(claim.contains("witness"));
}
