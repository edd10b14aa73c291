#pragma once

#include "shiftalg/audit/report.hpp"
#include "shiftalg/element.hpp"

#include <functional>
#include <map>
#include <vector>

namespace shiftalg::audit {

// Test injection point: replaces the product used by the corner-commutator
// check so a deliberately broken structure constant flips that claim to FAIL
// without aborting the run.
struct AuditHooks {
  std::function<Element(const Element&, const Element&)> mul;
};

// Runs every registered check (or the cfg.claims subset), one report per
// claim, ordered by claim id. A throwing check becomes a FAIL report with the
// exception in its witness; the run always completes.
std::vector<ClaimReport> run_audit(const AuditConfig& cfg, const AuditHooks& hooks = {});

// Pinned status per claim id, used by --strict and the CI fixture.
const std::map<std::string, Status>& expected_statuses();

// Claim id -> keys of the audited statements it covers; a fixture test
// cross-checks that the key set is complete and maps each key to one claim.
const std::map<std::string, std::vector<std::string>>& statement_keys();

} // namespace shiftalg::audit
