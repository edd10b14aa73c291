#pragma once

#include "shiftalg/rational.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shiftalg::audit {

// PASS: the statement verifies as displayed. AMENDED: it fails verbatim but a
// registered nearby correction verifies, and the witness carries both.
// FAIL: contradicted with no adjacent repair. VACUOUS: true only because the
// quantified object vanishes identically. OUT-OF-SCOPE: not machine-checkable
// at finite truncation; a surrogate observation is recorded.
enum class Status { pass, fail, amended, vacuous, out_of_scope };

std::string to_string(Status s);

struct ClaimReport {
  std::string id;
  std::string anchor; // what the audited statement is about, one line
  std::string quote;  // the asserted identity or bound, spelled out
  Status status = Status::pass;
  nlohmann::ordered_json witness;
  std::string notes;
  bool crashed = false; // the check aborted; status was forced to FAIL
};

struct AuditConfig {
  std::size_t window = 5; // exhaustive-index bound, 1..8
  Rational eps = make_rational(3, 10);
  std::size_t n = 64; // truncation size, 1..256
  std::uint64_t seed = 0;
  std::vector<std::string> claims; // empty = run everything
};

// Throws std::invalid_argument on out-of-range fields.
void validate(const AuditConfig& cfg);

// Fixed-width table, one row per claim.
std::string render_text(const std::vector<ClaimReport>& reports);

// Versioned document with stable key order; byte-identical for equal inputs.
nlohmann::ordered_json render_structured(const std::vector<ClaimReport>& reports,
                                         const AuditConfig& cfg);

} // namespace shiftalg::audit
