#include "shiftalg/audit/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shiftalg::audit {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::amended: return "AMENDED";
    case Status::vacuous: return "VACUOUS";
    case Status::out_of_scope: return "OUT-OF-SCOPE";
  }
  throw std::logic_error("unhandled status");
}

void validate(const AuditConfig& cfg) {
  if (cfg.window < 1 || cfg.window > 8)
    throw std::invalid_argument("window must be between 1 and 8");
  if (cfg.n < 1 || cfg.n > 256)
    throw std::invalid_argument("n must be between 1 and 256");
}

std::string render_text(const std::vector<ClaimReport>& reports) {
  const std::string id_head = "CLAIM", status_head = "STATUS", anchor_head = "ANCHOR";
  std::size_t id_w = id_head.size(), status_w = std::string("OUT-OF-SCOPE").size(),
              anchor_w = anchor_head.size();
  for (const auto& r : reports) {
    id_w = std::max(id_w, r.id.size());
    anchor_w = std::max(anchor_w, r.anchor.size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::ostringstream os;
  os << pad(id_head, id_w) << "  " << pad(status_head, status_w) << "  "
     << pad(anchor_head, anchor_w) << "  SUMMARY\n";
  for (const auto& r : reports)
    os << pad(r.id, id_w) << "  " << pad(to_string(r.status), status_w) << "  "
       << pad(r.anchor, anchor_w) << "  " << r.notes << "\n";
  return os.str();
}

nlohmann::ordered_json render_structured(const std::vector<ClaimReport>& reports,
                                         const AuditConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["version"] = "1";
  doc["config"] = {{"window", cfg.window},
                   {"eps", shiftalg::to_string(cfg.eps)},
                   {"n", cfg.n},
                   {"seed", cfg.seed},
                   {"claims", cfg.claims}};
  auto& claims = doc["claims"] = nlohmann::ordered_json::array();
  for (const auto& r : reports)
    claims.push_back({{"id", r.id},
                      {"anchor", r.anchor},
                      {"quote", r.quote},
                      {"status", to_string(r.status)},
                      {"witness", r.witness},
                      {"notes", r.notes}});
  return doc;
}

} // namespace shiftalg::audit
