#include "shiftalg/audit/cli.hpp"

#include "shiftalg/audit/registry.hpp"
#include "shiftalg/cohomology.hpp"
#include "shiftalg/oracle.hpp"
#include "shiftalg/parse.hpp"

#include "CLI11.hpp"

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace shiftalg::audit {

namespace {

std::vector<std::string> split_commas(const std::string& joined) {
  std::vector<std::string> out;
  std::stringstream ss(joined);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_audit_command(const AuditConfig& cfg, const std::string& format,
                      const std::string& out_path, bool strict, std::ostream& out,
                      std::ostream& err) {
  const std::vector<ClaimReport> reports = run_audit(cfg);
  std::string rendered;
  if (format == "structured")
    rendered = render_structured(reports, cfg).dump(2) + "\n";
  else
    rendered = render_text(reports);
  if (out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open output file: " << out_path << "\n";
      return 1;
    }
    f << rendered;
  }
  int rc = 0;
  for (const auto& r : reports)
    if (r.crashed) {
      err << "crashed: " << r.id << ": " << r.notes << "\n";
      rc = 1;
    }
  if (strict) {
    const auto& expected = expected_statuses();
    for (const auto& r : reports) {
      const auto it = expected.find(r.id);
      if (it != expected.end() && it->second != r.status) {
        err << "strict: " << r.id << " drifted to " << to_string(r.status) << " (expected "
            << to_string(it->second) << ")\n";
        rc = 1;
      }
    }
  }
  return rc;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine and claim auditor for the boundary-deformed shift algebra"};
  app.require_subcommand(1);

  // audit run
  auto* audit = app.add_subcommand("audit", "re-verify the registered claims");
  audit->require_subcommand(1);
  auto* audit_run = audit->add_subcommand("run", "run the audit and print a report");
  std::size_t window = AuditConfig{}.window;
  std::string eps_text = shiftalg::to_string(AuditConfig{}.eps);
  std::size_t n = AuditConfig{}.n;
  std::uint64_t seed = 0;
  std::string claims_joined, format = "text", out_path;
  bool strict = false;
  audit_run->add_option("--window", window, "exhaustive index bound (1..8)");
  audit_run->add_option("--eps", eps_text, "exact coupling, as p or p/q");
  audit_run->add_option("--n", n, "numeric truncation size (1..256)");
  audit_run->add_option("--seed", seed, "base seed for the randomized checks");
  audit_run->add_option("--claims", claims_joined, "comma-separated claim ids (default: all)");
  audit_run->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  audit_run->add_option("--out", out_path, "write the report to a file instead of stdout");
  audit_run->add_flag("--strict", strict, "exit nonzero if any status drifts from the "
                                          "recorded expectation");

  // elem eval / elem comm
  auto* elem = app.add_subcommand("elem", "evaluate element expressions");
  elem->require_subcommand(1);
  auto* elem_eval = elem->add_subcommand("eval", "parse and print in canonical form");
  std::string expr;
  elem_eval->add_option("expr", expr, "element expression")->required();
  auto* elem_comm = elem->add_subcommand("comm", "commutator of two elements");
  std::string lhs_text, rhs_text;
  elem_comm->add_option("lhs", lhs_text, "left element")->required();
  elem_comm->add_option("rhs", rhs_text, "right element")->required();

  // mat dump
  auto* mat = app.add_subcommand("mat", "numeric truncations");
  mat->require_subcommand(1);
  auto* mat_dump = mat->add_subcommand("dump", "entrywise CSV of the truncated element");
  std::string mat_expr;
  std::size_t mat_n = 8;
  double mat_eps = 0.3;
  mat_dump->add_option("expr", mat_expr, "element expression")->required();
  mat_dump->add_option("--n", mat_n, "truncation size")->required();
  mat_dump->add_option("--eps", mat_eps, "numeric coupling substituted for eps");

  // spectrum sweep
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue computations");
  spectrum->require_subcommand(1);
  auto* sweep = spectrum->add_subcommand("sweep", "spectrum of the truncated deformed shift "
                                                  "over a coupling range");
  std::string variant_name = "backward";
  std::size_t sweep_n = 16, steps = 13;
  double eps_from = -1.5, eps_to = 1.5;
  sweep->add_option("--variant", variant_name, "forward | backward | hermitian");
  sweep->add_option("--n", sweep_n, "truncation size")->required();
  sweep->add_option("--eps-from", eps_from, "first coupling value")->required();
  sweep->add_option("--eps-to", eps_to, "last coupling value")->required();
  sweep->add_option("--steps", steps, "number of sweep points")->check(CLI::PositiveNumber);

  // h2
  auto* h2 = app.add_subcommand("h2", "degree-2 cohomology of the corner-window algebra");
  std::size_t h2_m = 3;
  h2->add_option("--m", h2_m, "window bound M, 1..5")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (audit_run->parsed()) {
      AuditConfig cfg;
      cfg.window = window;
      cfg.eps = parse_rational(eps_text);
      cfg.n = n;
      cfg.seed = seed;
      cfg.claims = split_commas(claims_joined);
      return run_audit_command(cfg, format, out_path, strict, out, err);
    }
    if (elem_eval->parsed()) {
      out << parse_element(expr).to_string() << "\n";
      return 0;
    }
    if (elem_comm->parsed()) {
      out << commutator(parse_element(lhs_text), parse_element(rhs_text)).to_string() << "\n";
      return 0;
    }
    if (mat_dump->parsed()) {
      out << heatmap_dump(parse_element(mat_expr), mat_n, std::complex<double>(mat_eps));
      return 0;
    }
    if (sweep->parsed()) {
      std::vector<double> eps_values;
      for (std::size_t i = 0; i < steps; ++i)
        eps_values.push_back(steps == 1 ? eps_from
                                        : eps_from + (eps_to - eps_from) *
                                                         static_cast<double>(i) /
                                                         static_cast<double>(steps - 1));
      out << sweep_csv(edge_eigen_sweep(eps_values, sweep_n, parse_variant(variant_name)));
      return 0;
    }
    if (h2->parsed()) {
      const H2Report rep = truncated_H2(h2_m);
      out << "window " << rep.window << "\n"
          << "dim " << rep.dim << "\n"
          << "pairs " << rep.pairs << "\n"
          << "triples " << rep.triples << "\n"
          << "rank_d1 " << rep.rank_d1 << "\n"
          << "dim_ker_d2 " << rep.dim_ker_d2 << "\n"
          << "betti2 " << rep.betti2 << "\n"
          << "d2_after_d1_vanishes " << (rep.d2_after_d1_vanishes ? "yes" : "no") << "\n";
      out << "omega_exact";
      for (bool b : rep.omega_exact) out << " " << (b ? "1" : "0");
      out << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n"; // message already names position and token
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

} // namespace shiftalg::audit
