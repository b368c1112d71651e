#include "cartierlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cartierlab/parse.hpp"
#include "cartierlab/report.hpp"
#include "cartierlab/sweep.hpp"
#include "cartierlab/verify_paper.hpp"
#include "json.hpp"

namespace cartierlab {

namespace {

struct MobiusFlags {
  bool invert = false;
  std::optional<std::int64_t> shift;
  std::optional<std::int64_t> scale;
  std::vector<std::int64_t> abcd;
};

RatFun apply_mobius(const MobiusFlags& m, const RatFun& f, std::uint64_t p) {
  RatFun g = f;
  if (m.invert) g = mobius_substitute(g, Fp(0, p), Fp(1, p), Fp(1, p), Fp(0, p));
  if (m.shift) g = mobius_substitute(g, Fp(1, p), Fp(*m.shift, p), Fp(0, p), Fp(1, p));
  if (m.scale) g = mobius_substitute(g, Fp(*m.scale, p), Fp(0, p), Fp(0, p), Fp(1, p));
  if (!m.abcd.empty()) {
    if (m.abcd.size() != 4) throw Error("--mobius needs four integers a,b,c,d");
    g = mobius_substitute(g, Fp(m.abcd[0], p), Fp(m.abcd[1], p), Fp(m.abcd[2], p), Fp(m.abcd[3], p));
  }
  return g;
}

std::string render_report(const ReportRecord& r, const std::string& format) {
  if (format == "json") return report_to_json(r);
  if (format == "csv") return report_to_csv(r);
  if (format == "md") return report_to_markdown(r);
  throw Error("unknown format: " + format);
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const BasisDeficient*>(&e) || dynamic_cast<const ImageOutsideSpan*>(&e) ||
      dynamic_cast<const BoundViolation*>(&e) || dynamic_cast<const InternalError*>(&e) ||
      dynamic_cast<const PrecisionExhausted*>(&e)) {
    return 4;
  }
  return 3;
}

int cmd_invariants(std::uint64_t p, const std::string& f_text, bool use_stdin, std::int64_t n_max,
                   const std::string& format, const MobiusFlags& mobius, std::ostream& out) {
  if (use_stdin) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      nlohmann::json spec = nlohmann::json::parse(line);
      std::uint64_t lp = spec.at("p").get<std::uint64_t>();
      std::string lf = spec.at("f").get<std::string>();
      std::int64_t ln = spec.value("n_max", n_max);
      RatFun f = apply_mobius(mobius, parse_f(lf, lp), lp);
      out << report_to_json(analyze_curve(lp, f, lf, ln), /*compact=*/true) << "\n";
    }
    return 0;
  }
  RatFun f = apply_mobius(mobius, parse_f(f_text, p), p);
  std::string text = render_report(analyze_curve(p, f, f_text, n_max), format);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
  return 0;
}

int cmd_bounds(std::uint64_t p, const std::vector<std::int64_t>& d_list, std::int64_t n_max,
               std::int64_t g_x, std::int64_t s_x, const std::vector<std::int64_t>& ax_profile,
               const std::string& format, std::ostream& out) {
  RamificationData data(p, d_list);
  BoundsTable t = bounds_table(p, data, ax_profile, n_max, g_x, s_x);
  if (format == "json") {
    out << bounds_to_json(t, g_x, s_x) << "\n";
  } else if (format == "csv") {
    out << bounds_to_csv(t);
  } else if (format == "md") {
    out << bounds_to_markdown(t);
  } else {
    throw Error("unknown format: " + format);
  }
  return 0;
}

int cmd_verify_paper(const std::vector<std::string>& filter, std::ostream& out, std::ostream& err) {
  std::vector<FixtureResult> results;
  try {
    results = run_paper_fixtures(filter);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\nknown fixtures:";
    for (const auto& name : fixture_names()) err << " " << name;
    err << "\n";
    return 2;
  }
  bool all_pass = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.pass) {
      out << "  " << r.detail;
      all_pass = false;
    }
    out << "\n";
  }
  out << (all_pass ? "all fixtures pass" : "fixture mismatch") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Cartier-operator kernel profiles and bounds for Artin-Schreier covers of the projective line"};
  app.require_subcommand(1);

  // invariants
  auto* inv = app.add_subcommand("invariants", "genus, p-rank and kernel profile of one curve");
  std::uint64_t inv_p = 3;
  std::string inv_f;
  std::int64_t inv_n = 0;
  std::string inv_format = "json";
  bool inv_stdin = false;
  MobiusFlags inv_mobius;
  inv->add_option("--p", inv_p, "characteristic (prime)");
  inv->add_option("--f", inv_f, "curve equation right-hand side, e.g. \"x^-4 + x^-3\"");
  inv->add_option("--n-max", inv_n, "profile length (0: up to stabilization, at least 3)");
  inv->add_option("--format", inv_format, "json|csv|md")->check(CLI::IsMember({"json", "csv", "md"}));
  inv->add_flag("--stdin", inv_stdin, "read one {\"p\":..,\"f\":..} JSON per line from stdin");
  inv->add_flag("--invert", inv_mobius.invert, "substitute x -> 1/x before analysis");
  inv->add_option("--shift", inv_mobius.shift, "substitute x -> x + c");
  inv->add_option("--scale", inv_mobius.scale, "substitute x -> c*x");
  inv->add_option("--mobius", inv_mobius.abcd, "substitute x -> (a*x+b)/(c*x+d)")->expected(4);

  // bounds
  auto* bnd = app.add_subcommand("bounds", "closed-form kernel-dimension bounds from ramification data");
  std::uint64_t bnd_p = 3;
  std::vector<std::int64_t> bnd_d;
  std::int64_t bnd_n = 10, bnd_gx = 0, bnd_sx = 0;
  std::vector<std::int64_t> bnd_ax;
  std::string bnd_format = "md";
  bnd->add_option("--p", bnd_p, "characteristic (prime)");
  bnd->add_option("--d", bnd_d, "ramification breaks, comma separated")->delimiter(',')->required();
  bnd->add_option("--n-max", bnd_n, "number of rows");
  bnd->add_option("--gx", bnd_gx, "genus of the base curve");
  bnd->add_option("--sx", bnd_sx, "p-rank of the base curve");
  bnd->add_option("--ax-profile", bnd_ax, "a_X^n profile, comma separated (default all zero)")->delimiter(',');
  bnd->add_option("--format", bnd_format, "json|csv|md")->check(CLI::IsMember({"json", "csv", "md"}));

  // sweep
  auto* swp = app.add_subcommand("sweep", "CSV scan over a curve family or random reduced covers");
  SweepOptions opt;
  std::string swp_out_path;
  bool swp_family = false;
  swp->add_option("--p", opt.p, "characteristic (prime)");
  swp->add_flag("--family-pole", swp_family,
                "scan the family x^-d + lower-order polar terms over all coefficient tuples");
  swp->add_option("--d", opt.family_d, "family pole order (with --family-pole)");
  swp->add_option("--random", opt.random_count, "number of random reduced covers");
  swp->add_option("--max-total-break", opt.max_total_break, "bound on the sum of breaks (random mode)");
  swp->add_option("--seed", opt.seed, "RNG seed (random mode)");
  swp->add_option("--jobs", opt.jobs, "worker threads (default: CARTIER_LAB_JOBS or hardware)");
  swp->add_option("--n-max", opt.n_max, "profile length per curve (0: stabilization)");
  swp->add_option("--out", swp_out_path, "output file (default stdout)");

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "check the published reference values fixture by fixture");
  std::vector<std::string> vp_filter;
  vp->add_option("fixtures", vp_filter, "fixture names (default: all)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (inv->parsed()) {
      if (!inv_stdin && inv_f.empty()) {
        err << "invariants: --f or --stdin required\n";
        return 2;
      }
      return cmd_invariants(inv_p, inv_f, inv_stdin, inv_n, inv_format, inv_mobius, out);
    }
    if (bnd->parsed()) {
      return cmd_bounds(bnd_p, bnd_d, bnd_n, bnd_gx, bnd_sx, bnd_ax, bnd_format, out);
    }
    if (swp->parsed()) {
      opt.mode = swp_family ? SweepOptions::Mode::FamilyPole : SweepOptions::Mode::Random;
      if (!swp_out_path.empty()) {
        std::ofstream file(swp_out_path);
        if (!file) throw Error("cannot open output file: " + swp_out_path);
        run_sweep(opt, file, err);
      } else {
        run_sweep(opt, out, err);
      }
      return 0;
    }
    if (vp->parsed()) {
      return cmd_verify_paper(vp_filter, out, err);
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON input: " << e.what() << "\n";
    return 3;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace cartierlab
