#include "cartierlab/report.hpp"

#include <chrono>
#include <sstream>

#include "cartierlab/parse.hpp"
#include "json.hpp"

namespace cartierlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::ordered_json bounds_rows_json(const BoundsTable& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["L"] = row.L_combined;
    r["U"] = row.U_capped;
    r["L_closed"] = row.L_closed;
    r["U_closed"] = row.U_closed;
    if (row.a_exact) {
      r["a_exact"] = *row.a_exact;
    } else {
      r["a_exact"] = nullptr;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string join_profile(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ";";
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::int64_t cover_genus(const RamificationData& data, std::int64_t g_x) {
  std::int64_t p = static_cast<std::int64_t>(data.p);
  std::int64_t sum = 0;
  for (std::int64_t d : data.d) sum += (d + 1) * (p - 1);
  return 1 + p * (g_x - 1) + sum / 2;
}

std::int64_t cover_p_rank(const RamificationData& data, std::int64_t s_x) {
  std::int64_t p = static_cast<std::int64_t>(data.p);
  return 1 + p * (s_x - 1) + static_cast<std::int64_t>(data.d.size()) * (p - 1);
}

ReportRecord analyze_curve(std::uint64_t p, const RatFun& f, const std::string& input_echo,
                           std::int64_t n_max) {
  std::vector<std::pair<std::string, double>> timings;
  Clock::time_point total0 = Clock::now();

  Clock::time_point t0 = Clock::now();
  ASCover cover = build_cover(p, f);
  timings.emplace_back("reduce", ms_since(t0));

  t0 = Clock::now();
  RegularBasis basis = regular_basis(cover);
  timings.emplace_back("basis", ms_since(t0));

  t0 = Clock::now();
  CartierMatrix cm = build_matrix(basis);
  timings.emplace_back("matrix", ms_since(t0));

  t0 = Clock::now();
  std::vector<std::int64_t> profile;
  std::int64_t stabilized_at = 0;
  std::int64_t n_eff = 0;
  if (cover.genus > 0) {
    KernelProfile full = kernel_profile(cm, cover.genus);
    stabilized_at = full.stabilized_at;
    n_eff = n_max > 0 ? n_max : std::min(cover.genus, std::max<std::int64_t>(3, full.stabilized_at));
    profile.assign(full.a.begin(), full.a.begin() + std::min(n_eff, cover.genus));
    while (static_cast<std::int64_t>(profile.size()) < n_eff) profile.push_back(full.stabilized_value);
  }
  timings.emplace_back("profile", ms_since(t0));

  t0 = Clock::now();
  BoundsTable table = bounds_table(p, cover.ram(), {}, n_eff, 0, 0, profile);
  timings.emplace_back("bounds", ms_since(t0));
  timings.emplace_back("total", ms_since(total0));

  return ReportRecord{p,
                      input_echo,
                      print_f(cover.f),
                      cover.genus,
                      cover.p_rank,
                      cover.stable_kernel_dim(),
                      profile,
                      stabilized_at,
                      std::move(table),
                      true,
                      std::move(timings)};
}

std::string report_to_json(const ReportRecord& r, bool compact) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["engine_version"] = kEngineVersion;
  j["p"] = r.p;
  j["f"] = r.f_input;
  j["f_reduced"] = r.f_reduced;
  j["genus"] = r.genus;
  j["p_rank"] = r.p_rank;
  j["g_minus_s"] = r.g_minus_s;
  j["a_profile"] = r.a_profile;
  j["stabilized_at"] = r.stabilized_at;
  j["bounds"] = bounds_rows_json(r.bounds);
  j["checks"] = nlohmann::ordered_json{{"sandwich", r.sandwich_ok}};
  nlohmann::ordered_json t;
  for (const auto& [k, v] : r.timings_ms) t[k] = v;
  j["timings_ms"] = t;
  return compact ? j.dump() : j.dump(2);
}

std::string report_to_csv(const ReportRecord& r) {
  std::ostringstream os;
  os << "p,f,genus,p_rank,g_minus_s,stabilized_at,a_profile,L_profile,U_profile,sandwich_ok\n";
  std::vector<std::int64_t> ls, us;
  for (const auto& row : r.bounds.rows) {
    ls.push_back(row.L_combined);
    us.push_back(row.U_capped);
  }
  os << r.p << "," << r.f_input << "," << r.genus << "," << r.p_rank << "," << r.g_minus_s << ","
     << r.stabilized_at << "," << join_profile(r.a_profile) << "," << join_profile(ls) << ","
     << join_profile(us) << "," << (r.sandwich_ok ? 1 : 0) << "\n";
  return os.str();
}

namespace {

void markdown_bounds_rows(std::ostringstream& os, const BoundsTable& t, bool with_exact) {
  os << "| n ";
  for (const auto& row : t.rows) os << "| " << row.n << " ";
  os << "|\n|---";
  for (std::size_t i = 0; i < t.rows.size(); ++i) os << "|---";
  os << "|\n| L^n ";
  for (const auto& row : t.rows) os << "| " << row.L_combined << " ";
  os << "|\n| U^n ";
  for (const auto& row : t.rows) os << "| " << row.U_capped << " ";
  os << "|\n";
  if (with_exact) {
    os << "| a^n ";
    for (const auto& row : t.rows) {
      os << "| ";
      if (row.a_exact) {
        os << *row.a_exact << " ";
      } else {
        os << "- ";
      }
    }
    os << "|\n";
  }
}

}  // namespace

std::string report_to_markdown(const ReportRecord& r) {
  std::ostringstream os;
  os << "# y^" << r.p << " - y = " << r.f_input << " over F_" << r.p << "\n\n";
  os << "- reduced model: `" << r.f_reduced << "`\n";
  os << "- genus: " << r.genus << "\n";
  os << "- p-rank: " << r.p_rank << "\n";
  os << "- g - s: " << r.g_minus_s << "\n";
  os << "- kernel profile a^n: " << join_profile(r.a_profile) << " (stable from n = "
     << r.stabilized_at << ")\n\n";
  if (!r.bounds.rows.empty()) markdown_bounds_rows(os, r.bounds, true);
  return os.str();
}

std::string bounds_to_json(const BoundsTable& t, std::int64_t g_x, std::int64_t s_x) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["engine_version"] = kEngineVersion;
  j["p"] = t.p;
  j["f"] = nullptr;
  j["d_list"] = t.data.d;
  j["genus"] = cover_genus(t.data, g_x);
  j["p_rank"] = cover_p_rank(t.data, s_x);
  j["g_minus_s"] = t.g_minus_s;
  j["a_profile"] = nlohmann::ordered_json::array();
  j["bounds"] = bounds_rows_json(t);
  j["checks"] = nlohmann::ordered_json{{"sandwich", true}};
  return j.dump(2);
}

std::string bounds_to_csv(const BoundsTable& t) {
  std::ostringstream os;
  os << "n,L_closed,L_combined,U_closed,U_capped,a_exact\n";
  for (const auto& row : t.rows) {
    os << row.n << "," << row.L_closed << "," << row.L_combined << "," << row.U_closed << ","
       << row.U_capped << ",";
    if (row.a_exact) os << *row.a_exact;
    os << "\n";
  }
  return os.str();
}

std::string bounds_to_markdown(const BoundsTable& t) {
  std::ostringstream os;
  os << "# Kernel-dimension bounds, p = " << t.p << ", d = " << join_profile(t.data.d)
     << ", g - s = " << t.g_minus_s << "\n\n";
  bool with_exact = false;
  for (const auto& row : t.rows) {
    if (row.a_exact) with_exact = true;
  }
  markdown_bounds_rows(os, t, with_exact);
  return os.str();
}

}  // namespace cartierlab
