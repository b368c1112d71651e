#ifndef CARTIERLAB_REPORT_HPP
#define CARTIERLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cartierlab/bounds.hpp"
#include "cartierlab/cartier.hpp"

namespace cartierlab {

inline constexpr const char* kEngineVersion = "cartier-lab 0.1.0";

struct ReportRecord {
  std::uint64_t p;
  std::string f_input;
  std::string f_reduced;
  std::int64_t genus;
  std::int64_t p_rank;
  std::int64_t g_minus_s;
  std::vector<std::int64_t> a_profile;
  std::int64_t stabilized_at;
  BoundsTable bounds;
  bool sandwich_ok;
  std::vector<std::pair<std::string, double>> timings_ms;
};

// Full pipeline for one curve: reduce, certify a basis, build the Cartier
// matrix, compute the kernel profile, evaluate the bounds with the exact
// profile attached (BoundViolation aborts loudly). n_max <= 0 selects
// min(genus, max(3, stabilization point)).
ReportRecord analyze_curve(std::uint64_t p, const RatFun& f, const std::string& input_echo,
                           std::int64_t n_max = 0);

std::string report_to_json(const ReportRecord& r, bool compact = false);
std::string report_to_csv(const ReportRecord& r);
std::string report_to_markdown(const ReportRecord& r);

// Renderers for a bounds-only run (no curve attached). genus and p_rank of
// the cover are derived from the ramification data and (g_X, s_X).
std::string bounds_to_json(const BoundsTable& t, std::int64_t g_x, std::int64_t s_x);
std::string bounds_to_csv(const BoundsTable& t);
std::string bounds_to_markdown(const BoundsTable& t);

std::int64_t cover_genus(const RamificationData& data, std::int64_t g_x);
std::int64_t cover_p_rank(const RamificationData& data, std::int64_t s_x);

}  // namespace cartierlab

#endif
