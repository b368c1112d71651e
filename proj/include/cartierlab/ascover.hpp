#ifndef CARTIERLAB_ASCOVER_HPP
#define CARTIERLAB_ASCOVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cartierlab/ratfun.hpp"

namespace cartierlab {

// Abstract ramification data (p, multiset of breaks). Enough input for the
// bounds module; no curve required.
struct RamificationData {
  std::uint64_t p;
  std::vector<std::int64_t> d;

  RamificationData(std::uint64_t p_in, std::vector<std::int64_t> d_in);
};

// Stable kernel dimension g_Y - s_Y from the two genus/p-rank formulas:
// p*(g_X - s_X) + sum over Q of (p-1)(d_Q - 1)/2.
std::int64_t g_minus_s(const RamificationData& data, std::int64_t g_x = 0, std::int64_t s_x = 0);

struct BranchPoint {
  std::optional<Fp> center;  // nullopt = the point at infinity
  std::int64_t d;            // break = pole order of the reduced f

  bool at_infinity() const { return !center.has_value(); }
};

// Normalized degree-p cover y^p - y = f of the projective line over F_p.
// Shape constraint: f is either a polynomial of degree d coprime to p
// (infinity is the only branch point) or has zero polynomial part with all
// poles at F_p-rational finite points (infinity unbranched).
struct ASCover {
  std::uint64_t p;
  RatFun f;  // reduced: no polar or polynomial term of p-divisible order, zero constant
  Poly poly_part;
  std::vector<PolarPart> parts;  // sorted by center
  std::vector<BranchPoint> branch;
  bool infinity_branched;
  std::int64_t genus;
  std::int64_t p_rank;

  RamificationData ram() const;
  std::int64_t stable_kernel_dim() const { return genus - p_rank; }
};

struct ReducedForm {
  RatFun f;        // the reduced model
  RatFun witness;  // g with f_input - f = g^p - g
};

// Artin-Schreier reduction f -> f - (g^p - g): removes every polar and
// polynomial term whose order is divisible by p. Errors with ReducibleCover
// when f reduces to a constant (split cover, or a constant shift that has no
// root in F_p).
ReducedForm as_reduce(std::uint64_t p, const RatFun& f);

// Reduces f, extracts branch data, checks the shape constraint, and computes
// genus and p-rank by the closed formulas.
ASCover build_cover(std::uint64_t p, const RatFun& f);

}  // namespace cartierlab

#endif
