#ifndef CARTIERLAB_REGDIFF_HPP
#define CARTIERLAB_REGDIFF_HPP

#include <cstdint>
#include <vector>

#include "cartierlab/ascover.hpp"
#include "cartierlab/gfmatrix.hpp"
#include "cartierlab/series.hpp"

namespace cartierlab {

// Monomial differential on Y: (x - center)^{-a} y^b dx (finite-pole kind,
// a >= 1) or x^a y^b dx (polynomial kind, a >= 0), with 0 <= b < p.
//
// Valuation rules at the unique point of Y above a branch point:
//   finite branch point x_j, break d_j:  v(x - x_j) = p, v(y) = -d_j,
//                                        v(dx) = (p-1)(d_j+1)
//   branched infinity, break d:          v(x) = -p, v(y) = -d,
//                                        v(dx) = (p-1)(d+1) - 2p
// At each of the p points above an unbranched infinity, u = 1/x is a
// uniformizer, y = zeta + O(u) for zeta in F_p, and v(dx) = -2.
struct DiffAtom {
  bool finite_pole;
  Fp center;  // meaningful only when finite_pole
  std::int64_t a;
  std::int64_t b;

  bool operator==(const DiffAtom& o) const;
  bool operator<(const DiffAtom& o) const;  // by kind, center, a, b
};

std::int64_t atom_valuation(const ASCover& cover, const DiffAtom& atom, const BranchPoint& place);

// All atoms with nonnegative valuation at every branch point (the per-place
// diagonal constraint a*p + d_j*b <= (p-1)(d_j+1), resp. the infinity-branched
// analogue with the extra -2p). The condition at an unbranched infinity is
// deliberately not imposed here.
std::vector<DiffAtom> candidate_atoms(const ASCover& cover);

// A differential on Y written as sum_b comp[b](x) y^b dx.
class YDifferential {
 public:
  explicit YDifferential(std::uint64_t p);
  std::uint64_t modulus() const { return p_; }
  const RatFun& component(std::int64_t b) const;
  void set_component(std::int64_t b, const RatFun& h);
  void add_component(std::int64_t b, const RatFun& h);
  bool is_zero() const;

  YDifferential operator+(const YDifferential& o) const;
  YDifferential operator-(const YDifferential& o) const;
  YDifferential operator*(const Fp& s) const;
  bool operator==(const YDifferential& o) const;

  static YDifferential from_atom(std::uint64_t p, const DiffAtom& atom, const Fp& coeff);
  static YDifferential from_atoms(std::uint64_t p, const std::vector<DiffAtom>& atoms,
                                  const std::vector<std::uint64_t>& coords);

 private:
  std::uint64_t p_;
  std::vector<RatFun> comp_;
};

struct RegularBasis {
  ASCover cover;
  std::vector<DiffAtom> atoms;
  std::vector<std::vector<std::uint64_t>> vecs;  // basis vectors over atoms, RREF kernel form
  std::vector<std::size_t> free_cols;            // vecs[k] has 1 at free_cols[k]

  std::size_t dim() const { return vecs.size(); }
  YDifferential element(std::size_t i) const;
  // Atom coordinates of a differential; ImageOutsideSpan if any component
  // involves a pole or monomial outside the candidate atom list.
  std::vector<std::uint64_t> atom_coords(const YDifferential& w) const;
  // Coordinates in this basis; ImageOutsideSpan if w is not in the span.
  std::vector<std::uint64_t> basis_coords(const std::vector<std::uint64_t>& atom_vec) const;
};

// Basis of the regular differentials H^0(Y, Omega^1) as exact coordinate
// vectors over the candidate atoms. Regularity at branch points is diagonal
// (atoms centered at one branch point have pairwise distinct valuations
// there, asserted at runtime). At an unbranched infinity the constraint is
// imposed on combinations: for each of the p points above it, y is expanded
// as a series and every coefficient of the strictly-polar window must vanish.
// Aborts with BasisDeficient when the kernel dimension differs from the
// genus.
RegularBasis regular_basis(const ASCover& cover);

// Independent regularity checker: exact valuations of the combined
// differential at every point above branch points and above infinity.
bool verify_regular(const ASCover& cover, const YDifferential& w);

// Exact valuation of w at the unique point above a branch place.
std::int64_t branch_valuation(const ASCover& cover, const YDifferential& w, const BranchPoint& place);

// Valuations of w at the p points above an unbranched infinity, indexed by
// zeta = 0..p-1. Entries are exact when a nonzero coefficient appears inside
// the window, otherwise clipped to (window - 2).
std::vector<std::int64_t> infinity_valuations(const ASCover& cover, const YDifferential& w,
                                              std::int64_t window);

}  // namespace cartierlab

#endif
