#include "cartierlab/regdiff.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace cartierlab {

bool DiffAtom::operator==(const DiffAtom& o) const {
  if (finite_pole != o.finite_pole || a != o.a || b != o.b) return false;
  return !finite_pole || center == o.center;
}

bool DiffAtom::operator<(const DiffAtom& o) const {
  auto key = [](const DiffAtom& t) {
    return std::make_tuple(t.finite_pole ? 0 : 1, t.finite_pole ? t.center.value() : 0, t.a, t.b);
  };
  return key(*this) < key(o);
}

std::int64_t atom_valuation(const ASCover& cover, const DiffAtom& atom, const BranchPoint& place) {
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  std::int64_t d = place.d;
  std::int64_t ord_x;  // order of the x-part at the place, on the base line
  if (place.at_infinity()) {
    ord_x = atom.finite_pole ? atom.a : -atom.a;
  } else if (atom.finite_pole) {
    ord_x = (atom.center == *place.center) ? -atom.a : 0;
  } else {
    ord_x = place.center->is_zero() ? atom.a : 0;
  }
  std::int64_t v = p * ord_x - atom.b * d + (p - 1) * (d + 1);
  if (place.at_infinity()) v -= 2 * p;
  return v;
}

std::vector<DiffAtom> candidate_atoms(const ASCover& cover) {
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  std::vector<DiffAtom> atoms;
  if (cover.infinity_branched) {
    std::int64_t d = cover.branch.front().d;
    std::int64_t budget = (p - 1) * (d + 1) - 2 * p;
    for (std::int64_t b = 0; b < p; ++b) {
      std::int64_t rem = budget - b * d;
      if (rem < 0) continue;
      for (std::int64_t a = 0; a <= rem / p; ++a) {
        atoms.push_back(DiffAtom{false, Fp::zero(cover.p), a, b});
      }
    }
  } else {
    for (const auto& bp : cover.branch) {
      std::int64_t budget = (p - 1) * (bp.d + 1);
      for (std::int64_t b = 0; b < p; ++b) {
        std::int64_t rem = budget - b * bp.d;
        for (std::int64_t a = 1; a <= rem / p; ++a) {
          atoms.push_back(DiffAtom{true, *bp.center, a, b});
        }
      }
    }
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

YDifferential::YDifferential(std::uint64_t p)
    : p_(p), comp_(static_cast<std::size_t>(p), RatFun(p)) {}

const RatFun& YDifferential::component(std::int64_t b) const {
  return comp_.at(static_cast<std::size_t>(b));
}

void YDifferential::set_component(std::int64_t b, const RatFun& h) {
  comp_.at(static_cast<std::size_t>(b)) = h;
}

void YDifferential::add_component(std::int64_t b, const RatFun& h) {
  comp_.at(static_cast<std::size_t>(b)) = comp_.at(static_cast<std::size_t>(b)) + h;
}

bool YDifferential::is_zero() const {
  for (const auto& c : comp_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

YDifferential YDifferential::operator+(const YDifferential& o) const {
  YDifferential r(p_);
  for (std::size_t b = 0; b < comp_.size(); ++b) r.comp_[b] = comp_[b] + o.comp_[b];
  return r;
}

YDifferential YDifferential::operator-(const YDifferential& o) const {
  YDifferential r(p_);
  for (std::size_t b = 0; b < comp_.size(); ++b) r.comp_[b] = comp_[b] - o.comp_[b];
  return r;
}

YDifferential YDifferential::operator*(const Fp& s) const {
  YDifferential r(p_);
  for (std::size_t b = 0; b < comp_.size(); ++b) r.comp_[b] = comp_[b] * s;
  return r;
}

bool YDifferential::operator==(const YDifferential& o) const { return comp_ == o.comp_; }

YDifferential YDifferential::from_atom(std::uint64_t p, const DiffAtom& atom, const Fp& coeff) {
  YDifferential w(p);
  if (coeff.is_zero()) return w;
  RatFun x_part(p);
  if (atom.finite_pole) {
    x_part = RatFun(Poly(coeff), (Poly::variable(p) - Poly(atom.center)).pow(static_cast<std::uint64_t>(atom.a)));
  } else {
    x_part = RatFun(Poly::monomial(coeff, atom.a));
  }
  w.set_component(atom.b, x_part);
  return w;
}

YDifferential YDifferential::from_atoms(std::uint64_t p, const std::vector<DiffAtom>& atoms,
                                        const std::vector<std::uint64_t>& coords) {
  if (atoms.size() != coords.size()) throw Error("atom/coordinate length mismatch");
  YDifferential w(p);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (coords[k] == 0) continue;
    w = w + from_atom(p, atoms[k], Fp(static_cast<std::int64_t>(coords[k]), p));
  }
  return w;
}

YDifferential RegularBasis::element(std::size_t i) const {
  return YDifferential::from_atoms(cover.p, atoms, vecs.at(i));
}

std::vector<std::uint64_t> RegularBasis::atom_coords(const YDifferential& w) const {
  std::map<DiffAtom, std::size_t> index;
  for (std::size_t k = 0; k < atoms.size(); ++k) index.emplace(atoms[k], k);
  std::vector<std::uint64_t> coords(atoms.size(), 0);
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  for (std::int64_t b = 0; b < p; ++b) {
    const RatFun& comp = w.component(b);
    if (comp.is_zero()) continue;
    if (cover.infinity_branched) {
      if (!comp.is_polynomial()) {
        throw ImageOutsideSpan("differential component has a finite pole on a polynomial cover");
      }
      for (const auto& [e, v] : comp.num().terms()) {
        auto it = index.find(DiffAtom{false, Fp::zero(cover.p), e, b});
        if (it == index.end()) throw ImageOutsideSpan("monomial outside the candidate atom list");
        coords[it->second] = v;
      }
    } else {
      PartialFractions pf = partial_fractions(comp);
      if (!pf.polynomial_part.is_zero()) {
        throw ImageOutsideSpan("differential component has a polynomial part");
      }
      for (const auto& part : pf.parts) {
        for (const auto& [k, c] : part.coeffs) {
          auto it = index.find(DiffAtom{true, part.center, k, b});
          if (it == index.end()) throw ImageOutsideSpan("polar term outside the candidate atom list");
          coords[it->second] = c.value();
        }
      }
    }
  }
  return coords;
}

std::vector<std::uint64_t> RegularBasis::basis_coords(const std::vector<std::uint64_t>& atom_vec) const {
  std::uint64_t p = cover.p;
  if (atom_vec.size() != atoms.size()) throw Error("coordinate length mismatch");
  std::vector<std::uint64_t> coords(vecs.size(), 0);
  for (std::size_t k = 0; k < vecs.size(); ++k) coords[k] = atom_vec[free_cols[k]];
  // The candidate combination with those coefficients must reproduce atom_vec.
  std::vector<std::uint64_t> recon(atoms.size(), 0);
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      recon[j] = (recon[j] + mulmod(coords[k], vecs[k][j], p)) % p;
    }
  }
  if (recon != atom_vec) throw ImageOutsideSpan("differential is not in the regular span");
  return coords;
}

namespace {

// Geometric series u/(1 - z*u) = expansion of (x - z)^{-1} at infinity.
Series finite_pole_base(const Fp& z, std::int64_t window) {
  std::uint64_t p = z.modulus();
  Series s("u", p, window);
  Fp acc = Fp::one(p);
  for (std::int64_t t = 1; t < window; ++t) {
    s = s + Series::monomial(acc, t, "u", window);
    acc = acc * z;
  }
  return s;
}

}  // namespace

RegularBasis regular_basis(const ASCover& cover) {
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  RegularBasis basis{cover, candidate_atoms(cover), {}, {}};
  const std::size_t natoms = basis.atoms.size();

  // Distinct-valuation assertion: no two atoms centered at one branch point
  // share a valuation there, so branch regularity really is diagonal.
  for (const auto& place : cover.branch) {
    std::set<std::int64_t> seen;
    for (const auto& atom : basis.atoms) {
      bool centered_here = place.at_infinity() ? !atom.finite_pole
                                               : (atom.finite_pole && atom.center == *place.center);
      if (!centered_here) continue;
      if (!seen.insert(atom_valuation(cover, atom, place)).second) {
        throw InternalError("atoms centered at one branch point share a valuation");
      }
    }
  }

  if (cover.infinity_branched) {
    basis.vecs.assign(natoms, std::vector<std::uint64_t>(natoms, 0));
    for (std::size_t k = 0; k < natoms; ++k) {
      basis.vecs[k][k] = 1;
      basis.free_cols.push_back(k);
    }
  } else {
    const std::int64_t window = p + 4;
    Series f_inf = Series::from_ratfun_at_infinity(cover.f, "u", window);

    // Expansions of the atom x-parts at infinity, truncated to the polar
    // window: regularity at each point needs the coefficients of u^0 and u^1
    // of (x-part)*(y^b) to vanish, since v(dx) = -2 there.
    std::map<std::pair<std::uint64_t, std::int64_t>, Series> xpart;
    for (const auto& bp : cover.branch) {
      Series base = finite_pole_base(*bp.center, window);
      Series cur = Series::constant(Fp::one(cover.p), "u", window);
      std::int64_t amax = ((p - 1) * (bp.d + 1)) / p;
      for (std::int64_t a = 1; a <= amax; ++a) {
        cur = cur * base;
        xpart.emplace(std::make_pair(bp.center->value(), a), cur.truncated(2));
      }
    }

    GFMatrix rows(cover.p, 2 * static_cast<std::size_t>(p), natoms);
    for (std::int64_t zv = 0; zv < p; ++zv) {
      Fp zeta(zv, cover.p);
      Series y = solve_artin_schreier_series(f_inf, zeta, window);
      std::vector<Series> ypow;
      ypow.reserve(static_cast<std::size_t>(p));
      Series cur = Series::constant(Fp::one(cover.p), "u", window);
      for (std::int64_t b = 0; b < p; ++b) {
        ypow.push_back(cur.truncated(2));
        cur = cur * y;
      }
      for (std::size_t j = 0; j < natoms; ++j) {
        const DiffAtom& atom = basis.atoms[j];
        Series bracket = xpart.at(std::make_pair(atom.center.value(), atom.a)) *
                         ypow[static_cast<std::size_t>(atom.b)];
        rows.set(static_cast<std::size_t>(2 * zv), j, bracket.coeff(0).value());
        rows.set(static_cast<std::size_t>(2 * zv + 1), j, bracket.coeff(1).value());
      }
    }
    basis.vecs = rows.kernel_basis(&basis.free_cols);
  }

  if (basis.vecs.size() != static_cast<std::size_t>(cover.genus)) {
    throw BasisDeficient("regular kernel dimension " + std::to_string(basis.vecs.size()) +
                         " does not match genus " + std::to_string(cover.genus));
  }
  return basis;
}

std::int64_t branch_valuation(const ASCover& cover, const YDifferential& w, const BranchPoint& place) {
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  std::int64_t d = place.d;
  std::int64_t best = RatFun::kOrdInfinite;
  for (std::int64_t b = 0; b < p; ++b) {
    const RatFun& comp = w.component(b);
    if (comp.is_zero()) continue;
    std::int64_t ord = place.at_infinity() ? comp.ord_at_infinity() : comp.ord_at(*place.center);
    // v(comp * y^b) = p*ord - b*d; distinct mod p across b, so the minimum
    // over b is the valuation of the sum.
    best = std::min(best, p * ord - b * d);
  }
  if (best == RatFun::kOrdInfinite) return best;
  std::int64_t v = best + (p - 1) * (d + 1);
  if (place.at_infinity()) v -= 2 * p;
  return v;
}

std::vector<std::int64_t> infinity_valuations(const ASCover& cover, const YDifferential& w,
                                              std::int64_t window) {
  if (cover.infinity_branched) throw Error("infinity is branched; use branch_valuation");
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  Series f_inf = Series::from_ratfun_at_infinity(cover.f, "u", window);
  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(p));
  for (std::int64_t zv = 0; zv < p; ++zv) {
    Series y = solve_artin_schreier_series(f_inf, Fp(zv, cover.p), window);
    Series bracket("u", cover.p, window);
    Series ypow = Series::constant(Fp::one(cover.p), "u", window);
    for (std::int64_t b = 0; b < p; ++b) {
      const RatFun& comp = w.component(b);
      if (!comp.is_zero()) {
        bracket = bracket + Series::from_ratfun_at_infinity(comp, "u", window) * ypow;
      }
      ypow = ypow * y;
    }
    vals.push_back(bracket.valuation().value_or(bracket.known_end()) - 2);
  }
  return vals;
}

bool verify_regular(const ASCover& cover, const YDifferential& w) {
  if (w.is_zero()) return true;
  std::int64_t p = static_cast<std::int64_t>(cover.p);

  // Poles of a component away from the branch centers sit above unramified
  // points, where regularity of the sum forces each component regular.
  std::int64_t max_inf_pole = 0;
  for (std::int64_t b = 0; b < p; ++b) {
    const RatFun& comp = w.component(b);
    if (comp.is_zero()) continue;
    max_inf_pole = std::max(max_inf_pole, -std::min<std::int64_t>(comp.ord_at_infinity(), 0));
    if (comp.is_polynomial()) continue;
    if (cover.infinity_branched) return false;
    try {
      PartialFractions pf = partial_fractions(comp);
      for (const auto& part : pf.parts) {
        bool at_branch = false;
        for (const auto& bp : cover.branch) {
          if (!bp.at_infinity() && *bp.center == part.center) at_branch = true;
        }
        if (!at_branch) return false;
      }
    } catch (const NonSplitDenominator&) {
      return false;  // pole above a non-rational point, necessarily irregular
    }
  }

  for (const auto& place : cover.branch) {
    if (branch_valuation(cover, w, place) < 0) return false;
  }

  if (!cover.infinity_branched) {
    std::int64_t window = max_inf_pole + 2 + p;
    for (std::int64_t v : infinity_valuations(cover, w, window)) {
      if (v < 0) return false;
    }
  }
  return true;
}

}  // namespace cartierlab
