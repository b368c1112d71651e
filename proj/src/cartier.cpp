#include "cartierlab/cartier.hpp"

#include <algorithm>
#include <functional>

namespace cartierlab {

namespace {

Fp binom_mod_p(std::int64_t l, std::int64_t m, std::uint64_t p) {
  // l < p, so the multiplicative formula needs no carries.
  Fp r = Fp::one(p);
  for (std::int64_t t = 1; t <= m; ++t) {
    r = r * Fp(l - m + t, p) / Fp(t, p);
  }
  return r;
}

}  // namespace

XDifferential cartier_X(const XDifferential& w) {
  std::uint64_t p = w.h.modulus();
  return XDifferential{p_power_decompose(w.h)[static_cast<std::size_t>(p - 1)]};
}

XDifferential w_op(std::int64_t l, std::int64_t m, const RatFun& f, const XDifferential& w) {
  std::uint64_t p = f.modulus();
  if (m < 0 || m > l || l > static_cast<std::int64_t>(p) - 1) {
    throw Error("w_op needs 0 <= m <= l <= p-1");
  }
  Fp c = binom_mod_p(l, m, p);
  if (c.is_zero() || w.h.is_zero()) return XDifferential{RatFun(p)};
  RatFun inner = w.h * c;
  if (l != m) inner = inner * (-f).pow(l - m);
  return cartier_X(XDifferential{inner});
}

YDifferential cartier_Y(const ASCover& cover, const YDifferential& w) {
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  YDifferential out(cover.p);
  for (std::int64_t j = 0; j < p; ++j) {
    RatFun acc(cover.p);
    for (std::int64_t i = j; i < p; ++i) {
      if (w.component(i).is_zero()) continue;
      acc = acc + w_op(i, j, cover.f, XDifferential{w.component(i)}).h;
    }
    out.set_component(j, acc);
  }
  return out;
}

namespace {

// Applies the chain s_0 <= s_1 <= ... <= s_n to w, innermost first:
// w_op(s_1, s_0, f, w_op(s_2, s_1, f, ... w_op(s_n, s_{n-1}, f, w))).
RatFun apply_chain(const RatFun& f, const std::vector<std::int64_t>& s, const RatFun& w) {
  RatFun r = w;
  for (std::size_t t = s.size() - 1; t >= 1; --t) {
    r = w_op(s[t], s[t - 1], f, XDifferential{r}).h;
    if (r.is_zero()) break;
  }
  return r;
}

// Enumerates nondecreasing chains s of fixed length with given first entry,
// invoking fn on each completed chain. The last entry ranges over
// [previous, p-1] unless fixed_last >= 0.
void for_each_chain(std::int64_t p, std::int64_t first, std::int64_t fixed_last, std::size_t length,
                    std::vector<std::int64_t>& s, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  if (s.size() == length) {
    fn(s);
    return;
  }
  bool last_slot = s.size() + 1 == length;
  std::int64_t lo = s.back();
  std::int64_t hi = (last_slot && fixed_last >= 0) ? fixed_last : p - 1;
  if (last_slot && fixed_last >= 0) lo = std::max(lo, fixed_last);
  for (std::int64_t v = lo; v <= hi; ++v) {
    s.push_back(v);
    for_each_chain(p, first, fixed_last, length, s, fn);
    s.pop_back();
  }
}

}  // namespace

YDifferential cartier_Y_power(const ASCover& cover, const YDifferential& w, std::int64_t n) {
  if (n < 1) throw Error("power must be >= 1");
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  YDifferential out(cover.p);
  for (std::int64_t j = 0; j < p; ++j) {
    RatFun acc(cover.p);
    std::vector<std::int64_t> s{j};
    for_each_chain(p, j, -1, static_cast<std::size_t>(n) + 1, s,
                   [&](const std::vector<std::int64_t>& chain) {
                     const RatFun& comp = w.component(chain.back());
                     if (comp.is_zero()) return;
                     acc = acc + apply_chain(cover.f, chain, comp);
                   });
    out.set_component(j, acc);
  }
  return out;
}

bool verify_kernel_relations(const ASCover& cover, const YDifferential& w, std::int64_t n) {
  if (n < 1) throw Error("power must be >= 1");
  std::int64_t p = static_cast<std::int64_t>(cover.p);
  auto cartier_x_n = [&](const RatFun& h) {
    XDifferential v{h};
    for (std::int64_t t = 0; t < n; ++t) v = cartier_X(v);
    return v.h;
  };
  if (!cartier_x_n(w.component(p - 1)).is_zero()) return false;
  for (std::int64_t j = p - 2; j >= 0; --j) {
    RatFun rhs(cover.p);
    for (std::int64_t i = j + 1; i < p; ++i) {
      if (w.component(i).is_zero()) continue;
      std::vector<std::int64_t> s{j};
      for_each_chain(p, j, i, static_cast<std::size_t>(n) + 1, s,
                     [&](const std::vector<std::int64_t>& chain) {
                       rhs = rhs + apply_chain(cover.f, chain, w.component(i));
                     });
    }
    if (cartier_x_n(w.component(j)) != -rhs) return false;
  }
  return true;
}

CartierMatrix build_matrix(const RegularBasis& basis) {
  std::size_t g = basis.dim();
  GFMatrix m(basis.cover.p, g, g);
  for (std::size_t j = 0; j < g; ++j) {
    YDifferential image = cartier_Y(basis.cover, basis.element(j));
    std::vector<std::uint64_t> coords = basis.basis_coords(basis.atom_coords(image));
    for (std::size_t i = 0; i < g; ++i) m.set(i, j, coords[i]);
  }
  return CartierMatrix{m, basis};
}

KernelProfile kernel_profile(const CartierMatrix& cm, std::int64_t n_max) {
  if (n_max < 1) throw Error("n_max must be >= 1");
  std::int64_t g = static_cast<std::int64_t>(cm.m.rows());
  std::vector<std::int64_t> ranks;
  if (g > 0) {
    GFMatrix pw = cm.m;
    ranks.push_back(static_cast<std::int64_t>(pw.rank()));
    while (ranks.size() < 2 || ranks[ranks.size() - 1] != ranks[ranks.size() - 2]) {
      if (ranks.size() > static_cast<std::size_t>(g) + 2) {
        throw InternalError("rank sequence failed to stabilize");
      }
      pw = pw.mul(cm.m);
      ranks.push_back(static_cast<std::int64_t>(pw.rank()));
    }
  } else {
    ranks.push_back(0);
  }

  KernelProfile profile{{}, g - ranks.back(), 1};
  if (profile.stabilized_value != cm.basis.cover.stable_kernel_dim()) {
    throw InternalError("stable kernel dimension disagrees with genus minus p-rank");
  }
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (g - ranks[k] == profile.stabilized_value) {
      profile.stabilized_at = static_cast<std::int64_t>(k) + 1;
      break;
    }
  }
  for (std::int64_t nn = 1; nn <= n_max; ++nn) {
    std::int64_t v = nn <= static_cast<std::int64_t>(ranks.size())
                         ? g - ranks[static_cast<std::size_t>(nn - 1)]
                         : profile.stabilized_value;
    profile.a.push_back(v);
  }
  return profile;
}

std::vector<YDifferential> kernel_elements(const CartierMatrix& cm, std::int64_t n) {
  if (n < 1) throw Error("power must be >= 1");
  GFMatrix pw = cm.m;
  for (std::int64_t t = 1; t < n; ++t) pw = pw.mul(cm.m);
  std::vector<YDifferential> out;
  for (const auto& kv : pw.kernel_basis(nullptr)) {
    // kv is in basis coordinates; expand through the basis vectors.
    YDifferential w(cm.basis.cover.p);
    for (std::size_t k = 0; k < kv.size(); ++k) {
      if (kv[k] == 0) continue;
      w = w + cm.basis.element(k) * Fp(static_cast<std::int64_t>(kv[k]), cm.basis.cover.p);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace cartierlab
