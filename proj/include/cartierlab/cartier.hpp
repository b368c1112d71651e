#ifndef CARTIERLAB_CARTIER_HPP
#define CARTIERLAB_CARTIER_HPP

#include <cstdint>
#include <vector>

#include "cartierlab/regdiff.hpp"

namespace cartierlab {

// A rational differential h(x) dx on the base line.
struct XDifferential {
  RatFun h;
};

// Cartier operator on the base: V(h dx) = h_{p-1} dx where h_{p-1} is the
// top component of the p-power decomposition. Over F_p the p-th root on
// coefficients is the identity, so this is honestly linear; powers of the
// matrix below are plain matrix powers, with no Frobenius twisting.
XDifferential cartier_X(const XDifferential& w);

// Binomial-twisted Cartier step mixing y-levels l -> m:
// w_op(l, m, f, w) = V(binom(l, m) * (-f)^{l-m} * w), for 0 <= m <= l <= p-1.
XDifferential w_op(std::int64_t l, std::int64_t m, const RatFun& f, const XDifferential& w);

// Cartier operator on the cover, in y-coordinates:
// V_Y(sum_i w_i y^i) = sum_j (sum_{i>=j} w_op(i, j, f, w_i)) y^j.
YDifferential cartier_Y(const ASCover& cover, const YDifferential& w);

// n-th power of V_Y in the fully expanded chain form: the y^j component is
// the sum over nondecreasing index chains j = s_0 <= ... <= s_n <= p-1 of
// w_op(s_1, s_0, f, w_op(s_2, s_1, f, ... w_op(s_n, s_{n-1}, f, w_{s_n}))).
// Equals applying cartier_Y n times; kept separate as a cross-check.
YDifferential cartier_Y_power(const ASCover& cover, const YDifferential& w, std::int64_t n);

// Kernel membership via the per-level identities: V_X^n(w_{p-1}) = 0 and for
// every j < p-1, V_X^n(w_j) equals minus the sum over i > j of all chains of
// length n from i down to j applied to w_i. True iff V_Y^n(w) = 0.
bool verify_kernel_relations(const ASCover& cover, const YDifferential& w, std::int64_t n);

// g x g matrix of V_Y on a certified regular basis; column j holds the basis
// coordinates of the image of basis element j.
struct CartierMatrix {
  GFMatrix m;
  RegularBasis basis;
};

CartierMatrix build_matrix(const RegularBasis& basis);

// Kernel dimensions of the matrix powers: a[n-1] = dim ker(M^n).
struct KernelProfile {
  std::vector<std::int64_t> a;
  std::int64_t stabilized_value;  // g - rank(M^g) = g - s
  std::int64_t stabilized_at;     // least n with a[n-1] = stabilized_value
};

KernelProfile kernel_profile(const CartierMatrix& cm, std::int64_t n_max);

// Basis of ker(M^n) lifted back to differentials.
std::vector<YDifferential> kernel_elements(const CartierMatrix& cm, std::int64_t n);

}  // namespace cartierlab

#endif
