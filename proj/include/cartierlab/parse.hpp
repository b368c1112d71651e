#ifndef CARTIERLAB_PARSE_HPP
#define CARTIERLAB_PARSE_HPP

#include <cstdint>
#include <string>

#include "cartierlab/ratfun.hpp"

namespace cartierlab {

// Curve-equation expression language. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := INT ('*'? factor)? | factor
//   factor := var ('^' SIGNED_INT)?
//           | '(' var ('-'|'+') INT ')' ('^' SIGNED_INT)?
//   var    := 'x' | 't'
// All integer literals are reduced mod p; exponents are plain integers.
// Errors carry the byte offset and the expected-token set.
RatFun parse_f(const std::string& src, std::uint64_t p);

// Canonical printer: polynomial part in descending powers, then principal
// parts by increasing center and increasing pole order. parse_f(print_f(h))
// is the identity on canonical forms with split denominators.
std::string print_f(const RatFun& h);

// f(x) -> f((a x + b) / (c x + d)), exact; needs ad - bc != 0 mod p.
RatFun mobius_substitute(const RatFun& f, const Fp& a, const Fp& b, const Fp& c, const Fp& d);

}  // namespace cartierlab

#endif
