#include "cartierlab/parse.hpp"

#include <cctype>
#include <sstream>

namespace cartierlab {

namespace {

class Parser {
 public:
  Parser(const std::string& src, std::uint64_t p) : src_(src), p_(p) {}

  RatFun parse() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
      skip_ws();
    }
    RatFun sum = parse_term();
    if (negate) sum = -sum;
    skip_ws();
    while (pos_ < src_.size()) {
      char op = peek();
      if (op != '+' && op != '-') fail("'+', '-' or end of input");
      ++pos_;
      skip_ws();
      RatFun term = parse_term();
      sum = op == '+' ? sum + term : sum - term;
      skip_ws();
    }
    return sum;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  bool at_int() const { return std::isdigit(static_cast<unsigned char>(peek())); }
  bool at_var() const { return peek() == 'x' || peek() == 't'; }

  std::int64_t parse_uint() {
    if (!at_int()) fail("an integer");
    std::size_t start = pos_;
    while (at_int()) ++pos_;
    std::string digits = src_.substr(start, pos_ - start);
    try {
      return std::stoll(digits);
    } catch (const std::exception&) {
      throw ParseError(start, "an integer small enough for 64 bits");
    }
  }

  std::int64_t parse_signed_int() {
    std::int64_t sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    return sign * parse_uint();
  }

  // var ('^' SIGNED_INT)?  or  '(' var sign INT ')' ('^' SIGNED_INT)?
  RatFun parse_factor() {
    Fp shift = Fp::zero(p_);
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      if (!at_var()) fail("'x' or 't'");
      ++pos_;
      skip_ws();
      char sgn = peek();
      if (sgn != '-' && sgn != '+') fail("'-' or '+'");
      ++pos_;
      skip_ws();
      std::int64_t c = parse_uint();
      shift = sgn == '-' ? Fp(c, p_) : -Fp(c, p_);
      skip_ws();
      if (peek() != ')') fail("')'");
      ++pos_;
    } else if (at_var()) {
      ++pos_;
    } else {
      fail("an integer, 'x', 't' or '('");
    }
    std::int64_t exp = 1;
    if (peek() == '^') {
      ++pos_;
      exp = parse_signed_int();
    }
    RatFun base = RatFun(Poly::variable(p_) - Poly(shift));
    return base.pow(exp);
  }

  RatFun parse_term() {
    if (at_int()) {
      std::int64_t c = parse_uint();
      Fp coeff(c, p_);
      std::size_t save = pos_;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      if (at_var() || peek() == '(') {
        return parse_factor() * coeff;
      }
      pos_ = save;
      return RatFun::constant(coeff);
    }
    return parse_factor();
  }

  const std::string& src_;
  std::uint64_t p_;
  std::size_t pos_ = 0;
};

void print_coeff_times(std::ostringstream& os, const Fp& c, bool base_follows) {
  if (!base_follows) {
    os << c.value();
    return;
  }
  if (c.value() != 1) os << c.value() << "*";
}

}  // namespace

RatFun parse_f(const std::string& src, std::uint64_t p) {
  require_prime_modulus(p);
  return Parser(src, p).parse();
}

std::string print_f(const RatFun& h) {
  PartialFractions pf = partial_fractions(h);
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " + ";
    first = false;
  };
  for (auto it = pf.polynomial_part.terms().rbegin(); it != pf.polynomial_part.terms().rend(); ++it) {
    sep();
    Fp c(static_cast<std::int64_t>(it->second), h.modulus());
    if (it->first == 0) {
      os << c.value();
    } else {
      print_coeff_times(os, c, true);
      os << "x";
      if (it->first != 1) os << "^" << it->first;
    }
  }
  for (const auto& part : pf.parts) {
    for (const auto& [k, c] : part.coeffs) {
      if (c.is_zero()) continue;
      sep();
      print_coeff_times(os, c, true);
      if (part.center.is_zero()) {
        os << "x^-" << k;
      } else {
        os << "(x-" << part.center.value() << ")^-" << k;
      }
    }
  }
  if (first) os << "0";
  return os.str();
}

RatFun mobius_substitute(const RatFun& f, const Fp& a, const Fp& b, const Fp& c, const Fp& d) {
  std::uint64_t p = f.modulus();
  if ((a * d - b * c).is_zero()) throw Error("Mobius substitution needs ad - bc != 0");
  Poly top = Poly::monomial(a, 1) + Poly(b);
  Poly bot = Poly::monomial(c, 1) + Poly(d);
  std::int64_t deg = std::max(f.num().degree_or(0), f.den().degree_or(0));
  auto lift = [&](const Poly& g) {
    Poly out(p);
    for (const auto& [e, v] : g.terms()) {
      out = out + top.pow(static_cast<std::uint64_t>(e)) *
                      bot.pow(static_cast<std::uint64_t>(deg - e)) * Fp(static_cast<std::int64_t>(v), p);
    }
    return out;
  };
  return RatFun(lift(f.num()), lift(f.den()));
}

}  // namespace cartierlab
