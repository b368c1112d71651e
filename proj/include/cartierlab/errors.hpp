#ifndef CARTIERLAB_ERRORS_HPP
#define CARTIERLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartierlab {

// Error taxonomy for the whole library. The CLI maps these to exit codes:
// input-side failures (parse, non-split, reducible, mixed shape) -> 3,
// engine assertion failures (basis deficient, image outside span, bound
// violation, internal) -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSplitDenominator : public Error {
 public:
  explicit NonSplitDenominator(const std::string& factor)
      : Error("denominator has an irreducible factor of degree >= 2 over F_p: " + factor),
        factor_(factor) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

class ReducibleCover : public Error {
 public:
  using Error::Error;
};

class MixedShape : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class BasisDeficient : public Error {
 public:
  using Error::Error;
};

class ImageOutsideSpan : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error("parse error at byte " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace cartierlab

#endif
