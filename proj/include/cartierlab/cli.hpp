#ifndef CARTIERLAB_CLI_HPP
#define CARTIERLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cartierlab {

// Entry point behind the cartier-lab binary. Exit codes: 0 ok, 1
// verification mismatch, 2 usage, 3 input/parse error, 4 engine assertion
// (BasisDeficient, ImageOutsideSpan, BoundViolation, internal).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartierlab

#endif
