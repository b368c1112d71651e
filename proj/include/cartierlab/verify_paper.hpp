#ifndef CARTIERLAB_VERIFY_PAPER_HPP
#define CARTIERLAB_VERIFY_PAPER_HPP

#include <string>
#include <vector>

namespace cartierlab {

struct FixtureResult {
  std::string name;
  bool pass;
  std::string detail;  // expected-vs-got diff on failure, empty on pass
};

std::vector<std::string> fixture_names();

// Runs the published reference fixtures (small curves with known genus and
// kernel profiles, the d = 100 bounds table, the 343-curve family scan, the
// p = 2 closed form). An empty filter runs everything; an unknown name
// throws std::invalid_argument.
std::vector<FixtureResult> run_paper_fixtures(const std::vector<std::string>& filter);

}  // namespace cartierlab

#endif
