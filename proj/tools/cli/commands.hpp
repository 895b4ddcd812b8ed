#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/query_result.hpp"
#include "invforms/classify.hpp"
#include "invforms/rootsys.hpp"

namespace invforms::cli {

namespace exit_code {
inline constexpr int kDecided = 0;
inline constexpr int kDisagree = 1;
inline constexpr int kInputError = 2;
inline constexpr int kUnknown = 3;
inline constexpr int kResource = 4;
}  // namespace exit_code

/// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "c1,c2,...,cN" with exactly `rank` non-negative integers.
Weight parse_weight(const std::string& text, int rank);

/// One regenerated example family: the weights it covers and where the
/// classifier says the module is not orthogonal.
struct ExampleFamily {
  std::string name;
  std::string parameter;  // "l" or "n"
  int first = 0;
  int last = 0;
  std::vector<int> non_orthogonal;
};

std::vector<ExampleFamily> example_families(int max_param);

}  // namespace invforms::cli
