#include <iostream>

#include "invforms/classify.hpp"

int main() {
  using namespace invforms;
  const auto fc = classify(SimpleType(Family::C, 6), Weight::fundamental(6, 2), 2);
  std::cout << to_string(fc.verdict) << '\n';
  return fc.verdict == Verdict::SymplecticOnly ? 0 : 1;
}
