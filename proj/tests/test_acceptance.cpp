#include <iostream>

#include "zdag/suite.hpp"

int main() {
  const auto results = zdag::run_suite(zdag::SuiteOptions{}, std::cout);
  return zdag::all_passed(results) ? 0 : 1;
}
