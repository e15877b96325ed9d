#include <iostream>

#include "eplab_tools/acceptance.hpp"

int main() {
  int failed = 0;
  eplab::tools::run_acceptance({}, [&](const eplab::tools::CriterionResult& r) {
    std::cout << eplab::tools::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
