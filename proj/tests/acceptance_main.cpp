// Exit-criteria suite. Prints one PASS/FAIL line per criterion.
//   zakharov_acceptance_tests            run every criterion
//   zakharov_acceptance_tests 4 7        run the listed criteria

#include <cstdlib>
#include <iostream>
#include <string>

#include "zakharov/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace zakharov::acceptance;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  if (ids.empty()) ids = criterion_ids();

  const auto results = run_all(ids, std::cout);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
