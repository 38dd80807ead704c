// Prints one pass/fail line per acceptance criterion.
//   acceptance [--seed S] [--criterion N]...

#include <cstdlib>
#include <iostream>
#include <string>

#include "sumsetlab/suite.hpp"

int main(int argc, char** argv) {
  sumsetlab::SuiteOptions opts;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if ((arg == "--seed" || arg == "--criterion") && i + 1 < argc) {
      auto value = std::strtoull(argv[++i], nullptr, 10);
      if (arg == "--seed") {
        opts.seed = value;
      } else {
        opts.only.push_back(static_cast<int>(value));
      }
    } else {
      std::cerr << "usage: acceptance [--seed S] [--criterion N]...\n";
      return 2;
    }
  }
  auto report = sumsetlab::run_suite(opts);
  for (const auto& c : report.criteria) {
    std::cout << sumsetlab::format_line(c) << "\n";
    for (const auto& f : c.failure_log) std::cout << "    " << f << "\n";
  }
  return report.pass() ? 0 : 1;
}
