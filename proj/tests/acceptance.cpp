// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
//
//   acceptance [--level quick|full|long] [--workers N]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "prm/verify.hpp"

int main(int argc, char** argv) {
  prm::Level level = prm::Level::Long;
  int workers = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--level" && i + 1 < argc) {
      const auto parsed = prm::level_from_string(argv[++i]);
      if (!parsed) {
        std::fprintf(stderr, "unknown level %s\n", argv[i]);
        return 64;
      }
      level = *parsed;
    } else if (arg == "--workers" && i + 1 < argc) {
      workers = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--level quick|full|long] [--workers N]\n");
      return 64;
    }
  }

  std::printf("acceptance level %s\n", prm::to_string(level).c_str());
  std::fflush(stdout);
  int failed = 0;
  const auto results = prm::run_acceptance(level, workers, [](const prm::CriterionResult& r) {
    std::printf("%s C%d %s (%.1fs) %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  });
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
