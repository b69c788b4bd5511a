// Acceptance runner: executes the full property suite at scale 1 and prints
// one pass/fail line per criterion. Exit code is the number of failures.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "latcol/selftest.hpp"

int main(int argc, char** argv) {
  double scale = 1.0;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--scale") == 0 && i + 1 < argc) scale = std::atof(argv[++i]);
    else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) threads = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--scale S] [--threads T] [--only N]\n", argv[0]);
      return 2;
    }
  }

  std::printf("acceptance suite  scale=%.3g threads=%d\n", scale, threads);
  int failures = 0;
  auto report = [&](const latcol::selftest::CriterionResult& r) {
    std::printf("[%s] %2d. %-32s cases=%-9lld failures=%lld (%.1fs)%s%s\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.cases, r.failures, r.seconds,
                r.note.empty() ? "" : " ", r.note.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  };
  latcol::selftest::run_all(scale, threads, report, only);
  std::printf("%s\n", failures == 0 ? "all criteria passed" : "SOME CRITERIA FAILED");
  return failures;
}
