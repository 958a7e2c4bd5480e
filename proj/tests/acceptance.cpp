// Runs the property suites at the acceptance bounds and prints one
// PASS/FAIL line per criterion. Exit status is 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "affroot/verify.hpp"

using namespace affroot;

namespace {

struct Criterion {
  int id;
  std::string title;
  Suite suite;
  std::vector<std::string> types;
  VerifyBounds bounds;
  double target_seconds;
};

RootSystemPtr system_for(const std::string& type) {
  if (type == "A1xA1") return build_root_system(CartanData::from_matrix({{2, 0}, {0, 2}}, "A1xA1"));
  return build_root_system(type);
}

VerifyBounds bounds(std::function<void(VerifyBounds&)> set) {
  VerifyBounds b;
  set(b);
  return b;
}

}  // namespace

int main() {
  const std::vector<std::string> rank_two{"A1", "A2", "B2", "C2", "G2", "A1xA1"};
  const std::vector<Criterion> criteria{
      {1, "finite biconvex sets are the inversion sets", Suite::FiniteBijection, {"A1", "A2", "C2"},
       bounds([](VerifyBounds& b) { b.len = 5; b.cutoff = 6; b.brute_level = 2; b.max_size = 5; }), 60},
      {2, "classification of subsets of a finite root system", Suite::Classification, {"A2", "B2", "C2"},
       VerifyBounds{}, 30},
      {3, "parametrization round trip", Suite::Parametrization, {"A1", "A2"},
       bounds([](VerifyBounds& b) { b.len = 4; }), 120},
      {4, "infinite words realize every parameter", Suite::WordRealization, {"A1", "A2"},
       bounds([](VerifyBounds& b) { b.len = 4; }), 300},
      {5, "construction of the words Z^K_J", Suite::ZWords, rank_two,
       bounds([](VerifyBounds& b) { b.cutoff = 6; }), 30},
      {6, "action laws", Suite::Action, {"A1", "A2"},
       bounds([](VerifyBounds& b) { b.samples = 200; b.len = 3; b.cutoff = 6; }), 60},
      {7, "orbit decomposition", Suite::Orbits, {"A1", "A2", "C2"},
       bounds([](VerifyBounds& b) { b.samples = 100; b.len = 4; }), 10},
      {8, "length against breadth-first search", Suite::Length, rank_two,
       bounds([](VerifyBounds& b) { b.len = 6; }), 60},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    long checks = 0;
    std::vector<std::string> failures;
    for (const std::string& type : c.types) {
      try {
        VerifyReport r = run_suite(c.suite, system_for(type), c.bounds);
        checks += r.checks;
        for (const std::string& f : r.failures) failures.push_back(type + ": " + f);
      } catch (const std::exception& e) {
        failures.push_back(type + ": " + e.what());
      }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.target_seconds;
    const bool ok = failures.empty() && in_time && checks > 0;
    all = all && ok;
    std::string types;
    for (const std::string& t : c.types) types += (types.empty() ? "" : " ") + t;
    std::printf("%s %d %s [%s]: %ld checks, %zu failures, %.2f s (target %.0f s)\n",
                ok ? "PASS" : "FAIL", c.id, c.title.c_str(), types.c_str(), checks, failures.size(),
                seconds, c.target_seconds);
    if (!in_time) std::printf("    over the runtime target\n");
    for (std::size_t i = 0; i < failures.size() && i < 10; ++i)
      std::printf("    %s\n", failures[i].c_str());
  }
  return all ? 0 : 1;
}
