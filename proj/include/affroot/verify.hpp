// Exhaustive and randomized property suites over small root systems. Each
// suite checks the library against an independent oracle and reports every
// counterexample verbatim.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "affroot/words.hpp"

namespace affroot {

struct VerifyBounds {
  int len = 4;         // length bound for enumerated elements
  int cutoff = 6;      // window level N
  int samples = 200;   // random cases
  unsigned seed = 1;
  int max_size = 5;    // brute-force subset size
  int brute_level = 2; // brute-force window level
};

struct VerifyReport {
  std::string suite;
  std::string type;
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  // Counts one check; records the message when it fails.
  template <class F>
  bool expect(bool ok, F&& message) {
    ++checks;
    if (!ok && failures.size() < 50) failures.push_back(message());
    return ok;
  }
};

enum class Suite {
  FiniteBijection,   // finite biconvex sets are exactly the Phi_J(y)
  Classification,    // subsets of a finite root system
  Parametrization,   // nabla and parametrize are inverse
  WordRealization,   // phi_infinity(chi(p)) = nabla(p)
  ZWords,            // the words Z^K_J
  Action,            // the W_J action on infinite words
  Orbits,            // orbit decomposition of word classes
  Length,            // inversion counting against breadth-first search
  BiconvexClasses,   // the four kinds of biconvex sets
};

std::vector<Suite> all_suites();
std::string suite_name(Suite s);
// Accepts the names above in kebab case.
std::optional<Suite> suite_from_name(std::string_view name);

// Thrown when the requested bounds would take too long.
struct BoundsRefused : std::length_error {
  BoundsRefused(const std::string& what, double estimate) : std::length_error(what), estimate(estimate) {}
  double estimate;
};

// Rough count of elementary steps; run_suite refuses above the limit.
double estimate_work(Suite s, const RootSystem& rs, const VerifyBounds& b);
constexpr double kWorkLimit = 5e7;

VerifyReport run_suite(Suite s, RootSystemPtr rs, const VerifyBounds& b);

// All (K, u, y) over J with K inside J, u in W^K_J and l_K(y) <= len.
std::vector<BiconvexParam> parameter_sweep(RootSystemPtr rs, const IndexSet& J, int len,
                                           bool only_infinite);

// {alpha_{s1}, s1(alpha_{s2}), s1 s2(alpha_{s3}), ...} for a word.
AffineRootSet word_inversion_set(const SubSystem& sub, const AffineWord& w);

// Right-hand side of the action formula truncated at level N:
// {Phi(x) minus -Omega} together with {x Phi^inf(s) minus Omega}.
AffineRootSet action_formula(const AffineWeylElement& x, const InfiniteWord& s,
                             const SubSystem& sub, int N);

}  // namespace affroot
