#pragma once

#include "gca/ratlin.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gca::suites {

using ratlin::Rational;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::size_t instances = 0;
  std::string failure;  // first counterexample, empty on success
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

// Random jets use this many parameters unless stated otherwise.
inline constexpr int kJetParams = 3;

// Flatness, Atiyah closedness, D' psi' = 0 and the Koszul window, with
// `trials` random jets (or polynomials) per identity. d in 1..3, N in 3..4.
SuiteReport fedosov_suite(int d, int N, std::uint64_t seed, int trials = 20);

struct WheelTheoremReport {
  int d = 0;
  int N = 0;
  std::size_t pairs = 0;
  std::size_t determined = 0;    // pairs with a nonzero contraction
  bool proportional = true;      // every determined pair is proportional
  bool constant = true;          // one ratio across determined pairs
  Rational ratio;                // the common ratio, when determined
  std::size_t nonwheel_tested = 0;
  bool nonwheel_zero = true;
  std::string failure;
  bool pass() const;  // needs every pair determined
};

// Symmetrized wheel(3) against the contraction on random (jet, polyvector) pairs, then
// every non-wheel GC class with up to max_vertices vertices against zero.
WheelTheoremReport wheel_theorem(int d, int N, int pairs, std::uint64_t seed, int max_vertices = 6);

std::uint32_t seed32(std::uint64_t seed);

}  // namespace gca::suites
