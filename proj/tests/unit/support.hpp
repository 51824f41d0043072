#pragma once

#include <random>

#include "doctest.h"
#include "ehs/series.hpp"

namespace test {

using namespace ehs;

// Random complex numbers with modulus in [lo, hi] and uniform phase. The
// doubles come straight from the engine bits so sequences are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  BigComplex complex(double lo = 0.5, double hi = 2.0) {
    return BigComplex::polar(Real(uniform(lo, hi)), Real(uniform(0.01, 6.27)));
  }
  BigComplex nome() { return complex(0.05, 0.6); }
  EllipticBase base() { return {nome(), complex(), complex()}; }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

inline double rel(const BigComplex& u, const BigComplex& v) { return rel_error(u, v).to_double(); }

// 10^{-(digits - offset)} at the default 50 digits.
inline double tol(int offset) { return std::pow(10.0, -(PrecisionContext::kDefaultDigits - offset)); }

}  // namespace test
