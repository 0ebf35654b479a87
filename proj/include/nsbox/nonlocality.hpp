#pragma once

// Hardy and Cabello nonlocality tests in the 0/1 outcome convention, plus the
// CHSH functional. The four probed entries are
//   q1 = p(0,0|0,0), zeros at p(1,1|1,0) and p(1,1|0,1), q4 = p(1,1|1,1).
// Hardy's argument needs q1 = 0 and q4 > 0; Cabello's only q4 - q1 > 0.

#include "nsbox/behavior.hpp"

namespace nsbox {

struct HardyCertificate {
  double q1 = 0.0;
  double q4 = 0.0;
  double zero_residuals[2] = {0.0, 0.0};  // p(1,1|1,0), p(1,1|0,1)
  bool hardy_holds = false;
  bool cabello_holds = false;
};

HardyCertificate hardy_check(const Behavior& behavior,
                             double eps = kDefaultTolerance);

// p(1,1|1,1); the success probability when hardy_check flags the box.
double hardy_success(const Behavior& behavior);

// p(1,1|1,1) - p(0,0|0,0); may be negative. Reported unconditionally so
// optimizers can use it as a raw objective.
double cabello_success(const Behavior& behavior);

// E(0,0)+E(0,1)+E(1,0)-E(1,1) with E(X,Y) = sum (-1)^(a xor b) p(a,b|X,Y).
// Local boxes stay in [-2,2]; the PR box reaches 4.
double chsh_value(const Behavior& behavior);

}  // namespace nsbox
