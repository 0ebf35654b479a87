#pragma once

// Information-causality statistics and the constrained maximizations they
// induce. For a behavior B define
//   P1 = (p(0,0|0,0)+p(1,1|0,0)+p(0,0|1,0)+p(1,1|1,0)) / 2
//   P2 = (p(0,0|0,1)+p(1,1|0,1)+p(0,1|1,1)+p(1,0|1,1)) / 2
//   Ej = 2 Pj - 1,  Q = E1^2 + E2^2.
// Q > 1 is a sufficient (not necessary) criterion for violating information
// causality with one transmitted bit; quantum boxes satisfy Q <= 1.

#include <cstdint>

#include "nsbox/behavior.hpp"
#include "nsbox/polytope.hpp"

namespace nsbox {

struct IcStatistics {
  double P1 = 0.0;
  double P2 = 0.0;
  double E1 = 0.0;
  double E2 = 0.0;
  double Q = 0.0;
};

IcStatistics ic_stats(const Behavior& behavior);

inline constexpr double kIcStrictTolerance = 1e-12;

// True iff Q > 1 + kIcStrictTolerance.
bool violates_ic_sufficient(const Behavior& behavior);

// Largest admissible weight c6 on the nonlocal vertex of the Hardy face when
// the local slack c4+c5 equals s and Q <= 1 is imposed: on that face
//   Q - 1 = c6^2 + 2 s c6 + 2 s (s - 1),
// so c6 <= -s + sqrt(2s - s^2), additionally capped by the weight budget
// 1 - s. Throws DomainError outside 0 <= s <= 1.
double hardy_c6_bound(double s);

struct BoundResult {
  double value = 0.0;
  ConvexDecomposition witness_weights;
  bool saturates_ic = false;  // Q of the witness within 1e-9 of 1

  Behavior witness() const { return witness_weights.reconstruct(); }
};

// Plain no-signalling maxima over the respective vertex sets; both equal 1/2
// with all weight on nonlocal:001.
BoundResult max_hardy_no_signalling();
BoundResult max_cabello_no_signalling();

// Maximum Hardy success under Q <= 1: (sqrt(2)-1)/2, at s* = 1 - 1/sqrt(2)
// with c6 = sqrt(2)-1. The witness splits s* as c4 = c1 = 1 - 1/sqrt(2).
BoundResult max_hardy_under_ic();

// Maximum Cabello success under Q <= 1; same value and witness as the Hardy
// case (q1 = 0 remains optimal even when it is not enforced).
BoundResult max_cabello_under_ic();

// Maximum of 2(E1+E2) over E1^2+E2^2 <= radius^2, capped at the algebraic
// maximum 4. radius = 1 is the IC disc (-> 2 sqrt 2); radius = sqrt(2)
// reaches the no-signalling extreme (-> 4).
double max_chsh_in_disc(double radius);
double max_chsh_under_ic();

// Numeric cross-checks for the analytic bounds above.

// Grid scan of hardy_c6_bound(s)/2 over s in [0,1], refined by ternary search
// (the objective is concave); agrees with max_hardy_under_ic to ~1e-12.
double hardy_bound_scan(int grid = 1024);

// Direct maximization of cabello_success over 11 nonnegative weights on the
// extended vertex set, subject to sum = 1 and Q <= 1, by penalized
// Nelder-Mead multi-start. Independent of the analytic path; agreement
// expected to ~1e-6.
double cabello_bound_search(std::uint64_t seed = 0, int starts = 64);

}  // namespace nsbox
