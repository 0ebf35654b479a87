#pragma once

// Two-qubit pure states, projective +/-1 measurements, and the Born rule,
// plus numeric maximization of the Hardy and Cabello success probabilities
// over states and measurement angles.

#include <array>
#include <complex>
#include <cstdint>

#include "nsbox/behavior.hpp"

namespace nsbox {

struct TwoQubitState {
  // Basis order |00>, |01>, |10>, |11>.
  std::array<std::complex<double>, 4> amplitudes{};

  // cos(alpha)|00> + sin(alpha)|11>; local-unitary freedom is absorbed into
  // the measurement angles, so this form is fully general here.
  static TwoQubitState schmidt(double alpha);

  double norm_squared() const;
};

// Direction n = (sin theta cos phi, sin theta sin phi, cos theta); outcome 0
// is the +1 eigenspace projector (I + n.sigma)/2.
struct QubitMeasurement {
  double theta = 0.0;
  double phi = 0.0;
};

struct QuantumScenario {
  TwoQubitState state;
  std::array<QubitMeasurement, 2> alice{};  // X=0, X=1
  std::array<QubitMeasurement, 2> bob{};    // Y=0, Y=1
};

// table[X][Y][a][b] = <psi| P^X_a (x) P^Y_b |psi>.
Behavior born_probabilities(const QuantumScenario& scenario);

struct OptimizerConfig {
  int starts = 64;
  std::uint64_t seed = 0;
  int max_iterations = 4000;
  bool full_bloch = false;            // default: x-z plane, phi = 0
  double constraint_tolerance = 1e-6; // required of every zero-constraint entry
};

struct QuantumOptimum {
  double value = 0.0;
  QuantumScenario scenario;
  Behavior behavior;
  double max_residual = 0.0;  // worst zero-constraint entry at the optimum
};

// Maximizes p(1,1|1,1) subject to p(0,0|0,0) = p(1,1|1,0) = p(1,1|0,1) = 0
// via an escalating penalty (mu = 1e2, 1e4, 1e6, ...) and Nelder-Mead over
// deterministic pseudo-random starts. Converges to ~0.0902. Throws
// ConvergenceError if no start meets the constraint tolerance.
QuantumOptimum optimize_hardy_quantum(const OptimizerConfig& config = {});

// Same scheme for p(1,1|1,1) - p(0,0|0,0) with only the two zero constraints
// (p(0,0|0,0) free). Converges to ~0.1078.
QuantumOptimum optimize_cabello_quantum(const OptimizerConfig& config = {});

}  // namespace nsbox
