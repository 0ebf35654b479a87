#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "nsbox/behavior.hpp"
#include "nsbox/nelder_mead.hpp"
#include "nsbox/polytope.hpp"
#include "nsbox/quantum.hpp"
#include "nsbox/rng.hpp"

namespace nsbox::testing {

// Dirichlet(1,...,1) draw: exponential variates, normalized.
inline std::vector<double> random_weights(SplitMix64& rng, std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(rng.next_in(1e-12, 1.0));
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

inline const std::vector<Behavior>& vertex_behaviors() {
  static const std::vector<Behavior> all = [] {
    std::vector<Behavior> out;
    for (const auto& [id, behavior] : enumerate_vertices())
      out.push_back(behavior);
    return out;
  }();
  return all;
}

// Uniform-ish random point of the no-signalling polytope.
inline Behavior random_no_signalling_box(SplitMix64& rng) {
  std::vector<double> w = random_weights(rng, vertex_behaviors().size());
  return mix(w, vertex_behaviors());
}

// Per-index success of the nested game for a box with game statistics
// (E1, E2): each level contributes an independent symmetric error whose
// agreement bias is E1 when the level's path bit is 0 and E2 when it is 1,
// so P(beta = a_K) = (1 + prod of level biases)/2.
inline double oracle_game_success(double e1, double e2, int levels,
                                  std::size_t index) {
  double product = 1.0;
  for (int level = 0; level < levels; ++level)
    product *= (index >> level & 1) ? e2 : e1;
  return 0.5 * (1.0 + product);
}

// Random pure two-qubit state, not restricted to Schmidt form.
inline TwoQubitState random_state(SplitMix64& rng) {
  TwoQubitState state;
  double norm = 0.0;
  for (auto& amp : state.amplitudes) {
    amp = {rng.next_normal(), rng.next_normal()};
    norm += std::norm(amp);
  }
  for (auto& amp : state.amplitudes) amp /= std::sqrt(norm);
  return state;
}

inline QubitMeasurement random_measurement(SplitMix64& rng) {
  return {rng.next_in(0.0, std::numbers::pi),
          rng.next_in(0.0, 2.0 * std::numbers::pi)};
}

inline QuantumScenario random_scenario(SplitMix64& rng) {
  QuantumScenario s;
  s.state = random_state(rng);
  s.alice = {random_measurement(rng), random_measurement(rng)};
  s.bob = {random_measurement(rng), random_measurement(rng)};
  return s;
}

// Independent coarse-grid oracle for the constrained quantum maxima: scan
// (alpha, 4 polar angles) on a regular grid under a fixed linear penalty,
// then polish the best cell with Nelder-Mead under an escalating penalty.
// Grid-first guards against the multi-start optimizer settling in a wrong
// basin; agreement is expected to ~1e-5.
inline double quantum_grid_oracle(bool cabello, int points_per_axis = 7) {
  auto behavior_at = [](std::span<const double> p) {
    QuantumScenario s;
    s.state = TwoQubitState::schmidt(p[0]);
    s.alice = {QubitMeasurement{p[1], 0.0}, QubitMeasurement{p[2], 0.0}};
    s.bob = {QubitMeasurement{p[3], 0.0}, QubitMeasurement{p[4], 0.0}};
    return born_probabilities(s);
  };
  auto penalized = [&](std::span<const double> p, double mu) {
    Behavior b = behavior_at(p);
    double objective = b(1, 1, 1, 1) - (cabello ? b(0, 0, 0, 0) : 0.0);
    double penalty = b(1, 0, 1, 1) + b(0, 1, 1, 1);
    if (!cabello) penalty += b(0, 0, 0, 0);
    return -objective + mu * penalty;
  };

  const double pi = std::numbers::pi;
  std::vector<double> best;
  double best_f = std::numeric_limits<double>::infinity();
  std::vector<double> p(5);
  for (int i0 = 1; i0 < points_per_axis; ++i0) {
    p[0] = 0.5 * pi * i0 / points_per_axis;
    for (int i1 = 0; i1 < points_per_axis; ++i1) {
      p[1] = pi * (i1 + 0.5) / points_per_axis;
      for (int i2 = 0; i2 < points_per_axis; ++i2) {
        p[2] = pi * (i2 + 0.5) / points_per_axis;
        for (int i3 = 0; i3 < points_per_axis; ++i3) {
          p[3] = pi * (i3 + 0.5) / points_per_axis;
          for (int i4 = 0; i4 < points_per_axis; ++i4) {
            p[4] = pi * (i4 + 0.5) / points_per_axis;
            double f = penalized(p, 10.0);
            if (f < best_f) {
              best_f = f;
              best = p;
            }
          }
        }
      }
    }
  }

  NelderMeadOptions options;
  options.initial_step = 0.2;
  for (double mu = 1e0; mu <= 1e8; mu *= 100.0) {
    auto f = [&](std::span<const double> q) { return penalized(q, mu); };
    best = nelder_mead(f, best, options).x;
    options.initial_step = 0.05;
  }
  Behavior b = behavior_at(best);
  return b(1, 1, 1, 1) - (cabello ? b(0, 0, 0, 0) : 0.0);
}

}  // namespace nsbox::testing
