#pragma once

// Exact simulator of the one-bit communication game behind information
// causality. Alice holds N = 2^n uniform bits, Bob a uniform index K; Alice
// may send one classical bit, assisted by shared no-signalling boxes. The
// figure of merit is I = sum_K I(a_K : beta | b=K) in bits.
//
// Protocol: the N=2 primitive feeds a0 xor a1 into Alice's box input and
// sends x = a0 xor A; Bob inputs his index bit and outputs beta = x xor B.
// For larger N the primitive is applied pairwise and the would-be messages
// become the next level's data bits; Bob works back down his index path.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "nsbox/behavior.hpp"

namespace nsbox {

// joint[a][beta] for one data bit and Bob's guess; both marginals binary.
double mutual_information_bits(const std::array<double, 4>& joint);

// -p log2 p - (1-p) log2 (1-p).
double binary_entropy(double p);

// Exact success probabilities (P(beta = a_0 | b=0), P(beta = a_1 | b=1)) of
// the N=2 primitive, by enumeration over (a0, a1, A, B). Equals the
// (P1, P2) of ic_stats(box) for every no-signalling box; that identity is
// what pins this protocol.
std::pair<double, double> elementary_round(const Behavior& box);

struct GameConfig {
  int levels = 1;  // n; N = 2^n data bits
  Behavior box;
  bool monte_carlo = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct GameResult {
  std::vector<double> per_index_success;      // N entries
  std::vector<double> per_index_information;  // bits
  double total_information = 0.0;
  int message_bits = 1;
};

// Exact mode enumerates the joint distribution of (a_K, beta); permitted for
// levels <= 3 (BudgetError above). Monte Carlo mode samples full protocol
// runs with the seeded generator.
GameResult play(const GameConfig& config);

struct SweepPoint {
  double e1 = 0.0;
  double e2 = 0.0;
  GameResult result;
};

// Boxes with prescribed (E1, E2) on the [0,1]^2 grid, built as mixtures of
// the PR box, two local vertices and white noise, then played at the given
// depth. grid is the number of points per axis.
std::vector<SweepPoint> sweep_E_plane(int grid, int levels);

}  // namespace nsbox
