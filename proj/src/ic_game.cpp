#include "nsbox/ic_game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nsbox/rng.hpp"

namespace nsbox {

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double mutual_information_bits(const std::array<double, 4>& joint) {
  double sum = 0.0;
  for (double v : joint) {
    if (v < -1e-12) throw DomainError("negative joint probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw DomainError("joint probabilities sum to " + std::to_string(sum));
  double pa[2] = {joint[0] + joint[1], joint[2] + joint[3]};
  double pb[2] = {joint[0] + joint[2], joint[1] + joint[3]};
  double info = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double p = joint[2 * a + b];
      if (p > 0.0) info += p * std::log2(p / (pa[a] * pb[b]));
    }
  return std::max(0.0, info);
}

std::pair<double, double> elementary_round(const Behavior& box) {
  // Alice: X = a0 xor a1, message x = a0 xor A. Bob: Y = b, guess = x xor B.
  double success[2] = {0.0, 0.0};
  for (int b = 0; b < 2; ++b)
    for (int a0 = 0; a0 < 2; ++a0)
      for (int a1 = 0; a1 < 2; ++a1) {
        int x_in = a0 ^ a1;
        int target = b == 0 ? a0 : a1;
        for (int out_a = 0; out_a < 2; ++out_a)
          for (int out_b = 0; out_b < 2; ++out_b) {
            int guess = a0 ^ out_a ^ out_b;
            if (guess == target)
              success[b] += 0.25 * box(x_in, b, out_a, out_b);
          }
      }
  return {success[0], success[1]};
}

namespace {

constexpr int kMaxLevels = 3;
constexpr int kMaxBits = 1 << kMaxLevels;

struct Protocol {
  int levels = 1;
  int n_bits = 2;     // N = 2^levels
  int n_boxes = 1;    // N - 1
  int base[kMaxLevels + 1] = {0, 0, 0, 0};  // first box index of each level

  explicit Protocol(int levels_in) : levels(levels_in) {
    n_bits = 1 << levels;
    n_boxes = n_bits - 1;
    int idx = 0;
    for (int l = 1; l <= levels; ++l) {
      base[l] = idx;
      idx += n_bits >> l;
    }
  }

  int box_index(int level, int j) const { return base[level] + j; }
};

GameResult finish(const std::vector<std::array<double, 4>>& joints) {
  GameResult result;
  for (const auto& joint : joints) {
    result.per_index_success.push_back(joint[0] + joint[3]);
    result.per_index_information.push_back(mutual_information_bits(joint));
    result.total_information += result.per_index_information.back();
  }
  return result;
}

GameResult play_exact(const Behavior& box, int levels) {
  const Protocol proto(levels);
  const int N = proto.n_bits;

  double marg[2][2];  // Alice's outcome distribution per input
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) marg[x][a] = box(x, 0, a, 0) + box(x, 0, a, 1);

  std::vector<std::array<double, 4>> joints(N, {0.0, 0.0, 0.0, 0.0});
  const double data_prob = 1.0 / (1 << N);

  int w[kMaxLevels + 1][kMaxBits];   // messages per level (level 0 = data)
  int xin[kMaxLevels + 1][kMaxBits]; // box inputs
  int ain[kMaxLevels + 1][kMaxBits]; // Alice outcomes
  double a_term[kMaxBits];           // per-box marginal weight

  for (int data = 0; data < (1 << N); ++data) {
    for (int k = 0; k < N; ++k) w[0][k] = (data >> k) & 1;

    for (int avec = 0; avec < (1 << proto.n_boxes); ++avec) {
      for (int l = 1; l <= levels; ++l)
        for (int j = 0; j < (N >> l); ++j) {
          int left = w[l - 1][2 * j];
          int right = w[l - 1][2 * j + 1];
          int idx = proto.box_index(l, j);
          int a = (avec >> idx) & 1;
          xin[l][j] = left ^ right;
          ain[l][j] = a;
          w[l][j] = left ^ a;
          a_term[idx] = marg[xin[l][j]][a];
        }
      const int message = w[levels][0];

      for (int K = 0; K < N; ++K) {
        unsigned path_mask = 0;
        for (int l = 1; l <= levels; ++l)
          path_mask |= 1u << proto.box_index(l, K >> l);

        double off_path = data_prob;
        for (int idx = 0; idx < proto.n_boxes; ++idx)
          if (!((path_mask >> idx) & 1)) off_path *= a_term[idx];
        if (off_path == 0.0) continue;

        const int a_k = (data >> K) & 1;
        for (int bvec = 0; bvec < (1 << levels); ++bvec) {
          double weight = off_path;
          int b_xor = 0;
          for (int l = 1; l <= levels; ++l) {
            int j = K >> l;
            int y = (K >> (l - 1)) & 1;
            int out_b = (bvec >> (l - 1)) & 1;
            weight *= box(xin[l][j], y, ain[l][j], out_b);
            b_xor ^= out_b;
          }
          if (weight == 0.0) continue;
          joints[K][2 * a_k + (message ^ b_xor)] += weight;
        }
      }
    }
  }
  return finish(joints);
}

GameResult play_monte_carlo(const Behavior& box, int levels,
                            std::uint64_t samples, std::uint64_t seed) {
  const int N = 1 << levels;

  double marg[2][2];
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) marg[x][a] = box(x, 0, a, 0) + box(x, 0, a, 1);

  std::vector<std::array<std::uint64_t, 4>> counts(N, {0, 0, 0, 0});
  std::vector<std::uint64_t> totals(N, 0);

  std::vector<std::vector<int>> w(levels + 1);
  for (int l = 0; l <= levels; ++l) w[l].resize(N >> l);

  for (std::uint64_t s = 0; s < samples; ++s) {
    SplitMix64 rng = SplitMix64::stream(seed, s);
    int K = static_cast<int>(rng.next() & static_cast<std::uint64_t>(N - 1));
    for (int k = 0; k < N; k += 32) {
      std::uint64_t word = rng.next();
      for (int k2 = k; k2 < std::min(k + 32, N); ++k2)
        w[0][k2] = static_cast<int>((word >> (k2 - k)) & 1);
    }

    int b_xor = 0;
    for (int l = 1; l <= levels; ++l)
      for (int j = 0; j < (N >> l); ++j) {
        int left = w[l - 1][2 * j];
        int x_in = left ^ w[l - 1][2 * j + 1];
        int out_a;
        if (j == (K >> l)) {
          int y = (K >> (l - 1)) & 1;
          double u = rng.next_double();
          int cell = 0;
          for (; cell < 3; ++cell) {
            u -= box(x_in, y, cell >> 1, cell & 1);
            if (u < 0.0) break;
          }
          out_a = cell >> 1;
          b_xor ^= cell & 1;
        } else {
          out_a = rng.next_double() < marg[x_in][0] ? 0 : 1;
        }
        w[l][j] = left ^ out_a;
      }

    int beta = w[levels][0] ^ b_xor;
    int a_k = w[0][K];
    counts[K][2 * a_k + beta] += 1;
    totals[K] += 1;
  }

  std::vector<std::array<double, 4>> joints(N, {0.25, 0.25, 0.25, 0.25});
  for (int K = 0; K < N; ++K) {
    if (totals[K] == 0) continue;  // keep the uninformative prior
    for (int cell = 0; cell < 4; ++cell)
      joints[K][cell] = static_cast<double>(counts[K][cell]) /
                        static_cast<double>(totals[K]);
  }
  return finish(joints);
}

}  // namespace

GameResult play(const GameConfig& config) {
  if (config.levels < 1) throw DomainError("levels must be >= 1");
  if (config.monte_carlo) {
    if (config.samples == 0) throw DomainError("monte_carlo needs samples > 0");
    if (config.levels > 16) throw DomainError("levels > 16 not supported");
    return play_monte_carlo(config.box, config.levels, config.samples,
                            config.seed);
  }
  if (config.levels > kMaxLevels)
    throw BudgetError("exact enumeration is limited to levels <= " +
                      std::to_string(kMaxLevels));
  return play_exact(config.box, config.levels);
}

std::vector<SweepPoint> sweep_E_plane(int grid, int levels) {
  if (grid < 2) throw DomainError("grid must be >= 2");
  const Behavior pr = pr_box();
  const Behavior anchor1 = make_local_vertex(0, 0, 0, 0);  // (E1,E2) = (1,0)
  const Behavior anchor2 = make_local_vertex(1, 0, 0, 0);  // (E1,E2) = (0,1)
  const Behavior noise = white_noise();

  std::vector<SweepPoint> points;
  points.reserve(static_cast<std::size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double e1 = static_cast<double>(i) / (grid - 1);
      double e2 = static_cast<double>(j) / (grid - 1);
      double lambda, t1, t2;
      if (e1 + e2 >= 1.0) {
        lambda = e1 + e2 - 1.0;
        t1 = 1.0 - e2;
        t2 = 1.0 - e1;
      } else {
        lambda = 0.0;
        t1 = e1;
        t2 = e2;
      }
      double rest = 1.0 - lambda - t1 - t2;
      const double weights[] = {lambda, t1, t2, rest};
      const Behavior parts[] = {pr, anchor1, anchor2, noise};
      GameConfig config;
      config.levels = levels;
      config.box = mix(weights, parts);
      points.push_back({e1, e2, play(config)});
    }
  return points;
}

}  // namespace nsbox
