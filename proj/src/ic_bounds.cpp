#include "nsbox/ic_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "nsbox/nelder_mead.hpp"
#include "nsbox/nonlocality.hpp"
#include "nsbox/rng.hpp"

namespace nsbox {

IcStatistics ic_stats(const Behavior& b) {
  IcStatistics s;
  s.P1 = 0.5 * (b(0, 0, 0, 0) + b(0, 0, 1, 1) + b(1, 0, 0, 0) + b(1, 0, 1, 1));
  s.P2 = 0.5 * (b(0, 1, 0, 0) + b(0, 1, 1, 1) + b(1, 1, 0, 1) + b(1, 1, 1, 0));
  s.E1 = 2.0 * s.P1 - 1.0;
  s.E2 = 2.0 * s.P2 - 1.0;
  s.Q = s.E1 * s.E1 + s.E2 * s.E2;
  return s;
}

bool violates_ic_sufficient(const Behavior& behavior) {
  return ic_stats(behavior).Q > 1.0 + kIcStrictTolerance;
}

double hardy_c6_bound(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw DomainError("hardy_c6_bound needs s in [0,1], got " + std::to_string(s));
  double disc = 2.0 * s - s * s;
  double root = -s + std::sqrt(std::max(disc, 0.0));
  return std::max(0.0, std::min(root, 1.0 - s));
}

namespace {

ConvexDecomposition saturating_witness() {
  const double slack = 1.0 - 1.0 / std::sqrt(2.0);
  const double c6 = std::sqrt(2.0) - 1.0;
  ConvexDecomposition w;
  w.weights[VertexId::local(0, 0, 0, 1)] = slack;   // c1
  w.weights[VertexId::local(1, 1, 0, 0)] = slack;   // c4
  w.weights[VertexId::nonlocal(0, 0, 1)] = c6;
  return w;
}

BoundResult make_result(double value, ConvexDecomposition witness) {
  BoundResult r;
  r.value = value;
  r.witness_weights = std::move(witness);
  r.saturates_ic = std::abs(ic_stats(r.witness_weights.reconstruct()).Q - 1.0) <= 1e-9;
  return r;
}

}  // namespace

BoundResult max_hardy_no_signalling() {
  auto [value, id] = maximize_linear(LinearFunctional::entry(1, 1, 1, 1),
                                     hardy_face_vertices());
  ConvexDecomposition w;
  w.weights[id] = 1.0;
  return make_result(value, std::move(w));
}

BoundResult max_cabello_no_signalling() {
  LinearFunctional f = LinearFunctional::entry(1, 1, 1, 1);
  f.coefficients[Behavior::index(0, 0, 0, 0)] = -1.0;
  auto [value, id] = maximize_linear(f, cabello_vertex_set());
  ConvexDecomposition w;
  w.weights[id] = 1.0;
  return make_result(value, std::move(w));
}

BoundResult max_hardy_under_ic() {
  const double s_star = 1.0 - 1.0 / std::sqrt(2.0);
  return make_result(hardy_c6_bound(s_star) / 2.0, saturating_witness());
}

BoundResult max_cabello_under_ic() {
  // With the zero constraints in place the success is x = -P2 + sqrt(P2(1-P2))
  // on 0 <= P2 <= 1/2; the maximum sits at P2 = (2 - sqrt 2)/4 and coincides
  // with the Hardy value, so q1 = 0 costs nothing and the witness carries over.
  const double p2 = (2.0 - std::sqrt(2.0)) / 4.0;
  const double x = -p2 + std::sqrt(p2 * (1.0 - p2));
  return make_result(x, saturating_witness());
}

double max_chsh_in_disc(double radius) {
  if (!(radius >= 0.0))
    throw DomainError("max_chsh_in_disc needs a nonnegative radius");
  // max 2(E1+E2) on the disc is 2*sqrt(2)*r, at E1=E2=r/sqrt(2); the box
  // constraint |Ej| <= 1 caps the total at the algebraic maximum 4.
  return std::min(2.0 * std::sqrt(2.0) * radius, 4.0);
}

double max_chsh_under_ic() { return max_chsh_in_disc(1.0); }

double hardy_bound_scan(int grid) {
  if (grid < 3) throw DomainError("hardy_bound_scan needs at least 3 grid points");
  double best = 0.0;
  int best_i = 0;
  for (int i = 0; i < grid; ++i) {
    double s = static_cast<double>(i) / (grid - 1);
    double v = hardy_c6_bound(s) / 2.0;
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // The objective is concave in s, so ternary search tightens the bracket.
  double lo = static_cast<double>(std::max(0, best_i - 1)) / (grid - 1);
  double hi = static_cast<double>(std::min(grid - 1, best_i + 1)) / (grid - 1);
  for (int it = 0; it < 200; ++it) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (hardy_c6_bound(m1) < hardy_c6_bound(m2))
      lo = m1;
    else
      hi = m2;
  }
  return std::max(best, hardy_c6_bound(0.5 * (lo + hi)) / 2.0);
}

namespace {

struct CabelloObjective {
  std::vector<Behavior> vertices;
  double mu = 0.0;

  static std::array<double, 11> to_weights(std::span<const double> v) {
    std::array<double, 11> c{};
    double total = 0.0;
    for (std::size_t i = 0; i < 11; ++i) {
      c[i] = v[i] * v[i];
      total += c[i];
    }
    if (total <= 0.0) {
      c.fill(1.0 / 11.0);
      return c;
    }
    for (double& w : c) w /= total;
    return c;
  }

  Behavior box(std::span<const double> v) const {
    auto c = to_weights(v);
    Behavior::Table t{};
    for (std::size_t i = 0; i < 11; ++i) {
      const auto& src = vertices[i].table();
      for (std::size_t k = 0; k < 16; ++k) t[k] += c[i] * src[k];
    }
    return Behavior(t);
  }

  double operator()(std::span<const double> v) const {
    Behavior b = box(v);
    double excess = std::max(0.0, ic_stats(b).Q - 1.0);
    return -cabello_success(b) + mu * excess * excess;
  }
};

}  // namespace

double cabello_bound_search(std::uint64_t seed, int starts) {
  CabelloObjective obj;
  for (const auto& id : cabello_vertex_set()) obj.vertices.push_back(vertex_behavior(id));

  const Behavior uniform = [&] {
    Behavior::Table t{};
    for (const auto& v : obj.vertices)
      for (std::size_t k = 0; k < 16; ++k) t[k] += v.table()[k] / 11.0;
    return Behavior(t);
  }();

  NelderMeadOptions options;
  options.max_iterations = 3000;
  options.initial_step = 0.15;

  double best = -1.0;
  for (int s = 0; s < starts; ++s) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(s));
    std::vector<double> v(11);
    for (double& vi : v) vi = rng.next_in(0.1, 1.0);

    for (double mu : {1e2, 1e4, 1e6, 1e8, 1e10}) {
      obj.mu = mu;
      v = nelder_mead(std::cref(obj), v, options).x;
    }

    // Repair: walk just far enough toward the uniform mixture (Q ~ 0.07)
    // that the IC constraint holds, then score the feasible box.
    Behavior b = obj.box(v);
    if (ic_stats(b).Q > 1.0) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        Behavior::Table t{};
        for (std::size_t k = 0; k < 16; ++k)
          t[k] = (1.0 - mid) * b.table()[k] + mid * uniform.table()[k];
        if (ic_stats(Behavior(t)).Q > 1.0)
          lo = mid;
        else
          hi = mid;
      }
      Behavior::Table t{};
      for (std::size_t k = 0; k < 16; ++k)
        t[k] = (1.0 - hi) * b.table()[k] + hi * uniform.table()[k];
      b = Behavior(t);
    }
    best = std::max(best, cabello_success(b));
  }
  return best;
}

}  // namespace nsbox
