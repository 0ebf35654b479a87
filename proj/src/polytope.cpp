#include "nsbox/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace nsbox {

Behavior ConvexDecomposition::reconstruct() const {
  Behavior::Table t{};
  for (const auto& [id, w] : weights) {
    const auto& src = vertex_behavior(id).table();
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += w * src[k];
  }
  return Behavior(t);
}

double LinearFunctional::evaluate(const Behavior& behavior) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    acc += coefficients[k] * behavior.table()[k];
  return acc;
}

const std::vector<std::pair<VertexId, Behavior>>& enumerate_vertices() {
  static const std::vector<std::pair<VertexId, Behavior>> vertices = [] {
    std::vector<std::pair<VertexId, Behavior>> out;
    out.reserve(24);
    for (int alpha = 0; alpha < 2; ++alpha)
      for (int beta = 0; beta < 2; ++beta)
        for (int gamma = 0; gamma < 2; ++gamma)
          for (int delta = 0; delta < 2; ++delta) {
            VertexId id = VertexId::local(alpha, beta, gamma, delta);
            out.emplace_back(id, vertex_behavior(id));
          }
    for (int alpha = 0; alpha < 2; ++alpha)
      for (int beta = 0; beta < 2; ++beta)
        for (int gamma = 0; gamma < 2; ++gamma) {
          VertexId id = VertexId::nonlocal(alpha, beta, gamma);
          out.emplace_back(id, vertex_behavior(id));
        }
    return out;
  }();
  return vertices;
}

std::vector<VertexId> hardy_face_vertices() {
  return {VertexId::local(0, 0, 0, 1), VertexId::local(0, 0, 1, 1),
          VertexId::local(0, 1, 0, 0), VertexId::local(1, 1, 0, 0),
          VertexId::local(1, 1, 1, 1), VertexId::nonlocal(0, 0, 1)};
}

std::vector<VertexId> cabello_vertex_set() {
  std::vector<VertexId> ids = hardy_face_vertices();
  ids.push_back(VertexId::local(0, 0, 0, 0));
  ids.push_back(VertexId::local(0, 0, 1, 0));
  ids.push_back(VertexId::local(1, 0, 0, 0));
  ids.push_back(VertexId::local(1, 0, 1, 0));
  ids.push_back(VertexId::nonlocal(1, 1, 0));
  return ids;
}

namespace {

constexpr double kPivotTol = 1e-11;

// Phase-1 simplex for  V w = p,  1'w = 1,  w >= 0  with one artificial per
// row. Bland's rule (lowest-index entering, lowest basis-index leaving)
// guarantees termination and makes the result deterministic.
struct Phase1 {
  static constexpr int kRows = 17;
  int n = 0;                             // structural columns
  std::vector<std::vector<double>> m;    // kRows x (n + kRows)
  std::vector<double> rhs;               // kRows
  std::vector<int> basis;                // basis variable per row
  std::vector<double> cost;              // reduced costs, n + kRows

  void build(const std::vector<Behavior>& columns, const Behavior& target) {
    n = static_cast<int>(columns.size());
    m.assign(kRows, std::vector<double>(static_cast<std::size_t>(n) + kRows, 0.0));
    rhs.assign(kRows, 0.0);
    basis.resize(kRows);
    for (int r = 0; r < 16; ++r) {
      for (int j = 0; j < n; ++j) m[r][j] = columns[j].table()[r];
      rhs[r] = target.table()[r];
    }
    for (int j = 0; j < n; ++j) m[16][j] = 1.0;
    rhs[16] = 1.0;
    for (int r = 0; r < kRows; ++r) {
      if (rhs[r] < 0.0) {
        for (int j = 0; j < n; ++j) m[r][j] = -m[r][j];
        rhs[r] = -rhs[r];
      }
      m[r][n + r] = 1.0;
      basis[r] = n + r;
    }
    // Phase-1 objective: minimize the artificial sum; with the artificial
    // basis the reduced cost of column j is -sum_r m[r][j].
    cost.assign(static_cast<std::size_t>(n) + kRows, 0.0);
    for (int r = 0; r < kRows; ++r)
      for (int j = 0; j < n; ++j) cost[j] -= m[r][j];
  }

  // Value of the artificial sum (the L1 residual of the fit).
  double residual() const {
    double acc = 0.0;
    for (int r = 0; r < kRows; ++r)
      if (basis[r] >= n) acc += rhs[r];
    return acc;
  }

  void pivot(int row, int col) {
    double p = m[row][col];
    for (double& v : m[row]) v /= p;
    rhs[row] /= p;
    for (int r = 0; r < kRows; ++r) {
      if (r == row) continue;
      double f = m[r][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
      rhs[r] -= f * rhs[row];
    }
    double f = cost[col];
    if (f != 0.0)
      for (std::size_t j = 0; j < cost.size(); ++j) cost[j] -= f * m[row][j];
    basis[row] = col;
  }

  void solve() {
    const int total = n + kRows;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < total; ++j)
        if (cost[j] < -kPivotTol) {
          enter = j;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      double best = 0.0;
      for (int r = 0; r < kRows; ++r) {
        if (m[r][enter] <= kPivotTol) continue;
        double ratio = rhs[r] / m[r][enter];
        if (leave < 0 || ratio < best - kPivotTol ||
            (ratio < best + kPivotTol && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return;  // unbounded cannot happen here; bail defensively
      pivot(leave, enter);
    }
  }
};

}  // namespace

ConvexDecomposition decompose(const Behavior& behavior,
                              const std::optional<std::vector<VertexId>>& support,
                              double eps) {
  std::vector<VertexId> ids;
  if (support) {
    ids = *support;
  } else {
    for (const auto& [id, b] : enumerate_vertices()) ids.push_back(id);
  }
  if (ids.empty()) throw InfeasibleError("empty support");

  std::vector<Behavior> columns;
  columns.reserve(ids.size());
  for (const auto& id : ids) columns.push_back(vertex_behavior(id));

  Phase1 lp;
  lp.build(columns, behavior);
  lp.solve();

  // Residual = L1 distance of the best mixture from the target rows.
  double residual = lp.residual();
  if (residual > 16.0 * eps + 1e-12)
    throw InfeasibleError("behavior outside the convex hull of the support (residual " +
                          std::to_string(residual) + ")");

  ConvexDecomposition result;
  for (int r = 0; r < Phase1::kRows; ++r) {
    int j = lp.basis[r];
    if (j < lp.n && lp.rhs[r] > 1e-15) {
      result.weights[ids[static_cast<std::size_t>(j)]] += lp.rhs[r];
    }
  }
  return result;
}

std::pair<double, VertexId> maximize_linear(const LinearFunctional& functional,
                                            const std::vector<VertexId>& support) {
  if (support.empty()) throw DomainError("maximize_linear over an empty support");
  double best = 0.0;
  VertexId arg = support.front();
  bool first = true;
  for (const auto& id : support) {
    double v = functional.evaluate(vertex_behavior(id));
    if (first || v > best) {
      best = v;
      arg = id;
      first = false;
    }
  }
  return {best, arg};
}

}  // namespace nsbox
