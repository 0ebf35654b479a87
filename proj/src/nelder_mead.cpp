#include "nsbox/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace nsbox {

namespace {

struct Point {
  std::vector<double> x;
  double f = 0.0;
};

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> start,
                             const NelderMeadOptions& options) {
  const std::size_t dim = start.size();
  std::vector<Point> simplex(dim + 1);
  simplex[0].x.assign(start.begin(), start.end());
  simplex[0].f = f(simplex[0].x);
  for (std::size_t i = 0; i < dim; ++i) {
    simplex[i + 1].x = simplex[0].x;
    simplex[i + 1].x[i] += options.initial_step;
    simplex[i + 1].f = f(simplex[i + 1].x);
  }

  auto by_value = [](const Point& a, const Point& b) { return a.f < b.f; };
  std::vector<double> centroid(dim);
  Point trial;
  trial.x.resize(dim);
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);

    double spread = simplex.back().f - simplex.front().f;
    double diameter = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      diameter = std::max(diameter,
                          std::abs(simplex.back().x[i] - simplex.front().x[i]));
    if (spread < options.f_tolerance && diameter < options.x_tolerance) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i] / dim;

    Point& worst = simplex.back();
    auto probe = [&](double t) {
      for (std::size_t i = 0; i < dim; ++i)
        trial.x[i] = centroid[i] + t * (worst.x[i] - centroid[i]);
      trial.f = f(trial.x);
    };

    probe(-1.0);
    Point reflected = trial;
    if (reflected.f < simplex[0].f) {
      probe(-2.0);
      worst = trial.f < reflected.f ? trial : reflected;
      continue;
    }
    if (reflected.f < simplex[dim - 1].f) {
      worst = reflected;
      continue;
    }
    probe(reflected.f < worst.f ? -0.5 : 0.5);
    if (trial.f < std::min(reflected.f, worst.f)) {
      worst = trial;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t v = 1; v <= dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i)
        simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
      simplex[v].f = f(simplex[v].x);
    }
  }

  std::stable_sort(simplex.begin(), simplex.end(), by_value);
  return {simplex[0].x, simplex[0].f, iter};
}

}  // namespace nsbox
