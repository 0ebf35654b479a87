#pragma once

// The 24-vertex no-signalling polytope for the 2-input/2-output bipartite
// scenario: vertex enumeration, convex decomposition of arbitrary boxes, and
// linear maximization over vertex subsets.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nsbox/behavior.hpp"

namespace nsbox {

// Nonnegative weights over polytope vertices summing to 1. Decompositions of
// interior points are not unique; contracts are on the reconstructed table.
struct ConvexDecomposition {
  std::map<VertexId, double> weights;

  Behavior reconstruct() const;
};

// F(B) = sum over (X,Y,a,b) of coefficients[index] * p(a,b|X,Y).
struct LinearFunctional {
  std::array<double, 16> coefficients{};

  double evaluate(const Behavior& behavior) const;

  static LinearFunctional entry(int x, int y, int a, int b) {
    LinearFunctional f;
    f.coefficients[Behavior::index(x, y, a, b)] = 1.0;
    return f;
  }
};

// All 24 vertices: the 16 local ones in lexicographic (alpha,beta,gamma,delta)
// order, then the 8 nonlocal ones in lexicographic (alpha,beta,gamma) order.
const std::vector<std::pair<VertexId, Behavior>>& enumerate_vertices();

// The six vertices spanning the face of boxes with
// p(0,0|0,0) = p(1,1|1,0) = p(1,1|0,1) = 0:
// local 0001, 0011, 0100, 1100, 1111, then nonlocal 001.
std::vector<VertexId> hardy_face_vertices();

// The Hardy face plus the five vertices that only satisfy the two zero
// constraints p(1,1|1,0) = p(1,1|0,1) = 0:
// local 0000, 0010, 1000, 1010, then nonlocal 110. Eleven ids total.
std::vector<VertexId> cabello_vertex_set();

// Finds nonnegative weights over `support` (default: all 24 vertices) whose
// mixture reproduces `behavior`. Phase-1 simplex with Bland's rule, so the
// returned decomposition is deterministic. Throws InfeasibleError when the
// behavior is not in the convex hull of the support within eps (signalling
// table, or support too small).
ConvexDecomposition decompose(const Behavior& behavior,
                              const std::optional<std::vector<VertexId>>& support =
                                  std::nullopt,
                              double eps = kDefaultTolerance);

// Maximum of F over the convex hull of `support`; attained at a vertex, ties
// broken by the earliest position in `support`.
std::pair<double, VertexId> maximize_linear(const LinearFunctional& functional,
                                            const std::vector<VertexId>& support);

}  // namespace nsbox
