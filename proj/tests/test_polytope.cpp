#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "nsbox/behavior.hpp"
#include "nsbox/nonlocality.hpp"
#include "nsbox/polytope.hpp"
#include "support.hpp"

using namespace nsbox;

TEST_CASE("the polytope has 16 local and 8 nonlocal pairwise-distinct vertices") {
  const auto& vertices = enumerate_vertices();
  REQUIRE(vertices.size() == 24);
  int local_count = 0;
  for (const auto& [id, behavior] : vertices) local_count += id.is_local();
  CHECK(local_count == 16);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      CHECK(max_entry_difference(vertices[i].second, vertices[j].second) > 0.0);
      CHECK(vertices[i].first != vertices[j].first);
    }
}

TEST_CASE("hardy_face_vertices lists exactly the six zero-constraint vertices") {
  std::vector<VertexId> face = hardy_face_vertices();
  REQUIRE(face.size() == 6);
  std::vector<VertexId> expected = {
      VertexId::local(0, 0, 0, 1), VertexId::local(0, 0, 1, 1),
      VertexId::local(0, 1, 0, 0), VertexId::local(1, 1, 0, 0),
      VertexId::local(1, 1, 1, 1), VertexId::nonlocal(0, 0, 1)};
  CHECK(face == expected);

  int satisfying = 0;
  for (const auto& [id, behavior] : enumerate_vertices()) {
    bool on_face = behavior(0, 0, 0, 0) == 0.0 && behavior(1, 0, 1, 1) == 0.0 &&
                   behavior(0, 1, 1, 1) == 0.0;
    satisfying += on_face;
    bool listed = std::find(face.begin(), face.end(), id) != face.end();
    CHECK(on_face == listed);
  }
  CHECK(satisfying == 6);

  for (const VertexId& id : face) {
    HardyCertificate cert = hardy_check(vertex_behavior(id));
    CHECK(cert.q1 == 0.0);
    CHECK(cert.zero_residuals[0] == 0.0);
    CHECK(cert.zero_residuals[1] == 0.0);
  }
}

TEST_CASE("cabello_vertex_set extends the face by the five two-zero vertices") {
  std::vector<VertexId> set = cabello_vertex_set();
  REQUIRE(set.size() == 11);
  std::vector<VertexId> face = hardy_face_vertices();
  CHECK(std::equal(face.begin(), face.end(), set.begin()));
  std::vector<VertexId> extra = {
      VertexId::local(0, 0, 0, 0), VertexId::local(0, 0, 1, 0),
      VertexId::local(1, 0, 0, 0), VertexId::local(1, 0, 1, 0),
      VertexId::nonlocal(1, 1, 0)};
  CHECK(std::equal(extra.begin(), extra.end(), set.begin() + 6));

  int satisfying = 0;
  for (const auto& [id, behavior] : enumerate_vertices()) {
    bool two_zeros = behavior(1, 0, 1, 1) == 0.0 && behavior(0, 1, 1, 1) == 0.0;
    satisfying += two_zeros;
    bool listed = std::find(set.begin(), set.end(), id) != set.end();
    CHECK(two_zeros == listed);
  }
  CHECK(satisfying == 11);
}

TEST_CASE("decompose recovers a vertex as itself") {
  ConvexDecomposition d = decompose(make_nonlocal_vertex(0, 0, 1));
  double named = 0.0;
  double rest = 0.0;
  for (const auto& [id, weight] : d.weights)
    (id == VertexId::nonlocal(0, 0, 1) ? named : rest) += weight;
  CHECK(named == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rest <= 1e-12);
}

TEST_CASE("decompose round-trips the white-noise box") {
  ConvexDecomposition d = decompose(white_noise());
  CHECK(max_entry_difference(d.reconstruct(), white_noise()) <= 1e-8);
}

TEST_CASE("decompose over the Hardy face recovers the saturating witness weights") {
  double slack = 1.0 - 1.0 / std::sqrt(2.0);
  double c6 = std::sqrt(2.0) - 1.0;
  std::vector<double> w = {slack, c6, slack};
  std::vector<Behavior> parts = {make_local_vertex(1, 1, 0, 0),
                                 make_nonlocal_vertex(0, 0, 1),
                                 make_local_vertex(0, 0, 0, 1)};
  Behavior witness = mix(w, parts);

  ConvexDecomposition d = decompose(witness, hardy_face_vertices());
  CHECK(max_entry_difference(d.reconstruct(), witness) <= 1e-8);
  auto weight_of = [&](const VertexId& id) {
    auto it = d.weights.find(id);
    return it == d.weights.end() ? 0.0 : it->second;
  };
  CHECK(weight_of(VertexId::local(1, 1, 0, 0)) == doctest::Approx(slack).epsilon(1e-8));
  CHECK(weight_of(VertexId::local(0, 0, 0, 1)) == doctest::Approx(slack).epsilon(1e-8));
  CHECK(weight_of(VertexId::nonlocal(0, 0, 1)) == doctest::Approx(c6).epsilon(1e-8));
}

TEST_CASE("decompose round-trips 1000 random polytope points") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Behavior box = testing::random_no_signalling_box(rng);
    ConvexDecomposition d = decompose(box);
    CHECK(max_entry_difference(d.reconstruct(), box) <= 1e-8);
    double total = 0.0;
    for (const auto& [id, weight] : d.weights) {
      CHECK(weight >= -1e-9);
      total += weight;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("random Hardy-face boxes decompose over the six face vertices") {
  SplitMix64 rng(13);
  std::vector<Behavior> face_behaviors;
  for (const VertexId& id : hardy_face_vertices())
    face_behaviors.push_back(vertex_behavior(id));
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> w = testing::random_weights(rng, face_behaviors.size());
    Behavior box = mix(w, face_behaviors);
    ConvexDecomposition d = decompose(box, hardy_face_vertices());
    CHECK(max_entry_difference(d.reconstruct(), box) <= 1e-8);
  }
}

TEST_CASE("decompose rejects points outside the hull of the support") {
  // Signalling table: a = Y deterministically.
  Behavior::Table signalling{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) signalling[Behavior::index(x, y, y, 0)] = 1.0;
  CHECK_THROWS_AS(decompose(Behavior(signalling)), InfeasibleError);

  std::vector<VertexId> locals_only;
  for (const auto& [id, behavior] : enumerate_vertices())
    if (id.is_local()) locals_only.push_back(id);
  CHECK_THROWS_AS(decompose(pr_box(), locals_only), InfeasibleError);

  std::vector<VertexId> wrong_face = {VertexId::local(0, 0, 0, 0)};
  CHECK_THROWS_AS(decompose(pr_box(), wrong_face), InfeasibleError);
}

TEST_CASE("maximize_linear reproduces the face maxima and their witnesses") {
  LinearFunctional q4 = LinearFunctional::entry(1, 1, 1, 1);
  auto [hardy_value, hardy_witness] = maximize_linear(q4, hardy_face_vertices());
  CHECK(hardy_value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(hardy_witness == VertexId::nonlocal(0, 0, 1));

  LinearFunctional gap;
  gap.coefficients[Behavior::index(1, 1, 1, 1)] = 1.0;
  gap.coefficients[Behavior::index(0, 0, 0, 0)] = -1.0;
  auto [cabello_value, cabello_witness] = maximize_linear(gap, cabello_vertex_set());
  CHECK(cabello_value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cabello_witness == VertexId::nonlocal(0, 0, 1));

  std::vector<VertexId> all;
  for (const auto& [id, behavior] : enumerate_vertices()) all.push_back(id);
  auto [top_value, top_witness] = maximize_linear(q4, all);
  CHECK(top_value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(top_witness == VertexId::local(0, 1, 0, 1));
}

TEST_CASE("maximize_linear equals the brute-force support maximum and ties go first") {
  SplitMix64 rng(29);
  std::vector<VertexId> support = cabello_vertex_set();
  for (int trial = 0; trial < 100; ++trial) {
    LinearFunctional f;
    for (double& c : f.coefficients) c = rng.next_in(-1.0, 1.0);
    auto [value, witness] = maximize_linear(f, support);
    double best = -1e300;
    for (const VertexId& id : support)
      best = std::max(best, f.evaluate(vertex_behavior(id)));
    CHECK(value == doctest::Approx(best).epsilon(1e-12));
    CHECK(f.evaluate(vertex_behavior(witness)) == doctest::Approx(value));
  }

  // p(0,1|0,0) is 1 on both local:0001 and local:0011; the earlier id wins.
  LinearFunctional tie = LinearFunctional::entry(0, 0, 0, 1);
  auto [value, witness] = maximize_linear(tie, hardy_face_vertices());
  CHECK(value == doctest::Approx(1.0));
  CHECK(witness == VertexId::local(0, 0, 0, 1));
}

TEST_CASE("LinearFunctional evaluation is linear in mixtures") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    LinearFunctional f;
    for (double& c : f.coefficients) c = rng.next_in(-2.0, 2.0);
    std::vector<double> w = testing::random_weights(rng, 4);
    std::vector<Behavior> boxes;
    for (int i = 0; i < 4; ++i)
      boxes.push_back(testing::random_no_signalling_box(rng));
    double expected = 0.0;
    for (int i = 0; i < 4; ++i) expected += w[i] * f.evaluate(boxes[i]);
    CHECK(f.evaluate(mix(w, boxes)) == doctest::Approx(expected).epsilon(1e-12));
  }
}
