#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "nsbox/behavior.hpp"
#include "nsbox/ic_bounds.hpp"
#include "nsbox/polytope.hpp"
#include "support.hpp"

using namespace nsbox;

TEST_CASE("local vertices realize a = alpha X xor beta, b = gamma Y xor delta") {
  Behavior b0001 = make_local_vertex(0, 0, 0, 1);
  Behavior b0000 = make_local_vertex(0, 0, 0, 0);
  Behavior b1010 = make_local_vertex(1, 0, 1, 0);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          CHECK(b0001(x, y, a, b) == (a == 0 && b == 1 ? 1.0 : 0.0));
          CHECK(b0000(x, y, a, b) == (a == 0 && b == 0 ? 1.0 : 0.0));
          CHECK(b1010(x, y, a, b) == (a == x && b == y ? 1.0 : 0.0));
        }
}

TEST_CASE("nonlocal vertices realize a xor b = XY xor alpha X xor beta Y xor gamma") {
  Behavior pr = make_nonlocal_vertex(0, 0, 0);
  CHECK(pr == pr_box());
  Behavior flipped = make_nonlocal_vertex(0, 0, 1);
  Behavior mixed_parity = make_nonlocal_vertex(1, 1, 0);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          CHECK(pr(x, y, a, b) == ((a ^ b) == (x & y) ? 0.5 : 0.0));
          CHECK(flipped(x, y, a, b) == ((a ^ b) == (x & y) ? 0.0 : 0.5));
          CHECK(mixed_parity(x, y, a, b) ==
                ((a ^ b) == ((x & y) ^ x ^ y) ? 0.5 : 0.0));
        }
  CHECK(flipped(1, 1, 1, 1) == 0.5);
}

TEST_CASE("every vertex entry is 0, 1/2 or 1 and every certificate is exact") {
  for (const auto& [id, behavior] : enumerate_vertices()) {
    for (double entry : behavior.table()) {
      bool clean = entry == 0.0 || entry == 0.5 || entry == 1.0;
      CHECK(clean);
    }
    NoSignallingCertificate cert = validate(behavior);
    CHECK(cert.a_to_b_deviation == 0.0);
    CHECK(cert.b_to_a_deviation == 0.0);
    CHECK(cert.normalization_deviation == 0.0);
    CHECK(cert.min_entry == 0.0);
    CHECK(cert.certified);
  }
}

TEST_CASE("vertex_behavior agrees with the dedicated constructors") {
  CHECK(vertex_behavior(VertexId::local(1, 0, 1, 0)) ==
        make_local_vertex(1, 0, 1, 0));
  CHECK(vertex_behavior(VertexId::nonlocal(0, 0, 1)) ==
        make_nonlocal_vertex(0, 0, 1));
}

TEST_CASE("VertexId round trips through its string form") {
  for (const auto& [id, behavior] : enumerate_vertices()) {
    auto parsed = VertexId::parse(id.to_string());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == id);
  }
  CHECK(VertexId::local(0, 0, 0, 1).to_string() == "local:0001");
  CHECK(VertexId::nonlocal(0, 0, 1).to_string() == "nonlocal:001");
  CHECK(!VertexId::parse("local:001").has_value());
  CHECK(!VertexId::parse("nonlocal:0011").has_value());
  CHECK(!VertexId::parse("local:0102").has_value());
  CHECK(!VertexId::parse("pr").has_value());
}

TEST_CASE("mix reproduces identity, uniform and witness examples") {
  std::vector<double> one = {1.0};
  std::vector<Behavior> just_pr = {pr_box()};
  CHECK(mix(one, just_pr) == pr_box());

  std::vector<double> uniform(16, 1.0 / 16.0);
  std::vector<Behavior> locals;
  for (const auto& [id, behavior] : enumerate_vertices())
    if (id.is_local()) locals.push_back(behavior);
  Behavior averaged = mix(uniform, locals);
  for (double entry : averaged.table()) CHECK(entry == doctest::Approx(0.25).epsilon(1e-14));

  double slack = 1.0 - 1.0 / std::sqrt(2.0);
  std::vector<double> w = {slack, std::sqrt(2.0) - 1.0, slack};
  std::vector<Behavior> parts = {make_local_vertex(1, 1, 0, 0),
                                 make_nonlocal_vertex(0, 0, 1),
                                 make_local_vertex(0, 0, 0, 1)};
  Behavior witness = mix(w, parts);
  IcStatistics stats = ic_stats(witness);
  CHECK(stats.Q == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(validate(witness).certified);
}

TEST_CASE("mix rejects malformed weight vectors") {
  std::vector<Behavior> boxes = {pr_box(), white_noise()};
  std::vector<double> short_weights = {1.0};
  CHECK_THROWS_AS(mix(short_weights, boxes), DomainError);
  std::vector<double> empty;
  std::vector<Behavior> none;
  CHECK_THROWS_AS(mix(empty, none), DomainError);
  std::vector<double> low = {0.4, 0.4};
  CHECK_THROWS_AS(mix(low, boxes), WeightSumError);
  std::vector<double> negative = {1.2, -0.2};
  CHECK_THROWS_AS(mix(negative, boxes), NegativeWeightError);
}

TEST_CASE("mix is affine: linear functionals and ic_stats commute with it") {
  SplitMix64 rng(11);
  LinearFunctional f = LinearFunctional::entry(1, 1, 1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> w = testing::random_weights(rng, 5);
    std::vector<Behavior> boxes;
    for (int i = 0; i < 5; ++i)
      boxes.push_back(testing::random_no_signalling_box(rng));
    Behavior mixed = mix(w, boxes);

    double expected_f = 0.0;
    double expected_p1 = 0.0;
    for (int i = 0; i < 5; ++i) {
      expected_f += w[i] * f.evaluate(boxes[i]);
      expected_p1 += w[i] * ic_stats(boxes[i]).P1;
    }
    CHECK(f.evaluate(mixed) == doctest::Approx(expected_f).epsilon(1e-12));
    CHECK(ic_stats(mixed).P1 == doctest::Approx(expected_p1).epsilon(1e-12));
  }
}

TEST_CASE("validate reports normalization and signalling defects") {
  NoSignallingCertificate clean = validate(pr_box());
  CHECK(clean.certified);

  Behavior::Table overfull = white_noise().table();
  overfull[Behavior::index(0, 0, 0, 0)] = 1.1;
  overfull[Behavior::index(0, 0, 0, 1)] = 0.0;
  overfull[Behavior::index(0, 0, 1, 0)] = 0.0;
  overfull[Behavior::index(0, 0, 1, 1)] = 0.0;
  NoSignallingCertificate norm = validate(Behavior(overfull));
  CHECK(norm.normalization_deviation == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(!norm.certified);

  // a = Y deterministically: Bob's input steers Alice's marginal.
  Behavior::Table signalling{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) signalling[Behavior::index(x, y, y, 0)] = 1.0;
  NoSignallingCertificate cert = validate(Behavior(signalling));
  CHECK(cert.b_to_a_deviation == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!cert.certified);
  CHECK(!cert.certifies(0.5));
}

TEST_CASE("marginals match the table sums") {
  CHECK(marginal(pr_box(), Party::alice, 0, 0) == doctest::Approx(0.5));
  CHECK(marginal(make_local_vertex(0, 0, 0, 1), Party::bob, 1, 1) ==
        doctest::Approx(1.0));
  for (int input = 0; input < 2; ++input)
    for (int outcome = 0; outcome < 2; ++outcome) {
      CHECK(marginal(white_noise(), Party::alice, input, outcome) ==
            doctest::Approx(0.5));
      CHECK(marginal(white_noise(), Party::bob, input, outcome) ==
            doctest::Approx(0.5));
    }
}

TEST_CASE("max_entry_difference is a metric on tables") {
  CHECK(max_entry_difference(pr_box(), pr_box()) == 0.0);
  CHECK(max_entry_difference(pr_box(), white_noise()) == doctest::Approx(0.25));
}
