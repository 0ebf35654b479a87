#pragma once

// Two-party boxes with binary inputs X, Y and binary outputs a, b.
// A Behavior is the conditional probability table p(a,b|X,Y), stored flat in
// [X][Y][a][b] order. Outcome bits map to +/-1 observables as 0 <-> +1,
// 1 <-> -1, so e.g. P(A'=-1, B'=-1) is the entry p(1,1|1,1).

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsbox/errors.hpp"

namespace nsbox {

inline constexpr double kDefaultTolerance = 1e-9;

class Behavior {
public:
  using Table = std::array<double, 16>;

  Behavior() : table_{} {}
  explicit Behavior(const Table& table) : table_(table) {}

  static constexpr std::size_t index(int x, int y, int a, int b) {
    return static_cast<std::size_t>(((x * 2 + y) * 2 + a) * 2 + b);
  }

  double operator()(int x, int y, int a, int b) const {
    return table_[index(x, y, a, b)];
  }

  const Table& table() const { return table_; }

  bool operator==(const Behavior& other) const = default;

private:
  Table table_;
};

// Identifies one of the 24 extreme points of the no-signalling polytope:
// 16 deterministic local vertices (a = alpha*X xor beta, b = gamma*Y xor delta)
// and 8 nonlocal vertices (a xor b = X*Y xor alpha*X xor beta*Y xor gamma,
// both outcome pairs equally likely).
struct VertexId {
  enum class Kind { local, nonlocal };

  Kind kind = Kind::local;
  // local: alpha, beta, gamma, delta; nonlocal: alpha, beta, gamma (last unused).
  std::array<int, 4> bits{0, 0, 0, 0};

  static VertexId local(int alpha, int beta, int gamma, int delta) {
    return VertexId{Kind::local, {alpha, beta, gamma, delta}};
  }
  static VertexId nonlocal(int alpha, int beta, int gamma) {
    return VertexId{Kind::nonlocal, {alpha, beta, gamma, 0}};
  }

  bool is_local() const { return kind == Kind::local; }

  // "local:0001" / "nonlocal:001"
  std::string to_string() const;
  static std::optional<VertexId> parse(std::string_view text);

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// Raw no-signalling diagnostics for one behavior. Deviations are exact sums
// over the table; `certified` records the verdict at the tolerance passed to
// validate(). a_to_b measures Alice's input influencing Bob's outcome
// marginals, b_to_a the reverse.
struct NoSignallingCertificate {
  double a_to_b_deviation = 0.0;
  double b_to_a_deviation = 0.0;
  double normalization_deviation = 0.0;
  double min_entry = 0.0;
  bool certified = false;

  bool certifies(double eps) const {
    return a_to_b_deviation <= eps && b_to_a_deviation <= eps &&
           normalization_deviation <= eps && min_entry >= -eps;
  }
};

enum class Party { alice, bob };

Behavior make_local_vertex(int alpha, int beta, int gamma, int delta);
Behavior make_nonlocal_vertex(int alpha, int beta, int gamma);
Behavior vertex_behavior(const VertexId& id);

// The Popescu-Rohrlich box, nonlocal(0,0,0): a xor b = X*Y.
Behavior pr_box();

// Uniform table, every entry 1/4.
Behavior white_noise();

// Entrywise convex combination. Throws NegativeWeightError, WeightSumError,
// or DomainError (length mismatch / empty input).
Behavior mix(std::span<const double> weights, std::span<const Behavior> behaviors,
             double eps = kDefaultTolerance);

NoSignallingCertificate validate(const Behavior& behavior,
                                 double eps = kDefaultTolerance);

// Outcome marginal for one party, summing out the other party's outcome at
// that party's input 0 (immaterial for certified no-signalling boxes).
double marginal(const Behavior& behavior, Party party, int input, int outcome);

// Largest |difference| over the 16 entries.
double max_entry_difference(const Behavior& lhs, const Behavior& rhs);

}  // namespace nsbox
