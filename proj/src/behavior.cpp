#include "nsbox/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace nsbox {

std::string VertexId::to_string() const {
  std::string out = is_local() ? "local:" : "nonlocal:";
  int n = is_local() ? 4 : 3;
  for (int i = 0; i < n; ++i) out.push_back(bits[i] ? '1' : '0');
  return out;
}

std::optional<VertexId> VertexId::parse(std::string_view text) {
  auto read_bits = [](std::string_view digits, int n, std::array<int, 4>& out) {
    if (digits.size() != static_cast<std::size_t>(n)) return false;
    for (int i = 0; i < n; ++i) {
      if (digits[i] != '0' && digits[i] != '1') return false;
      out[i] = digits[i] - '0';
    }
    return true;
  };
  VertexId id;
  if (text.starts_with("local:")) {
    id.kind = Kind::local;
    if (!read_bits(text.substr(6), 4, id.bits)) return std::nullopt;
    return id;
  }
  if (text.starts_with("nonlocal:")) {
    id.kind = Kind::nonlocal;
    if (!read_bits(text.substr(9), 3, id.bits)) return std::nullopt;
    return id;
  }
  return std::nullopt;
}

Behavior make_local_vertex(int alpha, int beta, int gamma, int delta) {
  Behavior::Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      int a = (alpha & x) ^ beta;
      int b = (gamma & y) ^ delta;
      t[Behavior::index(x, y, a, b)] = 1.0;
    }
  return Behavior(t);
}

Behavior make_nonlocal_vertex(int alpha, int beta, int gamma) {
  Behavior::Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      int parity = (x & y) ^ (alpha & x) ^ (beta & y) ^ gamma;
      for (int a = 0; a < 2; ++a) t[Behavior::index(x, y, a, a ^ parity)] = 0.5;
    }
  return Behavior(t);
}

Behavior vertex_behavior(const VertexId& id) {
  if (id.is_local())
    return make_local_vertex(id.bits[0], id.bits[1], id.bits[2], id.bits[3]);
  return make_nonlocal_vertex(id.bits[0], id.bits[1], id.bits[2]);
}

Behavior pr_box() { return make_nonlocal_vertex(0, 0, 0); }

Behavior white_noise() {
  Behavior::Table t;
  t.fill(0.25);
  return Behavior(t);
}

Behavior mix(std::span<const double> weights, std::span<const Behavior> behaviors,
             double eps) {
  if (weights.size() != behaviors.size())
    throw DomainError("mix requires one weight per behavior");
  if (weights.empty()) throw DomainError("mix of an empty list");
  double sum = 0.0;
  for (double w : weights) {
    if (w < -eps) throw NegativeWeightError("weight " + std::to_string(w));
    sum += w;
  }
  if (std::abs(sum - 1.0) > eps)
    throw WeightSumError("weights sum to " + std::to_string(sum));
  Behavior::Table t{};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& src = behaviors[i].table();
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += weights[i] * src[k];
  }
  return Behavior(t);
}

NoSignallingCertificate validate(const Behavior& behavior, double eps) {
  NoSignallingCertificate cert;
  cert.min_entry = *std::min_element(behavior.table().begin(), behavior.table().end());

  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      double block = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) block += behavior(x, y, a, b);
      cert.normalization_deviation =
          std::max(cert.normalization_deviation, std::abs(block - 1.0));
    }

  // Alice's marginal p(a|X) must not depend on Y, and symmetrically for Bob.
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) {
      double at_y0 = behavior(x, 0, a, 0) + behavior(x, 0, a, 1);
      double at_y1 = behavior(x, 1, a, 0) + behavior(x, 1, a, 1);
      cert.b_to_a_deviation = std::max(cert.b_to_a_deviation, std::abs(at_y0 - at_y1));
    }
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b) {
      double at_x0 = behavior(0, y, 0, b) + behavior(0, y, 1, b);
      double at_x1 = behavior(1, y, 0, b) + behavior(1, y, 1, b);
      cert.a_to_b_deviation = std::max(cert.a_to_b_deviation, std::abs(at_x0 - at_x1));
    }

  cert.certified = cert.certifies(eps);
  return cert;
}

double marginal(const Behavior& behavior, Party party, int input, int outcome) {
  double sum = 0.0;
  for (int other = 0; other < 2; ++other)
    sum += party == Party::alice ? behavior(input, 0, outcome, other)
                                 : behavior(0, input, other, outcome);
  return sum;
}

double max_entry_difference(const Behavior& lhs, const Behavior& rhs) {
  double worst = 0.0;
  for (std::size_t k = 0; k < lhs.table().size(); ++k)
    worst = std::max(worst, std::abs(lhs.table()[k] - rhs.table()[k]));
  return worst;
}

}  // namespace nsbox
