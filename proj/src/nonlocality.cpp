#include "nsbox/nonlocality.hpp"

namespace nsbox {

HardyCertificate hardy_check(const Behavior& behavior, double eps) {
  HardyCertificate cert;
  cert.q1 = behavior(0, 0, 0, 0);
  cert.q4 = behavior(1, 1, 1, 1);
  cert.zero_residuals[0] = behavior(1, 0, 1, 1);
  cert.zero_residuals[1] = behavior(0, 1, 1, 1);
  bool zeros_ok = cert.zero_residuals[0] <= eps && cert.zero_residuals[1] <= eps;
  cert.cabello_holds = zeros_ok && cert.q4 - cert.q1 > eps;
  // The q1 = 0 special case; the gap condition keeps it a strict subset of
  // the cabello flag when q1 sits just below the tolerance.
  cert.hardy_holds = cert.cabello_holds && cert.q1 <= eps && cert.q4 > eps;
  return cert;
}

double hardy_success(const Behavior& behavior) { return behavior(1, 1, 1, 1); }

double cabello_success(const Behavior& behavior) {
  return behavior(1, 1, 1, 1) - behavior(0, 0, 0, 0);
}

double chsh_value(const Behavior& behavior) {
  auto correlator = [&](int x, int y) {
    double e = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        e += ((a ^ b) ? -1.0 : 1.0) * behavior(x, y, a, b);
    return e;
  };
  return correlator(0, 0) + correlator(0, 1) + correlator(1, 0) - correlator(1, 1);
}

}  // namespace nsbox
