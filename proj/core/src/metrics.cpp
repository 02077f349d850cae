// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/metrics.hpp"

#include <cmath>
#include <numeric>

#include "qconf/errors.hpp"

namespace qconf {

double binary_entropy(double u) {
  if (u < 0.0 || u > 1.0) {
    throw InvalidOperandError("entropy argument must lie in [0, 1]");
  }
  if (u == 0.0 || u == 1.0) return 0.0;
  return -u * std::log2(u) - (1.0 - u) * std::log2(1.0 - u);
}

int Rational::percent() const {
  // Half away from zero; efficiency values are non-negative.
  return static_cast<int>((200 * num + den) / (2 * den));
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidOperandError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

void validate_efficiency_input(const EfficiencyInput& inp) {
  if (inp.N < 1 || inp.k < 1 || inp.n < 1 || inp.m < 1) {
    throw InvalidOperandError("efficiency parameters must be positive");
  }
  if (inp.m > inp.n) {
    throw InvalidOperandError("travel qubits cannot exceed channel qubits");
  }
}

Rational efficiency_p1(const EfficiencyInput& inp) {
  validate_efficiency_input(inp);
  // c / (q + b) with c = Nk secret bits, q = N(mN + n) transported qubits
  // spread over N rounds, b = 0; one round's share is k / (mN + n).
  return make_rational(inp.k,
                       static_cast<std::int64_t>(inp.m) * inp.N + inp.n);
}

Rational efficiency_p2(const EfficiencyInput& inp) {
  validate_efficiency_input(inp);
  // c = Nk, q = n + Nm, b = n.
  return make_rational(static_cast<std::int64_t>(inp.k) * inp.N,
                       static_cast<std::int64_t>(inp.m) * inp.N +
                           2 * static_cast<std::int64_t>(inp.n));
}

}  // namespace qconf
