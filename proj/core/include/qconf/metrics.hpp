// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form information and efficiency quantities. Efficiency values are
// exact rationals (display rounds to whole percent); the same symbol m
// counts both travel qubits and decoys per hop because the check uses one
// decoy per message qubit.

#ifndef QCONF_METRICS_HPP_
#define QCONF_METRICS_HPP_

#include <cstdint>
#include <string>

namespace qconf {

// -u log2 u - (1-u) log2 (1-u), with 0 log 0 = 0. Domain [0,1].
double binary_entropy(double u);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  // Whole-percent display, rounded half away from zero: 2/3 -> "67%".
  int percent() const;
  std::string str() const;  // "2/3"
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);  // reduced form

struct EfficiencyInput {
  int N = 0;  // party count
  int k = 0;  // bits per party
  int n = 0;  // channel qubit count
  int m = 0;  // travel ( = decoy) qubits per hop
};

// All fields positive, m <= n. Throws InvalidOperandError otherwise.
void validate_efficiency_input(const EfficiencyInput& inp);

// k / (mN + n): N rounds of an n-qubit channel with m decoys each carry Nk
// bits and no classical side channel.
Rational efficiency_p1(const EfficiencyInput& inp);

// kN / (mN + 2n): one round, n extra classical bits for the broadcast
// announcement.
Rational efficiency_p2(const EfficiencyInput& inp);

}  // namespace qconf

#endif  // QCONF_METRICS_HPP_
