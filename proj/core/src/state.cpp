// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace qconf {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

void require_targets(const StateVector& state, const std::vector<int>& targets,
                     int word_length) {
  if (static_cast<int>(targets.size()) != word_length) {
    throw InvalidOperandError("target count != word length");
  }
  std::set<int> seen;
  for (int t : targets) {
    if (t < 0 || t >= state.qubit_count) {
      throw InvalidOperandError("target qubit out of range");
    }
    if (!seen.insert(t).second) {
      throw InvalidOperandError("duplicate target qubit");
    }
  }
}

// Mask selecting the amplitude-index bit of `qubit` (qubit 0 = MSB).
std::size_t bit_mask(const StateVector& state, int qubit) {
  return std::size_t{1} << (state.qubit_count - 1 - qubit);
}

void apply_symbol(StateVector& state, PauliSymbol s, int qubit) {
  if (s == PauliSymbol::I) return;
  const std::size_t mask = bit_mask(state, qubit);
  const std::size_t dim = state.amplitudes.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    auto& a0 = state.amplitudes[i];
    auto& a1 = state.amplitudes[i | mask];
    switch (s) {
      case PauliSymbol::X:
        std::swap(a0, a1);
        break;
      case PauliSymbol::Z:
        a1 = -a1;
        break;
      case PauliSymbol::iY: {
        // iY = [[0, 1], [-1, 0]]: |0> -> -|1>, |1> -> |0>.
        auto tmp = a0;
        a0 = a1;
        a1 = -tmp;
        break;
      }
      case PauliSymbol::I:
        break;
    }
  }
}

void apply_hadamard(StateVector& state, int qubit) {
  const std::size_t mask = bit_mask(state, qubit);
  const std::size_t dim = state.amplitudes.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    auto a0 = state.amplitudes[i];
    auto a1 = state.amplitudes[i | mask];
    state.amplitudes[i] = (a0 + a1) * kInvSqrt2;
    state.amplitudes[i | mask] = (a0 - a1) * kInvSqrt2;
  }
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return acc;
}

}  // namespace

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

StateVector prepare_state(std::string_view name) {
  StateVector s;
  if (name == "bell") {
    s.qubit_count = 2;
    s.amplitudes.assign(4, 0.0);
    s.amplitudes[0b00] = kInvSqrt2;
    s.amplitudes[0b11] = kInvSqrt2;
  } else if (name == "ghz3") {
    s.qubit_count = 3;
    s.amplitudes.assign(8, 0.0);
    s.amplitudes[0b000] = kInvSqrt2;
    s.amplitudes[0b111] = kInvSqrt2;
  } else if (name == "cluster4") {
    s.qubit_count = 4;
    s.amplitudes.assign(16, 0.0);
    s.amplitudes[0b0000] = 0.5;
    s.amplitudes[0b0011] = 0.5;
    s.amplitudes[0b1100] = 0.5;
    s.amplitudes[0b1111] = -0.5;
  } else {
    throw InvalidOperandError("unknown seed state '" + std::string(name) + "'");
  }
  return s;
}

StateVector prepare_state(const std::vector<std::complex<double>>& amplitudes) {
  if (amplitudes.size() < 2 || !is_pow2(amplitudes.size()) ||
      amplitudes.size() > (std::size_t{1} << kMaxQubits)) {
    throw InvalidOperandError(
        "amplitude count must be a power of two in [2, 4096]");
  }
  StateVector s;
  s.amplitudes = amplitudes;
  s.qubit_count = 0;
  for (std::size_t d = amplitudes.size(); d > 1; d >>= 1) ++s.qubit_count;
  double n = s.norm();
  if (std::abs(n - 1.0) > 1e-9) {
    throw InvalidOperandError("custom amplitudes are not normalized");
  }
  for (auto& a : s.amplitudes) a /= n;
  return s;
}

StateVector apply_word(const StateVector& state, const PauliWord& word,
                       const std::vector<int>& targets) {
  require_targets(state, targets, word.length());
  StateVector out = state;
  for (int i = 0; i < word.length(); ++i) {
    apply_symbol(out, word.symbol(i), targets[i]);
  }
  return out;
}

MeasurementBasis generate_basis(const StateVector& seed,
                                const std::vector<int>& travel,
                                const std::vector<PauliWord>& words) {
  if (words.empty()) throw InvalidOperandError("generate_basis: no words");
  MeasurementBasis basis;
  basis.states.reserve(words.size());
  basis.labels = words;
  for (const auto& w : words) {
    basis.states.push_back(apply_word(seed, w, travel));
  }
  for (std::size_t i = 0; i < basis.states.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.states.size(); ++j) {
      if (std::abs(inner(basis.states[i], basis.states[j])) > kOrthoTol) {
        throw DegeneracyError("degenerate basis pair: " + words[i].str() +
                              " vs " + words[j].str());
      }
    }
  }
  return basis;
}

std::pair<PauliWord, StateVector> measure_in_basis(const StateVector& state,
                                                   const MeasurementBasis& basis,
                                                   RngEngine& rng) {
  std::vector<double> probs(basis.states.size());
  double total = 0.0;
  for (std::size_t i = 0; i < basis.states.size(); ++i) {
    probs[i] = std::norm(inner(basis.states[i], state));
    total += probs[i];
  }
  double state_norm2 = 0.0;
  for (const auto& a : state.amplitudes) state_norm2 += std::norm(a);
  if (std::abs(total - state_norm2) > 1e-9) {
    throw SpanError("state lies outside the measurement basis span");
  }
  double u = rng.next_unit() * total;
  double acc = 0.0;
  std::size_t chosen = basis.states.size() - 1;
  for (std::size_t i = 0; i < basis.states.size(); ++i) {
    acc += probs[i];
    if (u < acc) {
      chosen = i;
      break;
    }
  }
  return {basis.labels[chosen], basis.states[chosen]};
}

std::pair<int, StateVector> measure_qubit(const StateVector& state, int qubit,
                                          MeasAxis axis, RngEngine& rng) {
  if (qubit < 0 || qubit >= state.qubit_count) {
    throw InvalidOperandError("measured qubit out of range");
  }
  StateVector work = state;
  if (axis == MeasAxis::X) apply_hadamard(work, qubit);
  const std::size_t mask = bit_mask(work, qubit);
  double p1 = 0.0;
  for (std::size_t i = 0; i < work.amplitudes.size(); ++i) {
    if (i & mask) p1 += std::norm(work.amplitudes[i]);
  }
  int bit = rng.next_unit() < p1 ? 1 : 0;
  for (std::size_t i = 0; i < work.amplitudes.size(); ++i) {
    bool one = (i & mask) != 0;
    if (one != (bit == 1)) work.amplitudes[i] = 0.0;
  }
  double n = work.norm();
  if (n < 1e-150) {
    throw SpanError("measurement collapsed onto a zero branch");
  }
  for (auto& a : work.amplitudes) a /= n;
  if (axis == MeasAxis::X) apply_hadamard(work, qubit);
  return {bit, work};
}

DecoyQubit random_decoy(RngEngine& rng) {
  std::uint64_t pick = rng.next_index(4);
  DecoyQubit d;
  d.basis = (pick & 2) ? MeasAxis::X : MeasAxis::Z;
  d.bit = static_cast<int>(pick & 1);
  return d;
}

int measure_decoy(const DecoyQubit& d, MeasAxis meas_basis, RngEngine& rng) {
  if (meas_basis == d.basis) return d.bit;
  return rng.next_bit();
}

}  // namespace qconf
