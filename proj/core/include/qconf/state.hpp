// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense state-vector simulation, sized for the conference channels (a dozen
// qubits at most). Pauli words act on listed travel qubits; measurement
// bases are generated by word application to a seed state. Decoy qubits are
// deliberately classical (basis, bit) pairs: they are product states by
// construction and never join the entangled register.

#ifndef QCONF_STATE_HPP_
#define QCONF_STATE_HPP_

#include <complex>
#include <string_view>
#include <vector>

#include "qconf/errors.hpp"
#include "qconf/pauli.hpp"
#include "qconf/rng.hpp"

namespace qconf {

inline constexpr int kMaxQubits = 12;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kOrthoTol = 1e-9;

// Qubit 0 is the most significant bit of the amplitude index.
struct StateVector {
  std::vector<std::complex<double>> amplitudes;
  int qubit_count = 0;

  double norm() const;
};

// Built-in seeds: "bell" = (|00> + |11>)/sqrt2, "ghz3" = (|000> + |111>)/sqrt2,
// "cluster4" = (|0000> + |0011> + |1100> - |1111>)/2.
StateVector prepare_state(std::string_view name);

// Custom amplitudes: length a power of two (<= 2^12), norm within 1e-9 of 1
// (then scaled exactly to unit norm; wildly non-normalized input is an error,
// not silently fixed).
StateVector prepare_state(const std::vector<std::complex<double>>& amplitudes);

// Applies word symbol-by-symbol on the indexed qubits. X = bit flip,
// Z = phase flip, iY = [[0,1],[-1,0]] exactly (real, so no phase bookkeeping).
StateVector apply_word(const StateVector& state, const PauliWord& word,
                       const std::vector<int>& targets);

struct MeasurementBasis {
  std::vector<StateVector> states;
  std::vector<PauliWord> labels;
};

// {W |seed>} for each word W on the travel qubits. Any non-orthogonal pair
// (|inner| > 1e-9) raises DegeneracyError naming the colliding labels.
MeasurementBasis generate_basis(const StateVector& seed,
                                const std::vector<int>& travel,
                                const std::vector<PauliWord>& words);

// Born-rule sample over the basis; the state must lie in the basis span
// (residual norm < 1e-9, else SpanError). Consumes exactly one rng draw.
// Deterministic whenever the state equals a basis element.
std::pair<PauliWord, StateVector> measure_in_basis(const StateVector& state,
                                                   const MeasurementBasis& basis,
                                                   RngEngine& rng);

enum class MeasAxis { Z, X };

// Projective single-qubit measurement on the joint state; returns the
// observed bit and the collapsed (renormalized) state.
std::pair<int, StateVector> measure_qubit(const StateVector& state, int qubit,
                                          MeasAxis axis, RngEngine& rng);

// One decoy: |0>, |1>, |+> or |-> as (basis, bit).
struct DecoyQubit {
  MeasAxis basis = MeasAxis::Z;
  int bit = 0;
};

// Uniform over the four preparations; consumes one rng draw.
DecoyQubit random_decoy(RngEngine& rng);

// Matched basis returns the prepared bit (no draw); mismatched basis returns
// a fair coin (one draw).
int measure_decoy(const DecoyQubit& d, MeasAxis meas_basis, RngEngine& rng);

}  // namespace qconf

#endif  // QCONF_STATE_HPP_
