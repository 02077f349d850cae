// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// The in-flight view of one hop: the joint register's travel qubits plus the
// interleaved decoys, exposed to an optional channel interceptor. Decoys
// track both their prepared and current (possibly tampered) descriptions; an
// entangling tamper is summarized by the matched-basis flip probability it
// induces, which is exact for the modeled probe interaction.

#ifndef QCONF_CHANNEL_HPP_
#define QCONF_CHANNEL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qconf/state.hpp"

namespace qconf {

struct TransitDecoy {
  DecoyQubit prepared;
  DecoyQubit current;            // what actually flies after tampering
  bool tampered = false;         // any interceptor action on this decoy
  double matched_flip_prob = 0;  // bit-flip chance when measured in current.basis
};

// One hop's payload while it crosses the channel. `joint` stays owned by the
// engine; interceptors may measure travel qubits through it.
struct TransmitStream {
  StateVector* joint = nullptr;
  std::vector<int> travel_qubits;
  std::vector<TransitDecoy> decoys;
  std::vector<int> decoy_positions;  // slots within the interleaved sequence
  int hop_from = 0;
  int hop_to = 0;
};

class ChannelInterceptor {
 public:
  virtual ~ChannelInterceptor() = default;
  virtual void on_transmit(TransmitStream& stream) = 0;

  // Self-description for transcript attack reports.
  virtual std::string kind() const { return "interceptor"; }
  virtual std::uint64_t decoys_touched() const { return 0; }
  virtual std::uint64_t travel_touched() const { return 0; }
};

// Receiver-side decoy measurement honoring tampering: matched current basis
// returns the current bit (flipped with matched_flip_prob), mismatched basis
// is a fair coin. Draws come from the run rng.
int measure_transit_decoy(const TransitDecoy& d, MeasAxis meas_basis,
                          RngEngine& rng);

}  // namespace qconf

#endif  // QCONF_CHANNEL_HPP_
