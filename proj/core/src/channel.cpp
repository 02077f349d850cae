// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/channel.hpp"

namespace qconf {

int measure_transit_decoy(const TransitDecoy& d, MeasAxis meas_basis,
                          RngEngine& rng) {
  if (meas_basis == d.current.basis) {
    int bit = d.current.bit;
    // Draw exactly when the outcome is probabilistic, never otherwise, so
    // equal seeds replay identical draw sequences.
    if (d.matched_flip_prob > 0 && rng.next_unit() < d.matched_flip_prob) {
      bit ^= 1;
    }
    return bit;
  }
  return rng.next_bit();
}

}  // namespace qconf
