// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCONF_RNG_HPP_
#define QCONF_RNG_HPP_

#include <cstdint>
#include <random>

namespace qconf {

// Deterministic random source with a visible draw counter.
//
// mt19937_64 output is pinned by the standard, and all derived draws below
// are hand-rolled (no std distributions, whose mapping is
// implementation-defined), so a seed reproduces the identical stream on any
// conforming toolchain. Transcripts record draws() to make replay divergence
// detectable.
class RngEngine {
 public:
  explicit RngEngine(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() {
    ++draws_;
    return gen_();
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). bound must be positive. Modulo bias is < 2^-52
  // for the bounds used here (all tiny); irrelevant next to Monte-Carlo noise
  // and identical on every platform, which is what matters.
  std::uint64_t next_index(std::uint64_t bound) { return next_u64() % bound; }

  int next_bit() { return static_cast<int>(next_u64() & 1u); }

  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 gen_;
  std::uint64_t draws_ = 0;
};

}  // namespace qconf

#endif  // QCONF_RNG_HPP_
