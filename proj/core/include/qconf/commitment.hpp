// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// Salted hash commitment for the initiator's message: a 256-bit digest over
// the message bits plus a 128-bit salt, so k-bit messages cannot be inverted
// by dictionary. Binding comes from the hash; hiding from the salt.

#ifndef QCONF_COMMITMENT_HPP_
#define QCONF_COMMITMENT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qconf/rng.hpp"

namespace qconf {

struct Commitment {
  std::string digest_hex;  // lowercase hex, 64 chars
  std::array<std::uint8_t, 16> salt{};
};

// Commits to a bit vector; the salt is drawn from rng (two u64 draws).
Commitment commit_bits(const std::vector<int>& bits, RngEngine& rng);

// Recomputes the digest over `bits` with the token's salt and compares.
bool verify_commitment(const Commitment& token, const std::vector<int>& bits);

}  // namespace qconf

#endif  // QCONF_COMMITMENT_HPP_
