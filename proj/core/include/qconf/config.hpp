// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON config parsing for runs and codebooks. One file describes one run;
// sweeps are CLI-flag business. The parsed adversary descriptor is returned
// alongside the config so the caller owns interceptor construction.

#ifndef QCONF_CONFIG_HPP_
#define QCONF_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "qconf/engine.hpp"

namespace qconf {

struct AdversaryDescriptor {
  std::string kind;  // intercept_resend | entangle_measure | dishonest_announcer
  double fraction = 1.0;          // intercept_resend
  double beta_sq = 0.5;           // entangle_measure
  std::uint64_t seed = 0;         // interceptor's own stream
  std::optional<std::string> actual_bits;  // dishonest_announcer override
};

struct ParsedRun {
  ConferenceConfig config;
  std::optional<AdversaryDescriptor> adversary;
};

// Keys: protocol, preset | codebook, messages, decoys_per_hop,
// abort_threshold, commitment, subcircles, seed, adversary. Structural or
// semantic problems throw ConfigError with the offending key in the message.
ParsedRun parse_run_config(const std::string& json_text);
ParsedRun load_run_config(const std::string& path);

// A codebook on its own: either {"preset": name} (optional "protocol") or an
// explicit {seed, travel, parties, protocol, derive_receiver} object; also
// accepts a full run config, using its codebook part.
Codebook parse_codebook_config(const std::string& json_text);
Codebook load_codebook_config(const std::string& path);

}  // namespace qconf

#endif  // QCONF_CONFIG_HPP_
