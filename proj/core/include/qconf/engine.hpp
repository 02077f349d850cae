// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end conference runs: the circular pass of travel qubits through all
// parties with a decoy check on every hop, the final basis measurement,
// announcement (protocol 2), per-party decoding, and the commitment
// mitigation against a dishonest initiator. One run is one logical thread;
// everything random flows through a single seeded engine so a seed pins the
// transcript bytes.

#ifndef QCONF_ENGINE_HPP_
#define QCONF_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qconf/channel.hpp"
#include "qconf/codebook.hpp"
#include "qconf/transcript.hpp"

namespace qconf {

struct ConferenceConfig {
  Codebook codebook;
  // Per-party message bits: protocol 1 takes the senders only (N-1 entries),
  // protocol 2 all N parties, each of length k_i.
  std::vector<std::vector<int>> messages;
  int decoys_per_hop = 0;  // 0 = default to |travel|
  double abort_threshold = 0.17;
  bool commitment_enabled = true;  // protocol 2 only
  int subcircles = 1;
  std::uint64_t seed = 0;
};

struct RunOptions {
  // Dishonest-announcer scenario: the operator index the initiator actually
  // applies in protocol 2, regardless of the committed message.
  std::optional<int> initiator_actual_index;
};

struct DecodeRecord {
  std::string party;
  std::vector<std::string> tuple;  // recovered bit-string per party
};

struct RunOutcome {
  Transcript transcript;
  bool completed = false;
  bool aborted = false;
  int abort_hop = -1;
  std::string abort_reason;
  std::string initial_label;  // word string; empty until prepared
  std::string final_label;    // word string; empty unless measured
  std::vector<DecodeRecord> decodes;
  bool decode_consistent = false;
  bool integrity_event = false;  // span/decode failure escaped the checks
  bool cheater_detected = false;
  std::string cheater;
  std::vector<double> hop_error_rates;
};

// Validates a config against its codebook (message shapes, threshold range,
// d >= 1 after defaulting, 1 <= subcircles <= N). Throws ConfigError.
void validate_config(const ConferenceConfig& cfg);

RunOutcome run_conference(const ConferenceConfig& cfg,
                          ChannelInterceptor* adversary = nullptr,
                          const RunOptions& options = {});

struct HopResult {
  bool passed = false;
  bool inconclusive = false;  // every retry ended with zero matched bases
  int attempts = 0;
  std::uint64_t matched = 0;
  std::uint64_t errors = 0;
  double error_rate = 0;  // of the final attempt
};

// One decoy-checked transmission: prepare d decoys, interleave at random
// slots, cross the channel (interceptor hook), acknowledge, disclose,
// measure, compare matched bases. Error rate above the threshold fails the
// hop; zero matched comparisons retries with fresh decoys (at most 3
// retries). Message qubits are never measured here. Events are appended to
// `log` when provided.
HopResult bb84_hop(StateVector* joint, const std::vector<int>& travel_qubits,
                   int decoy_count, double threshold, int hop_from, int hop_to,
                   RngEngine& rng, ChannelInterceptor* adversary,
                   Transcript* log, const std::string& step_ref,
                   const std::vector<std::string>& party_names);

// Contiguous split of the circular pass into l segments, returned as sorted
// segment start positions. Built by nested bisection (split the largest
// segment, ties leftmost), so the partition for l+1 always refines the one
// for l. Requires 1 <= l <= party_count.
std::vector<int> partition_subcircles(int party_count, int l);

}  // namespace qconf

#endif  // QCONF_ENGINE_HPP_
