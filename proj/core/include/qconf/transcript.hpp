// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// Ordered event log of one conference run, serializable as JSON Lines.
// Identical seeds must reproduce identical bytes, so events carry an ordered
// field list (not a map) and the cumulative run-rng draw count.

#ifndef QCONF_TRANSCRIPT_HPP_
#define QCONF_TRANSCRIPT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qconf {

using EventValue = std::variant<std::int64_t, std::uint64_t, double, bool,
                                std::string, std::vector<std::int64_t>,
                                std::vector<std::string>>;

struct TranscriptEvent {
  std::string event_type;
  std::string step_ref;  // protocol step annotation, e.g. "1.3"
  std::string actor;
  std::uint64_t rng_draws = 0;  // cumulative run-rng draws at emission
  std::vector<std::pair<std::string, EventValue>> payload;

  const EventValue* find(const std::string& key) const;
};

struct Transcript {
  std::vector<TranscriptEvent> events;

  int count_type(const std::string& event_type) const;
  const TranscriptEvent* first_of(const std::string& event_type) const;

  // One JSON object per line with fields event_type, step_ref, actor,
  // payload, rng_draws, in that order.
  std::string to_jsonl() const;
  void write_jsonl(std::ostream& out) const;
  static Transcript from_jsonl(const std::string& text);
};

}  // namespace qconf

#endif  // QCONF_TRANSCRIPT_HPP_
