// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/transcript.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qconf/errors.hpp"

namespace qconf {

namespace {

using ojson = nlohmann::ordered_json;

ojson value_to_json(const EventValue& v) {
  return std::visit([](const auto& x) { return ojson(x); }, v);
}

EventValue json_to_value(const ojson& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_unsigned()) {
    std::uint64_t u = j.get<std::uint64_t>();
    if (u <= static_cast<std::uint64_t>(INT64_MAX)) {
      return static_cast<std::int64_t>(u);
    }
    return u;
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    bool all_strings = true;
    for (const auto& item : j) {
      if (!item.is_string()) all_strings = false;
    }
    if (all_strings && !j.empty()) {
      return j.get<std::vector<std::string>>();
    }
    std::vector<std::int64_t> ints;
    for (const auto& item : j) {
      if (!item.is_number_integer() && !item.is_number_unsigned()) {
        throw InvalidOperandError("unsupported payload array element");
      }
      ints.push_back(item.get<std::int64_t>());
    }
    return ints;
  }
  throw InvalidOperandError("unsupported payload value type");
}

}  // namespace

const EventValue* TranscriptEvent::find(const std::string& key) const {
  for (const auto& [k, v] : payload) {
    if (k == key) return &v;
  }
  return nullptr;
}

int Transcript::count_type(const std::string& event_type) const {
  int n = 0;
  for (const auto& e : events) {
    if (e.event_type == event_type) ++n;
  }
  return n;
}

const TranscriptEvent* Transcript::first_of(const std::string& event_type) const {
  for (const auto& e : events) {
    if (e.event_type == event_type) return &e;
  }
  return nullptr;
}

std::string Transcript::to_jsonl() const {
  std::string out;
  for (const auto& e : events) {
    ojson j;
    j["event_type"] = e.event_type;
    j["step_ref"] = e.step_ref;
    j["actor"] = e.actor;
    ojson payload = ojson::object();
    for (const auto& [k, v] : e.payload) payload[k] = value_to_json(v);
    j["payload"] = std::move(payload);
    j["rng_draws"] = e.rng_draws;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void Transcript::write_jsonl(std::ostream& out) const { out << to_jsonl(); }

Transcript Transcript::from_jsonl(const std::string& text) {
  Transcript t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ojson j;
    try {
      j = ojson::parse(line);
    } catch (const ojson::parse_error& e) {
      throw InvalidOperandError(std::string("bad transcript line: ") + e.what());
    }
    TranscriptEvent e;
    e.event_type = j.at("event_type").get<std::string>();
    e.step_ref = j.at("step_ref").get<std::string>();
    e.actor = j.at("actor").get<std::string>();
    e.rng_draws = j.at("rng_draws").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("payload").items()) {
      e.payload.emplace_back(k, json_to_value(v));
    }
    t.events.push_back(std::move(e));
  }
  return t;
}

}  // namespace qconf
