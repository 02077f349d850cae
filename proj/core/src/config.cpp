// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qconf {

namespace {

using njson = nlohmann::json;

njson parse_json(const std::string& text) {
  try {
    return njson::parse(text);
  } catch (const njson::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void reject_unknown_keys(const njson& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

int get_int(const njson& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) {
    throw ConfigError(std::string("'") + key + "' must be an integer");
  }
  return obj[key].get<int>();
}

double get_double(const njson& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    throw ConfigError(std::string("'") + key + "' must be a number");
  }
  return obj[key].get<double>();
}

StateVector parse_seed(const njson& seed) {
  if (seed.is_string()) {
    try {
      return prepare_state(seed.get<std::string>());
    } catch (const InvalidOperandError& e) {
      throw ConfigError(e.what());
    }
  }
  if (!seed.is_array()) {
    throw ConfigError("'seed' (state) must be a name or an amplitude array");
  }
  std::vector<std::complex<double>> amps;
  for (const auto& item : seed) {
    if (item.is_number()) {
      amps.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() &&
               item[1].is_number()) {
      amps.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw ConfigError("amplitudes must be numbers or [re, im] pairs");
    }
  }
  try {
    return prepare_state(amps);
  } catch (const InvalidOperandError& e) {
    throw ConfigError(e.what());
  }
}

Codebook parse_codebook_object(const njson& obj, int protocol) {
  if (obj.is_string()) {
    const std::string name = obj.get<std::string>();
    if (!is_preset(name)) throw ConfigError("unknown preset '" + name + "'");
    return make_preset(name, protocol);
  }
  if (!obj.is_object()) {
    throw ConfigError("'codebook' must be a preset name or an object");
  }
  if (obj.contains("preset")) {
    reject_unknown_keys(obj, {"preset"}, "codebook");
    return parse_codebook_object(obj["preset"], protocol);
  }
  reject_unknown_keys(obj, {"state", "travel", "parties", "derive_receiver"},
                      "codebook");
  CodebookSpec spec;
  spec.protocol = protocol;
  spec.label = "custom";
  if (!obj.contains("state") || !obj.contains("travel") ||
      !obj.contains("parties")) {
    throw ConfigError("codebook needs 'state', 'travel' and 'parties'");
  }
  spec.seed_name = obj["state"].is_string() ? obj["state"].get<std::string>()
                                            : std::string("custom");
  spec.seed = parse_seed(obj["state"]);
  if (!obj["travel"].is_array()) {
    throw ConfigError("'travel' must be an array of qubit indices");
  }
  for (const auto& q : obj["travel"]) {
    if (!q.is_number_integer()) {
      throw ConfigError("'travel' must be an array of qubit indices");
    }
    spec.travel.push_back(q.get<int>());
  }
  if (!obj["parties"].is_array() || obj["parties"].empty()) {
    throw ConfigError("'parties' must be a non-empty array");
  }
  for (const auto& p : obj["parties"]) {
    if (!p.is_object() || !p.contains("name") || !p.contains("ops") ||
        !p["name"].is_string() || !p["ops"].is_array()) {
      throw ConfigError("each party needs a 'name' and an 'ops' array");
    }
    reject_unknown_keys(p, {"name", "ops"}, "party");
    CodebookParty party;
    party.name = p["name"].get<std::string>();
    for (const auto& op : p["ops"]) {
      if (!op.is_string()) {
        throw ConfigError("party ops must be operator word strings");
      }
      try {
        party.ops.push_back(PauliWord::parse(op.get<std::string>()));
      } catch (const InvalidOperandError& e) {
        throw ConfigError(e.what());
      }
    }
    spec.parties.push_back(std::move(party));
  }
  if (obj.contains("derive_receiver")) {
    if (!obj["derive_receiver"].is_boolean()) {
      throw ConfigError("'derive_receiver' must be a boolean");
    }
    spec.derive_receiver = obj["derive_receiver"].get<bool>();
  }
  // ValidationError propagates as itself so callers can tell a structurally
  // bad codebook from an unreadable config.
  return Codebook(std::move(spec));
}

AdversaryDescriptor parse_adversary(const njson& obj) {
  if (!obj.is_object() || !obj.contains("kind") || !obj["kind"].is_string()) {
    throw ConfigError("'adversary' needs a string 'kind'");
  }
  reject_unknown_keys(obj, {"kind", "fraction", "beta_sq", "seed", "actual_bits"},
                      "adversary");
  AdversaryDescriptor desc;
  desc.kind = obj["kind"].get<std::string>();
  if (desc.kind != "intercept_resend" && desc.kind != "entangle_measure" &&
      desc.kind != "dishonest_announcer") {
    throw ConfigError("unknown adversary kind '" + desc.kind + "'");
  }
  desc.fraction = get_double(obj, "fraction", 1.0);
  desc.beta_sq = get_double(obj, "beta_sq", 0.5);
  if (obj.contains("seed")) {
    if (!obj["seed"].is_number_unsigned() && !obj["seed"].is_number_integer()) {
      throw ConfigError("adversary 'seed' must be an integer");
    }
    desc.seed = obj["seed"].get<std::uint64_t>();
  }
  if (obj.contains("actual_bits")) {
    if (!obj["actual_bits"].is_string()) {
      throw ConfigError("'actual_bits' must be a bit string");
    }
    desc.actual_bits = obj["actual_bits"].get<std::string>();
  }
  return desc;
}

}  // namespace

ParsedRun parse_run_config(const std::string& json_text) {
  njson root = parse_json(json_text);
  if (!root.is_object()) throw ConfigError("run config must be a JSON object");
  reject_unknown_keys(root,
                      {"protocol", "preset", "codebook", "messages",
                       "decoys_per_hop", "abort_threshold", "commitment",
                       "subcircles", "seed", "adversary"},
                      "run config");
  const int protocol = get_int(root, "protocol", 2);
  if (protocol != 1 && protocol != 2) {
    throw ConfigError("'protocol' must be 1 or 2");
  }
  if (root.contains("preset") == root.contains("codebook")) {
    throw ConfigError("exactly one of 'preset' or 'codebook' is required");
  }
  Codebook cb = root.contains("preset")
                    ? parse_codebook_object(root["preset"], protocol)
                    : parse_codebook_object(root["codebook"], protocol);
  if (!root.contains("messages") || !root["messages"].is_array()) {
    throw ConfigError("'messages' must be an array of bit strings");
  }
  std::vector<std::vector<int>> messages;
  for (const auto& msg : root["messages"]) {
    if (!msg.is_string()) {
      throw ConfigError("'messages' must be an array of bit strings");
    }
    try {
      messages.push_back(parse_bits(msg.get<std::string>()));
    } catch (const InvalidOperandError& e) {
      throw ConfigError(e.what());
    }
  }
  ParsedRun out{ConferenceConfig{std::move(cb), std::move(messages)}, {}};
  ConferenceConfig& cfg = out.config;
  cfg.decoys_per_hop = get_int(root, "decoys_per_hop", 0);
  cfg.abort_threshold = get_double(root, "abort_threshold", 0.17);
  if (root.contains("commitment")) {
    if (!root["commitment"].is_boolean()) {
      throw ConfigError("'commitment' must be a boolean");
    }
    cfg.commitment_enabled = root["commitment"].get<bool>();
  }
  cfg.subcircles = get_int(root, "subcircles", 1);
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer()) {
      throw ConfigError("'seed' must be an integer");
    }
    cfg.seed = root["seed"].get<std::uint64_t>();
  }
  validate_config(cfg);
  if (root.contains("adversary")) {
    out.adversary = parse_adversary(root["adversary"]);
    if (out.adversary->kind == "dishonest_announcer" &&
        cfg.codebook.protocol() != 2) {
      throw ConfigError("dishonest_announcer needs protocol 2");
    }
  }
  return out;
}

ParsedRun load_run_config(const std::string& path) {
  return parse_run_config(read_file(path));
}

Codebook parse_codebook_config(const std::string& json_text) {
  njson root = parse_json(json_text);
  if (root.is_object() &&
      (root.contains("codebook") || root.contains("preset") ||
       root.contains("messages"))) {
    const int protocol = get_int(root, "protocol", 2);
    if (protocol != 1 && protocol != 2) {
      throw ConfigError("'protocol' must be 1 or 2");
    }
    if (root.contains("codebook")) {
      return parse_codebook_object(root["codebook"], protocol);
    }
    if (root.contains("preset")) {
      return parse_codebook_object(root["preset"], protocol);
    }
    throw ConfigError("no codebook in run config");
  }
  const int protocol = root.is_object() ? get_int(root, "protocol", 2) : 2;
  if (protocol != 1 && protocol != 2) {
    throw ConfigError("'protocol' must be 1 or 2");
  }
  if (root.is_object()) {
    njson body = root;
    body.erase("protocol");
    return parse_codebook_object(body, protocol);
  }
  return parse_codebook_object(root, protocol);
}

Codebook load_codebook_config(const std::string& path) {
  return parse_codebook_config(read_file(path));
}

}  // namespace qconf
