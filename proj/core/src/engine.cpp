// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/engine.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "qconf/commitment.hpp"

namespace qconf {

namespace {

using Payload = std::vector<std::pair<std::string, EventValue>>;

void append_event(Transcript* log, std::string type, std::string step,
                  std::string actor, std::uint64_t draws, Payload payload) {
  if (log == nullptr) return;
  TranscriptEvent e;
  e.event_type = std::move(type);
  e.step_ref = std::move(step);
  e.actor = std::move(actor);
  e.rng_draws = draws;
  e.payload = std::move(payload);
  log->events.push_back(std::move(e));
}

std::vector<std::int64_t> to_i64(const std::vector<int>& v) {
  return std::vector<std::int64_t>(v.begin(), v.end());
}

}  // namespace

void validate_config(const ConferenceConfig& cfg) {
  const Codebook& cb = cfg.codebook;
  const int n = cb.party_count();
  if (n < 2) {
    throw ConfigError("a conference needs at least two parties");
  }
  const int expected =
      cb.protocol() == 1 ? cb.sender_count() : cb.party_count();
  if (static_cast<int>(cfg.messages.size()) != expected) {
    throw ConfigError("expected " + std::to_string(expected) +
                      " messages, got " + std::to_string(cfg.messages.size()));
  }
  for (int p = 0; p < expected; ++p) {
    if (static_cast<int>(cfg.messages[p].size()) != cb.bits_for(p)) {
      throw ConfigError("message for party '" + cb.parties()[p].name +
                        "' must have " + std::to_string(cb.bits_for(p)) +
                        " bits");
    }
    for (int b : cfg.messages[p]) {
      if (b != 0 && b != 1) {
        throw ConfigError("message bits must be 0 or 1");
      }
    }
  }
  if (cfg.abort_threshold < 0.0 || cfg.abort_threshold > 1.0) {
    throw ConfigError("abort threshold must lie in [0, 1]");
  }
  if (cfg.decoys_per_hop < 0) {
    throw ConfigError("decoys_per_hop must be >= 0");
  }
  if (cfg.subcircles < 1 || cfg.subcircles > n) {
    throw ConfigError("subcircles must lie in [1, party count]");
  }
}

HopResult bb84_hop(StateVector* joint, const std::vector<int>& travel_qubits,
                   int decoy_count, double threshold, int hop_from, int hop_to,
                   RngEngine& rng, ChannelInterceptor* adversary,
                   Transcript* log, const std::string& step_ref,
                   const std::vector<std::string>& party_names) {
  if (joint == nullptr) throw InvalidOperandError("bb84_hop: null joint state");
  if (decoy_count < 1) {
    throw InvalidOperandError("bb84_hop: need at least one decoy");
  }
  const int n_names = static_cast<int>(party_names.size());
  if (hop_from < 0 || hop_from >= n_names || hop_to < 0 || hop_to >= n_names) {
    throw InvalidOperandError("bb84_hop: endpoint index out of range");
  }
  const std::string& sender = party_names[hop_from];
  const std::string& receiver = party_names[hop_to];
  const int total = static_cast<int>(travel_qubits.size()) + decoy_count;

  HopResult res;
  // One initial attempt plus up to three retries with fresh decoys when every
  // basis choice mismatched.
  for (int attempt = 0; attempt < 4; ++attempt) {
    ++res.attempts;
    TransmitStream stream;
    stream.joint = joint;
    stream.travel_qubits = travel_qubits;
    stream.hop_from = hop_from;
    stream.hop_to = hop_to;
    stream.decoys.reserve(decoy_count);
    for (int i = 0; i < decoy_count; ++i) {
      DecoyQubit d = random_decoy(rng);
      stream.decoys.push_back(TransitDecoy{d, d, false, 0.0});
    }
    std::vector<int> slots(total);
    std::iota(slots.begin(), slots.end(), 0);
    for (int i = 0; i < decoy_count; ++i) {
      int j = i + static_cast<int>(rng.next_index(total - i));
      std::swap(slots[i], slots[j]);
    }
    stream.decoy_positions.assign(slots.begin(), slots.begin() + decoy_count);
    std::sort(stream.decoy_positions.begin(), stream.decoy_positions.end());

    append_event(log, "transmit", step_ref, sender, rng.draws(),
                 {{"to", receiver},
                  {"qubits", static_cast<std::int64_t>(total)},
                  {"decoys", static_cast<std::int64_t>(decoy_count)},
                  {"attempt", static_cast<std::int64_t>(attempt + 1)}});
    if (adversary != nullptr) adversary->on_transmit(stream);
    append_event(log, "ack", step_ref, receiver, rng.draws(),
                 {{"qubits", static_cast<std::int64_t>(total)}});
    std::vector<std::string> bases;
    std::vector<std::int64_t> bits;
    for (const auto& d : stream.decoys) {
      bases.push_back(d.prepared.basis == MeasAxis::Z ? "Z" : "X");
      bits.push_back(d.prepared.bit);
    }
    append_event(log, "disclose", step_ref, sender, rng.draws(),
                 {{"positions", to_i64(stream.decoy_positions)},
                  {"bases", bases},
                  {"bits", bits}});

    std::uint64_t matched = 0;
    std::uint64_t errors = 0;
    for (const auto& d : stream.decoys) {
      MeasAxis meas = rng.next_bit() ? MeasAxis::X : MeasAxis::Z;
      int outcome = measure_transit_decoy(d, meas, rng);
      if (meas == d.prepared.basis) {
        ++matched;
        if (outcome != d.prepared.bit) ++errors;
      }
    }
    res.matched = matched;
    res.errors = errors;
    res.error_rate =
        matched ? static_cast<double>(errors) / static_cast<double>(matched)
                : 0.0;
    std::string verdict = matched == 0 ? "inconclusive"
                          : res.error_rate > threshold ? "fail"
                                                       : "pass";
    append_event(log, "decoy_check", step_ref, receiver, rng.draws(),
                 {{"matched", static_cast<std::int64_t>(matched)},
                  {"errors", static_cast<std::int64_t>(errors)},
                  {"error_rate", res.error_rate},
                  {"verdict", verdict}});
    if (matched == 0) continue;
    res.passed = res.error_rate <= threshold;
    return res;
  }
  res.inconclusive = true;
  return res;
}

std::vector<int> partition_subcircles(int party_count, int l) {
  if (party_count < 1 || l < 1 || l > party_count) {
    throw InvalidOperandError("subcircle count out of range");
  }
  std::vector<std::pair<int, int>> segs{{0, party_count}};  // (start, size)
  while (static_cast<int>(segs.size()) < l) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < segs.size(); ++i) {
      if (segs[i].second > segs[best].second) best = i;
    }
    auto [start, size] = segs[best];
    int left = size / 2;
    segs[best] = {start, left};
    segs.insert(segs.begin() + static_cast<std::ptrdiff_t>(best) + 1,
                {start + left, size - left});
  }
  std::vector<int> bounds;
  bounds.reserve(segs.size());
  for (const auto& [start, size] : segs) bounds.push_back(start);
  return bounds;
}

RunOutcome run_conference(const ConferenceConfig& cfg,
                          ChannelInterceptor* adversary,
                          const RunOptions& options) {
  validate_config(cfg);
  const Codebook& cb = cfg.codebook;
  const int n_parties = cb.party_count();
  const int protocol = cb.protocol();
  const std::vector<int>& travel = cb.travel();
  const int decoys = cfg.decoys_per_hop > 0 ? cfg.decoys_per_hop
                                            : static_cast<int>(travel.size());
  const bool use_commit = protocol == 2 && cfg.commitment_enabled;
  const std::string pfx = protocol == 1 ? "1." : "2.";

  RngEngine rng(cfg.seed);
  RunOutcome out;
  Transcript* log = &out.transcript;
  auto emit = [&](std::string type, std::string step, std::string actor,
                  Payload payload) {
    append_event(log, std::move(type), std::move(step), std::move(actor),
                 rng.draws(), std::move(payload));
  };

  std::vector<std::string> names;
  names.reserve(n_parties);
  for (const auto& p : cb.parties()) names.push_back(p.name);
  const std::string& initiator = names[n_parties - 1];

  emit("run_config", pfx + "1", "conference",
       {{"protocol", static_cast<std::int64_t>(protocol)},
        {"codebook", cb.label()},
        {"parties", names},
        {"seed", cfg.seed},
        {"decoys_per_hop", static_cast<std::int64_t>(decoys)},
        {"abort_threshold", cfg.abort_threshold},
        {"commitment", use_commit},
        {"subcircles", static_cast<std::int64_t>(cfg.subcircles)},
        {"subcircle_bounds",
         to_i64(partition_subcircles(n_parties, cfg.subcircles))},
        {"adversary", adversary != nullptr}});

  StateVector state = cb.seed();
  const PauliWord initial = PauliWord::identity(static_cast<int>(travel.size()));
  out.initial_label = initial.str();
  emit("prepare_state", pfx + "2", initiator,
       {{"state", cb.seed_name()},
        {"qubits", static_cast<std::int64_t>(state.qubit_count)},
        {"travel", to_i64(travel)},
        {"initial_label", out.initial_label}});

  Commitment token;
  int actual_idx = -1;
  if (protocol == 2) {
    const int committed_idx = bits_to_index(cfg.messages[n_parties - 1]);
    actual_idx = options.initiator_actual_index.value_or(committed_idx);
    const int n_ops =
        static_cast<int>(cb.parties()[n_parties - 1].ops.size());
    if (actual_idx < 0 || actual_idx >= n_ops) {
      throw InvalidOperandError("initiator actual index out of range");
    }
    if (use_commit) {
      token = commit_bits(cfg.messages[n_parties - 1], rng);
      emit("commit", "2.2", initiator, {{"digest", token.digest_hex}});
    }
  } else if (options.initiator_actual_index.has_value()) {
    throw InvalidOperandError("initiator actual index applies to protocol 2");
  }

  std::string last_step;
  for (int h = 0; h < n_parties; ++h) {
    const int from = h == 0 ? n_parties - 1 : h - 1;
    const int to = h == n_parties - 1 ? n_parties - 1 : h;
    const std::string step =
        h == 0 ? pfx + "3" : (h == n_parties - 1 ? pfx + "5" : pfx + "4");
    last_step = step;
    HopResult hop = bb84_hop(&state, travel, decoys, cfg.abort_threshold, from,
                             to, rng, adversary, log, step, names);
    out.hop_error_rates.push_back(hop.error_rate);
    if (!hop.passed) {
      out.aborted = true;
      out.abort_hop = h;
      out.abort_reason = hop.inconclusive ? "inconclusive decoy check"
                                          : "decoy error rate above threshold";
      emit("abort", step, names[to],
           {{"hop", static_cast<std::int64_t>(h)},
            {"error_rate", hop.error_rate},
            {"reason", out.abort_reason}});
      break;
    }
    if (to < n_parties - 1) {
      const int idx = bits_to_index(cfg.messages[to]);
      const PauliWord& w = cb.op_for(to, idx);
      state = apply_word(state, w, travel);
      emit("encode", h == 0 ? pfx + "3" : pfx + "4", names[to],
           {{"bits", bits_to_string(cfg.messages[to])}, {"op", w.str()}});
    }
  }

  const std::string final_step = protocol == 1 ? "1.6" : "2.7";
  PauliWord final_label = initial;
  bool measured = false;
  if (!out.aborted) {
    if (protocol == 2) {
      const PauliWord& w = cb.op_for(n_parties - 1, actual_idx);
      state = apply_word(state, w, travel);
      emit("encode", "2.6", initiator,
           {{"bits", bits_to_string(
                 index_to_bits(actual_idx, cb.bits_for(n_parties - 1)))},
            {"op", w.str()}});
    }
    MeasurementBasis basis = generate_basis(cb.seed(), travel, cb.basis_words());
    try {
      auto [label, collapsed] = measure_in_basis(state, basis, rng);
      final_label = label;
      state = std::move(collapsed);
      measured = true;
    } catch (const SpanError& e) {
      out.integrity_event = true;
      emit("integrity", final_step, initiator,
           {{"reason", std::string(e.what())}});
    }
    last_step = final_step;
  }

  if (measured) {
    out.final_label = final_label.str();
    emit("measure", final_step, initiator, {{"outcome", out.final_label}});

    std::vector<std::vector<int>> expected = cfg.messages;
    if (protocol == 2) {
      expected[n_parties - 1] =
          index_to_bits(actual_idx, cb.bits_for(n_parties - 1));
    }
    bool all_match = true;
    if (protocol == 1) {
      try {
        std::vector<int> tuple = cb.decode_p1(final_label);
        DecodeRecord rec;
        rec.party = initiator;
        for (int p = 0; p < cb.sender_count(); ++p) {
          rec.tuple.push_back(
              bits_to_string(index_to_bits(tuple[p], cb.bits_for(p))));
          if (tuple[p] != bits_to_index(expected[p])) all_match = false;
        }
        emit("decode", final_step, initiator, {{"tuple", rec.tuple}});
        out.decodes.push_back(std::move(rec));
      } catch (const IntegrityError& e) {
        out.integrity_event = true;
        all_match = false;
        emit("integrity", final_step, initiator,
             {{"reason", std::string(e.what())}});
      }
    } else {
      emit("announce", final_step, initiator,
           {{"initial", out.initial_label}, {"final", out.final_label}});
      for (int p = 0; p < n_parties; ++p) {
        const int own = p == n_parties - 1 ? actual_idx
                                           : bits_to_index(cfg.messages[p]);
        try {
          std::vector<int> tuple = cb.decode_p2(p, own, initial, final_label);
          DecodeRecord rec;
          rec.party = names[p];
          for (int q = 0; q < n_parties; ++q) {
            rec.tuple.push_back(
                bits_to_string(index_to_bits(tuple[q], cb.bits_for(q))));
            if (tuple[q] != bits_to_index(expected[q])) all_match = false;
          }
          emit("decode", final_step, names[p], {{"tuple", rec.tuple}});
          out.decodes.push_back(std::move(rec));
        } catch (const IntegrityError& e) {
          out.integrity_event = true;
          all_match = false;
          emit("integrity", final_step, names[p],
               {{"reason", std::string(e.what())}});
        }
      }
      if (use_commit && !out.decodes.empty()) {
        // The group checks the initiator's opened message (the receiver slot
        // of any decoded tuple) against the commitment.
        std::vector<int> opened = parse_bits(out.decodes.front().tuple.back());
        if (verify_commitment(token, opened)) {
          emit("commit_verify", final_step, "conference", {{"ok", true}});
        } else {
          out.cheater_detected = true;
          out.cheater = initiator;
          emit("cheater_identified", final_step, "conference",
               {{"party", initiator}});
        }
      }
    }
    out.decode_consistent =
        all_match && !out.integrity_event && !out.decodes.empty();
  }

  if (adversary != nullptr) {
    emit("attack_report", last_step, "channel",
         {{"kind", adversary->kind()},
          {"decoys_touched", adversary->decoys_touched()},
          {"travel_touched", adversary->travel_touched()}});
  }
  out.completed = !out.aborted && !out.integrity_event;
  double max_rate = 0.0;
  for (double r : out.hop_error_rates) max_rate = std::max(max_rate, r);
  emit("result", last_step, "conference",
       {{"completed", out.completed},
        {"aborted", out.aborted},
        {"decode_consistent", out.decode_consistent},
        {"cheater_detected", out.cheater_detected},
        {"max_error_rate", max_rate}});
  return out;
}

}  // namespace qconf
