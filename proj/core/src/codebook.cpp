// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/codebook.hpp"

#include <algorithm>
#include <complex>
#include <set>

namespace qconf {

namespace {

bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::size_t v) {
  int k = 0;
  while (v > 1) {
    v >>= 1;
    ++k;
  }
  return k;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return acc;
}

// Span of the given encodings inside (Z_2)^(2*len), sorted canonically.
std::vector<PauliWord> span_words(const std::vector<std::uint32_t>& encodings,
                                  int word_length) {
  std::vector<std::uint32_t> basis;
  for (auto e : encodings) {
    std::uint32_t v = e;
    for (auto b : basis) {
      v = std::min(v, v ^ b);
    }
    if (v != 0) basis.push_back(v);
  }
  std::set<std::uint32_t> closure;
  closure.insert(0u);
  for (auto b : basis) {
    std::set<std::uint32_t> next = closure;
    for (auto c : closure) next.insert(c ^ b);
    closure = std::move(next);
  }
  std::vector<PauliWord> out;
  out.reserve(closure.size());
  for (auto enc : closure) {
    std::vector<PauliSymbol> symbols(word_length);
    for (int i = 0; i < word_length; ++i) {
      symbols[i] =
          static_cast<PauliSymbol>((enc >> (2 * (word_length - 1 - i))) & 3);
    }
    out.push_back(PauliWord(symbols));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int Codebook::bits_for(int party) const {
  if (party < 0 || party >= party_count()) {
    throw InvalidOperandError("party index out of range");
  }
  return log2_exact(spec_.parties[party].ops.size());
}

bool Codebook::uniform_k() const {
  for (int p = 1; p < party_count(); ++p) {
    if (spec_.parties[p].ops.size() != spec_.parties[0].ops.size()) return false;
  }
  return true;
}

int Codebook::total_sender_bits() const {
  int acc = 0;
  for (int p = 0; p < sender_count(); ++p) acc += bits_for(p);
  return acc;
}

int Codebook::total_bits() const {
  int acc = 0;
  for (int p = 0; p < party_count(); ++p) acc += bits_for(p);
  return acc;
}

const PauliWord& Codebook::op_for(int party, int msg_index) const {
  if (party < 0 || party >= party_count()) {
    throw InvalidOperandError("party index out of range");
  }
  const auto& ops = spec_.parties[party].ops;
  if (msg_index < 0 || msg_index >= static_cast<int>(ops.size())) {
    throw InvalidOperandError("message index out of range for party '" +
                              spec_.parties[party].name + "'");
  }
  return ops[msg_index];
}

Codebook::Codebook(CodebookSpec spec) : spec_(std::move(spec)) {
  validate_structure();
  build_decode_maps();
}

Codebook build_codebook(CodebookSpec spec) { return Codebook(std::move(spec)); }

void Codebook::validate_structure() {
  if (spec_.protocol != 1 && spec_.protocol != 2) {
    throw ValidationError("protocol must be 1 or 2");
  }
  if (spec_.derive_receiver) {
    if (spec_.protocol != 2) {
      throw ValidationError("derive_receiver applies to protocol 2 only");
    }
    if (spec_.parties.empty()) {
      throw ValidationError("derive_receiver needs at least one sender");
    }
    std::vector<std::vector<PauliWord>> sender_lists;
    for (const auto& p : spec_.parties) sender_lists.push_back(p.ops);
    CodebookParty receiver;
    receiver.name = "derived";
    try {
      receiver.ops = derive_receiver_ops(sender_lists);
    } catch (const InvalidOperandError& e) {
      throw ValidationError(std::string("cannot derive receiver list: ") +
                            e.what());
    }
    spec_.parties.push_back(std::move(receiver));
    spec_.derive_receiver = false;
  }
  if (spec_.parties.empty()) {
    throw ValidationError("codebook needs at least one party");
  }
  if (spec_.travel.empty()) {
    throw ValidationError("no travel qubits listed");
  }
  if (spec_.seed.qubit_count < 1 ||
      spec_.seed.amplitudes.size() !=
          (std::size_t{1} << spec_.seed.qubit_count)) {
    throw ValidationError("malformed seed state");
  }
  if (std::abs(spec_.seed.norm() - 1.0) > 1e-9) {
    throw ValidationError("seed state is not normalized");
  }
  std::set<int> travel_seen;
  for (int q : spec_.travel) {
    if (q < 0 || q >= spec_.seed.qubit_count) {
      throw ValidationError("travel qubit index out of range");
    }
    if (!travel_seen.insert(q).second) {
      throw ValidationError("duplicate travel qubit index");
    }
  }
  const int word_len = static_cast<int>(spec_.travel.size());
  std::set<std::string> names;
  for (const auto& party : spec_.parties) {
    if (party.name.empty()) throw ValidationError("party with empty name");
    if (!names.insert(party.name).second) {
      throw ValidationError("duplicate party name '" + party.name + "'");
    }
    const auto& ops = party.ops;
    if (ops.empty()) {
      throw ValidationError("party '" + party.name + "' has no operators");
    }
    if (!is_pow2(ops.size())) {
      throw ValidationError("party '" + party.name +
                            "': operator count must be a power of two");
    }
    if (!ops.front().is_identity()) {
      throw ValidationError("party '" + party.name +
                            "': first operator must be the identity");
    }
    for (const auto& w : ops) {
      if (w.length() != word_len) {
        throw ValidationError("party '" + party.name +
                              "': operator word length != travel qubit count");
      }
    }
    std::set<std::uint32_t> distinct;
    for (const auto& w : ops) distinct.insert(w.encoding());
    if (distinct.size() != ops.size()) {
      throw ValidationError("party '" + party.name +
                            "': duplicate operator entries");
    }
    if (!is_subgroup(ops)) {
      throw ValidationError("party '" + party.name +
                            "': operator list is not closed under the product");
    }
  }
  // Sender subgroups must be pairwise disjoint (identity aside).
  for (int a = 0; a < sender_count(); ++a) {
    for (int b = a + 1; b < sender_count(); ++b) {
      Subgroup ga{spec_.parties[a].ops};
      Subgroup gb{spec_.parties[b].ops};
      std::sort(ga.elements.begin(), ga.elements.end());
      std::sort(gb.elements.begin(), gb.elements.end());
      if (!are_disjoint(ga, gb)) {
        throw ValidationError("sender subgroups overlap: '" +
                              spec_.parties[a].name + "' and '" +
                              spec_.parties[b].name + "'");
      }
    }
  }
  std::vector<std::vector<PauliWord>> all_lists;
  for (const auto& p : spec_.parties) all_lists.push_back(p.ops);
  if (!validate_ordering(all_lists)) {
    throw ValidationError("party lists do not share one ordering map");
  }
  if (spec_.protocol == 2 && uniform_k() && sender_count() >= 1) {
    std::vector<std::vector<PauliWord>> sender_lists(all_lists.begin(),
                                                     all_lists.end() - 1);
    std::vector<PauliWord> expected = derive_receiver_ops(sender_lists);
    const auto& got = spec_.parties.back().ops;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (got[i] != expected[i]) {
        throw ValidationError(
            "receiver list violates the column product rule at index " +
            std::to_string(i));
      }
    }
  }
  std::vector<std::uint32_t> encodings;
  for (const auto& p : spec_.parties) {
    for (const auto& w : p.ops) encodings.push_back(w.encoding());
  }
  basis_words_ = span_words(encodings, word_len);
}

void Codebook::build_decode_maps() {
  // Protocol-1 map: sender tuples -> composite. Built for both protocols (for
  // protocol 2 it is implied by per-party uniqueness, so the stricter check
  // below subsumes it).
  const int senders = sender_count();
  std::vector<int> tuple(senders, 0);
  bool done = senders == 0;
  if (senders == 0) {
    p1_map_[PauliWord::identity(static_cast<int>(spec_.travel.size()))
                .encoding()] = {};
  }
  while (!done) {
    PauliWord acc = PauliWord::identity(static_cast<int>(spec_.travel.size()));
    for (int p = 0; p < senders; ++p) {
      acc = mul(acc, spec_.parties[p].ops[tuple[p]]);
    }
    auto [it, inserted] = p1_map_.emplace(acc.encoding(), tuple);
    if (!inserted) {
      throw ValidationError("sender tuples collide on composite " + acc.str());
    }
    for (int p = senders - 1; p >= 0; --p) {
      if (++tuple[p] < static_cast<int>(spec_.parties[p].ops.size())) break;
      tuple[p] = 0;
      if (p == 0) done = true;
    }
  }
  if (spec_.protocol != 2) return;
  const int n_parties = party_count();
  std::vector<int> full(n_parties, 0);
  bool all_done = false;
  while (!all_done) {
    PauliWord acc = PauliWord::identity(static_cast<int>(spec_.travel.size()));
    for (int p = 0; p < n_parties; ++p) {
      acc = mul(acc, spec_.parties[p].ops[full[p]]);
    }
    for (int p = 0; p < n_parties; ++p) {
      auto key = std::make_tuple(p, full[p], acc.encoding());
      auto [it, inserted] = p2_map_.emplace(key, full);
      if (!inserted && it->second != full) {
        throw ValidationError("ambiguous decode for party '" +
                              spec_.parties[p].name + "' on composite " +
                              acc.str());
      }
    }
    for (int p = n_parties - 1; p >= 0; --p) {
      if (++full[p] < static_cast<int>(spec_.parties[p].ops.size())) break;
      full[p] = 0;
      if (p == 0) all_done = true;
    }
  }
}

PauliWord Codebook::encode_p1(const std::vector<int>& sender_indices) const {
  if (static_cast<int>(sender_indices.size()) != sender_count()) {
    throw InvalidOperandError("need one message index per sender");
  }
  PauliWord acc = PauliWord::identity(static_cast<int>(spec_.travel.size()));
  for (int p = 0; p < sender_count(); ++p) {
    acc = mul(acc, op_for(p, sender_indices[p]));
  }
  return acc;
}

std::vector<int> Codebook::decode_p1(const PauliWord& final_label) const {
  auto it = p1_map_.find(final_label.encoding());
  if (it == p1_map_.end()) {
    throw IntegrityError("final label " + final_label.str() +
                         " matches no sender tuple");
  }
  return it->second;
}

std::vector<int> Codebook::decode_p2(int party, int own_index,
                                     const PauliWord& initial_label,
                                     const PauliWord& final_label) const {
  if (spec_.protocol != 2) {
    throw InvalidOperandError("decode_p2 on a protocol-1 codebook");
  }
  op_for(party, own_index);  // range checks
  PauliWord composite = mul(final_label, initial_label);
  auto it = p2_map_.find(std::make_tuple(party, own_index, composite.encoding()));
  if (it == p2_map_.end()) {
    throw IntegrityError("no tuple consistent with composite " +
                         composite.str() + " for party '" +
                         spec_.parties[party].name + "'");
  }
  return it->second;
}

OrthogonalityReport Codebook::validate_orthogonality() const {
  OrthogonalityReport report;
  std::vector<StateVector> states;
  states.reserve(basis_words_.size());
  for (const auto& w : basis_words_) {
    states.push_back(apply_word(spec_.seed, w, spec_.travel));
  }
  std::vector<bool> collides(states.size(), false);
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (std::abs(inner(states[i], states[j])) > kOrthoTol) {
        report.collisions.emplace_back(basis_words_[i].str(),
                                       basis_words_[j].str());
        collides[j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!collides[i]) ++report.distinct_states;
  }
  // Every sender composite (and for protocol 2 every full-tuple composite)
  // must carry a basis label; the span construction guarantees it, but the
  // report confirms it against the actual label list.
  std::set<std::uint32_t> labels;
  for (const auto& w : basis_words_) labels.insert(w.encoding());
  for (const auto& [enc, tuple] : p1_map_) {
    if (!labels.count(enc)) {
      report.collisions.emplace_back("missing composite label", "");
      break;
    }
  }
  if (spec_.protocol == 2) {
    for (const auto& [key, tuple] : p2_map_) {
      if (!labels.count(std::get<2>(key))) {
        report.collisions.emplace_back("missing full-tuple label", "");
        break;
      }
    }
  }
  report.ok = report.collisions.empty();
  return report;
}

int bits_to_index(const std::vector<int>& bits) {
  if (bits.empty() || bits.size() > 30) {
    throw InvalidOperandError("bit string length out of range");
  }
  int idx = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidOperandError("bit values must be 0 or 1");
    idx = (idx << 1) | b;
  }
  return idx;
}

std::vector<int> index_to_bits(int index, int k) {
  if (k < 1 || k > 30 || index < 0 || index >= (1 << k)) {
    throw InvalidOperandError("index does not fit the bit width");
  }
  std::vector<int> bits(k);
  for (int i = 0; i < k; ++i) {
    bits[i] = (index >> (k - 1 - i)) & 1;
  }
  return bits;
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string out;
  out.reserve(bits.size());
  for (int b : bits) out += (b ? '1' : '0');
  return out;
}

std::vector<int> parse_bits(std::string_view text) {
  if (text.empty()) throw InvalidOperandError("empty bit string");
  std::vector<int> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidOperandError("bit strings may contain only 0 and 1");
    }
    bits.push_back(c - '0');
  }
  return bits;
}

namespace {

struct PresetRow {
  const char* key;
  const char* seed;
  std::vector<int> travel;
  std::vector<std::vector<const char*>> party_ops;  // receiver last
};

const std::vector<PresetRow>& preset_rows() {
  static const std::vector<PresetRow> rows = {
      {"table2-3p-1b",
       "bell",
       {0},
       {{"I", "X"}, {"I", "iY"}, {"I", "Z"}}},
      {"table2-3p-2b-cluster",
       "cluster4",
       {0, 2},
       {{"I.I", "I.X", "X.I", "X.X"},
        {"I.I", "I.iY", "iY.I", "iY.iY"},
        {"I.I", "I.Z", "Z.I", "Z.Z"}}},
      {"table2-4p-1b-ghz",
       "ghz3",
       {0, 1},
       {{"I.I", "X.I"}, {"I.I", "X.X"}, {"I.I", "iY.X"}, {"I.I", "iY.I"}}},
      {"table2-4p-1b-cluster",
       "cluster4",
       {0, 2},
       {{"I.I", "X.iY"},
        {"I.I", "X.Z"},
        {"I.I", "iY.Z"},
        {"I.I", "iY.iY"}}},
  };
  return rows;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& row : preset_rows()) names.emplace_back(row.key);
  return names;
}

bool is_preset(std::string_view name) {
  for (const auto& row : preset_rows()) {
    if (name == row.key) return true;
  }
  return false;
}

Codebook make_preset(std::string_view name, int protocol) {
  for (const auto& row : preset_rows()) {
    if (name != row.key) continue;
    CodebookSpec spec;
    spec.protocol = protocol;
    spec.label = row.key;
    spec.seed_name = row.seed;
    spec.seed = prepare_state(row.seed);
    spec.travel = row.travel;
    for (std::size_t p = 0; p < row.party_ops.size(); ++p) {
      CodebookParty party;
      party.name = "P" + std::to_string(p + 1);
      for (const char* text : row.party_ops[p]) {
        party.ops.push_back(PauliWord::parse(text));
      }
      spec.parties.push_back(std::move(party));
    }
    return Codebook(std::move(spec));
  }
  throw InvalidOperandError("unknown preset '" + std::string(name) + "'");
}

}  // namespace qconf
