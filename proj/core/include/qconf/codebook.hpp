// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// Per-party encoding assignments: which operator subgroup each participant
// uses, over which seed state and travel qubits, plus the decode maps for
// both conference protocols. Structural validity is enforced at construction
// (a codebook that exists is usable); the physical orthogonality of the
// induced basis is a separate report so deliberately broken channels can be
// examined instead of throwing.

#ifndef QCONF_CODEBOOK_HPP_
#define QCONF_CODEBOOK_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qconf/pauli.hpp"
#include "qconf/state.hpp"

namespace qconf {

struct CodebookParty {
  std::string name;
  std::vector<PauliWord> ops;  // 2^k entries, identity first
};

struct CodebookSpec {
  int protocol = 2;  // 1 or 2
  std::string label = "custom";
  std::string seed_name = "custom";  // preset seed name or "custom"
  StateVector seed;
  std::vector<int> travel;
  std::vector<CodebookParty> parties;  // receiver (initiator) last
  // Protocol 2 only: treat `parties` as senders and append the derived
  // receiver list (named "derived") before validation.
  bool derive_receiver = false;
};

struct OrthogonalityReport {
  bool ok = false;
  int distinct_states = 0;
  // Pairs of word labels whose basis states fail orthogonality, or protocol-2
  // full-tuple states that fall outside the generated basis (second = "").
  std::vector<std::pair<std::string, std::string>> collisions;
};

class Codebook {
 public:
  // Validates structure and decode maps; throws ValidationError with a
  // specific complaint otherwise. Checks: party shapes (power-of-two sizes,
  // identity first, word length == |travel|), per-party closure, pairwise
  // disjointness of sender subgroups, a shared ordering map across all
  // parties, the receiver column rule for uniform-k protocol-2 books, decode
  // injectivity (protocol 1) and per-party decode uniqueness (protocol 2).
  explicit Codebook(CodebookSpec spec);

  int protocol() const { return spec_.protocol; }
  const std::string& label() const { return spec_.label; }
  const std::string& seed_name() const { return spec_.seed_name; }
  const StateVector& seed() const { return spec_.seed; }
  const std::vector<int>& travel() const { return spec_.travel; }
  const std::vector<CodebookParty>& parties() const { return spec_.parties; }

  int party_count() const { return static_cast<int>(spec_.parties.size()); }
  int receiver_index() const { return party_count() - 1; }
  int sender_count() const { return party_count() - 1; }
  // Bits encoded by one party (k_i).
  int bits_for(int party) const;
  bool uniform_k() const;
  int total_sender_bits() const;
  int total_bits() const;

  const PauliWord& op_for(int party, int msg_index) const;

  // The group generated by every party's operators, sorted canonically; the
  // label set of the measurement basis.
  const std::vector<PauliWord>& basis_words() const { return basis_words_; }

  // Protocol-1 composite for a tuple of sender message indices.
  PauliWord encode_p1(const std::vector<int>& sender_indices) const;
  // Inverse of encode_p1. Unknown label -> IntegrityError.
  std::vector<int> decode_p1(const PauliWord& final_label) const;

  // Full-tuple recovery from one party's own message plus the announced
  // initial and final labels (composite = final * initial). No consistent
  // tuple -> IntegrityError (corrupted announcement).
  std::vector<int> decode_p2(int party, int own_index,
                             const PauliWord& initial_label,
                             const PauliWord& final_label) const;

  // Brute-force Gram check of the induced basis over all sender tuples; for
  // protocol 2 additionally confirms every full-tuple state stays inside the
  // generated basis. Failures are reported, never thrown.
  OrthogonalityReport validate_orthogonality() const;

 private:
  void validate_structure();
  void build_decode_maps();

  CodebookSpec spec_;
  std::vector<PauliWord> basis_words_;
  std::map<std::uint32_t, std::vector<int>> p1_map_;  // composite -> senders
  // (party, own index, composite encoding) -> full tuple
  std::map<std::tuple<int, int, std::uint32_t>, std::vector<int>> p2_map_;
};

Codebook build_codebook(CodebookSpec spec);

// Message convention: a k-bit string maps to an operator index by reading the
// bits most-significant first; index 0 is always the identity ("all zeros ->
// do nothing").
int bits_to_index(const std::vector<int>& bits);
std::vector<int> index_to_bits(int index, int k);
std::string bits_to_string(const std::vector<int>& bits);
std::vector<int> parse_bits(std::string_view text);  // "01" -> {0,1}

// Table-derived presets. Keys: "table2-3p-1b", "table2-3p-2b-cluster",
// "table2-4p-1b-ghz", "table2-4p-1b-cluster".
std::vector<std::string> preset_names();
bool is_preset(std::string_view name);
Codebook make_preset(std::string_view name, int protocol);

}  // namespace qconf

#endif  // QCONF_CODEBOOK_HPP_
