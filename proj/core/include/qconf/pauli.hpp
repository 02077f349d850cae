// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// The single-qubit operator set {I, X, iY, Z} with multiplication taken
// modulo global phase, its n-fold tensor words, and the subgroup machinery
// used by the conference codebooks. Dropping the phase makes the set an
// elementary abelian 2-group: every element is an involution and the product
// is a plain XOR in the coding below.

#ifndef QCONF_PAULI_HPP_
#define QCONF_PAULI_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qconf/errors.hpp"

namespace qconf {

// Coded so that the phase-free product is XOR (I=00, X=01, iY=10, Z=11) and
// the numeric order I < X < iY < Z is the canonical display/sort order.
enum class PauliSymbol : std::uint8_t { I = 0, X = 1, iY = 2, Z = 3 };

constexpr PauliSymbol mul(PauliSymbol a, PauliSymbol b) {
  return static_cast<PauliSymbol>(static_cast<std::uint8_t>(a) ^
                                  static_cast<std::uint8_t>(b));
}

std::string_view symbol_name(PauliSymbol s);
PauliSymbol parse_symbol(std::string_view text);

// A fixed-length tensor word of symbols. Immutable value type; packs two bits
// per symbol with symbol 0 in the most significant position so that integer
// order on the packed encoding equals lexicographic order on the symbols.
class PauliWord {
 public:
  static constexpr int kMaxLength = 16;

  explicit PauliWord(const std::vector<PauliSymbol>& symbols);
  static PauliWord identity(int length);
  static PauliWord parse(std::string_view text);  // e.g. "iY.X" = iY (x) X

  int length() const { return length_; }
  PauliSymbol symbol(int i) const {
    return static_cast<PauliSymbol>((bits_ >> (2 * (length_ - 1 - i))) & 3u);
  }
  bool is_identity() const { return bits_ == 0; }
  std::uint32_t encoding() const { return bits_; }

  std::string str() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
  friend auto operator<=>(const PauliWord& a, const PauliWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  PauliWord(std::uint32_t bits, int length) : bits_(bits), length_(length) {}

  std::uint32_t bits_;
  int length_;

  friend PauliWord mul(const PauliWord&, const PauliWord&);
  friend class SubgroupEnumerator;
};

// Componentwise phase-free product. Lengths must match.
PauliWord mul(const PauliWord& a, const PauliWord& b);

// A multiplicatively closed set of uniform-length words containing the
// identity. Order is always a power of two. Elements are kept sorted.
struct Subgroup {
  std::vector<PauliWord> elements;
  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const PauliWord& w) const;
};

// True iff s contains the identity and is closed under the product.
// Throws on an empty set or ragged word lengths.
bool is_subgroup(const std::vector<PauliWord>& s);

// True iff the two subgroups intersect exactly in the identity word.
bool are_disjoint(const Subgroup& g1, const Subgroup& g2);

// All distinct subgroups of the given order over words of the given length,
// in a canonical deterministic order: elements sorted by encoding, subgroups
// lexicographic by their sorted element lists. order must be a power of two
// not exceeding 4^word_length.
std::vector<Subgroup> enumerate_subgroups(int word_length, int order);

// Receiver list construction: entry i is the product of every sender's entry
// i, so each column of the stacked table multiplies to the identity. Inputs
// must be same-sized power-of-two lists of uniform-length words, each led by
// the identity.
std::vector<PauliWord> derive_receiver_ops(
    const std::vector<std::vector<PauliWord>>& sender_ops);

// True iff a single index map (i, j) -> k is realized simultaneously by every
// party's list: list[i] * list[j] == list[k] for all of them. Lists may have
// different (power-of-two) sizes; smaller lists are checked on their own
// index range against the map induced by the largest list.
bool validate_ordering(const std::vector<std::vector<PauliWord>>& party_ops);

}  // namespace qconf

#endif  // QCONF_PAULI_HPP_
