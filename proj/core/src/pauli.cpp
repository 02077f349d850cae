// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/pauli.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace qconf {

namespace {

bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

void require_uniform_length(const std::vector<PauliWord>& words,
                            const char* what) {
  for (const auto& w : words) {
    if (w.length() != words.front().length()) {
      throw InvalidOperandError(std::string(what) + ": ragged word lengths");
    }
  }
}

}  // namespace

std::string_view symbol_name(PauliSymbol s) {
  switch (s) {
    case PauliSymbol::I:
      return "I";
    case PauliSymbol::X:
      return "X";
    case PauliSymbol::iY:
      return "iY";
    case PauliSymbol::Z:
      return "Z";
  }
  throw InvalidOperandError("corrupt symbol value");
}

PauliSymbol parse_symbol(std::string_view text) {
  if (text == "I") return PauliSymbol::I;
  if (text == "X") return PauliSymbol::X;
  if (text == "iY") return PauliSymbol::iY;
  if (text == "Z") return PauliSymbol::Z;
  throw InvalidOperandError("unknown operator symbol '" + std::string(text) +
                            "'");
}

PauliWord::PauliWord(const std::vector<PauliSymbol>& symbols)
    : bits_(0), length_(static_cast<int>(symbols.size())) {
  if (symbols.empty() || length_ > kMaxLength) {
    throw InvalidOperandError("word length must be in [1, 16]");
  }
  for (int i = 0; i < length_; ++i) {
    bits_ |= static_cast<std::uint32_t>(symbols[i]) << (2 * (length_ - 1 - i));
  }
}

PauliWord PauliWord::identity(int length) {
  if (length < 1 || length > kMaxLength) {
    throw InvalidOperandError("word length must be in [1, 16]");
  }
  return PauliWord(0u, length);
}

PauliWord PauliWord::parse(std::string_view text) {
  std::vector<PauliSymbol> symbols;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view tok = (dot == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, dot - pos);
    symbols.push_back(parse_symbol(tok));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return PauliWord(symbols);
}

std::string PauliWord::str() const {
  std::string out;
  for (int i = 0; i < length_; ++i) {
    if (i) out += '.';
    out += symbol_name(symbol(i));
  }
  return out;
}

PauliWord mul(const PauliWord& a, const PauliWord& b) {
  if (a.length_ != b.length_) {
    throw InvalidOperandError("word product needs equal lengths");
  }
  return PauliWord(a.bits_ ^ b.bits_, a.length_);
}

bool Subgroup::contains(const PauliWord& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

bool is_subgroup(const std::vector<PauliWord>& s) {
  if (s.empty()) throw InvalidOperandError("is_subgroup: empty set");
  require_uniform_length(s, "is_subgroup");
  std::set<std::uint32_t> enc;
  for (const auto& w : s) enc.insert(w.encoding());
  if (!enc.count(0u)) return false;
  for (auto a : enc) {
    for (auto b : enc) {
      if (!enc.count(a ^ b)) return false;
    }
  }
  return true;
}

bool are_disjoint(const Subgroup& g1, const Subgroup& g2) {
  if (g1.elements.empty() || g2.elements.empty()) {
    throw InvalidOperandError("are_disjoint: empty subgroup");
  }
  if (g1.elements.front().length() != g2.elements.front().length()) {
    throw InvalidOperandError("are_disjoint: mismatched word lengths");
  }
  for (const auto& w : g1.elements) {
    if (!w.is_identity() && g2.contains(w)) return false;
  }
  return true;
}

// Subgroups of (Z_2)^dim of size 2^k are exactly the row spaces of k x dim
// reduced-row-echelon matrices over F_2; enumerating RREF forms hits every
// subgroup exactly once.
class SubgroupEnumerator {
 public:
  SubgroupEnumerator(int word_length, int k)
      : len_(word_length), dim_(2 * word_length), k_(k) {}

  std::vector<Subgroup> run() {
    std::vector<int> pivots;
    choose_pivots(pivots, 0);
    std::sort(out_.begin(), out_.end(),
              [](const Subgroup& a, const Subgroup& b) {
                return a.elements < b.elements;
              });
    return out_;
  }

 private:
  void choose_pivots(std::vector<int>& pivots, int from) {
    if (static_cast<int>(pivots.size()) == k_) {
      fill_free(pivots, std::vector<std::uint32_t>(k_), 0);
      return;
    }
    int need = k_ - static_cast<int>(pivots.size());
    for (int c = from; c + need <= dim_; ++c) {
      pivots.push_back(c);
      choose_pivots(pivots, c + 1);
      pivots.pop_back();
    }
  }

  void fill_free(const std::vector<int>& pivots, std::vector<std::uint32_t> rows,
                 int row) {
    if (row == k_) {
      emit(pivots, rows);
      return;
    }
    rows[row] = 1u << pivots[row];
    fill_columns(pivots, rows, row, pivots[row] + 1);
  }

  void fill_columns(const std::vector<int>& pivots,
                    std::vector<std::uint32_t>& rows, int row, int col) {
    if (col == dim_) {
      fill_free(pivots, rows, row + 1);
      return;
    }
    bool is_pivot_col =
        std::find(pivots.begin(), pivots.end(), col) != pivots.end();
    fill_columns(pivots, rows, row, col + 1);
    if (!is_pivot_col) {
      rows[row] |= 1u << col;
      fill_columns(pivots, rows, row, col + 1);
      rows[row] &= ~(1u << col);
    }
  }

  void emit(const std::vector<int>&, const std::vector<std::uint32_t>& rows) {
    Subgroup g;
    g.elements.reserve(std::size_t{1} << k_);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k_); ++m) {
      std::uint32_t enc = 0;
      for (int r = 0; r < k_; ++r) {
        if (m & (std::uint64_t{1} << r)) enc ^= rows[r];
      }
      g.elements.push_back(PauliWord(enc, len_));
    }
    std::sort(g.elements.begin(), g.elements.end());
    out_.push_back(std::move(g));
  }

  int len_;
  int dim_;
  int k_;
  std::vector<Subgroup> out_;
};

std::vector<Subgroup> enumerate_subgroups(int word_length, int order) {
  if (word_length < 1 || word_length > PauliWord::kMaxLength) {
    throw InvalidOperandError("enumerate_subgroups: word length out of range");
  }
  if (order < 1 || !is_pow2(static_cast<std::uint64_t>(order))) {
    throw InvalidOperandError("enumerate_subgroups: order must be a power of 2");
  }
  int k = std::countr_zero(static_cast<unsigned>(order));
  if (k > 2 * word_length) {
    throw InvalidOperandError("enumerate_subgroups: order exceeds group size");
  }
  if (k == 0) {
    Subgroup trivial;
    trivial.elements.push_back(PauliWord::identity(word_length));
    return {trivial};
  }
  return SubgroupEnumerator(word_length, k).run();
}

namespace {

void require_party_shapes(const std::vector<std::vector<PauliWord>>& lists,
                          const char* what, bool equal_sizes) {
  if (lists.empty()) throw InvalidOperandError(std::string(what) + ": no lists");
  int word_len = 0;
  for (const auto& list : lists) {
    if (list.empty()) throw InvalidOperandError(std::string(what) + ": empty list");
    if (!is_pow2(list.size())) {
      throw InvalidOperandError(std::string(what) +
                                ": list size must be a power of 2");
    }
    if (!list.front().is_identity()) {
      throw InvalidOperandError(std::string(what) +
                                ": first entry must be the identity");
    }
    for (const auto& w : list) {
      if (word_len == 0) word_len = w.length();
      if (w.length() != word_len) {
        throw InvalidOperandError(std::string(what) + ": ragged word lengths");
      }
    }
    if (equal_sizes && list.size() != lists.front().size()) {
      throw InvalidOperandError(std::string(what) + ": ragged list sizes");
    }
  }
}

}  // namespace

std::vector<PauliWord> derive_receiver_ops(
    const std::vector<std::vector<PauliWord>>& sender_ops) {
  require_party_shapes(sender_ops, "derive_receiver_ops", /*equal_sizes=*/true);
  std::vector<PauliWord> out;
  out.reserve(sender_ops.front().size());
  for (std::size_t i = 0; i < sender_ops.front().size(); ++i) {
    PauliWord acc = sender_ops.front()[i];
    for (std::size_t p = 1; p < sender_ops.size(); ++p) {
      acc = mul(acc, sender_ops[p][i]);
    }
    out.push_back(acc);
  }
  return out;
}

bool validate_ordering(const std::vector<std::vector<PauliWord>>& party_ops) {
  require_party_shapes(party_ops, "validate_ordering", /*equal_sizes=*/false);
  // The map is induced by (one of) the largest list(s); every other list must
  // realize it on its own index range.
  std::size_t ref = 0;
  for (std::size_t p = 1; p < party_ops.size(); ++p) {
    if (party_ops[p].size() > party_ops[ref].size()) ref = p;
  }
  const auto& big = party_ops[ref];
  const std::size_t big_n = big.size();
  std::vector<std::size_t> index_map(big_n * big_n);
  for (std::size_t i = 0; i < big_n; ++i) {
    for (std::size_t j = 0; j < big_n; ++j) {
      PauliWord prod = mul(big[i], big[j]);
      auto it = std::find(big.begin(), big.end(), prod);
      if (it == big.end()) return false;  // no total map exists
      index_map[i * big_n + j] = static_cast<std::size_t>(it - big.begin());
    }
  }
  for (const auto& list : party_ops) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < list.size(); ++j) {
        std::size_t k = index_map[i * big_n + j];
        if (k >= list.size()) return false;
        if (mul(list[i], list[j]) != list[k]) return false;
      }
    }
  }
  return true;
}

}  // namespace qconf
