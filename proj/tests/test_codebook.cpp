// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "qconf/codebook.hpp"
#include "qconf/pauli.hpp"
#include "qconf/state.hpp"

namespace {

using qconf::Codebook;
using qconf::CodebookParty;
using qconf::CodebookSpec;
using qconf::PauliWord;

CodebookParty party(const char* name, const std::vector<const char*>& ops) {
  CodebookParty p;
  p.name = name;
  for (const char* t : ops) p.ops.push_back(PauliWord::parse(t));
  return p;
}

CodebookSpec spec_of(int protocol, const char* seed,
                     const std::vector<int>& travel,
                     std::vector<CodebookParty> parties,
                     bool derive = false) {
  CodebookSpec s;
  s.protocol = protocol;
  s.seed_name = seed;
  s.seed = qconf::prepare_state(seed);
  s.travel = travel;
  s.parties = std::move(parties);
  s.derive_receiver = derive;
  return s;
}

// Every sender-index tuple, odometer order.
std::vector<std::vector<int>> all_tuples(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> out{{}};
  for (int s : sizes) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out) {
      for (int v = 0; v < s; ++v) {
        next.push_back(t);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> op_counts(const Codebook& cb, bool senders_only) {
  std::vector<int> sizes;
  int n = senders_only ? cb.sender_count() : cb.party_count();
  for (int p = 0; p < n; ++p) {
    sizes.push_back(static_cast<int>(cb.parties()[p].ops.size()));
  }
  return sizes;
}

PauliWord composite_of(const Codebook& cb, const std::vector<int>& tuple) {
  PauliWord acc = PauliWord::identity(static_cast<int>(cb.travel().size()));
  for (std::size_t p = 0; p < tuple.size(); ++p) {
    acc = mul(acc, cb.op_for(static_cast<int>(p), tuple[p]));
  }
  return acc;
}

}  // namespace

TEST_CASE("preset catalogue") {
  auto names = qconf::preset_names();
  REQUIRE(names.size() == 4);
  CHECK(qconf::is_preset("table2-3p-1b"));
  CHECK(qconf::is_preset("table2-4p-1b-cluster"));
  CHECK_FALSE(qconf::is_preset("table2-9p"));
  CHECK_THROWS_AS(qconf::make_preset("nope", 2), qconf::InvalidOperandError);

  struct Expected {
    const char* name;
    int parties;
    int k;
    int basis;
    const char* seed;
  };
  const Expected rows[] = {
      {"table2-3p-1b", 3, 1, 4, "bell"},
      {"table2-3p-2b-cluster", 3, 2, 16, "cluster4"},
      {"table2-4p-1b-ghz", 4, 1, 8, "ghz3"},
      {"table2-4p-1b-cluster", 4, 1, 8, "cluster4"},
  };
  for (const auto& row : rows) {
    for (int protocol : {1, 2}) {
      Codebook cb = qconf::make_preset(row.name, protocol);
      CHECK(cb.protocol() == protocol);
      CHECK(cb.label() == row.name);
      CHECK(cb.seed_name() == row.seed);
      CHECK(cb.party_count() == row.parties);
      CHECK(cb.uniform_k());
      for (int p = 0; p < cb.party_count(); ++p) CHECK(cb.bits_for(p) == row.k);
      CHECK(cb.total_bits() == row.k * row.parties);
      CHECK(cb.total_sender_bits() == row.k * (row.parties - 1));
      CHECK(static_cast<int>(cb.basis_words().size()) == row.basis);
      CHECK(qconf::is_subgroup(cb.basis_words()));
      CHECK(std::is_sorted(cb.basis_words().begin(), cb.basis_words().end()));

      qconf::OrthogonalityReport rep = cb.validate_orthogonality();
      CHECK(rep.ok);
      CHECK(rep.distinct_states == row.basis);
      CHECK(rep.collisions.empty());
    }
  }
}

TEST_CASE("protocol-1 decode round-trips every sender tuple") {
  for (const auto& name : qconf::preset_names()) {
    Codebook cb = qconf::make_preset(name, 1);
    for (const auto& tuple : all_tuples(op_counts(cb, true))) {
      PauliWord label = cb.encode_p1(tuple);
      CHECK(cb.decode_p1(label) == tuple);
    }
  }
}

TEST_CASE("protocol-2 decode round-trips every tuple, party and initial") {
  for (const auto& name : qconf::preset_names()) {
    Codebook cb = qconf::make_preset(name, 2);
    std::vector<PauliWord> initials{
        PauliWord::identity(static_cast<int>(cb.travel().size())),
        cb.basis_words().back()};
    for (const auto& tuple : all_tuples(op_counts(cb, false))) {
      PauliWord composite = composite_of(cb, tuple);
      for (const auto& initial : initials) {
        PauliWord final_label = mul(composite, initial);
        for (int p = 0; p < cb.party_count(); ++p) {
          CHECK(cb.decode_p2(p, tuple[p], initial, final_label) == tuple);
        }
      }
    }
  }
}

TEST_CASE("identity composite resolves through the own-message branch") {
  Codebook cb = qconf::make_preset("table2-3p-1b", 2);
  PauliWord id = PauliWord::identity(1);
  // X * iY * Z is the identity, so both all-zeros and all-ones produce the
  // identity composite; each party's own bit picks the branch.
  for (int p = 0; p < 3; ++p) {
    CHECK(cb.decode_p2(p, 0, id, id) == std::vector<int>{0, 0, 0});
    CHECK(cb.decode_p2(p, 1, id, id) == std::vector<int>{1, 1, 1});
  }
  // Composite X with P2 sure of its own 1-bit: only (0,1,1) fits.
  CHECK(cb.decode_p2(1, 1, id, PauliWord::parse("X")) ==
        std::vector<int>{0, 1, 1});
  CHECK(cb.decode_p2(0, 0, id, PauliWord::parse("X")) ==
        std::vector<int>{0, 1, 1});
  CHECK(cb.decode_p2(0, 1, id, PauliWord::parse("X")) ==
        std::vector<int>{1, 0, 0});
}

TEST_CASE("derive_receiver fills in the closing column") {
  Codebook cb = Codebook(spec_of(2, "bell", {0},
                                 {party("A", {"I", "X"}),
                                  party("B", {"I", "iY"})},
                                 /*derive=*/true));
  REQUIRE(cb.party_count() == 3);
  CHECK(cb.parties().back().name == "derived");
  CHECK(cb.parties().back().ops ==
        std::vector<PauliWord>{PauliWord::parse("I"), PauliWord::parse("Z")});

  CHECK_THROWS_WITH_AS(
      Codebook(spec_of(1, "bell", {0},
                       {party("A", {"I", "X"}), party("B", {"I", "iY"})},
                       /*derive=*/true)),
      doctest::Contains("protocol 2 only"), qconf::ValidationError);
}

TEST_CASE("structural validation rejects malformed books") {
  auto bell2 = [&](std::vector<CodebookParty> ps) {
    return spec_of(2, "bell", {0}, std::move(ps));
  };
  CHECK_THROWS_WITH_AS(
      Codebook([&] {
        auto s = bell2({party("A", {"I", "X"}), party("B", {"I", "iY"}),
                        party("C", {"I", "Z"})});
        s.protocol = 3;
        return s;
      }()),
      doctest::Contains("protocol must be 1 or 2"), qconf::ValidationError);
  CHECK_THROWS_WITH_AS(Codebook(bell2({})),
                       doctest::Contains("at least one party"),
                       qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook(spec_of(2, "bell", {}, {party("A", {"I", "X"})})),
      doctest::Contains("no travel qubits"), qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook(spec_of(2, "bell", {2}, {party("A", {"I", "X"})})),
      doctest::Contains("travel qubit index out of range"),
      qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook(spec_of(2, "bell", {0, 0}, {party("A", {"I.I", "X.X"})})),
      doctest::Contains("duplicate travel qubit"), qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook([&] {
        auto s = bell2({party("A", {"I", "X"})});
        s.seed = qconf::StateVector{};
        return s;
      }()),
      doctest::Contains("malformed seed"), qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook([&] {
        auto s = bell2({party("A", {"I", "X"})});
        s.seed.amplitudes = {0.5, 0.0, 0.0, 0.5};
        return s;
      }()),
      doctest::Contains("not normalized"), qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook(bell2({party("A", {"I", "X"}), party("A", {"I", "iY"})})),
      doctest::Contains("duplicate party name"), qconf::ValidationError);
  CHECK_THROWS_WITH_AS(Codebook(bell2({party("", {"I", "X"})})),
                       doctest::Contains("empty name"), qconf::ValidationError);
  CHECK_THROWS_WITH_AS(Codebook(bell2({party("A", {})})),
                       doctest::Contains("has no operators"),
                       qconf::ValidationError);
  CHECK_THROWS_WITH_AS(Codebook(bell2({party("A", {"I", "X", "iY"})})),
                       doctest::Contains("power of two"),
                       qconf::ValidationError);
  CHECK_THROWS_WITH_AS(Codebook(bell2({party("A", {"X", "I"})})),
                       doctest::Contains("first operator must be the identity"),
                       qconf::ValidationError);
  CHECK_THROWS_WITH_AS(Codebook(bell2({party("A", {"I.I", "X.I"})})),
                       doctest::Contains("word length != travel qubit count"),
                       qconf::ValidationError);
  CHECK_THROWS_WITH_AS(Codebook(bell2({party("A", {"I", "X", "X", "I"})})),
                       doctest::Contains("duplicate operator entries"),
                       qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook(spec_of(2, "cluster4", {0, 2},
                       {party("A", {"I.I", "X.I", "I.X", "Z.Z"})})),
      doctest::Contains("not closed under the product"),
      qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook(bell2({party("A", {"I", "X"}), party("B", {"I", "X"}),
                      party("C", {"I", "Z"})})),
      doctest::Contains("sender subgroups overlap: 'A' and 'B'"),
      qconf::ValidationError);
  CHECK_THROWS_WITH_AS(
      Codebook(bell2({party("A", {"I", "X"}), party("B", {"I", "iY"}),
                      party("C", {"I", "X"})})),
      doctest::Contains("column product rule"), qconf::ValidationError);
}

TEST_CASE("ordering and decode-uniqueness rejections") {
  // Two disjoint order-8 subgroups indexed by generator bits, with two
  // entries of the second copy swapped: no single index map fits both.
  std::vector<const char*> xs = {"I.I.I", "X.I.I", "I.X.I", "X.X.I",
                                 "I.I.X", "X.I.X", "I.X.X", "X.X.X"};
  std::vector<const char*> zs_swapped = {"I.I.I", "Z.I.I", "I.Z.I", "Z.I.Z",
                                         "I.I.Z", "Z.Z.I", "I.Z.Z", "Z.Z.Z"};
  CHECK_THROWS_WITH_AS(
      Codebook(spec_of(2, "ghz3", {0, 1, 2},
                       {party("A", xs), party("B", zs_swapped)})),
      doctest::Contains("do not share one ordering map"),
      qconf::ValidationError);

  // Three one-bit senders whose generators multiply to the identity: two
  // different sender tuples share a composite.
  CHECK_THROWS_WITH_AS(
      Codebook(spec_of(1, "cluster4", {0, 2},
                       {party("A", {"I.I", "X.I"}), party("B", {"I.I", "I.X"}),
                        party("C", {"I.I", "X.X"}),
                        party("D", {"I.I", "Z.I"})})),
      doctest::Contains("sender tuples collide"), qconf::ValidationError);

  // An initiator whose subgroup swallows the senders' operators makes two
  // tuples indistinguishable to the other sender.
  CHECK_THROWS_WITH_AS(
      Codebook(spec_of(2, "cluster4", {0, 2},
                       {party("A", {"I.I", "X.I"}), party("B", {"I.I", "I.X"}),
                        party("Alice", {"I.I", "X.I", "I.X", "X.X"})})),
      doctest::Contains("ambiguous decode for party"), qconf::ValidationError);
}

TEST_CASE("orthogonality report flags a channel that is too small") {
  // The four-party one-bit lists span eight words; on a two-qubit carrier
  // only four states fit, so every basis state is hit twice.
  Codebook cb = Codebook(spec_of(2, "bell", {0, 1},
                                 {party("P1", {"I.I", "X.I"}),
                                  party("P2", {"I.I", "X.X"}),
                                  party("P3", {"I.I", "iY.X"}),
                                  party("P4", {"I.I", "iY.I"})}));
  qconf::OrthogonalityReport rep = cb.validate_orthogonality();
  CHECK_FALSE(rep.ok);
  CHECK(rep.distinct_states == 4);
  CHECK(rep.collisions.size() >= 4);
  // X.X stabilizes the bell pair, so it must collide with the identity word.
  bool found = false;
  for (const auto& [a, b] : rep.collisions) {
    if ((a == "I.I" && b == "X.X") || (a == "X.X" && b == "I.I")) found = true;
  }
  CHECK(found);
}

TEST_CASE("asymmetric codebook: unequal message widths decode fine") {
  Codebook cb = Codebook(spec_of(2, "cluster4", {0, 2},
                                 {party("Bob", {"I.I", "X.I"}),
                                  party("Charlie", {"I.I", "I.X"}),
                                  party("Alice",
                                        {"I.I", "Z.I", "I.Z", "Z.Z"})}));
  CHECK_FALSE(cb.uniform_k());
  CHECK(cb.bits_for(0) == 1);
  CHECK(cb.bits_for(2) == 2);
  CHECK(cb.total_bits() == 4);
  CHECK(static_cast<int>(cb.basis_words().size()) == 16);
  CHECK(cb.validate_orthogonality().ok);

  PauliWord id = PauliWord::identity(2);
  for (const auto& tuple : all_tuples({2, 2, 4})) {
    PauliWord composite = composite_of(cb, tuple);
    for (int p = 0; p < 3; ++p) {
      CHECK(cb.decode_p2(p, tuple[p], id, composite) == tuple);
    }
  }
  // Every composite is claimed by exactly one tuple here, so a party holding
  // a contradictory own-bit has nowhere to land.
  CHECK_THROWS_WITH_AS(cb.decode_p2(0, 1, id, PauliWord::parse("Z.I")),
                       doctest::Contains("no tuple consistent"),
                       qconf::IntegrityError);
}

TEST_CASE("five-party conference on the cluster carrier") {
  Codebook cb = Codebook(spec_of(2, "cluster4", {0, 2},
                                 {party("P1", {"I.I", "X.I"}),
                                  party("P2", {"I.I", "I.X"}),
                                  party("P3", {"I.I", "Z.I"}),
                                  party("P4", {"I.I", "I.Z"})},
                                 /*derive=*/true));
  REQUIRE(cb.party_count() == 5);
  CHECK(cb.parties().back().ops ==
        std::vector<PauliWord>{PauliWord::parse("I.I"),
                               PauliWord::parse("iY.iY")});
  CHECK(cb.validate_orthogonality().ok);
  PauliWord id = PauliWord::identity(2);
  for (const auto& tuple : all_tuples({2, 2, 2, 2, 2})) {
    PauliWord composite = composite_of(cb, tuple);
    for (int p = 0; p < 5; ++p) {
      CHECK(cb.decode_p2(p, tuple[p], id, composite) == tuple);
    }
  }
}

TEST_CASE("decode guards") {
  Codebook p1 = qconf::make_preset("table2-4p-1b-ghz", 1);
  CHECK_THROWS_WITH_AS(p1.decode_p1(PauliWord::parse("Z.Z")),
                       doctest::Contains("matches no sender tuple"),
                       qconf::IntegrityError);
  CHECK_THROWS_AS(p1.decode_p2(0, 0, PauliWord::identity(2),
                               PauliWord::identity(2)),
                  qconf::InvalidOperandError);
  CHECK_THROWS_AS(p1.encode_p1({0}), qconf::InvalidOperandError);
  CHECK_THROWS_AS(p1.encode_p1({0, 0, 2}), qconf::InvalidOperandError);
  CHECK_THROWS_AS(p1.op_for(9, 0), qconf::InvalidOperandError);
}

TEST_CASE("bit-string helpers") {
  CHECK(qconf::bits_to_index({1, 0}) == 2);
  CHECK(qconf::bits_to_index({0, 1, 1}) == 3);
  CHECK(qconf::index_to_bits(2, 2) == std::vector<int>{1, 0});
  CHECK(qconf::index_to_bits(0, 3) == std::vector<int>{0, 0, 0});
  CHECK(qconf::bits_to_string({1, 0, 1}) == "101");
  CHECK(qconf::parse_bits("01") == std::vector<int>{0, 1});
  CHECK_THROWS_AS(qconf::parse_bits(""), qconf::InvalidOperandError);
  CHECK_THROWS_AS(qconf::parse_bits("012"), qconf::InvalidOperandError);
  CHECK_THROWS_AS(qconf::bits_to_index({0, 2}), qconf::InvalidOperandError);
  CHECK_THROWS_AS(qconf::bits_to_index({}), qconf::InvalidOperandError);
  CHECK_THROWS_AS(qconf::index_to_bits(4, 2), qconf::InvalidOperandError);
}
