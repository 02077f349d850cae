// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// Release gate. Each numbered check prints exactly one PASS/FAIL line and the
// process exits nonzero if any of them failed. Statistical checks run at
// fixed seeds with three-sigma binomial margins; everything else is exact.

#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qconf/adversary.hpp"
#include "qconf/codebook.hpp"
#include "qconf/engine.hpp"
#include "qconf/metrics.hpp"
#include "qconf/pauli.hpp"
#include "qconf/rng.hpp"
#include "qconf/state.hpp"

namespace {

using qconf::Codebook;
using qconf::ConferenceConfig;
using qconf::PauliSymbol;
using qconf::PauliWord;
using qconf::RunOutcome;

int failures = 0;

void report(int index, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << what
            << '\n';
  if (!ok) ++failures;
}

using Cx = std::complex<double>;
using Mat = std::vector<std::vector<Cx>>;

Mat symbol_matrix(PauliSymbol s) {
  switch (s) {
    case PauliSymbol::I:
      return {{1, 0}, {0, 1}};
    case PauliSymbol::X:
      return {{0, 1}, {1, 0}};
    case PauliSymbol::iY:
      return {{0, 1}, {-1, 0}};
    default:
      return {{1, 0}, {0, -1}};
  }
}

Mat kron(const Mat& a, const Mat& b) {
  const std::size_t n = a.size() * b.size();
  Mat out(n, std::vector<Cx>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = a[i / b.size()][j / b.size()] * b[i % b.size()][j % b.size()];
    }
  }
  return out;
}

Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, std::vector<Cx>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Mat word_matrix(const PauliWord& w) {
  Mat m = symbol_matrix(w.symbol(0));
  for (int i = 1; i < w.length(); ++i) m = kron(m, symbol_matrix(w.symbol(i)));
  return m;
}

bool equal_up_to_phase(const Mat& a, const Mat& b) {
  const Cx phases[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const Cx& p : phases) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      for (std::size_t j = 0; j < a.size() && ok; ++j) {
        ok = std::abs(a[i][j] - p * b[i][j]) < 1e-12;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<PauliWord> all_words(int length) {
  std::vector<PauliWord> words;
  const std::uint32_t count = 1u << (2 * length);
  for (std::uint32_t enc = 0; enc < count; ++enc) {
    std::vector<PauliSymbol> symbols(length);
    for (int i = 0; i < length; ++i) {
      symbols[i] = static_cast<PauliSymbol>((enc >> (2 * (length - 1 - i))) & 3u);
    }
    words.emplace_back(symbols);
  }
  return words;
}

std::vector<PauliWord> parse_list(const std::vector<std::string>& texts) {
  std::vector<PauliWord> out;
  for (const auto& t : texts) out.push_back(PauliWord::parse(t));
  return out;
}

double three_sigma(double p, double n) {
  return 3.0 * std::sqrt(p * (1.0 - p) / n);
}

// Every (protocol 1: sender; protocol 2: party) message tuple over k-bit
// slots, as message vectors ready for a ConferenceConfig.
std::vector<std::vector<std::vector<int>>> all_message_tuples(
    const Codebook& cb, int slots) {
  std::vector<std::vector<std::vector<int>>> out;
  int total = 1;
  for (int s = 0; s < slots; ++s) total *= 1 << cb.bits_for(s);
  for (int t = 0; t < total; ++t) {
    std::vector<std::vector<int>> messages;
    int rest = t;
    for (int s = 0; s < slots; ++s) {
      const int k = cb.bits_for(s);
      messages.push_back(qconf::index_to_bits(rest % (1 << k), k));
      rest /= 1 << k;
    }
    out.push_back(std::move(messages));
  }
  return out;
}

void criterion_1() {
  bool ok = true;
  for (int length : {1, 2}) {
    const std::vector<PauliWord> group = all_words(length);
    const std::set<PauliWord> lookup(group.begin(), group.end());
    const PauliWord id = PauliWord::identity(length);
    for (const PauliWord& a : group) {
      ok &= mul(a, a) == id;  // every element is an involution
      for (const PauliWord& b : group) {
        const PauliWord ab = mul(a, b);
        ok &= lookup.count(ab) == 1;
        ok &= ab == mul(b, a);
        ok &= equal_up_to_phase(word_matrix(ab),
                                matmul(word_matrix(a), word_matrix(b)));
      }
    }
  }
  report(1, ok, "modified Pauli groups are elementary abelian and the "
                "phase-free product matches the matrix oracle");
}

void criterion_2() {
  bool ok = true;
  const std::vector<qconf::Subgroup> subs = qconf::enumerate_subgroups(1, 2);
  ok &= subs.size() == 3;
  if (ok) {
    ok &= subs[0].elements == parse_list({"I", "X"});
    ok &= subs[1].elements == parse_list({"I", "iY"});
    ok &= subs[2].elements == parse_list({"I", "Z"});
    for (std::size_t i = 0; i < subs.size(); ++i) {
      for (std::size_t j = i + 1; j < subs.size(); ++j) {
        ok &= qconf::are_disjoint(subs[i], subs[j]);
      }
    }
  }
  report(2, ok, "the order-2 single-qubit subgroups are {I,X}, {I,iY}, {I,Z} "
                "and pairwise disjoint");
}

void criterion_3() {
  bool ok = true;
  ok &= qconf::derive_receiver_ops({parse_list({"I", "X"}),
                                    parse_list({"I", "iY"})}) ==
        parse_list({"I", "Z"});

  const Codebook ghz = qconf::make_preset("table2-4p-1b-ghz", 2);
  std::vector<std::vector<PauliWord>> senders;
  for (int p = 0; p + 1 < ghz.party_count(); ++p) {
    senders.push_back(ghz.parties()[p].ops);
  }
  ok &= qconf::derive_receiver_ops(senders) == ghz.parties().back().ops;
  ok &= ghz.parties().back().ops == parse_list({"I.I", "iY.I"});

  ok &= qconf::derive_receiver_ops({parse_list({"I", "X", "iY", "Z"})}) ==
        parse_list({"I", "X", "iY", "Z"});
  report(3, ok, "derived receiver lists match the preset columns and the "
                "two-party limit");
}

void criterion_4() {
  bool ok = true;
  for (const std::string& name : qconf::preset_names()) {
    const Codebook p1 = qconf::make_preset(name, 1);
    const Codebook p2 = qconf::make_preset(name, 2);
    ok &= p1.validate_orthogonality().ok;
    ok &= p2.validate_orthogonality().ok;

    // Protocol 1: composite encodings are invertible over sender tuples.
    const int senders = p1.sender_count();
    for (const auto& messages : all_message_tuples(p1, senders)) {
      std::vector<int> indices;
      for (const auto& bits : messages) indices.push_back(qconf::bits_to_index(bits));
      ok &= p1.decode_p1(p1.encode_p1(indices)) == indices;
    }

    // Protocol 2: every party recovers the full tuple from its own share.
    for (const auto& messages : all_message_tuples(p2, p2.party_count())) {
      std::vector<int> indices;
      PauliWord composite = PauliWord::identity(
          static_cast<int>(p2.travel().size()));
      for (int p = 0; p < p2.party_count(); ++p) {
        indices.push_back(qconf::bits_to_index(messages[p]));
        composite = mul(composite, p2.op_for(p, indices[p]));
      }
      for (int p = 0; p < p2.party_count(); ++p) {
        const PauliWord initial =
            PauliWord::identity(static_cast<int>(p2.travel().size()));
        ok &= p2.decode_p2(p, indices[p], initial, composite) == indices;
      }
    }
  }
  report(4, ok, "all presets have orthogonal bases and exhaustive "
                "encode/decode round-trips in both protocols");
}

void criterion_5() {
  bool ok = true;
  std::uint64_t seed = 1000;
  for (const std::string& name : {std::string("table2-3p-1b"),
                                  std::string("table2-4p-1b-ghz")}) {
    for (int protocol : {1, 2}) {
      const Codebook cb = qconf::make_preset(name, protocol);
      const int slots = protocol == 1 ? cb.sender_count() : cb.party_count();
      for (const auto& messages : all_message_tuples(cb, slots)) {
        ConferenceConfig cfg{qconf::make_preset(name, protocol), messages};
        cfg.decoys_per_hop = 8;
        cfg.seed = seed++;
        const RunOutcome out = qconf::run_conference(cfg);
        ok &= out.completed && !out.aborted && out.decode_consistent;
        std::vector<std::string> expected;
        for (const auto& bits : messages) {
          expected.push_back(qconf::bits_to_string(bits));
        }
        ok &= out.decodes.size() ==
              (protocol == 1 ? 1u : static_cast<std::size_t>(slots));
        for (const auto& rec : out.decodes) ok &= rec.tuple == expected;

        const RunOutcome again = qconf::run_conference(cfg);
        ok &= again.transcript.to_jsonl() == out.transcript.to_jsonl();
      }
    }
  }
  report(5, ok, "honest runs decode every message tuple with zero aborts and "
                "byte-identical reseeded transcripts");
}

void criterion_6() {
  bool ok = true;
  const Codebook cb = qconf::make_preset("table2-3p-1b", 2);
  const PauliWord id = PauliWord::identity(1);

  ok &= mul(mul(PauliWord::parse("X"), PauliWord::parse("iY")),
            PauliWord::parse("Z")) == id;

  const qconf::StateVector psi_plus = qconf::prepare_state("bell");
  qconf::StateVector s = psi_plus;
  for (const char* text : {"X", "iY", "Z"}) {
    s = qconf::apply_word(s, PauliWord::parse(text), cb.travel());
  }
  const qconf::MeasurementBasis basis =
      qconf::generate_basis(psi_plus, cb.travel(), cb.basis_words());
  qconf::RngEngine rng(7);
  ok &= qconf::measure_in_basis(s, basis, rng).first == id;

  int identity_tuples = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const PauliWord comp =
            mul(mul(cb.op_for(0, a), cb.op_for(1, b)), cb.op_for(2, c));
        identity_tuples += comp.is_identity();
      }
    }
  }
  ok &= identity_tuples == 2;
  for (int p = 0; p < 3; ++p) {
    ok &= cb.decode_p2(p, 0, id, id) == std::vector<int>{0, 0, 0};
    ok &= cb.decode_p2(p, 1, id, id) == std::vector<int>{1, 1, 1};
  }
  report(6, ok, "X*iY*Z returns |psi+> to itself and the announcement leaves "
                "exactly the (0,0,0)/(1,1,1) branches, split by the own bit");
}

void criterion_7() {
  const qconf::AttackReport r =
      qconf::simulate_entangle_measure(0.5, 100000, 20260821);
  bool ok = r.decoys_attacked == 100000;
  ok &= std::abs(r.analytic_error_rate - 0.25) < 1e-12;
  ok &= r.matched_comparisons > 0;
  ok &= std::abs(r.observed_error_rate - 0.25) <=
        three_sigma(0.25, static_cast<double>(r.matched_comparisons));
  report(7, ok, "entangle-and-measure at beta^2 = 1/2 is detected at rate "
                "1/4 within three sigma over 10^5 decoys");
}

void criterion_8() {
  bool ok = true;
  const qconf::AttackReport a = qconf::intercept_resend_analytics(0.68);
  ok &= std::abs(a.analytic_error_rate - 0.17) <= 0.001;

  const double f_star = qconf::solve_threshold();
  ok &= f_star >= 0.67 && f_star <= 0.69;
  ok &= std::abs((1.0 - qconf::binary_entropy(f_star / 4.0)) - f_star / 2.0) <
        1e-6;

  const qconf::AttackReport mc =
      qconf::simulate_intercept_resend(1.0, 100000, 20260821);
  ok &= mc.matched_comparisons > 0;
  ok &= std::abs(mc.observed_error_rate - 0.25) <=
        three_sigma(0.25, static_cast<double>(mc.matched_comparisons));

  for (int m : {1, 5, 50}) {
    const double p = qconf::escape_probability(m);
    const double obs = qconf::simulate_escape(m, 100000, 500 + m);
    ok &= std::abs(obs - p) <= three_sigma(p, 100000.0);
  }
  report(8, ok, "intercept-and-resend analytics, the ~0.68 threshold, the "
                "f = 1 error rate, and (3/4)^m escape all hold");
}

void criterion_9() {
  bool ok = true;
  const Codebook cb = qconf::make_preset("table2-3p-1b", 2);
  ok &= std::abs(qconf::compute_leakage(
                     cb, qconf::InitialDisclosure::public_fixed_initial) -
                 2.0) < 1e-9;
  ok &= std::abs(qconf::compute_leakage(
                     cb, qconf::InitialDisclosure::secret_random_initial) -
                 0.0) < 1e-9;
  report(9, ok, "announcement leakage is 2 bits with a public fixed initial "
                "and 0 bits with a secret random initial");
}

void criterion_10() {
  bool ok = true;
  const qconf::Rational a = qconf::efficiency_p2({2, 2, 2, 1});
  const qconf::Rational b = qconf::efficiency_p2({3, 1, 2, 1});
  ok &= a == qconf::make_rational(2, 3) && a.percent() == 67;
  ok &= b == qconf::make_rational(3, 7) && b.percent() == 43;
  for (int N = 2; N <= 8; ++N) {
    for (int k = 1; k <= 8; ++k) {
      for (int n = 1; n <= 8; ++n) {
        for (int m = 1; m <= n; ++m) {
          const qconf::Rational p1 = qconf::efficiency_p1({N, k, n, m});
          const qconf::Rational p2 = qconf::efficiency_p2({N, k, n, m});
          ok &= p2.num * p1.den > p1.num * p2.den;
        }
      }
    }
  }
  report(10, ok, "protocol-2 efficiency hits 2/3 (67%) and 3/7 (43%) and "
                 "strictly beats protocol 1 across the whole grid");
}

void criterion_11() {
  bool ok = true;
  int identified = 0;
  for (int t = 0; t < 1000; ++t) {
    ConferenceConfig cfg{qconf::make_preset("table2-3p-1b", 2), {{1}, {0}, {1}}};
    cfg.decoys_per_hop = 16;
    cfg.seed = 3000 + static_cast<std::uint64_t>(t);
    qconf::RunOptions options;
    options.initiator_actual_index = 0;  // committed bit says 1
    const RunOutcome out = qconf::run_conference(cfg, nullptr, options);
    identified += out.cheater_detected && out.cheater == "P3";
  }
  ok &= identified == 1000;

  bool monotone = true;
  for (int n = 2; n <= 8 && monotone; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n) && monotone; ++mask) {
      std::vector<int> colluders;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) colluders.push_back(i);
      }
      std::set<int> prev;
      for (int l = 1; l <= n; ++l) {
        const std::set<int> cur = qconf::collusion_exposure(
            n, colluders, qconf::partition_subcircles(n, l));
        if (l > 1) {
          for (int e : cur) monotone &= prev.count(e) == 1;
        }
        prev = cur;
      }
    }
  }
  ok &= monotone;
  report(11, ok, "commitments expose a dishonest announcer in 1000/1000 "
                 "trials and collusion exposure never grows under sub-circle "
                 "refinement");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
