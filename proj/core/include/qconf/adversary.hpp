// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// Channel attacks and their analytics: intercept-and-resend, the
// entangle-and-measure probe, information leakage from public announcements,
// and the insider collusion exposure model. Interceptors own their sampling
// state (a private rng), so the run's own draw stream is untouched on hops
// the attacker leaves alone.

#ifndef QCONF_ADVERSARY_HPP_
#define QCONF_ADVERSARY_HPP_

#include <cstdint>
#include <set>
#include <vector>

#include "qconf/channel.hpp"
#include "qconf/codebook.hpp"

namespace qconf {

struct AttackReport {
  std::uint64_t decoys_attacked = 0;
  std::uint64_t matched_comparisons = 0;
  double observed_error_rate = 0;
  double analytic_error_rate = 0;
  double i_ae_bits = 0;
  double i_ab_bits = 0;
  double detection_per_decoy = 0;
  double escape_probability = 1;
  bool secure = true;  // I_AB >= I_AE at the report's parameters
};

// Eve measures each transported qubit, decoy or travel, independently with
// probability `fraction`, in a uniformly random basis; decoys are replaced by
// a fresh qubit matching her outcome, travel qubits take the corresponding
// projective measurement on the joint state.
class InterceptResendAttack : public ChannelInterceptor {
 public:
  InterceptResendAttack(double fraction, std::uint64_t seed);
  void on_transmit(TransmitStream& stream) override;
  std::string kind() const override { return "intercept_resend"; }
  std::uint64_t decoys_touched() const override { return decoys_attacked_; }
  std::uint64_t travel_touched() const override { return travel_attacked_; }

  std::uint64_t decoys_attacked() const { return decoys_attacked_; }
  std::uint64_t travel_attacked() const { return travel_attacked_; }

 private:
  double fraction_;
  RngEngine rng_;
  std::uint64_t decoys_attacked_ = 0;
  std::uint64_t travel_attacked_ = 0;
};

// Eve's probe qubit (alpha|0> + beta|1>) acts as the control of a CNOT onto
// each decoy: computational-basis decoys pick up a beta^2 matched-basis flip
// probability, diagonal-basis decoys stay separable and undisturbed. This is
// the unique standard two-qubit interaction matching both behaviors.
class EntangleMeasureAttack : public ChannelInterceptor {
 public:
  EntangleMeasureAttack(double beta_sq, std::uint64_t seed);
  void on_transmit(TransmitStream& stream) override;
  std::string kind() const override { return "entangle_measure"; }
  std::uint64_t decoys_touched() const override { return decoys_attacked_; }

  std::uint64_t decoys_attacked() const { return decoys_attacked_; }

 private:
  double beta_sq_;
  RngEngine rng_;
  std::uint64_t decoys_attacked_ = 0;
};

// Closed forms for intercept-and-resend at fraction f: induced error
// e = f/4, Eve's information f/2, the legitimate channel 1 - H(f/4), and the
// security flag comparing the two.
AttackReport intercept_resend_analytics(double fraction);

// Monte-Carlo over independent decoys, receiver measuring in a random basis;
// reports matched-basis error frequency next to the analytic values.
AttackReport simulate_intercept_resend(double fraction, std::uint64_t decoys,
                                       std::uint64_t seed);

// Monte-Carlo of the probe attack over uniformly random decoys; detection
// frequency converges to beta^2 / 2.
AttackReport simulate_entangle_measure(double beta_sq, std::uint64_t decoys,
                                       std::uint64_t seed);

// Root of 1 - H(f/4) = f/2 on (0,1), bisected to 1e-6.
double solve_threshold();

// Probability that m attacked-and-compared decoys all escape detection:
// (3/4)^m.
double escape_probability(int decoys_attacked);

// Frequency of zero errors among m compared decoys, each erring with
// probability 1/4; cross-checks escape_probability.
double simulate_escape(int decoys_attacked, std::uint64_t trials,
                       std::uint64_t seed);

enum class InitialDisclosure {
  public_fixed_initial,   // identity initial word, publicly known
  secret_random_initial,  // initial word uniform over the basis, sent securely
};

// Eve's information gain from the announced final label alone, in bits:
// H_apriori (= total message bits) minus her expected posterior entropy over
// all equiprobable message tuples. Protocol-2 codebooks only (protocol 1
// announces nothing, so its leakage is zero by construction).
double compute_leakage(const Codebook& cb, InitialDisclosure model);

// Combinatorial insider model: within each sub-circle segment, parties
// strictly between two colluder access points lose their encoding; the
// single-segment case is the full circle, where any two or more colluders
// expose every party between them in both arc directions. Boundaries are
// sorted distinct segment starts in [0, N).
std::set<int> collusion_exposure(int party_count,
                                 const std::vector<int>& colluders,
                                 const std::vector<int>& boundaries);

}  // namespace qconf

#endif  // QCONF_ADVERSARY_HPP_
