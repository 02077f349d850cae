// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0
//
// qconf command line: run conferences from JSON configs, validate codebooks,
// sweep the intercept-and-resend security curve, tabulate qubit efficiency,
// and replay the canned attack scenarios. Exit codes: 0 success, 1 protocol
// failure (abort, decode mismatch, cheating, validation fail), 2 bad usage
// or config.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qconf/adversary.hpp"
#include "qconf/config.hpp"
#include "qconf/engine.hpp"
#include "qconf/metrics.hpp"

namespace {

using namespace qconf;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void print_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << cells[c];
      if (c + 1 < cells.size()) {
        os << std::string(widths[c] - cells[c].size() + 2, ' ');
      }
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void print_summary(std::ostream& os, const RunOutcome& out) {
  if (out.aborted) {
    os << "status: aborted at hop " << out.abort_hop << " (" << out.abort_reason
       << ")\n";
  } else if (out.integrity_event) {
    os << "status: integrity failure\n";
  } else {
    os << "status: completed\n";
  }
  if (!out.final_label.empty()) {
    os << "labels: initial " << out.initial_label << ", final "
       << out.final_label << "\n";
  }
  if (!out.hop_error_rates.empty()) {
    os << "hop error rates:";
    for (double r : out.hop_error_rates) os << ' ' << fmt(r);
    os << '\n';
  }
  for (const auto& rec : out.decodes) {
    os << "decode " << rec.party << ":";
    for (const auto& bits : rec.tuple) os << ' ' << bits;
    os << '\n';
  }
  if (!out.decodes.empty()) {
    os << "decode consistent: " << (out.decode_consistent ? "yes" : "no")
       << '\n';
  }
  if (out.cheater_detected) {
    os << "cheater identified: " << out.cheater << '\n';
  }
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            const std::string& out_path) {
  ParsedRun parsed = load_run_config(config_path);
  if (seed.has_value()) parsed.config.seed = *seed;
  std::unique_ptr<ChannelInterceptor> eve;
  RunOptions options;
  if (parsed.adversary.has_value()) {
    const AdversaryDescriptor& a = *parsed.adversary;
    if (a.kind == "intercept_resend") {
      eve = std::make_unique<InterceptResendAttack>(a.fraction, a.seed);
    } else if (a.kind == "entangle_measure") {
      eve = std::make_unique<EntangleMeasureAttack>(a.beta_sq, a.seed);
    } else {  // dishonest_announcer
      const Codebook& cb = parsed.config.codebook;
      const int k = cb.bits_for(cb.receiver_index());
      const int committed = bits_to_index(parsed.config.messages.back());
      int actual;
      if (a.actual_bits.has_value()) {
        std::vector<int> bits = parse_bits(*a.actual_bits);
        if (static_cast<int>(bits.size()) != k) {
          throw ConfigError("'actual_bits' must have " + std::to_string(k) +
                            " bits");
        }
        actual = bits_to_index(bits);
      } else {
        actual = (committed + 1) % (1 << k);
      }
      options.initiator_actual_index = actual;
    }
  }
  RunOutcome out = run_conference(parsed.config, eve.get(), options);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + out_path + "'");
    out.transcript.write_jsonl(f);
    print_summary(std::cout, out);
  } else {
    out.transcript.write_jsonl(std::cout);
    print_summary(std::cerr, out);
  }
  const bool ok = out.completed && out.decode_consistent &&
                  !out.cheater_detected && !out.integrity_event;
  return ok ? 0 : 1;
}

int cmd_validate(const std::string& target) {
  std::unique_ptr<Codebook> cb;
  try {
    if (is_preset(target)) {
      cb = std::make_unique<Codebook>(make_preset(target, 2));
    } else {
      cb = std::make_unique<Codebook>(load_codebook_config(target));
    }
  } catch (const ValidationError& e) {
    std::cout << "FAIL (structure): " << e.what() << '\n';
    return 1;
  }
  OrthogonalityReport report = cb->validate_orthogonality();
  if (report.ok) {
    std::cout << "PASS: " << cb->label() << ": " << report.distinct_states
              << " orthogonal basis states, " << cb->party_count()
              << " parties\n";
    return 0;
  }
  std::cout << "FAIL (orthogonality): " << report.collisions.size()
            << " collisions, " << report.distinct_states
            << " distinct states\n";
  for (const auto& [a, b] : report.collisions) {
    std::cout << "  collision: " << a;
    if (!b.empty()) std::cout << " vs " << b;
    std::cout << '\n';
  }
  return 1;
}

int cmd_curve(double fmin, double fmax, int steps) {
  if (!(fmin >= 0.0 && fmin < fmax && fmax <= 1.0) || steps < 1) {
    std::cerr << "curve needs 0 <= fmin < fmax <= 1 and steps >= 1\n";
    return 2;
  }
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i <= steps; ++i) {
    double f = fmin + (fmax - fmin) * static_cast<double>(i) / steps;
    AttackReport r = intercept_resend_analytics(f);
    rows.push_back({fmt(f), fmt(r.analytic_error_rate), fmt(r.i_ae_bits),
                    fmt(r.i_ab_bits), r.secure ? "yes" : "no"});
  }
  print_table(std::cout, {"f", "e", "i_ae", "i_ab", "secure"}, rows);
  double f_star = solve_threshold();
  std::cout << "f_star " << fmt(f_star) << '\n';
  std::cout << "e_star " << fmt(f_star / 4.0) << '\n';
  return 0;
}

int cmd_efficiency(int protocol, int N, int k, int n, int m) {
  EfficiencyInput inp{N, k, n, m};
  validate_efficiency_input(inp);
  if (protocol != 1 && protocol != 2) {
    std::cerr << "efficiency needs --protocol 1 or 2\n";
    return 2;
  }
  Rational e1 = efficiency_p1(inp);
  Rational e2 = efficiency_p2(inp);
  print_table(std::cout,
              {"N", "k", "n", "m", "eta1", "eta2", "exact1", "exact2"},
              {{std::to_string(N), std::to_string(k), std::to_string(n),
                std::to_string(m), std::to_string(e1.percent()),
                std::to_string(e2.percent()), e1.str(), e2.str()}});
  const Rational& sel = protocol == 1 ? e1 : e2;
  std::cout << "protocol " << protocol << " efficiency " << sel.str() << " = "
            << sel.percent() << "%\n";
  return 0;
}

void print_report(const AttackReport& r) {
  print_table(
      std::cout, {"field", "value"},
      {{"decoys_attacked", std::to_string(r.decoys_attacked)},
       {"matched_comparisons", std::to_string(r.matched_comparisons)},
       {"observed_error_rate", fmt(r.observed_error_rate)},
       {"analytic_error_rate", fmt(r.analytic_error_rate)},
       {"detection_per_decoy", fmt(r.detection_per_decoy)},
       {"i_ae_bits", fmt(r.i_ae_bits)},
       {"i_ab_bits", fmt(r.i_ab_bits)},
       {"escape_probability", fmt(r.escape_probability)},
       {"secure", r.secure ? "yes" : "no"}});
}

ConferenceConfig announcer_demo_config(std::uint64_t seed) {
  ConferenceConfig cfg{make_preset("table2-3p-1b", 2),
                       {{1}, {0}, {1}}};
  // Enough decoys that an all-mismatched check (and with it an inconclusive
  // abort before the commitment is ever opened) has probability ~2^-64.
  cfg.decoys_per_hop = 16;
  cfg.seed = seed;
  return cfg;
}

int cmd_attack(const std::string& scenario, std::uint64_t trials,
               std::uint64_t seed) {
  if (trials == 0) {
    std::cerr << "attack needs --trials >= 1\n";
    return 2;
  }
  if (scenario == "intercept_resend") {
    print_report(simulate_intercept_resend(1.0, trials, seed));
    return 0;
  }
  if (scenario == "entangle_measure") {
    print_report(simulate_entangle_measure(0.5, trials, seed));
    return 0;
  }
  if (scenario == "escape") {
    std::vector<std::vector<std::string>> rows;
    for (int m : {1, 5, 50}) {
      rows.push_back({std::to_string(m), fmt(escape_probability(m)),
                      fmt(simulate_escape(m, trials, seed + m))});
    }
    print_table(std::cout, {"m", "analytic", "observed"}, rows);
    return 0;
  }
  if (scenario == "dishonest_announcer") {
    std::uint64_t identified = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      ConferenceConfig cfg = announcer_demo_config(seed + t);
      RunOptions options;
      options.initiator_actual_index =
          (bits_to_index(cfg.messages.back()) + 1) % 2;
      RunOutcome out = run_conference(cfg, nullptr, options);
      if (out.cheater_detected) ++identified;
    }
    std::cout << "identified " << identified << "/" << trials << " ("
              << fmt(100.0 * static_cast<double>(identified) /
                     static_cast<double>(trials))
              << "%)\n";
    return identified == trials ? 0 : 1;
  }
  if (scenario == "collusion") {
    std::vector<std::vector<std::string>> rows;
    const std::vector<int> colluders{1, 4};
    for (int l = 1; l <= 6; ++l) {
      std::vector<int> bounds = partition_subcircles(6, l);
      std::set<int> exposed = collusion_exposure(6, colluders, bounds);
      std::string bstr;
      std::string estr;
      for (int b : bounds) bstr += (bstr.empty() ? "" : ",") + std::to_string(b);
      for (int e : exposed) estr += (estr.empty() ? "" : ",") + std::to_string(e);
      if (estr.empty()) estr = "-";
      rows.push_back({std::to_string(l), bstr, estr,
                      std::to_string(exposed.size())});
    }
    print_table(std::cout, {"l", "bounds", "exposed", "count"}, rows);
    // Shrinking exposure under refinement, every placement up to 8 parties.
    bool monotone = true;
    for (int n = 2; n <= 8 && monotone; ++n) {
      for (std::uint32_t mask = 0; mask < (1u << n) && monotone; ++mask) {
        std::vector<int> cols;
        for (int i = 0; i < n; ++i) {
          if (mask & (1u << i)) cols.push_back(i);
        }
        std::set<int> prev;
        for (int l = 1; l <= n; ++l) {
          std::set<int> cur =
              collusion_exposure(n, cols, partition_subcircles(n, l));
          if (l > 1) {
            for (int e : cur) {
              if (!prev.count(e)) monotone = false;
            }
          }
          prev = std::move(cur);
        }
      }
    }
    std::cout << "monotone " << (monotone ? "yes" : "no") << '\n';
    return monotone ? 0 : 1;
  }
  std::cerr << "unknown scenario '" << scenario
            << "' (intercept_resend, entangle_measure, escape, "
               "dishonest_announcer, collusion)\n";
  return 2;
}

int cmd_presets() {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& name : preset_names()) {
    Codebook cb = make_preset(name, 2);
    std::string travel;
    for (int q : cb.travel()) {
      travel += (travel.empty() ? "" : ",") + std::to_string(q);
    }
    rows.push_back({name, cb.seed_name(), std::to_string(cb.party_count()),
                    travel, std::to_string(cb.bits_for(0)),
                    std::to_string(cb.basis_words().size())});
  }
  print_table(std::cout, {"name", "state", "parties", "travel", "k", "basis"},
              rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiparty quantum conference simulator"};
  app.require_subcommand(1);

  std::string run_config;
  std::string run_out;
  std::uint64_t run_seed = 0;
  auto* run = app.add_subcommand("run", "Execute one conference run");
  run->add_option("--config", run_config, "Run config JSON path")->required();
  auto* seed_opt = run->add_option("--seed", run_seed, "Override the run seed");
  run->add_option("--out", run_out,
                  "Transcript JSONL path (default: transcript to stdout, "
                  "summary to stderr)");

  std::string validate_target;
  auto* validate =
      app.add_subcommand("validate", "Check a codebook's structure and basis");
  validate->add_option("target", validate_target,
                       "Preset name or codebook JSON path")
      ->required();

  double fmin = 0.0;
  double fmax = 1.0;
  int steps = 10;
  auto* curve = app.add_subcommand(
      "curve", "Intercept-and-resend security curve over the attack fraction");
  curve->add_option("--fmin", fmin, "Lowest fraction")->required();
  curve->add_option("--fmax", fmax, "Highest fraction")->required();
  curve->add_option("--steps", steps, "Sample intervals")->required();

  int eff_protocol = 2;
  int eff_n_parties = 0;
  int eff_k = 0;
  int eff_n = 0;
  int eff_m = 0;
  auto* efficiency =
      app.add_subcommand("efficiency", "Qubit efficiency of both protocols");
  efficiency->add_option("--protocol", eff_protocol, "1 or 2")->required();
  efficiency->add_option("--N", eff_n_parties, "Party count")->required();
  efficiency->add_option("--k", eff_k, "Bits per party")->required();
  efficiency->add_option("--n", eff_n, "Channel qubits")->required();
  efficiency->add_option("--m", eff_m, "Travel qubits per hop")->required();

  std::string scenario;
  std::uint64_t trials = 0;
  std::uint64_t attack_seed = 20260821;
  auto* attack = app.add_subcommand("attack", "Replay a canned attack scenario");
  attack->add_option("--scenario", scenario,
                     "intercept_resend | entangle_measure | escape | "
                     "dishonest_announcer | collusion")
      ->required();
  attack->add_option("--trials", trials, "Trial count")->required();
  attack->add_option("--seed", attack_seed, "Simulation seed");

  auto* presets = app.add_subcommand("presets", "List built-in codebooks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (run->parsed()) {
      std::optional<std::uint64_t> seed;
      if (seed_opt->count() > 0) seed = run_seed;
      return cmd_run(run_config, seed, run_out);
    }
    if (validate->parsed()) return cmd_validate(validate_target);
    if (curve->parsed()) return cmd_curve(fmin, fmax, steps);
    if (efficiency->parsed()) {
      return cmd_efficiency(eff_protocol, eff_n_parties, eff_k, eff_n, eff_m);
    }
    if (attack->parsed()) return cmd_attack(scenario, trials, attack_seed);
    if (presets->parsed()) return cmd_presets();
  } catch (const qconf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
