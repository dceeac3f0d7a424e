#pragma once

#include "sl3/pairing.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl3 {

struct VerifyOptions {
  int i_max = 21;
  int n_max = 8;
  std::uint64_t seed = 0;
  /// Samples per vertex in the stabilizer sweep.
  int samples = 200;
  int stab_i_max = 10;
  /// Clamped to i_max - 1 so every examined star fits the window.
  int link_i_max = 12;
};

enum class LemmaStatus { kPass, kFail, kFlagged };

std::string to_string(LemmaStatus s);
LemmaStatus lemma_status_from_string(const std::string& s);

struct LemmaResult {
  std::string id;
  std::string title;
  long checks = 0;
  LemmaStatus status = LemmaStatus::kPass;
  std::string detail;
  double elapsed_ms = 0;
};

struct VerificationReport {
  VerifyOptions parameters;
  std::vector<LemmaResult> lemmas;
  std::optional<PairingMatrix> pairing;
  std::vector<std::string> flags;
  /// Subcommand-specific payload.
  nlohmann::json data;

  /// No lemma failed. Flagged lemmas do not count as failures.
  bool overall_pass() const;
  const LemmaResult* find(const std::string& id) const;

  /// Rationals are written as "num/den" strings. Timings are omitted when
  /// with_timing is false, which makes the output a pure function of the
  /// parameters.
  nlohmann::json to_json(bool with_timing = true) const;
  static VerificationReport from_json(const nlohmann::json& j);
};

/// Throws std::invalid_argument when the window cannot hold the stars used
/// by the pairing and Morse checks (i_max < 2 n_max + 2) or an option is negative.
void validate(const VerifyOptions& opts);

// Individual lemma checks; verify_all runs them in this order.
LemmaResult check_poly_ring(const VerifyOptions& opts);
LemmaResult check_unipotent(const VerifyOptions& opts);
LemmaResult check_adjacency(const VerifyOptions& opts);
LemmaResult check_stabilizer_sweep(const VerifyOptions& opts);
LemmaResult check_eta_profiles(const VerifyOptions& opts);
LemmaResult check_flat_census(const VerifyOptions& opts);
LemmaResult check_morse(const VerifyOptions& opts, const MorseTable& table);
LemmaResult check_descending_links(const VerifyOptions& opts, const MorseTable& table);
LemmaResult check_congruence_split(const VerifyOptions& opts);
LemmaResult check_quotient_link(const VerifyOptions& opts);
LemmaResult check_local_cocycle(const VerifyOptions& opts);
LemmaResult check_cycle(const VerifyOptions& opts);
LemmaResult check_pairing(const VerifyOptions& opts, const MorseTable& table, PairingMatrix& out);
LemmaResult check_sigma_hat_sign(const VerifyOptions& opts);
LemmaResult check_zero_edge_links(const VerifyOptions& opts, const MorseTable& table);

VerificationReport verify_all(const VerifyOptions& opts);

nlohmann::json pairing_to_json(const PairingMatrix& pm);
PairingMatrix pairing_from_json(const nlohmann::json& j);

}  // namespace sl3
