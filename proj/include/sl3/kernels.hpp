#pragma once

// Data-parallel verification sweeps. Each kernel has an OpenMP version and a
// serial reference that must produce identical results; tests compare the
// two and bench/ times them.

#include "sl3/morse.hpp"
#include "sl3/pairing.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sl3 {

/// Profile membership against the conjugation oracle over every sector
/// vertex with i <= i_max. Half of the samples are members, half carry one
/// planted violation.
struct StabilizerSweepStats {
  long vertices = 0;
  long samples = 0;
  long mismatches = 0;
  long members_accepted = 0;
  long violators_rejected = 0;

  friend bool operator==(const StabilizerSweepStats&, const StabilizerSweepStats&) = default;
};

StabilizerSweepStats stabilizer_sweep(int i_max, int samples_per_vertex, std::uint64_t seed);
StabilizerSweepStats stabilizer_sweep_serial(int i_max, int samples_per_vertex, std::uint64_t seed);

/// Descending-link shape over the sector vertices other than x0 with
/// i <= i_max, and over the inserted barycenters whose stars fit.
struct LinkSweepStats {
  long vertices = 0;
  long barycenters = 0;
  long failures = 0;
  long zero_edge_vertices = 0;
  int max_edges = 0;
  int max_chambers = 0;
  long path_steps = 0;
  std::vector<std::string> notes;

  friend bool operator==(const LinkSweepStats&, const LinkSweepStats&) = default;
};

/// The table's window must contain every star examined (i_max < table i_max).
LinkSweepStats descending_link_sweep(const MorseTable& table, int i_max);
LinkSweepStats descending_link_sweep_serial(const MorseTable& table, int i_max);

/// (n_max + 1)^2 independent local pairings.
PairingMatrix pairing_matrix(int n_max, const MorseTable& table);
PairingMatrix pairing_matrix_serial(int n_max, const MorseTable& table);

}  // namespace sl3
