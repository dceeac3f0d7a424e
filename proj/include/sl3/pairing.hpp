#pragma once

#include "sl3/cocycle.hpp"
#include "sl3/morse.hpp"

#include <string>
#include <vector>

namespace sl3 {

/// Value of phi_m paired against sigma_n in the local model, with the reason
/// the value holds.
struct PairingEntry {
  Rat value;
  bool certified = false;
  std::string certificate;
};

/// Smallest window holding every star the pairing and Morse checks up to
/// n_max look at.
inline int required_i_max(int n_max) { return 2 * n_max + 2; }

/// m == n: phi_n(project(sigma_n)).
/// m > n:  0, certified by max h over St_down(z_n) < min h over Lk_down(z_m).
/// m < n:  0, certified by z_m not being a node of the base chamber of sigma_n.
/// Throws WindowOverflow when the needed stars leave the table's window.
PairingEntry local_pairing(int m, int n, const MorseTable& table);

/// Entry (m, n) pairs phi_m with sigma_n.
struct PairingMatrix {
  int n_max = 0;
  std::vector<std::vector<Rat>> entries;
  std::vector<std::vector<std::string>> certificates;
  bool all_certified = true;

  /// Diagonal entries all -2.
  bool diagonal_ok() const;
  /// Every entry with m > n is 0.
  bool vanishes_below_diagonal() const;
  int rank() const;
};

/// Rank over Q by exact Gaussian elimination.
int rank_over_q(std::vector<std::vector<Rat>> rows);

}  // namespace sl3
