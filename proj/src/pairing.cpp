#include "sl3/pairing.hpp"

#include "sl3/links.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace sl3 {

namespace {

// Nodes of the descending star of z_n; every chamber of sigma_n is a
// U-translate of one of its 2-cells, and h is U-invariant.
std::set<Node> support_nodes(int n, const MorseTable& table) {
  std::set<Node> out{Node::lattice(z(n))};
  for (const Cell& c : descending_star(Node::lattice(z(n)), table)) out.insert(c.nodes.begin(), c.nodes.end());
  return out;
}

std::set<Node> base_chamber_nodes(int n, const MorseTable& table) {
  std::set<Node> out;
  for (const Cell& c : descending_star(Node::lattice(z(n)), table)) {
    if (c.dim() == 2) out.insert(c.nodes.begin(), c.nodes.end());
  }
  return out;
}

}  // namespace

PairingEntry local_pairing(int m, int n, const MorseTable& table) {
  if (m < 0 || n < 0) throw std::invalid_argument("local_pairing: negative index");
  PairingEntry e;
  if (m == n) {
    const LinkChain hat = sigma_hat(n);
    e.value = phi(n, hat);
    e.certified = boundary(hat).empty();
    e.certificate = "phi_n(project(sigma_n)) = " + rat_to_string(e.value) +
                    (e.certified ? ", boundary 0" : ", projection is not a cycle");
    return e;
  }
  e.value = 0;
  if (m > n) {
    int top = std::numeric_limits<int>::min();
    for (const Node& v : support_nodes(n, table)) top = std::max(top, table.h(v));
    const DescendingLink dl = descending_link(Node::lattice(z(m)), table);
    int low = std::numeric_limits<int>::max();
    for (const Node& v : dl.nodes()) low = std::min(low, table.h(v));
    e.certified = !dl.empty() && top < low;
    e.certificate = "support height " + std::to_string(top) + (e.certified ? " < " : " >= ") +
                    std::to_string(low) + " = min h on Lk_down(z_m)";
    return e;
  }
  // The sector is a strict fundamental domain, so a U-translate of the base
  // chamber meets z_m only if the base chamber itself does.
  const auto nodes = base_chamber_nodes(n, table);
  e.certified = nodes.count(Node::lattice(z(m))) == 0;
  e.certificate = e.certified ? "base chamber of sigma_n does not contain z_m (local model only)"
                              : "base chamber of sigma_n contains z_m";
  return e;
}

bool PairingMatrix::diagonal_ok() const {
  for (int k = 0; k <= n_max; ++k) {
    if (entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] != -2) return false;
  }
  return true;
}

bool PairingMatrix::vanishes_below_diagonal() const {
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n < m; ++n) {
      if (entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] != 0) return false;
    }
  }
  return true;
}

int PairingMatrix::rank() const { return rank_over_q(entries); }

int rank_over_q(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows ? rows[0].size() : 0;
  for (std::size_t col = 0; col < ncols && static_cast<std::size_t>(rank) < nrows; ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < nrows; ++r) {
      if (rows[r][col] == 0) continue;
      const Rat f = rows[r][col] / prow[col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * prow[c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace sl3
