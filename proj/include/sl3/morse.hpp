#pragma once

#include "sl3/apartment.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace sl3 {

/// Order-equivalent stand-in for the Euclidean height of a node: the
/// quadratic form of its lattice vertex, with the inserted barycenter of a
/// flat edge placed immediately above that edge's endpoints.
struct HeightKey {
  std::int64_t qsq = 0;
  int tie = 0;

  friend auto operator<=>(const HeightKey&, const HeightKey&) = default;
};

HeightKey height_key(const Node& n);

/// Weyl image of a node inside the modified sector.
Node sector_image(const Node& n);

/// Height-flat edges among the interior sector edges of the window.
std::vector<Cell> flat_edges(const Window& w);

/// Integer relabelling of the height on the nodes of the modified sector in
/// a window: h is the rank of the node's HeightKey, so h(x0) = 0.
class MorseTable {
 public:
  explicit MorseTable(const Window& w);

  const Window& window() const { return window_; }

  /// h of any node of the modified apartment, pulled back to the sector.
  /// Throws WindowOverflow if the node's sector image is not tabulated.
  int h(const Node& n) const;
  int h(Vertex v) const { return h(Node::lattice(v)); }

  /// Sector nodes and their values.
  const std::map<Node, int>& values() const { return values_; }

  /// Copy with one value replaced (used to plant violations).
  MorseTable with_value(const Node& n, int value) const;

 private:
  Window window_;
  std::map<Node, int> values_;
};

inline MorseTable morse_table(const Window& w) { return MorseTable(w); }

/// True iff h is non-constant on every 1-cell of the modified sector in the
/// table's window.
bool is_morse(const MorseTable& table);

/// True iff every 2-cell of the modified sector in the window has exactly one
/// vertex where h is maximal.
bool has_unique_cell_maxima(const MorseTable& table);

}  // namespace sl3
