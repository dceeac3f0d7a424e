#pragma once

#include "sl3/apartment.hpp"
#include "sl3/matrix.hpp"
#include "sl3/morse.hpp"

#include <set>
#include <span>
#include <string>
#include <vector>

namespace sl3 {

/// The part of the link of `center` in the modified apartment whose nodes are
/// all strictly below the centre.
struct DescendingLink {
  Node center;
  std::vector<Cell> cells;

  bool empty() const { return cells.empty(); }
  int edge_count() const;
  std::vector<Node> nodes() const;
  /// Nonempty and connected as a graph.
  bool is_connected() const;
};

/// Cells of star(v) with every node other than v strictly below v.
std::vector<Cell> descending_star(const Node& v, const MorseTable& table);
DescendingLink descending_link(const Node& v, const MorseTable& table);

bool apartment_desc_link_connected(const Node& v, const MorseTable& table);

/// Greedy descent inside the modified sector: repeatedly step to the lowest
/// neighbour (ties broken by coordinates) until a node of the standard chamber
/// is reached. Returns the nodes visited after v; empty when v already lies in
/// the standard chamber. Throws std::logic_error if a descending link is empty.
std::vector<Node> descending_path(const Node& v, const MorseTable& table);

/// Edge of the quotient descending link at z_n, labelled by the pair of
/// degree-n coefficients. Oriented from the q-family vertex to the r-family.
struct EdgeLabel {
  Rat q;
  Rat r;

  friend bool operator==(const EdgeLabel& a, const EdgeLabel& b) { return a.q == b.q && a.r == b.r; }
  friend bool operator<(const EdgeLabel& a, const EdgeLabel& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.r < b.r;
  }
  std::string to_string() const;
};

using QuotientLinkEdge = EdgeLabel;

/// u . eta_(q,r) = eta_(q+a, r+b) with (a, b) = label(u, n).
EdgeLabel act(const Unipotent& u, int n, const EdgeLabel& e);

/// Edges e12(a t^n) e23(b t^n) . base for a, b in the sample.
std::set<QuotientLinkEdge> quotient_descending_link(int n, std::span<const Rat> sample);

}  // namespace sl3
