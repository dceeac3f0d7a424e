#include "sl3/morse.hpp"

#include <algorithm>

namespace sl3 {

HeightKey height_key(const Node& n) {
  if (n.is_lattice()) return {hhat_sq(n.lo), 0};
  if (!subdivided_eta_index(n.lo, n.hi)) {
    throw std::invalid_argument("height_key: " + n.to_string() + " is not an inserted barycenter");
  }
  return {hhat_sq(n.lo), 1};
}

Node sector_image(const Node& n) {
  if (n.is_lattice()) return Node::lattice(sector_representative(n.lo));
  const auto idx = subdivided_eta_index(n.lo, n.hi);
  if (!idx) throw std::invalid_argument("sector_image: " + n.to_string() + " is not an inserted barycenter");
  const Cell e = eta(*idx);
  return Node::barycenter(e.nodes[0].lo, e.nodes[1].lo);
}

std::vector<Cell> flat_edges(const Window& w) {
  std::vector<Cell> out;
  for (const Cell& e : interior_sector_edges(w)) {
    if (hhat_sq(e.nodes[0].lo) == hhat_sq(e.nodes[1].lo)) out.push_back(e);
  }
  return out;
}

MorseTable::MorseTable(const Window& w) : window_(w) {
  std::vector<Node> nodes;
  for (const Cell& c : modified_sector_cells(w)) {
    if (c.dim() == 0) nodes.push_back(c.nodes[0]);
  }
  // x0 is a cell even in a window too small to hold a chamber.
  if (w.i_max >= 0 && std::find(nodes.begin(), nodes.end(), Node::lattice(kBaseVertex)) == nodes.end()) {
    nodes.push_back(Node::lattice(kBaseVertex));
  }
  std::vector<HeightKey> keys;
  keys.reserve(nodes.size());
  for (const Node& n : nodes) keys.push_back(height_key(n));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const Node& n : nodes) {
    const auto it = std::lower_bound(keys.begin(), keys.end(), height_key(n));
    values_[n] = static_cast<int>(it - keys.begin());
  }
}

int MorseTable::h(const Node& n) const {
  const auto it = values_.find(sector_image(n));
  if (it == values_.end()) {
    throw WindowOverflow("node " + n.to_string() + " is outside the Morse table window i <= " +
                         std::to_string(window_.i_max));
  }
  return it->second;
}

MorseTable MorseTable::with_value(const Node& n, int value) const {
  MorseTable copy = *this;
  copy.values_.at(n) = value;
  return copy;
}

bool is_morse(const MorseTable& table) {
  for (const Cell& c : modified_sector_cells(table.window())) {
    if (c.dim() == 1 && table.h(c.nodes[0]) == table.h(c.nodes[1])) return false;
  }
  return true;
}

bool has_unique_cell_maxima(const MorseTable& table) {
  for (const Cell& c : modified_sector_cells(table.window())) {
    if (c.dim() != 2) continue;
    std::vector<int> hs;
    for (const Node& n : c.nodes) hs.push_back(table.h(n));
    const int top = *std::max_element(hs.begin(), hs.end());
    if (std::count(hs.begin(), hs.end(), top) != 1) return false;
  }
  return true;
}

}  // namespace sl3
