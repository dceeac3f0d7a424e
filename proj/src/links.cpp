#include "sl3/links.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sl3 {

int DescendingLink::edge_count() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.dim() == 1; }));
}

std::vector<Node> DescendingLink::nodes() const {
  std::set<Node> out;
  for (const Cell& c : cells) out.insert(c.nodes.begin(), c.nodes.end());
  return {out.begin(), out.end()};
}

bool DescendingLink::is_connected() const {
  const auto ns = nodes();
  if (ns.empty()) return false;
  std::map<Node, std::size_t> index;
  for (std::size_t k = 0; k < ns.size(); ++k) index[ns[k]] = k;
  std::vector<std::size_t> parent(ns.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = ns.size();
  for (const Cell& c : cells) {
    if (c.dim() != 1) continue;
    const auto a = find(index.at(c.nodes[0]));
    const auto b = find(index.at(c.nodes[1]));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<Cell> descending_star(const Node& v, const MorseTable& table) {
  const int top = table.h(v);
  std::vector<Cell> out;
  for (const Cell& c : star(v, table.window())) {
    const bool below = std::all_of(c.nodes.begin(), c.nodes.end(),
                                   [&](const Node& n) { return n == v || table.h(n) < top; });
    if (below) out.push_back(c);
  }
  return out;
}

DescendingLink descending_link(const Node& v, const MorseTable& table) {
  const int top = table.h(v);
  DescendingLink dl{v, {}};
  for (const Cell& c : link(v, table.window())) {
    const bool below = std::all_of(c.nodes.begin(), c.nodes.end(), [&](const Node& n) { return table.h(n) < top; });
    if (below) dl.cells.push_back(c);
  }
  return dl;
}

bool apartment_desc_link_connected(const Node& v, const MorseTable& table) {
  return descending_link(v, table).is_connected();
}

std::vector<Node> descending_path(const Node& v, const MorseTable& table) {
  const Cell base = standard_chamber();
  std::vector<Node> path;
  Node cur = v;
  while (!base.contains(cur)) {
    const int here = table.h(cur);
    std::optional<Node> best;
    for (const Cell& c : star(cur, table.window())) {
      if (c.dim() != 1 || !in_sector(c)) continue;
      const Node other = c.nodes[0] == cur ? c.nodes[1] : c.nodes[0];
      const int hv = table.h(other);
      if (hv >= here) continue;
      if (!best || hv < table.h(*best) || (hv == table.h(*best) && other < *best)) best = other;
    }
    if (!best) throw std::logic_error("descending_path: no lower neighbour at " + cur.to_string());
    cur = *best;
    path.push_back(cur);
  }
  return path;
}

std::string EdgeLabel::to_string() const { return "eta(" + rat_to_string(q) + "," + rat_to_string(r) + ")"; }

EdgeLabel act(const Unipotent& u, int n, const EdgeLabel& e) {
  const auto [a, b] = label(u, n);
  return {e.q + a, e.r + b};
}

std::set<QuotientLinkEdge> quotient_descending_link(int n, std::span<const Rat> sample) {
  const EdgeLabel base{0, 0};
  std::set<QuotientLinkEdge> out;
  for (const Rat& a : sample) {
    for (const Rat& b : sample) {
      const Unipotent u = Unipotent::e12(Poly::monomial(a, n)) * Unipotent::e23(Poly::monomial(b, n));
      out.insert(act(u, n, base));
    }
  }
  return out;
}

}  // namespace sl3
