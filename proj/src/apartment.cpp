#include "sl3/apartment.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace sl3 {

namespace {

constexpr std::array<Vertex, 6> kSteps{{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};

Vertex operator+(Vertex a, Vertex b) { return {a.i + b.i, a.j + b.j}; }

// Splits a chamber along its subdivided edge, if it has one.
std::vector<std::array<Node, 3>> pieces_of(const std::array<Vertex, 3>& ch) {
  std::vector<std::array<Node, 3>> out;
  for (int k = 0; k < 3; ++k) {
    const Vertex p = ch[static_cast<std::size_t>(k)];
    const Vertex q = ch[static_cast<std::size_t>((k + 1) % 3)];
    const Vertex r = ch[static_cast<std::size_t>((k + 2) % 3)];
    if (!subdivided_eta_index(p, q)) continue;
    if (!out.empty()) throw std::logic_error("chamber with two subdivided edges");
    const Node y = Node::barycenter(p, q);
    out.push_back({Node::lattice(p), y, Node::lattice(r)});
    out.push_back({y, Node::lattice(q), Node::lattice(r)});
  }
  if (out.empty()) out.push_back({Node::lattice(ch[0]), Node::lattice(ch[1]), Node::lattice(ch[2])});
  return out;
}

// Faces of a triangle that contain `center`.
void add_faces_containing(const std::array<Node, 3>& tri, const Node& center, std::set<Cell>& out) {
  if (std::find(tri.begin(), tri.end(), center) == tri.end()) return;
  out.insert(Cell::make({tri[0], tri[1], tri[2]}));
  for (const Node& other : tri) {
    if (other != center) out.insert(Cell::make({center, other}));
  }
  out.insert(Cell::make({center}));
}

void add_all_faces(const std::array<Node, 3>& tri, std::set<Cell>& out) {
  out.insert(Cell::make({tri[0], tri[1], tri[2]}));
  for (int a = 0; a < 3; ++a) {
    out.insert(Cell::make({tri[static_cast<std::size_t>(a)]}));
    out.insert(Cell::make({tri[static_cast<std::size_t>(a)], tri[static_cast<std::size_t>((a + 1) % 3)]}));
  }
}

}  // namespace

std::string Vertex::to_string() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

SectorVertex::SectorVertex(int i, int j) : v_{i, j} {
  if (!sector_contains(v_)) throw std::invalid_argument("SectorVertex: " + v_.to_string() + " is outside the sector");
}

std::string Node::to_string() const {
  if (is_lattice()) return lo.to_string();
  return "y[" + lo.to_string() + "-" + hi.to_string() + "]";
}

Cell Cell::make(std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end());
  Cell c;
  const bool all_lattice = std::all_of(nodes.begin(), nodes.end(), [](const Node& n) { return n.is_lattice(); });
  switch (nodes.size()) {
    case 1: c.kind = all_lattice ? CellKind::kVertex : CellKind::kSubdividedVertex; break;
    case 2: c.kind = CellKind::kEdge; break;
    case 3: c.kind = all_lattice ? CellKind::kChamber : CellKind::kChamberPiece; break;
    default: throw std::invalid_argument("Cell::make: cells have 1 to 3 nodes");
  }
  c.nodes = std::move(nodes);
  return c;
}

bool Cell::contains(const Node& n) const { return std::find(nodes.begin(), nodes.end(), n) != nodes.end(); }

std::string Cell::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < nodes.size(); ++k) s += (k ? "," : "") + nodes[k].to_string();
  return s + "}";
}

std::string to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::kStandardVertex: return "standard-vertex";
    case BoundaryClass::kInterior: return "interior";
    case BoundaryClass::kBoundaryJ0: return "boundary-j0";
    case BoundaryClass::kBoundaryIJ: return "boundary-ij";
  }
  return "?";
}

bool adjacent(Vertex a, Vertex b) {
  const int di = b.i - a.i;
  const int dj = b.j - a.j;
  return std::find(kSteps.begin(), kSteps.end(), Vertex{di, dj}) != kSteps.end();
}

bool lattice_inclusion_adjacent(Vertex a, Vertex b) {
  const std::array<int, 3> ea{a.i, a.j, 0};
  auto strictly_between = [&ea](const std::array<int, 3>& eb) {
    bool all_equal_upper = true;
    bool all_equal_lower = true;
    for (std::size_t k = 0; k < 3; ++k) {
      if (ea[k] > eb[k] || ea[k] < eb[k] - 1) return false;
      all_equal_upper = all_equal_upper && ea[k] == eb[k];
      all_equal_lower = all_equal_lower && ea[k] == eb[k] - 1;
    }
    return !all_equal_upper && !all_equal_lower;
  };
  // Homothety shifts outside this range move some exponent too far.
  const int reach = std::abs(a.i) + std::abs(a.j) + std::abs(b.i) + std::abs(b.j) + 2;
  for (int s = -reach; s <= reach; ++s) {
    if (strictly_between({b.i + s, b.j + s, s})) return true;
  }
  return false;
}

bool sector_contains(Vertex v) { return v.i >= v.j && v.j >= 0; }

BoundaryClass boundary_class(SectorVertex v) {
  if (v.i() == 0) return BoundaryClass::kStandardVertex;
  if (v.j() == 0) return BoundaryClass::kBoundaryJ0;
  if (v.i() == v.j()) return BoundaryClass::kBoundaryIJ;
  return BoundaryClass::kInterior;
}

std::int64_t hhat_sq(Vertex v) {
  const std::int64_t i = v.i;
  const std::int64_t j = v.j;
  return i * i - i * j + j * j;
}

const std::array<std::array<int, 3>, 6>& weyl_group() {
  static const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

Vertex weyl_apply(const std::array<int, 3>& perm, Vertex v) {
  const std::array<int, 3> t{v.i, v.j, 0};
  const int a = t[static_cast<std::size_t>(perm[0])];
  const int b = t[static_cast<std::size_t>(perm[1])];
  const int c = t[static_cast<std::size_t>(perm[2])];
  return {a - c, b - c};
}

SectorVertex sector_representative(Vertex v) {
  std::array<int, 3> t{v.i, v.j, 0};
  std::sort(t.begin(), t.end(), std::greater<>());
  return {t[0] - t[2], t[1] - t[2]};
}

Cell eta(int n) {
  if (n < 0) throw std::invalid_argument("eta: negative index");
  return Cell::make({Node::lattice({2 * n + 1, n}), Node::lattice({2 * n + 1, n + 1})});
}

SectorVertex z(int n) {
  if (n < 0) throw std::invalid_argument("z: negative index");
  return {2 * n, n};
}

std::optional<int> subdivided_eta_index(Vertex a, Vertex b) {
  if (!adjacent(a, b)) return std::nullopt;
  for (const auto& perm : weyl_group()) {
    Vertex p = weyl_apply(perm, a);
    Vertex q = weyl_apply(perm, b);
    if (q < p) std::swap(p, q);
    // eta(n) = {(2n+1, n), (2n+1, n+1)}
    if (p.i == q.i && p.i % 2 == 1 && p.i > 0 && p.j == (p.i - 1) / 2 && q.j == p.j + 1) return p.j;
  }
  return std::nullopt;
}

std::array<Vertex, 6> neighbours(Vertex v) {
  std::array<Vertex, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = v + kSteps[k];
  return out;
}

std::array<std::array<Vertex, 3>, 6> chambers_around(Vertex v) {
  const auto nb = neighbours(v);
  std::array<std::array<Vertex, 3>, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = {v, nb[k], nb[(k + 1) % 6]};
  return out;
}

std::array<Vertex, 2> opposite_vertices(Vertex a, Vertex b) {
  if (!adjacent(a, b)) throw std::invalid_argument("opposite_vertices: not an edge");
  std::array<Vertex, 2> out;
  std::size_t found = 0;
  for (Vertex c : neighbours(a)) {
    if (c != b && adjacent(c, b)) out[found++] = c;
  }
  if (found != 2) throw std::logic_error("opposite_vertices: edge is not in exactly two chambers");
  return out;
}

std::pair<Cell, Cell> chambers_above_below_eta(int n) {
  const Cell e = eta(n);
  const Vertex a = e.nodes[0].lo;
  const Vertex b = e.nodes[1].lo;
  auto [c, d] = opposite_vertices(a, b);
  if (hhat_sq(c) < hhat_sq(d)) std::swap(c, d);
  return {Cell::make({Node::lattice(a), Node::lattice(b), Node::lattice(c)}),
          Cell::make({Node::lattice(a), Node::lattice(b), Node::lattice(d)})};
}

Cell standard_chamber() {
  return Cell::make({Node::lattice({0, 0}), Node::lattice({1, 0}), Node::lattice({1, 1})});
}

bool Window::contains(Vertex v) const { return sector_representative(v).i() <= i_max; }

bool Window::contains(const Node& n) const {
  if (n.is_lattice()) return contains(n.lo);
  if (!subdivided_eta_index(n.lo, n.hi)) return false;
  const auto opp = opposite_vertices(n.lo, n.hi);
  return contains(n.lo) && contains(n.hi) && contains(opp[0]) && contains(opp[1]);
}

bool Window::contains(const Cell& c) const {
  return std::all_of(c.nodes.begin(), c.nodes.end(), [this](const Node& n) { return contains(n); });
}

std::vector<Cell> star(const Node& center, const Window& w) {
  std::set<Cell> cells;
  if (center.is_lattice()) {
    for (const auto& ch : chambers_around(center.lo)) {
      for (const auto& tri : pieces_of(ch)) add_faces_containing(tri, center, cells);
    }
  } else {
    if (!subdivided_eta_index(center.lo, center.hi)) {
      throw std::invalid_argument("star: " + center.to_string() + " is not an inserted barycenter");
    }
    const Node lo = Node::lattice(center.lo);
    const Node hi = Node::lattice(center.hi);
    for (Vertex c : opposite_vertices(center.lo, center.hi)) {
      add_faces_containing({lo, center, Node::lattice(c)}, center, cells);
      add_faces_containing({center, hi, Node::lattice(c)}, center, cells);
    }
  }
  for (const Cell& c : cells) {
    for (const Node& n : c.nodes) {
      if (!w.contains(n)) {
        throw WindowOverflow("star of " + center.to_string() + " leaves the window i <= " + std::to_string(w.i_max));
      }
    }
  }
  return {cells.begin(), cells.end()};
}

std::vector<Cell> link(const Node& center, const Window& w) {
  std::set<Cell> out;
  for (const Cell& c : star(center, w)) {
    if (c.dim() == 0) continue;
    std::vector<Node> rest;
    for (const Node& n : c.nodes) {
      if (n != center) rest.push_back(n);
    }
    out.insert(Cell::make(std::move(rest)));
  }
  return {out.begin(), out.end()};
}

bool in_sector(const Node& n) { return sector_contains(n.lo) && sector_contains(n.hi); }

bool in_sector(const Cell& c) {
  return std::all_of(c.nodes.begin(), c.nodes.end(), [](const Node& n) { return in_sector(n); });
}

std::vector<Cell> sector_chambers(const Window& w) {
  std::vector<Cell> out;
  for (int i = 0; i < w.i_max; ++i) {
    for (int j = 0; j <= i; ++j) {
      out.push_back(Cell::make({Node::lattice({i, j}), Node::lattice({i + 1, j}), Node::lattice({i + 1, j + 1})}));
      if (j + 1 <= i) {
        out.push_back(Cell::make({Node::lattice({i, j}), Node::lattice({i, j + 1}), Node::lattice({i + 1, j + 1})}));
      }
    }
  }
  return out;
}

std::vector<Cell> interior_sector_edges(const Window& w) {
  std::set<Cell> edges;
  for (const Cell& ch : sector_chambers(w)) {
    for (int a = 0; a < 3; ++a) {
      edges.insert(Cell::make({ch.nodes[static_cast<std::size_t>(a)], ch.nodes[static_cast<std::size_t>((a + 1) % 3)]}));
    }
  }
  std::vector<Cell> out;
  for (const Cell& e : edges) {
    const auto opp = opposite_vertices(e.nodes[0].lo, e.nodes[1].lo);
    const bool complete = std::all_of(opp.begin(), opp.end(), [&w](Vertex c) { return !sector_contains(c) || w.contains(c); });
    if (complete) out.push_back(e);
  }
  return out;
}

std::vector<Cell> modified_sector_cells(const Window& w) {
  std::set<Cell> cells;
  for (const Cell& ch : sector_chambers(w)) {
    for (const auto& tri : pieces_of({ch.nodes[0].lo, ch.nodes[1].lo, ch.nodes[2].lo})) add_all_faces(tri, cells);
  }
  std::vector<Cell> out;
  for (const Cell& c : cells) {
    if (w.contains(c)) out.push_back(c);
  }
  return out;
}

}  // namespace sl3
