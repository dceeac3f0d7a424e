#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl3 {

/// Vertex of the standard apartment: the homothety class of the lattice
/// t^i e1 + t^j e2 + e3, i.e. the exponent triple (i, j, 0).
struct Vertex {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  std::string to_string() const;
};

/// Vertex of the standard sector, i >= j >= 0.
class SectorVertex {
 public:
  /// Throws std::invalid_argument outside the sector.
  SectorVertex(int i, int j);
  explicit SectorVertex(Vertex v) : SectorVertex(v.i, v.j) {}

  int i() const { return v_.i; }
  int j() const { return v_.j; }
  operator Vertex() const { return v_; }  // NOLINT(google-explicit-constructor)

  friend auto operator<=>(const SectorVertex&, const SectorVertex&) = default;

 private:
  Vertex v_;
};

inline const Vertex kBaseVertex{0, 0};

/// Point of the modified apartment: either a lattice vertex (lo == hi) or the
/// inserted barycenter of the flat edge {lo, hi}.
struct Node {
  Vertex lo;
  Vertex hi;

  static Node lattice(Vertex v) { return {v, v}; }
  static Node barycenter(Vertex a, Vertex b) { return a < b ? Node{a, b} : Node{b, a}; }

  bool is_lattice() const { return lo == hi; }
  friend auto operator<=>(const Node&, const Node&) = default;
  std::string to_string() const;
};

enum class CellKind : std::uint8_t { kVertex, kEdge, kChamber, kSubdividedVertex, kChamberPiece };

/// Cell of the modified apartment. Nodes are stored sorted.
struct Cell {
  CellKind kind = CellKind::kVertex;
  std::vector<Node> nodes;

  static Cell make(std::vector<Node> nodes);
  int dim() const { return static_cast<int>(nodes.size()) - 1; }
  bool contains(const Node& n) const;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend bool operator<(const Cell& a, const Cell& b) { return a.nodes < b.nodes; }
  std::string to_string() const;
};

enum class BoundaryClass : std::uint8_t { kStandardVertex, kInterior, kBoundaryJ0, kBoundaryIJ };

std::string to_string(BoundaryClass c);

/// Adjacent iff the difference is (+-1, 0), (0, +-1) or +-(1, 1).
bool adjacent(Vertex a, Vertex b);

/// Adjacency from the lattice model: for some representative of b,
/// t^-1 L_b < L_a < L_b strictly, compared exponent by exponent
/// (t^a Q[[1/t]] is contained in t^b Q[[1/t]] iff a <= b).
bool lattice_inclusion_adjacent(Vertex a, Vertex b);

bool sector_contains(Vertex v);
BoundaryClass boundary_class(SectorVertex v);

/// i^2 - ij + j^2: two thirds of the squared Euclidean distance to the base
/// vertex. Invariant under the finite Weyl group.
std::int64_t hhat_sq(Vertex v);

/// The six Weyl group elements fixing the base vertex act by permuting the
/// exponent triple (i, j, 0) and renormalizing the last exponent to 0.
Vertex weyl_apply(const std::array<int, 3>& perm, Vertex v);
const std::array<std::array<int, 3>, 6>& weyl_group();

/// Weyl image of v inside the standard sector.
SectorVertex sector_representative(Vertex v);

/// The flat edge {(2n+1, n), (2n+1, n+1)}.
Cell eta(int n);
/// The vertex (2n, n).
SectorVertex z(int n);

/// If {a, b} is a Weyl image of eta(n), returns n.
std::optional<int> subdivided_eta_index(Vertex a, Vertex b);

/// The six neighbours of v in cyclic order.
std::array<Vertex, 6> neighbours(Vertex v);

/// The six chambers around v, each as {v, b, c} with b, c consecutive neighbours.
std::array<std::array<Vertex, 3>, 6> chambers_around(Vertex v);

/// Third vertices of the two chambers containing the edge {a, b}.
std::array<Vertex, 2> opposite_vertices(Vertex a, Vertex b);

/// The two sector chambers containing eta(n): first the one whose third vertex
/// has the larger height, then the lower one.
std::pair<Cell, Cell> chambers_above_below_eta(int n);

/// The standard chamber {(0,0), (1,0), (1,1)}.
Cell standard_chamber();

class WindowOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Finite piece of the modified apartment: lattice vertices whose sector
/// representative has i <= i_max, and barycenters y whose whole star fits.
struct Window {
  int i_max = 21;

  bool contains(Vertex v) const;
  bool contains(const Node& n) const;
  bool contains(const Cell& c) const;
};

/// Cells of the modified apartment containing the node (including the node).
/// Throws WindowOverflow if any of them leaves the window.
std::vector<Cell> star(const Node& center, const Window& w);
/// Faces of the star not containing the centre.
std::vector<Cell> link(const Node& center, const Window& w);

bool in_sector(const Node& n);
bool in_sector(const Cell& c);

/// Unsubdivided sector chambers with every vertex in the window.
std::vector<Cell> sector_chambers(const Window& w);

/// Unsubdivided sector edges all of whose sector chambers lie in the window.
std::vector<Cell> interior_sector_edges(const Window& w);

/// All cells of the modified sector with every node in the window.
std::vector<Cell> modified_sector_cells(const Window& w);

}  // namespace sl3
