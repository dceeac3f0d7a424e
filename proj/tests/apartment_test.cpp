#include "sl3/apartment.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace sl3 {
namespace {

// Independent adjacency oracle: b is adjacent to a iff some homothety shift
// of b's exponent triple exceeds a's by a 0/1 vector other than 000 and 111.
bool oracle_adjacent(Vertex a, Vertex b) {
  const int da[3] = {a.i, a.j, 0}, db[3] = {b.i, b.j, 0};
  for (int s = -40; s <= 40; ++s) {
    int ones = 0;
    bool ok = true;
    for (int k = 0; k < 3; ++k) {
      const int d = db[k] + s - da[k];
      if (d != 0 && d != 1) ok = false;
      ones += d;
    }
    if (ok && ones != 0 && ones != 3) return true;
  }
  return false;
}

TEST(Adjacency, Examples) {
  EXPECT_TRUE(adjacent({0, 0}, {1, 0}));
  EXPECT_FALSE(adjacent({0, 0}, {2, 1}));
  EXPECT_TRUE(adjacent({5, 3}, {4, 2}));
  EXPECT_FALSE(adjacent({2, 2}, {2, 2}));
}

TEST(Adjacency, MatchesLatticeOracles) {
  for (int ai = -4; ai <= 4; ++ai)
    for (int aj = -4; aj <= 4; ++aj)
      for (int bi = -4; bi <= 4; ++bi)
        for (int bj = -4; bj <= 4; ++bj) {
          const Vertex a{ai, aj}, b{bi, bj};
          EXPECT_EQ(adjacent(a, b), oracle_adjacent(a, b)) << a.to_string() << b.to_string();
          EXPECT_EQ(lattice_inclusion_adjacent(a, b), oracle_adjacent(a, b));
        }
}

TEST(Sector, Membership) {
  EXPECT_TRUE(sector_contains({0, 0}));
  EXPECT_FALSE(sector_contains({3, 5}));
  EXPECT_TRUE(sector_contains({5, 5}));
  EXPECT_FALSE(sector_contains({2, -1}));
  EXPECT_THROW(SectorVertex(3, 5), std::invalid_argument);
  EXPECT_NO_THROW(SectorVertex(5, 0));
}

TEST(Sector, BoundaryClass) {
  EXPECT_EQ(boundary_class(SectorVertex(0, 0)), BoundaryClass::kStandardVertex);
  EXPECT_EQ(boundary_class(SectorVertex(3, 1)), BoundaryClass::kInterior);
  EXPECT_EQ(boundary_class(SectorVertex(4, 0)), BoundaryClass::kBoundaryJ0);
  EXPECT_EQ(boundary_class(SectorVertex(4, 4)), BoundaryClass::kBoundaryIJ);
}

TEST(Height, Quadratic) {
  EXPECT_EQ(hhat_sq({0, 0}), 0);
  EXPECT_EQ(hhat_sq({1, 0}), 1);
  for (int n = 0; n < 10; ++n) {
    EXPECT_EQ(hhat_sq({2 * n + 1, n}), 3 * n * n + 3 * n + 1);
    EXPECT_EQ(hhat_sq({2 * n + 1, n + 1}), 3 * n * n + 3 * n + 1);
  }
}

TEST(Weyl, InvarianceAndRepresentatives) {
  ASSERT_EQ(weyl_group().size(), 6U);
  for (int i = -5; i <= 5; ++i) {
    for (int j = -5; j <= 5; ++j) {
      const Vertex v{i, j};
      std::set<Vertex> orbit;
      for (const auto& p : weyl_group()) {
        const Vertex w = weyl_apply(p, v);
        orbit.insert(w);
        EXPECT_EQ(hhat_sq(w), hhat_sq(v));
      }
      // Exactly one orbit element lies in the sector.
      const auto in = std::count_if(orbit.begin(), orbit.end(), [](Vertex w) { return sector_contains(w); });
      EXPECT_EQ(in, 1);
      EXPECT_TRUE(orbit.count(Vertex(sector_representative(v))));
    }
  }
  EXPECT_EQ(Vertex(sector_representative({1, 3})), (Vertex{3, 1}));
  EXPECT_EQ(Vertex(sector_representative({-1, 0})), (Vertex{1, 1}));
  EXPECT_EQ(Vertex(sector_representative({4, 2})), (Vertex{4, 2}));
}

TEST(Eta, Shape) {
  EXPECT_EQ(eta(0), Cell::make({Node::lattice({1, 0}), Node::lattice({1, 1})}));
  EXPECT_EQ(eta(1), Cell::make({Node::lattice({3, 1}), Node::lattice({3, 2})}));
  for (int n = 0; n < 10; ++n) {
    const Cell e = eta(n);
    EXPECT_TRUE(adjacent(e.nodes[0].lo, e.nodes[1].lo));
    EXPECT_EQ(subdivided_eta_index(e.nodes[0].lo, e.nodes[1].lo), n);
  }
  EXPECT_EQ(Vertex(z(0)), kBaseVertex);
  EXPECT_EQ(Vertex(z(3)), (Vertex{6, 3}));
  EXPECT_FALSE(subdivided_eta_index({3, 1}, {4, 1}).has_value());
}

TEST(Eta, ChambersAboveBelow) {
  for (int n = 0; n < 8; ++n) {
    const auto [up, down] = chambers_above_below_eta(n);
    const Cell e = eta(n);
    const auto third = [&](const Cell& c) {
      for (const Node& x : c.nodes) {
        if (!e.contains(x)) return x.lo;
      }
      return Vertex{};
    };
    for (const Node& x : e.nodes) {
      EXPECT_TRUE(up.contains(x));
      EXPECT_TRUE(down.contains(x));
    }
    const auto level = hhat_sq(e.nodes[0].lo);
    EXPECT_GT(hhat_sq(third(up)), level);
    EXPECT_LT(hhat_sq(third(down)), level);
    EXPECT_EQ(third(down), Vertex(z(n)));
    EXPECT_EQ(third(up), Vertex(z(n + 1)));
  }
}

TEST(Neighbours, CyclicAndAdjacent) {
  const Vertex v{4, 2};
  const auto nb = neighbours(v);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_TRUE(adjacent(v, nb[k]));
    EXPECT_TRUE(adjacent(nb[k], nb[(k + 1) % 6]));
  }
  for (const auto& ch : chambers_around(v)) {
    EXPECT_TRUE(adjacent(ch[0], ch[1]) && adjacent(ch[1], ch[2]) && adjacent(ch[0], ch[2]));
  }
  const auto opp = opposite_vertices({4, 2}, {5, 2});
  for (Vertex w : opp) EXPECT_TRUE(adjacent(w, {4, 2}) && adjacent(w, {5, 2}));
  EXPECT_NE(opp[0], opp[1]);
}

TEST(Star, InteriorVertexIsHexagon) {
  const Window w{30};
  const Node v = Node::lattice({10, 3});
  const auto lk = link(v, w);
  std::set<Node> nodes;
  for (const Cell& c : lk) {
    if (c.dim() == 0) nodes.insert(c.nodes[0]);
  }
  EXPECT_EQ(nodes.size(), 6U);
  const auto st = star(v, w);
  EXPECT_EQ(std::count_if(st.begin(), st.end(), [](const Cell& c) { return c.dim() == 2; }), 6);
}

TEST(Star, BaseVertexMeetsSectorInStandardChamber) {
  // The standard chamber contains eta(0), so it appears as two pieces
  // sharing the barycenter y0.
  std::set<Vertex> covered;
  int pieces = 0;
  for (const Cell& c : star(Node::lattice(kBaseVertex), Window{5})) {
    if (c.dim() != 2 || !in_sector(c)) continue;
    ++pieces;
    for (const Node& n : c.nodes) covered.insert({n.lo, n.hi});
  }
  EXPECT_EQ(pieces, 2);
  EXPECT_EQ(covered, (std::set<Vertex>{{0, 0}, {1, 0}, {1, 1}}));
}

TEST(Star, BarycenterLink) {
  for (int n = 0; n < 4; ++n) {
    const Cell e = eta(n);
    const Node y = Node::barycenter(e.nodes[0].lo, e.nodes[1].lo);
    std::set<Node> nodes;
    for (const Cell& c : link(y, Window{2 * n + 4})) {
      if (c.dim() == 0) nodes.insert(c.nodes[0]);
    }
    const std::set<Node> expected{e.nodes[0], e.nodes[1], Node::lattice(z(n)), Node::lattice(z(n + 1))};
    EXPECT_EQ(nodes, expected);
  }
}

TEST(Window, OverflowIsReported) {
  EXPECT_THROW(star(Node::lattice({5, 2}), Window{5}), WindowOverflow);
  EXPECT_NO_THROW(star(Node::lattice({5, 2}), Window{6}));
  const Window w{21};
  EXPECT_TRUE(w.contains(Vertex{21, 10}));
  EXPECT_FALSE(w.contains(Vertex{22, 0}));
  EXPECT_TRUE(w.contains(Vertex{-21, 0}));
}

TEST(Window, Enumerations) {
  const Window w{4};
  // (i_max)^2 chambers in the sector up to i_max.
  EXPECT_EQ(sector_chambers(w).size(), 16U);
  for (const Cell& c : modified_sector_cells(w)) {
    EXPECT_TRUE(in_sector(c));
    EXPECT_TRUE(w.contains(c));
  }
}

}  // namespace
}  // namespace sl3
