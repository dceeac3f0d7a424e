#include "sl3/kernels.hpp"

#include "sl3/links.hpp"
#include "sl3/random.hpp"
#include "sl3/stabilizer.hpp"

#include <algorithm>
#include <set>

namespace sl3 {

namespace {

std::vector<SectorVertex> sector_vertices(int i_max, bool skip_base) {
  std::vector<SectorVertex> out;
  for (int i = 0; i <= i_max; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (skip_base && i == 0) continue;
      out.emplace_back(i, j);
    }
  }
  return out;
}

StabilizerSweepStats sweep_vertex(SectorVertex v, int samples, std::uint64_t seed) {
  const auto stream = (static_cast<std::uint64_t>(v.i()) << 32) | static_cast<std::uint32_t>(v.j());
  auto rng = gen::engine(seed, stream);
  const StabilizerProfile p = vertex_profile(v);
  StabilizerSweepStats s;
  s.vertices = 1;
  for (int k = 0; k < samples; ++k) {
    const bool planted = (k % 2 == 1);
    const Mat3 g = planted ? sample_violator(p, rng) : sample_member(p, rng);
    const bool by_profile = membership(g, p);
    const bool by_oracle = oracle_stabilizes(g, v);
    ++s.samples;
    if (by_profile != by_oracle) ++s.mismatches;
    if (!planted && by_profile) ++s.members_accepted;
    if (planted && !by_profile) ++s.violators_rejected;
  }
  return s;
}

void merge(StabilizerSweepStats& into, const StabilizerSweepStats& s) {
  into.vertices += s.vertices;
  into.samples += s.samples;
  into.mismatches += s.mismatches;
  into.members_accepted += s.members_accepted;
  into.violators_rejected += s.violators_rejected;
}

// Chamber of the unsubdivided apartment underlying a cell of the modified one.
std::vector<Vertex> underlying_vertices(const Cell& c) {
  std::set<Vertex> vs;
  for (const Node& n : c.nodes) {
    vs.insert(n.lo);
    vs.insert(n.hi);
  }
  return {vs.begin(), vs.end()};
}

struct NodeCheck {
  bool ok = true;
  bool barycenter = false;
  bool zero_edges = false;
  int edges = 0;
  int chambers = 0;
  long steps = 0;
  std::string note;
};

NodeCheck check_node(const Node& v, const MorseTable& table) {
  NodeCheck r;
  r.barycenter = !v.is_lattice();
  const DescendingLink dl = descending_link(v, table);
  r.edges = dl.edge_count();
  r.zero_edges = dl.edge_count() == 0;
  std::set<std::vector<Vertex>> chambers;
  for (const Cell& c : descending_star(v, table)) {
    if (c.dim() == 2) chambers.insert(underlying_vertices(c));
  }
  r.chambers = static_cast<int>(chambers.size());
  const auto st = star(v, table.window());
  const bool meets_barycenter =
      std::any_of(st.begin(), st.end(), [](const Cell& c) { return c.dim() == 0 && !c.nodes[0].is_lattice(); }) ||
      std::any_of(st.begin(), st.end(), [](const Cell& c) {
        return std::any_of(c.nodes.begin(), c.nodes.end(), [](const Node& n) { return !n.is_lattice(); });
      });

  if (!dl.is_connected()) r.note = "descending link empty or disconnected";
  else if (r.edges > 2) r.note = "descending link has more than 2 edges";
  else if (r.chambers > 2) r.note = "more than 2 descending chambers";
  else if (meets_barycenter && !r.barycenter && r.chambers > 1) r.note = "star meets a barycenter but 2 descending chambers";
  else if (r.barycenter && r.edges != 2) r.note = "barycenter descending link does not have exactly 2 edges";

  if (r.note.empty() && !r.barycenter) {
    try {
      const auto path = descending_path(v, table);
      int prev = table.h(v);
      for (const Node& n : path) {
        if (table.h(n) >= prev) {
          r.note = "descending path not strictly decreasing";
          break;
        }
        prev = table.h(n);
      }
      if (r.note.empty() && static_cast<int>(path.size()) > table.h(v)) r.note = "descending path longer than h(v)";
      if (r.note.empty() && !path.empty() && !standard_chamber().contains(path.back())) {
        r.note = "descending path does not end in the standard chamber";
      }
      r.steps = static_cast<long>(path.size());
    } catch (const std::logic_error& e) {
      r.note = e.what();
    }
  }
  r.ok = r.note.empty();
  if (!r.ok) r.note = v.to_string() + ": " + r.note;
  return r;
}

std::vector<Node> link_sweep_nodes(const MorseTable& table, int i_max) {
  std::vector<Node> nodes;
  for (SectorVertex v : sector_vertices(i_max, true)) nodes.push_back(Node::lattice(v));
  for (int n = 0; 2 * n + 1 <= i_max; ++n) {
    const Cell e = eta(n);
    const Node y = Node::barycenter(e.nodes[0].lo, e.nodes[1].lo);
    if (table.window().contains(y)) nodes.push_back(y);
  }
  return nodes;
}

void merge(LinkSweepStats& into, const NodeCheck& c) {
  if (c.barycenter) ++into.barycenters;
  else ++into.vertices;
  if (!c.ok) {
    ++into.failures;
    into.notes.push_back(c.note);
  }
  if (c.zero_edges) ++into.zero_edge_vertices;
  into.max_edges = std::max(into.max_edges, c.edges);
  into.max_chambers = std::max(into.max_chambers, c.chambers);
  into.path_steps += c.steps;
}

}  // namespace

StabilizerSweepStats stabilizer_sweep(int i_max, int samples_per_vertex, std::uint64_t seed) {
  const auto verts = sector_vertices(i_max, false);
  std::vector<StabilizerSweepStats> per(verts.size());
  const long count = static_cast<long>(verts.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    per[static_cast<std::size_t>(k)] = sweep_vertex(verts[static_cast<std::size_t>(k)], samples_per_vertex, seed);
  }
  StabilizerSweepStats total;
  for (const auto& s : per) merge(total, s);
  return total;
}

StabilizerSweepStats stabilizer_sweep_serial(int i_max, int samples_per_vertex, std::uint64_t seed) {
  StabilizerSweepStats total;
  for (SectorVertex v : sector_vertices(i_max, false)) merge(total, sweep_vertex(v, samples_per_vertex, seed));
  return total;
}

LinkSweepStats descending_link_sweep(const MorseTable& table, int i_max) {
  const auto nodes = link_sweep_nodes(table, i_max);
  std::vector<NodeCheck> per(nodes.size());
  const long count = static_cast<long>(nodes.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    per[static_cast<std::size_t>(k)] = check_node(nodes[static_cast<std::size_t>(k)], table);
  }
  LinkSweepStats total;
  for (const auto& c : per) merge(total, c);
  return total;
}

LinkSweepStats descending_link_sweep_serial(const MorseTable& table, int i_max) {
  LinkSweepStats total;
  for (const Node& v : link_sweep_nodes(table, i_max)) merge(total, check_node(v, table));
  return total;
}

namespace {

PairingMatrix empty_matrix(int n_max) {
  if (n_max < 0) throw std::invalid_argument("pairing_matrix: negative n_max");
  PairingMatrix pm;
  pm.n_max = n_max;
  const auto dim = static_cast<std::size_t>(n_max) + 1;
  pm.entries.assign(dim, std::vector<Rat>(dim));
  pm.certificates.assign(dim, std::vector<std::string>(dim));
  return pm;
}

void check_window(int n_max, const MorseTable& table) {
  if (table.window().i_max < required_i_max(n_max)) {
    throw std::invalid_argument("pairing_matrix: window i <= " + std::to_string(table.window().i_max) +
                                " is too small for n_max = " + std::to_string(n_max) + " (need i_max >= " +
                                std::to_string(required_i_max(n_max)) + ")");
  }
}

}  // namespace

PairingMatrix pairing_matrix(int n_max, const MorseTable& table) {
  PairingMatrix pm = empty_matrix(n_max);
  check_window(n_max, table);
  const int dim = n_max + 1;
  std::vector<PairingEntry> flat(static_cast<std::size_t>(dim * dim));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < dim * dim; ++k) flat[static_cast<std::size_t>(k)] = local_pairing(k / dim, k % dim, table);
  for (int k = 0; k < dim * dim; ++k) {
    auto& e = flat[static_cast<std::size_t>(k)];
    const auto m = static_cast<std::size_t>(k / dim);
    const auto n = static_cast<std::size_t>(k % dim);
    pm.entries[m][n] = e.value;
    pm.certificates[m][n] = std::move(e.certificate);
    pm.all_certified = pm.all_certified && e.certified;
  }
  return pm;
}

PairingMatrix pairing_matrix_serial(int n_max, const MorseTable& table) {
  PairingMatrix pm = empty_matrix(n_max);
  check_window(n_max, table);
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      PairingEntry e = local_pairing(m, n, table);
      pm.entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = e.value;
      pm.certificates[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = std::move(e.certificate);
      pm.all_certified = pm.all_certified && e.certified;
    }
  }
  return pm;
}

}  // namespace sl3
