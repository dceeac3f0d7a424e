#include "sl3/render.hpp"

#include "sl3/morse.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl3 {

namespace {

// Lattice point (i, j) sits at (i - j/2, j sqrt3/2). Plot coordinates are
// the integers (2(2i - j), 2j); the group transform restores the shape.
constexpr const char* kScale = "scale(10 -17.320508)";
constexpr const char* kUnscale = "scale(0.1 -0.057735)";

struct Pt {
  int x;
  int y;
};

Pt plot(Vertex v) { return {2 * (2 * v.i - v.j), 2 * v.j}; }

Pt plot(const Node& n) {
  const Pt a = plot(n.lo), b = plot(n.hi);
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

void line(std::ostringstream& os, Pt a, Pt b, const std::string& cls, const std::string& extra = "") {
  os << "    <line class=\"" << cls << "\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\""
     << b.y << '"' << extra << "/>\n";
}

}  // namespace

std::string render_sector(const Window& w) {
  std::ostringstream os;
  const int span = w.i_max < 0 ? 0 : w.i_max;
  const int width = 40 * span + 60;
  const int height = 35 * span + 60;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-30 " << -(35 * span + 30) << ' ' << width << ' '
     << height << "\" width=\"" << width << "\" height=\"" << height << "\">\n"
     << "  <style>line{stroke:#999;stroke-width:0.08}line.flat{stroke:#d62728;stroke-width:0.3}"
        "line.piece{stroke:#bbb;stroke-dasharray:0.3 0.3}circle{fill:#333}circle.y{fill:#d62728}"
        "text{font:8px sans-serif}</style>\n";
  if (w.i_max < 0) {
    os << "</svg>\n";
    return os.str();
  }
  const MorseTable table(w);
  const auto flats = flat_edges(w);
  const std::set<Cell> flat_set(flats.begin(), flats.end());

  os << "  <g transform=\"" << kScale << "\">\n";
  std::set<std::pair<Vertex, Vertex>> drawn;
  for (const Cell& ch : sector_chambers(w)) {
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        const Vertex p = ch.nodes[a].lo, q = ch.nodes[b].lo;
        if (!drawn.insert({p, q}).second) continue;
        const Cell e = Cell::make({Node::lattice(p), Node::lattice(q)});
        if (flat_set.count(e)) continue;
        line(os, plot(p), plot(q), "edge");
      }
    }
  }
  for (const Cell& e : flats) {
    const Vertex p = e.nodes[0].lo, q = e.nodes[1].lo;
    line(os, plot(p), plot(q), "flat", " data-edge=\"" + p.to_string() + "-" + q.to_string() + "\"");
  }
  // Extra 1-cells joining inserted barycenters to the opposite vertices.
  for (const Cell& c : modified_sector_cells(w)) {
    if (c.dim() != 1) continue;
    if (c.nodes[0].is_lattice() && c.nodes[1].is_lattice()) continue;
    const Node& y = c.nodes[0].is_lattice() ? c.nodes[1] : c.nodes[0];
    const Node& other = c.nodes[0].is_lattice() ? c.nodes[0] : c.nodes[1];
    if (other == Node::lattice(y.lo) || other == Node::lattice(y.hi)) continue;
    line(os, plot(y), plot(other), "piece");
  }
  for (const auto& [node, h] : table.values()) {
    const Pt p = plot(node);
    os << "    <g transform=\"translate(" << p.x << ' ' << p.y << ") " << kUnscale << "\">";
    if (node.is_lattice()) {
      os << "<circle r=\"2\"/><text x=\"3\" y=\"-3\">" << h << "</text>";
    } else {
      os << "<circle class=\"y\" r=\"2.5\" data-node=\"" << node.to_string() << "\"/>";
    }
    os << "</g>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace sl3
