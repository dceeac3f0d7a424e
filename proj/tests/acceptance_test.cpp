// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include "sl3/cocycle.hpp"
#include "sl3/kernels.hpp"
#include "sl3/links.hpp"
#include "sl3/random.hpp"
#include "sl3/render.hpp"
#include "sl3/report.hpp"
#include "sl3/stabilizer.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

using namespace sl3;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << what << " :: " << detail << std::endl;
  if (!ok) ++failures;
}

void run(int id, const std::string& what, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  report(id, what, ok, detail.str());
}

Node y_node(int n) {
  const Cell e = eta(n);
  return Node::barycenter(e.nodes[0].lo, e.nodes[1].lo);
}

// Tag balance and quoting; enough to reject truncated or malformed output.
bool well_formed_xml(const std::string& s) {
  const std::regex tag(R"(<(/?)([A-Za-z][\w:-]*)((?:\s+[\w:-]+="[^"<]*")*)\s*(/?)>)");
  std::vector<std::string> stack;
  std::size_t pos = s.find("?>");
  if (s.rfind("<?xml", 0) != 0 || pos == std::string::npos) return false;
  pos += 2;
  bool root_seen = false;
  while (true) {
    const std::size_t lt = s.find('<', pos);
    if (lt == std::string::npos) break;
    std::smatch m;
    const std::string rest = s.substr(lt);
    if (!std::regex_search(rest, m, tag, std::regex_constants::match_continuous)) return false;
    if (m[1].length()) {
      if (stack.empty() || stack.back() != m[2].str()) return false;
      stack.pop_back();
    } else if (!m[4].length()) {
      if (stack.empty() && root_seen) return false;
      root_seen = true;
      stack.push_back(m[2].str());
    }
    pos = lt + static_cast<std::size_t>(m.length(0));
  }
  return root_seen && stack.empty();
}

}  // namespace

int main() {
  const MorseTable table21(Window{21});

  run(1, "stabilizer profile membership equals conjugation oracle for i <= 10", [](auto& d) {
    const auto t0 = Clock::now();
    const auto s = stabilizer_sweep(10, 200, 0);
    const double secs = seconds_since(t0);
    d << s.vertices << " vertices, " << s.samples << " samples (" << s.violators_rejected
      << " planted violations), mismatches " << s.mismatches << ", " << secs << " s";
    return s.vertices == 66 && s.samples == 66 * 200 && s.violators_rejected == 66 * 100 && s.mismatches == 0 &&
           secs < 10.0;
  });

  run(2, "edge_profile(eta_n) = (u <= n, v <= n, w <= 2n+1) for n <= 8", [](auto& d) {
    int bad = 0;
    for (int n = 0; n <= 8; ++n) {
      const auto p = edge_profile(eta(n));
      if (p(0, 1) != n || p(1, 2) != n || p(0, 2) != 2 * n + 1) ++bad;
    }
    d << bad << " of 9 profiles wrong";
    return bad == 0;
  });

  run(3, "flat-edge census at i <= 21 is {eta_n : n <= 9}; h non-constant on 1-cells", [&](auto& d) {
    const auto found = flat_edges(Window{21});
    std::set<Cell> expected;
    for (int n = 0; n <= 9; ++n) expected.insert(eta(n));
    const bool census = std::set<Cell>(found.begin(), found.end()) == expected;
    const bool morse = is_morse(table21);
    d << found.size() << " flat edges, census " << (census ? "ok" : "wrong") << ", morse " << (morse ? "ok" : "no");
    return census && morse;
  });

  run(4, "h(boundary eta_n) < h(y_n) < h(boundary eta_n+1) for n <= 9", [&](auto& d) {
    int bad = 0;
    for (int n = 0; n <= 9; ++n) {
      const int hy = table21.h(y_node(n));
      for (const Node& v : eta(n).nodes) bad += table21.h(v) < hy ? 0 : 1;
      for (const Node& v : eta(n + 1).nodes) bad += hy < table21.h(v) ? 0 : 1;
    }
    d << bad << " violated inequalities";
    return bad == 0;
  });

  run(5, "descending links for i <= 12: nonempty, connected, <= 2 edges; y_n has 2; paths reach C0", [&](auto& d) {
    const auto s = descending_link_sweep(table21, 12);
    int y_bad = 0;
    for (int n = 0; n <= 9; ++n) {
      const auto dl = descending_link(y_node(n), table21);
      if (dl.edge_count() != 2 || !dl.is_connected()) ++y_bad;
    }
    d << s.vertices << " vertices, " << s.failures << " failures, max edges " << s.max_edges << ", " << y_bad
      << " bad y_n, " << s.path_steps << " path steps, " << s.zero_edge_vertices << " single-vertex links";
    if (!s.notes.empty()) d << "; first: " << s.notes.front();
    return s.vertices == 90 && s.failures == 0 && s.max_edges <= 2 && y_bad == 0;
  });

  run(6, "label is a homomorphism, kills U_n, and 6 rationals give 36 edges", [](auto& d) {
    auto rng = gen::engine(0, 600);
    int bad_hom = 0, bad_kill = 0;
    for (int k = 0; k < 1000; ++k) {
      const int n = k % 9;
      const Unipotent a = gen::unipotent(rng), b = gen::unipotent(rng);
      const auto la = label(a, n), lb = label(b, n), lab = label(a * b, n);
      if (lab.first != la.first + lb.first || lab.second != la.second + lb.second) ++bad_hom;
    }
    for (int k = 0; k < 100; ++k) {
      const int n = k % 9;
      if (label(gen::congruence_element(rng, n), n) != std::pair<Rat, Rat>{0, 0}) ++bad_kill;
    }
    const std::vector<Rat> sample{0, 1, -1, make_rat(1, 2), 2, -3};
    const auto edges = quotient_descending_link(4, sample);
    d << bad_hom << "/1000 non-additive, " << bad_kill << "/100 not killed, " << edges.size() << " edges";
    return bad_hom == 0 && bad_kill == 0 && edges.size() == 36;
  });

  run(7, "phi_n(project sigma_n) = -2 and boundary 0; 4-loop identity; shift invariance", [](auto& d) {
    int bad_sigma = 0, bad_loop = 0, bad_shift = 0;
    for (int n = 0; n <= 8; ++n) {
      const LinkChain hat = project(n, sigma(n));
      if (phi(n, hat) != -2 || !boundary(hat).empty()) ++bad_sigma;
    }
    auto rng = gen::engine(0, 700);
    for (int k = 0; k < 500; ++k) {
      const Rat q1 = gen::rat(rng), q2 = gen::rat(rng), r1 = gen::rat(rng), r2 = gen::rat(rng);
      if (phi(k % 9, four_loop(q1, q2, r1, r2)) != (q1 - q2) * (r1 - r2)) ++bad_loop;
    }
    for (int k = 0; k < 200; ++k) {
      LinkChain c;
      for (int p = 0; p <= k % 3; ++p) {
        c = c + gen::rat(rng) * four_loop(gen::rat(rng), gen::rat(rng), gen::rat(rng), gen::rat(rng));
      }
      if (!boundary(c).empty() || phi(0, shift_chain(c, gen::rat(rng), gen::rat(rng))) != phi(0, c)) ++bad_shift;
    }
    d << bad_sigma << "/9 sigma, " << bad_loop << "/500 loops, " << bad_shift << "/200 shifts wrong";
    return bad_sigma == 0 && bad_loop == 0 && bad_shift == 0;
  });

  run(8, "[u1^-1, u2] = [u1, u2^-1] in U and in U_n\\U for n <= 8", [](auto& d) {
    int bad = 0;
    for (int n = 0; n <= 8; ++n) {
      const Unipotent u1 = Unipotent::e12(Poly::monomial(1, n)), u2 = Unipotent::e23(Poly::monomial(1, n));
      const Unipotent a = uni_commutator(u1.inverse(), u2), b = uni_commutator(u1, u2.inverse());
      if (a != b || !(uni_mod(a, n) == uni_mod(b, n))) ++bad;
    }
    d << bad << " of 9 wrong";
    return bad == 0;
  });

  run(9, "9x9 pairing: diagonal -2, zero for m > n, rank 9; full verify < 60 s", [](auto& d) {
    const auto t0 = Clock::now();
    const VerificationReport r = verify_all(VerifyOptions{});
    const double secs = seconds_since(t0);
    const auto& pm = *r.pairing;
    d << "rank " << pm.rank() << ", diagonal " << (pm.diagonal_ok() ? "ok" : "wrong") << ", lower "
      << (pm.vanishes_below_diagonal() ? "zero" : "nonzero") << ", verify " << (r.overall_pass() ? "pass" : "fail")
      << " in " << secs << " s";
    return pm.entries.size() == 9 && pm.diagonal_ok() && pm.vanishes_below_diagonal() && pm.rank() == 9 &&
           r.overall_pass() && secs < 60.0;
  });

  run(10, "render --imax 9 emits valid SVG whose highlighted edges equal the census", [](auto& d) {
    const std::string svg = render_sector(Window{9});
    std::set<std::string> shown, census;
    const std::regex re("class=\"flat\"[^>]*data-edge=\"([^\"]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
      shown.insert((*it)[1]);
    }
    for (const Cell& c : flat_edges(Window{9})) census.insert(c.nodes[0].lo.to_string() + "-" + c.nodes[1].lo.to_string());
    const bool xml = well_formed_xml(svg);
    d << svg.size() << " bytes, well-formed " << (xml ? "yes" : "no") << ", " << shown.size() << " highlighted, "
      << census.size() << " in census";
    return xml && shown == census && census.size() == 4;
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures;
}
