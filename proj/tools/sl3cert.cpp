// sl3cert: exact checks on the standard apartment of SL3(Q((1/t))) and the
// cocycles phi_n. Exit status 0 iff every asserted invariant holds, 1 if one
// fails, 2 on bad arguments.

#include "sl3/cocycle.hpp"
#include "sl3/kernels.hpp"
#include "sl3/links.hpp"
#include "sl3/random.hpp"
#include "sl3/render.hpp"
#include "sl3/report.hpp"
#include "sl3/stabilizer.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

using nlohmann::json;
using namespace sl3;

namespace {

void print_lemmas(const VerificationReport& r) {
  for (const auto& l : r.lemmas) {
    std::cout << std::left << std::setw(8) << to_string(l.status) << std::setw(18) << l.id << l.title << "  ["
              << l.checks << " checks, " << std::fixed << std::setprecision(1) << l.elapsed_ms << " ms]\n";
    if (!l.detail.empty()) std::cout << "        " << l.detail << "\n";
  }
}

void print_matrix(const PairingMatrix& pm) {
  std::cout << "phi_m(sigma_n), rows m, columns n:\n";
  for (const auto& row : pm.entries) {
    for (const Rat& v : row) std::cout << std::right << std::setw(4) << rat_to_string(v);
    std::cout << "\n";
  }
  std::cout << "rank " << pm.rank() << "\n";
}

int finish(const VerificationReport& r, bool as_json) {
  if (as_json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    print_lemmas(r);
    for (const auto& f : r.flags) std::cout << "flag: " << f << "\n";
    std::cout << (r.overall_pass() ? "PASS" : "FAIL") << "\n";
  }
  return r.overall_pass() ? 0 : 1;
}

LemmaResult single(const std::string& id, const std::string& title, long checks, bool ok, const std::string& detail) {
  LemmaResult l;
  l.id = id;
  l.title = title;
  l.checks = checks;
  l.status = ok ? LemmaStatus::kPass : LemmaStatus::kFail;
  l.detail = detail;
  return l;
}

json cells_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) {
    json nodes = json::array();
    for (const Node& n : c.nodes) nodes.push_back(n.to_string());
    out.push_back(nodes);
  }
  return out;
}

int run_stab(int i, int j, const VerifyOptions& o, bool as_json) {
  const SectorVertex v(i, j);
  const StabilizerProfile p = vertex_profile(v);
  auto rng = gen::engine(o.seed, (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j));
  long mismatches = 0;
  for (int k = 0; k < o.samples; ++k) {
    const Mat3 g = (k % 2) ? sample_violator(p, rng) : sample_member(p, rng);
    if (membership(g, p) != oracle_stabilizes(g, v)) ++mismatches;
  }
  VerificationReport r;
  r.parameters = o;
  r.lemmas.push_back(single("stabilizer", "Degree profile membership matches conjugation oracle", o.samples,
                            mismatches == 0, std::to_string(mismatches) + " mismatches"));
  json bounds = json::array();
  for (const auto& row : p.bounds) bounds.push_back(row);
  r.data = {{"vertex", Vertex(v).to_string()}, {"bounds", bounds}, {"boundary_class", to_string(boundary_class(v))}};
  if (!as_json) {
    std::cout << "vertex " << Vertex(v).to_string() << " (" << to_string(boundary_class(v)) << ")\n"
              << "deg gamma_kl <= " << p.to_string() << "\n";
  }
  return finish(r, as_json);
}

int run_heights(const VerifyOptions& o, bool as_json) {
  const MorseTable t(Window{o.i_max});
  VerificationReport r;
  r.parameters = o;
  r.lemmas.push_back(check_morse(o, t));
  json values = json::array();
  for (const auto& [n, h] : t.values()) {
    const HeightKey k = height_key(n);
    values.push_back({{"node", n.to_string()}, {"h", h}, {"q", k.qsq}, {"tie", k.tie}});
  }
  r.data = {{"heights", values}};
  if (!as_json) {
    for (const auto& [n, h] : t.values()) std::cout << n.to_string() << "  h=" << h << "\n";
  }
  return finish(r, as_json);
}

int run_flat(const VerifyOptions& o, bool as_json) {
  VerificationReport r;
  r.parameters = o;
  r.lemmas.push_back(check_flat_census(o));
  const auto flats = flat_edges(Window{o.i_max});
  r.data = {{"flat_edges", cells_json(flats)}};
  if (!as_json) {
    for (const Cell& c : flats) std::cout << c.to_string() << "\n";
  }
  return finish(r, as_json);
}

int run_link(int i, int j, const VerifyOptions& o, bool as_json) {
  const SectorVertex v(i, j);
  const MorseTable t(Window{i + 2});
  const Node c = Node::lattice(v);
  const DescendingLink dl = descending_link(c, t);
  VerificationReport r;
  r.parameters = o;
  r.parameters.i_max = i + 2;
  const bool is_base = Vertex(v) == kBaseVertex;
  const bool ok = is_base ? dl.empty() : (dl.is_connected() && dl.edge_count() <= 2);
  r.lemmas.push_back(single("descending-link", "Descending link is connected with at most 2 edges", 1, ok,
                            std::to_string(dl.edge_count()) + " edges"));
  if (!is_base && dl.edge_count() == 0) {
    r.flags.push_back("descending link at " + Vertex(v).to_string() + " is a single vertex");
  }
  json path = json::array();
  if (!is_base) {
    for (const Node& n : descending_path(c, t)) path.push_back({{"node", n.to_string()}, {"h", t.h(n)}});
  }
  r.data = {{"vertex", Vertex(v).to_string()},
            {"h", t.h(c)},
            {"link", cells_json(dl.cells)},
            {"edges", dl.edge_count()},
            {"descending_path", path}};
  if (!as_json) {
    std::cout << "h" << Vertex(v).to_string() << " = " << t.h(c) << "\ndescending link:";
    for (const Cell& cell : dl.cells) std::cout << " " << cell.to_string();
    std::cout << "\n";
  }
  return finish(r, as_json);
}

int run_cycle(int n, const VerifyOptions& o, bool as_json) {
  VerifyOptions local = o;
  local.n_max = n;
  const ChamberChain s = sigma(n);
  const LinkChain hat = project(n, s);
  VerificationReport r;
  r.parameters = local;
  r.lemmas.push_back(check_cycle(local));
  json terms = json::array();
  for (const ChamberTerm& t : s.terms) {
    const auto [a, b] = label(t.word, n);
    terms.push_back({{"coeff", rat_to_string(t.coeff)}, {"word", t.name}, {"label", {rat_to_string(a), rat_to_string(b)}}});
  }
  r.data = {{"n", n}, {"terms", terms}, {"projection", hat.to_string()}, {"phi", rat_to_string(phi(n, hat))}};
  if (!as_json) {
    for (const ChamberTerm& t : s.terms) std::cout << rat_to_string(t.coeff) << " * " << t.name << " . C_n\n";
    std::cout << "projection: " << hat.to_string() << "\nphi_n = " << rat_to_string(phi(n, hat)) << "\n";
  }
  return finish(r, as_json);
}

int run_pairing(const VerifyOptions& o, bool as_json) {
  VerifyOptions local = o;
  local.i_max = std::max(o.i_max, required_i_max(o.n_max));
  const MorseTable t(Window{local.i_max});
  PairingMatrix pm;
  VerificationReport r;
  r.parameters = local;
  r.lemmas.push_back(check_pairing(local, t, pm));
  r.pairing = pm;
  if (!as_json) print_matrix(pm);
  return finish(r, as_json);
}

int run_render(const VerifyOptions& o, const std::string& out, bool as_json) {
  const Window w{o.i_max};
  const std::string svg = render_sector(w);
  write_text_file(out, svg);
  VerificationReport r;
  r.parameters = o;
  r.lemmas.push_back(check_flat_census(o));
  r.data = {{"out", out}, {"bytes", svg.size()}, {"flat_edges", cells_json(flat_edges(w))}};
  if (!as_json) std::cout << "wrote " << out << " (" << svg.size() << " bytes)\n";
  return finish(r, as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the apartment, stabilizers and cocycles of SL3(Z[t])"};
  app.require_subcommand(1);
  VerifyOptions o;
  bool as_json = false;
  std::vector<int> vertex{0, 0};
  int n = 0;
  std::string out = "sector.svg";

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Print the report as JSON");
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Run every check");
  verify->add_option("--imax", o.i_max, "Window size")->capture_default_str();
  verify->add_option("--nmax", o.n_max, "Largest n")->capture_default_str();
  verify->add_option("--samples", o.samples, "Stabilizer samples per vertex")->capture_default_str();
  add_common(verify);

  auto* stab = app.add_subcommand("stab", "Stabilizer profile of a sector vertex");
  stab->add_option("--vertex", vertex, "I J")->expected(2)->required();
  stab->add_option("--samples", o.samples, "Samples")->capture_default_str();
  add_common(stab);

  auto* heights = app.add_subcommand("heights", "Height table of the modified sector");
  heights->add_option("--imax", o.i_max, "Window size")->capture_default_str();
  add_common(heights);

  auto* flat = app.add_subcommand("flat-edges", "Flat edges of the window");
  flat->add_option("--imax", o.i_max, "Window size")->capture_default_str();
  add_common(flat);

  auto* link = app.add_subcommand("link", "Descending link of a sector vertex");
  link->add_option("--vertex", vertex, "I J")->expected(2)->required();
  add_common(link);

  auto* cycle = app.add_subcommand("cycle", "The eight-chamber cycle sigma_n");
  cycle->add_option("--n", n, "n")->required();
  add_common(cycle);

  auto* pairing = app.add_subcommand("pairing", "Matrix of phi_m(sigma_n)");
  pairing->add_option("--nmax", o.n_max, "Largest n")->capture_default_str();
  add_common(pairing);

  auto* render = app.add_subcommand("render", "SVG of the sector with flat edges highlighted");
  render->add_option("--imax", o.i_max, "Window size")->capture_default_str();
  render->add_option("--out", out, "Output file")->required();
  add_common(render);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      const VerificationReport r = verify_all(o);
      if (!as_json && r.pairing) print_matrix(*r.pairing);
      return finish(r, as_json);
    }
    if (*stab) return run_stab(vertex[0], vertex[1], o, as_json);
    if ((*heights || *flat) && o.i_max < 0) throw std::invalid_argument("--imax must be non-negative");
    if (*heights) return run_heights(o, as_json);
    if (*flat) return run_flat(o, as_json);
    if (*link) return run_link(vertex[0], vertex[1], o, as_json);
    if (*cycle) {
      if (n < 0) throw std::invalid_argument("--n must be non-negative");
      return run_cycle(n, o, as_json);
    }
    if (*pairing) {
      if (o.n_max < 0) throw std::invalid_argument("--nmax must be non-negative");
      return run_pairing(o, as_json);
    }
    if (*render) return run_render(o, out, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
