#include "sl3/report.hpp"

#include "sl3/cocycle.hpp"
#include "sl3/kernels.hpp"
#include "sl3/links.hpp"
#include "sl3/random.hpp"
#include "sl3/stabilizer.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace sl3 {

using nlohmann::json;

namespace {

// Accumulates checks for one lemma; the detail keeps the first failure.
class Checker {
 public:
  Checker(std::string id, std::string title) { r_.id = std::move(id), r_.title = std::move(title); }

  bool check(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (!ok && r_.status != LemmaStatus::kFail) {
      r_.status = LemmaStatus::kFail;
      r_.detail = what();
    }
    return ok;
  }
  void flag(const std::string& why) {
    if (r_.status == LemmaStatus::kPass) {
      r_.status = LemmaStatus::kFlagged;
      r_.detail = why;
    }
  }
  void note(const std::string& s) {
    if (r_.detail.empty()) r_.detail = s;
  }
  LemmaResult done() {
    r_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  LemmaResult r_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Stream ids so every lemma draws from its own sequence.
enum Stream : std::uint64_t { kPolyStream = 1, kUniStream, kSplitStream, kQuotStream, kCocycleStream };

std::string show(const Unipotent& u) {
  return "(" + u.x.to_string() + ", " + u.y.to_string() + ", " + u.z.to_string() + ")";
}

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::kPass: return "pass";
    case LemmaStatus::kFail: return "fail";
    case LemmaStatus::kFlagged: return "flagged";
  }
  return "fail";
}

LemmaStatus lemma_status_from_string(const std::string& s) {
  if (s == "pass") return LemmaStatus::kPass;
  if (s == "fail") return LemmaStatus::kFail;
  if (s == "flagged") return LemmaStatus::kFlagged;
  throw std::invalid_argument("unknown lemma status: " + s);
}

void validate(const VerifyOptions& o) {
  if (o.i_max < 0 || o.n_max < 0 || o.samples < 0 || o.stab_i_max < 0 || o.link_i_max < 0) {
    throw std::invalid_argument("options must be non-negative");
  }
  if (o.i_max < required_i_max(o.n_max)) {
    throw std::invalid_argument("i_max = " + std::to_string(o.i_max) + " is too small for n_max = " +
                                std::to_string(o.n_max) + "; need i_max >= " + std::to_string(required_i_max(o.n_max)));
  }
}

LemmaResult check_poly_ring(const VerifyOptions& o) {
  Checker c("poly-ring", "Q[t] ring laws, split and truncation");
  auto rng = gen::engine(o.seed, kPolyStream);
  for (int k = 0; k < 300; ++k) {
    const Poly a = gen::poly(rng), b = gen::poly(rng), d = gen::poly(rng);
    c.check((a * b) * d == a * (b * d), [&] { return "associativity fails for " + a.to_string(); });
    c.check(a * (b + d) == a * b + a * d, [&] { return "distributivity fails for " + a.to_string(); });
    c.check(a * b == b * a, [&] { return "commutativity fails for " + a.to_string(); });
    c.check(a - a == Poly(), [&] { return "a - a != 0 for " + a.to_string(); });
    const int n = k % 10;
    const auto [hi, lo] = a.split(n);
    c.check(hi + lo == a && lo.degree() <= n && (hi.is_zero() || hi.coeff(n) == 0), [&] {
      return "split(" + std::to_string(n) + ") of " + a.to_string() + " is wrong";
    });
    c.check(a.mod(n) == lo, [&] { return "mod disagrees with split for " + a.to_string(); });
    if (!a.is_zero() && !b.is_zero()) {
      c.check((a * b).degree() == a.degree() + b.degree(), [&] { return "degree not additive"; });
    }
  }
  return c.done();
}

LemmaResult check_unipotent(const VerifyOptions& o) {
  Checker c("unipotent", "Upper unipotent group, degree-n label and commutators");
  auto rng = gen::engine(o.seed, kUniStream);
  for (int k = 0; k < 200; ++k) {
    const Unipotent a = gen::unipotent(rng, 6), b = gen::unipotent(rng, 6);
    c.check((a * b).to_mat() == a.to_mat() * b.to_mat(), [&] { return "closed-form product disagrees with matrices"; });
    c.check(a * a.inverse() == Unipotent::identity(), [&] { return "inverse fails for " + show(a); });
  }
  for (int k = 0; k < 1000; ++k) {
    const int n = k % (o.n_max + 1);
    const Unipotent a = gen::unipotent(rng), b = gen::unipotent(rng);
    const auto la = label(a, n), lb = label(b, n), lab = label(a * b, n);
    c.check(lab.first == la.first + lb.first && lab.second == la.second + lb.second,
            [&] { return "label is not additive at n = " + std::to_string(n); });
  }
  for (int k = 0; k < 100; ++k) {
    const int n = k % (o.n_max + 1);
    const Unipotent u = gen::congruence_element(rng, n);
    c.check(label(u, n) == std::pair<Rat, Rat>{0, 0}, [&] { return "label does not kill " + show(u); });
  }
  for (int n = 0; n <= o.n_max; ++n) {
    const Unipotent u1 = Unipotent::e12(Poly::monomial(1, n));
    const Unipotent u2 = Unipotent::e23(Poly::monomial(1, n));
    const Unipotent lhs = uni_commutator(u1.inverse(), u2), rhs = uni_commutator(u1, u2.inverse());
    c.check(lhs == rhs, [&] { return "[u1^-1,u2] != [u1,u2^-1] in U at n = " + std::to_string(n); });
    c.check(lhs == Unipotent::e13(Poly::monomial(-1, 2 * n)), [&] { return "[u1^-1,u2] != e13(-t^2n)"; });
    c.check(uni_mod(lhs, n) == uni_mod(rhs, n), [&] { return "commutators differ mod U_n"; });
    c.check(uni_mod(lhs, n).is_identity() == (n >= 1),
            [&] { return "commutator triviality mod U_n wrong at n = " + std::to_string(n); });
  }
  return c.done();
}

LemmaResult check_adjacency(const VerifyOptions&) {
  Checker c("adjacency", "Apartment adjacency agrees with lattice inclusion");
  constexpr int r = 7;
  for (int ai = -r; ai <= r; ++ai) {
    for (int aj = -r; aj <= r; ++aj) {
      for (int bi = -r; bi <= r; ++bi) {
        for (int bj = -r; bj <= r; ++bj) {
          const Vertex a{ai, aj}, b{bi, bj};
          c.check(adjacent(a, b) == lattice_inclusion_adjacent(a, b),
                  [&] { return "adjacency mismatch at " + a.to_string() + " " + b.to_string(); });
        }
      }
    }
  }
  return c.done();
}

LemmaResult check_stabilizer_sweep(const VerifyOptions& o) {
  Checker c("stabilizer", "Degree profile membership matches conjugation oracle");
  const auto s = stabilizer_sweep(o.stab_i_max, o.samples, o.seed);
  c.check(s.mismatches == 0, [&] { return std::to_string(s.mismatches) + " mismatches"; });
  c.check(s.members_accepted == s.samples - s.samples / 2 && s.violators_rejected == s.samples / 2,
          [&] { return "sampler produced misclassified members or violators"; });
  c.note(std::to_string(s.vertices) + " vertices, " + std::to_string(s.samples) + " samples, 0 mismatches");
  return c.done();
}

LemmaResult check_eta_profiles(const VerifyOptions& o) {
  Checker c("eta-profile", "Stabilizer of eta_n: deg u <= n, deg v <= n, deg w <= 2n+1");
  for (int n = 0; n <= o.n_max; ++n) {
    const StabilizerProfile p = edge_profile(eta(n));
    c.check(p(0, 1) == n && p(1, 2) == n && p(0, 2) == 2 * n + 1,
            [&] { return "eta_" + std::to_string(n) + " profile " + p.to_string(); });
    c.check(p(1, 0) < 0 && p(2, 1) < 0 && p(2, 0) < 0, [&] { return "eta profile is not upper triangular"; });
    c.check(p(0, 0) == 0 && p(1, 1) == 0 && p(2, 2) == 0, [&] { return "eta profile diagonal not constant"; });
  }
  return c.done();
}

LemmaResult check_flat_census(const VerifyOptions& o) {
  Checker c("flat-census", "Flat edges of the window are exactly the eta_n");
  const Window w{o.i_max};
  const auto found = flat_edges(w);
  std::vector<Cell> expected;
  for (int n = 0; 2 * n + 2 <= o.i_max; ++n) expected.push_back(eta(n));
  const std::set<Cell> a(found.begin(), found.end()), b(expected.begin(), expected.end());
  c.check(a == b, [&] {
    return "census has " + std::to_string(a.size()) + " edges, expected " + std::to_string(b.size());
  });
  for (const Cell& e : found) {
    c.check(hhat_sq(e.nodes[0].lo) == hhat_sq(e.nodes[1].lo), [&] { return e.to_string() + " is not flat"; });
  }
  return c.done();
}

LemmaResult check_morse(const VerifyOptions& o, const MorseTable& t) {
  Checker c("morse", "Height is Morse on the modified sector; barycenters sit between levels");
  c.check(is_morse(t), [] { return "h is constant on some 1-cell"; });
  c.check(has_unique_cell_maxima(t), [] { return "some 2-cell has two maxima"; });
  c.check(t.h(kBaseVertex) == 0, [] { return "h(x0) != 0"; });
  for (int n = 0; 2 * n + 3 <= o.i_max && 2 * n + 2 <= o.i_max; ++n) {
    const Cell e = eta(n), e1 = eta(n + 1);
    const Node y = Node::barycenter(e.nodes[0].lo, e.nodes[1].lo);
    if (!t.window().contains(y)) continue;
    const int hy = t.h(y);
    bool ok = true;
    for (const Node& v : e.nodes) ok = ok && t.h(v) < hy;
    for (const Node& v : e1.nodes) ok = ok && hy < t.h(v);
    c.check(ok, [&] { return "sandwich fails at n = " + std::to_string(n); });
  }
  return c.done();
}

LemmaResult check_descending_links(const VerifyOptions& o, const MorseTable& t) {
  Checker c("descending-links", "Apartment descending links are connected with at most 2 edges");
  const int lim = std::min(o.link_i_max, o.i_max - 1);
  const auto s = descending_link_sweep(t, lim);
  c.check(s.failures == 0, [&] { return s.notes.empty() ? std::string("failure") : s.notes.front(); });
  c.check(s.max_edges <= 2, [&] { return "a link has " + std::to_string(s.max_edges) + " edges"; });
  c.note(std::to_string(s.vertices) + " vertices and " + std::to_string(s.barycenters) + " barycenters up to i = " +
         std::to_string(lim));
  return c.done();
}

LemmaResult check_congruence_split(const VerifyOptions& o) {
  Checker c("congruence-split", "u = inner * outer with inner in U_n and outer fixing z_n");
  auto rng = gen::engine(o.seed, kSplitStream);
  for (int k = 0; k < 200; ++k) {
    const int n = k % (o.n_max + 1);
    const Unipotent u = gen::unipotent(rng);
    const auto [inner, outer] = split_at_congruence(u, n);
    c.check(inner * outer == u, [&] { return "split does not multiply back for " + show(u); });
    const bool in_un = inner.x.mod(n).is_zero() && inner.y.mod(n).is_zero() && inner.z.mod(n).is_zero();
    c.check(in_un, [&] { return "inner factor not in U_n for " + show(u); });
    c.check(outer.x.degree() <= n && outer.y.degree() <= n && outer.z.degree() <= n,
            [&] { return "outer factor has degree > n for " + show(u); });
    c.check(satisfies_bounds(outer.to_mat(), vertex_profile(z(n))),
            [&] { return "outer factor does not fix z_n for " + show(u); });
    c.check(label(outer, n) == label(u, n), [&] { return "outer factor changes the label"; });
  }
  return c.done();
}

LemmaResult check_quotient_link(const VerifyOptions& o) {
  Checker c("quotient-link", "Quotient descending link is the complete bipartite graph on Q x Q");
  auto rng = gen::engine(o.seed, kQuotStream);
  std::set<Rat> distinct;
  while (distinct.size() < 6) distinct.insert(gen::rat(rng));
  const std::vector<Rat> sample(distinct.begin(), distinct.end());
  const int n = std::min(o.n_max, 3);
  const auto edges = quotient_descending_link(n, sample);
  c.check(edges.size() == 36, [&] { return std::to_string(edges.size()) + " edges from 6 rationals"; });
  for (const Rat& a : sample) {
    for (const Rat& b : sample) {
      const Unipotent u = Unipotent::e12(Poly::monomial(a, n)) * Unipotent::e23(Poly::monomial(b, n));
      c.check(edges.count(act(u, n, {0, 0})) == 1, [&] { return "translate of the base edge missing"; });
    }
  }
  for (int k = 0; k < 100; ++k) {
    const Unipotent u = gen::unipotent(rng), v = gen::unipotent(rng);
    const EdgeLabel e{gen::rat(rng), gen::rat(rng)};
    c.check(act(u * v, n, e) == act(u, n, act(v, n, e)), [] { return "action is not compatible with products"; });
  }
  return c.done();
}

LemmaResult check_local_cocycle(const VerifyOptions& o) {
  Checker c("local-cocycle", "phi_n on 4-loops and shift invariance on cycles");
  auto rng = gen::engine(o.seed, kCocycleStream);
  for (int k = 0; k < 500; ++k) {
    const Rat q1 = gen::rat(rng), q2 = gen::rat(rng), r1 = gen::rat(rng), r2 = gen::rat(rng);
    const LinkChain loop = four_loop(q1, q2, r1, r2);
    c.check(boundary(loop).empty(), [] { return "4-loop has nonzero boundary"; });
    c.check(phi(k % (o.n_max + 1), loop) == (q1 - q2) * (r1 - r2), [&] { return "phi(4-loop) != (q1-q2)(r1-r2)"; });
  }
  for (int k = 0; k < 200; ++k) {
    LinkChain cyc;
    const int parts = 1 + k % 4;
    for (int p = 0; p < parts; ++p) {
      cyc = cyc + gen::rat(rng) * four_loop(gen::rat(rng), gen::rat(rng), gen::rat(rng), gen::rat(rng));
    }
    c.check(boundary(cyc).empty(), [] { return "sum of 4-loops is not a cycle"; });
    const Rat a = gen::rat(rng), b = gen::rat(rng);
    c.check(phi(0, shift_chain(cyc, a, b)) == phi(0, cyc), [&] { return "phi not shift invariant on " + cyc.to_string(); });
    const Rat q0 = gen::rat(rng), r0 = gen::rat(rng);
    LinkChain rebuilt;
    for (const SquareTerm& s : square_decomposition(cyc, q0, r0)) {
      rebuilt = rebuilt + s.coeff * four_loop(s.corner.q, q0, s.corner.r, r0);
    }
    c.check(rebuilt == cyc, [&] { return "square decomposition does not rebuild " + cyc.to_string(); });
  }
  return c.done();
}

LemmaResult check_cycle(const VerifyOptions& o) {
  Checker c("cycle", "sigma_n projects to a cycle on which phi_n is -2");
  LinkChain expected;
  expected.add({0, 0}, 2);
  expected.add({-1, 0}, -1);
  expected.add({-1, 1}, 1);
  expected.add({0, 1}, -1);
  expected.add({0, -1}, -1);
  expected.add({1, -1}, 1);
  expected.add({1, 0}, -1);
  for (int n = 0; n <= o.n_max; ++n) {
    const ChamberChain s = sigma(n);
    const LinkChain hat = project(n, s);
    const std::string tag = " at n = " + std::to_string(n);
    c.check(s.terms.size() == 8, [&] { return "sigma has " + std::to_string(s.terms.size()) + " terms" + tag; });
    c.check(hat == expected, [&] { return "projection is " + hat.to_string() + tag; });
    c.check(boundary(hat).empty(), [&] { return "projection is not a cycle" + tag; });
    c.check(phi(n, hat) == -2, [&] { return "phi = " + rat_to_string(phi(n, hat)) + tag; });
    Rat mass = 0;
    for (const auto& [e, k] : hat.terms()) mass += abs_rat(k);
    c.check(mass == 8, [&] { return "projection has mass " + rat_to_string(mass) + tag; });
    std::map<EdgeLabel, int> counts;
    for (const ChamberTerm& t : s.terms) {
      const auto [a, b] = label(t.word, n);
      ++counts[{a, b}];
    }
    c.check(counts.size() == 7 && counts[EdgeLabel{0, 0}] == 2, [&] { return "word labels not as expected" + tag; });
  }
  return c.done();
}

LemmaResult check_pairing(const VerifyOptions& o, const MorseTable& t, PairingMatrix& out) {
  Checker c("pairing", "phi_m(sigma_n) is upper triangular with diagonal -2");
  out = pairing_matrix(o.n_max, t);
  c.check(out.diagonal_ok(), [] { return "a diagonal entry is not -2"; });
  c.check(out.vanishes_below_diagonal(), [] { return "an entry with m > n is nonzero"; });
  c.check(out.rank() == o.n_max + 1, [&] { return "rank " + std::to_string(out.rank()); });
  c.check(out.all_certified, [] { return "an entry lacks a certificate"; });
  return c.done();
}

LemmaResult check_sigma_hat_sign(const VerifyOptions&) {
  Checker c("sigma-hat-sign", "Sign of eta(-1,0) in the projected cycle");
  const LinkChain variant = sign_variant_sigma_hat();
  c.check(phi(0, variant) == -2, [] { return "variant has a different phi value"; });
  if (!boundary(variant).empty()) {
    c.flag("with +eta(-1,0) the chain is not a cycle; the projection of sigma_n carries -eta(-1,0)");
  }
  return c.done();
}

LemmaResult check_zero_edge_links(const VerifyOptions& o, const MorseTable& t) {
  Checker c("zero-edge-links", "Vertices whose descending link is a single vertex");
  const int lim = std::min(o.link_i_max, o.i_max - 1);
  std::vector<std::string> zero;
  for (int i = 1; i <= lim; ++i) {
    for (int j = 0; j <= i; ++j) {
      const DescendingLink dl = descending_link(Node::lattice(Vertex{i, j}), t);
      c.check(!dl.empty(), [&] { return "empty descending link at " + Vertex{i, j}.to_string(); });
      if (dl.edge_count() == 0) zero.push_back(Vertex{i, j}.to_string());
    }
  }
  if (!zero.empty()) {
    std::ostringstream os;
    os << "descending link is the point x0 (no edges) at";
    for (const auto& s : zero) os << ' ' << s;
    c.flag(os.str());
  }
  return c.done();
}

VerificationReport verify_all(const VerifyOptions& o) {
  validate(o);
  VerificationReport r;
  r.parameters = o;
  r.parameters.link_i_max = std::min(o.link_i_max, o.i_max - 1);
  const MorseTable table(Window{o.i_max});
  PairingMatrix pm;
  r.lemmas.push_back(check_poly_ring(o));
  r.lemmas.push_back(check_unipotent(o));
  r.lemmas.push_back(check_adjacency(o));
  r.lemmas.push_back(check_stabilizer_sweep(o));
  r.lemmas.push_back(check_eta_profiles(o));
  r.lemmas.push_back(check_flat_census(o));
  r.lemmas.push_back(check_morse(o, table));
  r.lemmas.push_back(check_descending_links(o, table));
  r.lemmas.push_back(check_congruence_split(o));
  r.lemmas.push_back(check_quotient_link(o));
  r.lemmas.push_back(check_local_cocycle(o));
  r.lemmas.push_back(check_cycle(o));
  r.lemmas.push_back(check_pairing(o, table, pm));
  r.lemmas.push_back(check_sigma_hat_sign(o));
  r.lemmas.push_back(check_zero_edge_links(o, table));
  r.pairing = std::move(pm);
  for (const auto& l : r.lemmas) {
    if (l.status == LemmaStatus::kFlagged) r.flags.push_back(l.id + ": " + l.detail);
  }
  return r;
}

bool VerificationReport::overall_pass() const {
  return std::none_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& l) { return l.status == LemmaStatus::kFail; });
}

const LemmaResult* VerificationReport::find(const std::string& id) const {
  for (const auto& l : lemmas) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

json pairing_to_json(const PairingMatrix& pm) {
  json entries = json::array();
  for (const auto& row : pm.entries) {
    json jr = json::array();
    for (const Rat& v : row) jr.push_back(rat_to_string(v));
    entries.push_back(jr);
  }
  return {{"n_max", pm.n_max},
          {"entries", entries},
          {"certificates", pm.certificates},
          {"all_certified", pm.all_certified},
          {"rank", pm.rank()}};
}

PairingMatrix pairing_from_json(const json& j) {
  PairingMatrix pm;
  pm.n_max = j.at("n_max").get<int>();
  for (const auto& row : j.at("entries")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_string(v.get<std::string>()));
    pm.entries.push_back(std::move(r));
  }
  pm.certificates = j.at("certificates").get<std::vector<std::vector<std::string>>>();
  pm.all_certified = j.at("all_certified").get<bool>();
  return pm;
}

json VerificationReport::to_json(bool with_timing) const {
  json lj = json::array();
  for (const auto& l : lemmas) {
    json e = {{"id", l.id}, {"title", l.title}, {"checks", l.checks}, {"status", sl3::to_string(l.status)},
              {"detail", l.detail}};
    if (with_timing) e["elapsed_ms"] = l.elapsed_ms;
    lj.push_back(e);
  }
  json j;
  j["parameters"] = {{"i_max", parameters.i_max},           {"n_max", parameters.n_max},
                     {"seed", parameters.seed},             {"samples", parameters.samples},
                     {"stab_i_max", parameters.stab_i_max}, {"link_i_max", parameters.link_i_max}};
  j["lemmas"] = lj;
  j["pairing_matrix"] = pairing ? pairing_to_json(*pairing) : json(nullptr);
  j["flags"] = flags;
  j["overall"] = overall_pass() ? "pass" : "fail";
  if (!data.is_null()) j["data"] = data;
  return j;
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r;
  const auto& p = j.at("parameters");
  r.parameters.i_max = p.at("i_max").get<int>();
  r.parameters.n_max = p.at("n_max").get<int>();
  r.parameters.seed = p.at("seed").get<std::uint64_t>();
  r.parameters.samples = p.at("samples").get<int>();
  r.parameters.stab_i_max = p.at("stab_i_max").get<int>();
  r.parameters.link_i_max = p.at("link_i_max").get<int>();
  for (const auto& e : j.at("lemmas")) {
    LemmaResult l;
    l.id = e.at("id").get<std::string>();
    l.title = e.at("title").get<std::string>();
    l.checks = e.at("checks").get<long>();
    l.status = lemma_status_from_string(e.at("status").get<std::string>());
    l.detail = e.value("detail", "");
    l.elapsed_ms = e.value("elapsed_ms", 0.0);
    r.lemmas.push_back(std::move(l));
  }
  if (!j.at("pairing_matrix").is_null()) r.pairing = pairing_from_json(j.at("pairing_matrix"));
  r.flags = j.at("flags").get<std::vector<std::string>>();
  if (j.contains("data")) r.data = j.at("data");
  return r;
}

}  // namespace sl3
