#include "sl3/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sl3 {

namespace {

// Sparse Laurent polynomial: exponent -> coefficient, zeros never stored.
using Laurent = std::map<int, Rat>;
using LaurentMat = std::array<std::array<Laurent, 3>, 3>;

void accumulate(Laurent& acc, int e, const Rat& c) {
  auto [it, fresh] = acc.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

LaurentMat lmul(const LaurentMat& a, const LaurentMat& b) {
  LaurentMat c{};
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) {
      for (int k = 0; k < 3; ++k) {
        for (const auto& [ea, ca] : a[r][k]) {
          for (const auto& [eb, cb] : b[k][col]) accumulate(c[r][col], ea + eb, ca * cb);
        }
      }
    }
  }
  return c;
}

LaurentMat to_laurent(const Mat3& g) {
  LaurentMat m{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const auto& cs = g(r, c).coeffs();
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] != 0) m[r][c][static_cast<int>(k)] = cs[k];
      }
    }
  }
  return m;
}

LaurentMat diag_powers(int a, int b, int c) {
  LaurentMat m{};
  m[0][0][a] = 1;
  m[1][1][b] = 1;
  m[2][2][c] = 1;
  return m;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int nonzero_coefficient(std::mt19937_64& rng) {
  const int c = uniform(rng, 1, 3);
  return uniform(rng, 0, 1) ? c : -c;
}

std::vector<Mat3> member_factors(const StabilizerProfile& p, std::mt19937_64& rng, int max_factors) {
  std::vector<std::pair<int, int>> allowed;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      if (k != l && p(k, l) >= 0) allowed.emplace_back(k, l);
    }
  }
  const auto signs = unit_diagonals();
  std::vector<Mat3> out;
  const int count = uniform(rng, 1, max_factors);
  for (int f = 0; f < count; ++f) {
    if (allowed.empty() || uniform(rng, 0, 5) == 0) {
      out.push_back(signs[static_cast<std::size_t>(uniform(rng, 0, 3))]);
      continue;
    }
    const auto [k, l] = allowed[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(allowed.size()) - 1))];
    out.push_back(elementary(k, l, Poly::monomial(nonzero_coefficient(rng), uniform(rng, 0, p(k, l)))));
  }
  return out;
}

Mat3 product(const std::vector<Mat3>& fs) {
  Mat3 g = Mat3::identity();
  for (const auto& f : fs) g = g * f;
  return g;
}

}  // namespace

std::string StabilizerProfile::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < 3; ++k) {
    os << (k ? "; " : "");
    for (int l = 0; l < 3; ++l) os << (l ? " " : "") << (*this)(k, l);
  }
  os << "]";
  return os.str();
}

StabilizerProfile vertex_profile(SectorVertex v) {
  const std::array<int, 3> d{v.i(), v.j(), 0};
  StabilizerProfile p;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < 3; ++l) p.bounds[k][l] = d[k] - d[l];
  }
  return p;
}

StabilizerProfile edge_profile(const Cell& c) {
  std::vector<Vertex> verts;
  for (const Node& n : c.nodes) {
    verts.push_back(n.lo);
    if (!n.is_lattice()) verts.push_back(n.hi);
  }
  if (verts.empty()) throw std::invalid_argument("edge_profile: empty cell");
  StabilizerProfile p = vertex_profile(SectorVertex(verts.front()));
  for (Vertex v : verts) {
    const StabilizerProfile q = vertex_profile(SectorVertex(v));
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t l = 0; l < 3; ++l) p.bounds[k][l] = std::min(p.bounds[k][l], q.bounds[k][l]);
    }
  }
  return p;
}

bool satisfies_bounds(const Mat3& g, const StabilizerProfile& p) {
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      if (g(k, l).degree() > p(k, l)) return false;
    }
  }
  return g.det() == Poly(1);
}

bool membership(const Mat3& g, const StabilizerProfile& p) { return g.is_integral() && satisfies_bounds(g, p); }

bool oracle_stabilizes(const Mat3& g, SectorVertex v) {
  if (!g.is_integral() || g.det() != Poly(1)) return false;
  // Stab(v) = h SL3(Q[[1/t]]) h^-1 with h = diag(t^i, t^j, 1), so g fixes v
  // iff h^-1 g h has no positive powers of t.
  const LaurentMat conj =
      lmul(lmul(diag_powers(-v.i(), -v.j(), 0), to_laurent(g)), diag_powers(v.i(), v.j(), 0));
  for (const auto& row : conj) {
    for (const auto& entry : row) {
      if (!entry.empty() && entry.rbegin()->first > 0) return false;
    }
  }
  return true;
}

std::vector<Mat3> enumerate_generators(const StabilizerProfile& p) {
  std::vector<Mat3> out;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      if (k == l) continue;
      for (int m = 0; m <= p(k, l); ++m) out.push_back(elementary(k, l, Poly::monomial(1, m)));
    }
  }
  for (const auto& d : unit_diagonals()) out.push_back(d);
  return out;
}

Mat3 sample_member(const StabilizerProfile& p, std::mt19937_64& rng, int max_factors) {
  return product(member_factors(p, rng, max_factors));
}

Mat3 sample_violator(const StabilizerProfile& p, std::mt19937_64& rng, int max_factors) {
  auto fs = member_factors(p, rng, std::max(1, max_factors - 1));
  int k = 0;
  int l = 0;
  while (k == l) {
    k = uniform(rng, 0, 2);
    l = uniform(rng, 0, 2);
  }
  const int deg = std::max(0, p(k, l) + 1);
  const Mat3 bad = elementary(k, l, Poly::monomial(nonzero_coefficient(rng), deg));
  fs.insert(fs.begin() + uniform(rng, 0, static_cast<int>(fs.size())), bad);
  return product(fs);
}

}  // namespace sl3
