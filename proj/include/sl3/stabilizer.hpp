#pragma once

#include "sl3/apartment.hpp"
#include "sl3/matrix.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace sl3 {

/// Degree-bound description of a cell stabilizer in SL3(Z[t]): gamma
/// stabilizes the cell iff gamma is integral, det(gamma) = 1 and
/// deg(gamma_kl) <= bounds[k][l] for every entry. Negative bounds force the
/// entry to vanish.
struct StabilizerProfile {
  std::array<std::array<int, 3>, 3> bounds{};

  int operator()(int k, int l) const { return bounds[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]; }
  friend bool operator==(const StabilizerProfile&, const StabilizerProfile&) = default;
  std::string to_string() const;
};

/// bounds[k][l] = d_k - d_l with d = (i, j, 0).
StabilizerProfile vertex_profile(SectorVertex v);

/// Entrywise minimum of the vertex profiles of the cell's lattice vertices.
/// An inserted barycenter contributes the two endpoints of its edge.
StabilizerProfile edge_profile(const Cell& c);
inline StabilizerProfile cell_profile(const Cell& c) { return edge_profile(c); }

/// Degree bounds and det = 1 only; the SL3(Q[t]) version of membership.
bool satisfies_bounds(const Mat3& g, const StabilizerProfile& p);

/// Integral, det = 1 and within the degree bounds.
bool membership(const Mat3& g, const StabilizerProfile& p);

/// Conjugates by diag(t^i, t^j, 1) in Laurent polynomials and checks that
/// every entry lands in Q[[1/t]]. Shares no code with the profile path.
bool oracle_stabilizes(const Mat3& g, SectorVertex v);

/// e_kl(t^m) for 0 <= m <= bounds[k][l], plus the diagonal sign matrices.
std::vector<Mat3> enumerate_generators(const StabilizerProfile& p);

/// Random member: a product of 1..max_factors elementary and sign matrices
/// respecting the bounds.
Mat3 sample_member(const StabilizerProfile& p, std::mt19937_64& rng, int max_factors = 6);

/// A random member with one elementary factor of degree bounds[k][l] + 1
/// (at least 0) spliced in. Never a member, because members form a group.
Mat3 sample_violator(const StabilizerProfile& p, std::mt19937_64& rng, int max_factors = 6);

}  // namespace sl3
