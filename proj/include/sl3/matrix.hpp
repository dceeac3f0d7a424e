#pragma once

#include "sl3/poly.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace sl3 {

/// 3x3 matrix over Q[t]. Indices are zero-based: e_{12} in the usual
/// notation is elementary(0, 1, a).
class Mat3 {
 public:
  Mat3() = default;

  static Mat3 identity();

  const Poly& operator()(int r, int c) const { return entries_[idx(r, c)]; }
  Poly& operator()(int r, int c) { return entries_[idx(r, c)]; }

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend bool operator==(const Mat3& a, const Mat3& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

  Poly det() const;
  bool is_integral() const;
  std::string to_string() const;

 private:
  static std::size_t idx(int r, int c) { return static_cast<std::size_t>(r * 3 + c); }

  std::array<Poly, 9> entries_{};
};

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) { return a * b; }

/// Identity plus a in position (i, j). Throws std::invalid_argument if i == j
/// or an index is out of range.
Mat3 elementary(int i, int j, const Poly& a);

/// diag(s0, s1, s2); each sign must be +1 or -1.
Mat3 diagonal_signs(int s0, int s1, int s2);

/// The four sign matrices diag(+-1, +-1, +-1) of determinant 1.
std::vector<Mat3> unit_diagonals();

/// Signed permutation matrix sending e_k to sign * e_{perm[k]}; the sign is
/// chosen so that the determinant is 1.
Mat3 signed_permutation(const std::array<int, 3>& perm);

inline bool is_integral(const Mat3& a) { return a.is_integral(); }

/// Upper unipotent matrix [[1, x, z], [0, 1, y], [0, 0, 1]] over Q[t].
/// Diagonal torus elements act trivially on every label and cocycle value, so
/// only the unipotent part of the upper-triangular group is modelled.
struct Unipotent {
  Poly x;  // (1,2)
  Poly y;  // (2,3)
  Poly z;  // (1,3)

  static Unipotent identity() { return {}; }
  static Unipotent e12(const Poly& a) { return {a, {}, {}}; }
  static Unipotent e23(const Poly& a) { return {{}, a, {}}; }
  static Unipotent e13(const Poly& a) { return {{}, {}, a}; }

  Unipotent inverse() const;
  Mat3 to_mat() const;

  friend Unipotent operator*(const Unipotent& a, const Unipotent& b);
  friend bool operator==(const Unipotent& a, const Unipotent& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Unipotent& a, const Unipotent& b) { return !(a == b); }
};

inline Unipotent uni_mul(const Unipotent& a, const Unipotent& b) { return a * b; }

/// a^-1 b^-1 a b
Unipotent uni_commutator(const Unipotent& a, const Unipotent& b);

/// Coset of U_n in U, i.e. an upper unipotent matrix over Q[t]/(t^(n+1)).
/// All coordinates are kept truncated.
class UnipotentModN {
 public:
  UnipotentModN(int n, const Unipotent& u);

  int n() const { return n_; }
  const Unipotent& rep() const { return rep_; }
  bool is_identity() const { return rep_ == Unipotent::identity(); }

  UnipotentModN inverse() const;
  friend UnipotentModN operator*(const UnipotentModN& a, const UnipotentModN& b);
  friend bool operator==(const UnipotentModN& a, const UnipotentModN& b) {
    return a.n_ == b.n_ && a.rep_ == b.rep_;
  }

 private:
  int n_;
  Unipotent rep_;
};

inline UnipotentModN uni_mod(const Unipotent& u, int n) { return {n, u}; }

/// Degree-n coefficients of the (1,2) and (2,3) entries. A homomorphism
/// U -> Q^2 that kills U_n.
std::pair<Rat, Rat> label(const Unipotent& u, int n);

/// Writes u = inner * outer with inner in U_n and every coordinate of outer
/// of degree <= n, so that outer fixes the vertex (2n, n).
std::pair<Unipotent, Unipotent> split_at_congruence(const Unipotent& u, int n);

}  // namespace sl3
