#include "sl3/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sl3 {

Mat3 Mat3::identity() {
  Mat3 m;
  for (int k = 0; k < 3; ++k) m(k, k) = 1;
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) {
      Poly acc;
      for (int k = 0; k < 3; ++k) {
        if (a(r, k).is_zero() || b(k, col).is_zero()) continue;
        acc += a(r, k) * b(k, col);
      }
      c(r, col) = std::move(acc);
    }
  }
  return c;
}

Poly Mat3::det() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool Mat3::is_integral() const {
  for (const auto& e : entries_) {
    if (!e.is_integral()) return false;
  }
  return true;
}

std::string Mat3::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < 3; ++r) {
    os << (r ? "; " : "") << "[";
    for (int c = 0; c < 3; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat3 elementary(int i, int j, const Poly& a) {
  if (i < 0 || i > 2 || j < 0 || j > 2) throw std::invalid_argument("elementary: index out of range");
  if (i == j) throw std::invalid_argument("elementary: indices must differ");
  Mat3 m = Mat3::identity();
  m(i, j) = a;
  return m;
}

Mat3 diagonal_signs(int s0, int s1, int s2) {
  for (int s : {s0, s1, s2}) {
    if (s != 1 && s != -1) throw std::invalid_argument("diagonal_signs: entries must be +-1");
  }
  Mat3 m;
  m(0, 0) = s0;
  m(1, 1) = s1;
  m(2, 2) = s2;
  return m;
}

std::vector<Mat3> unit_diagonals() {
  return {diagonal_signs(1, 1, 1), diagonal_signs(-1, -1, 1), diagonal_signs(-1, 1, -1),
          diagonal_signs(1, -1, -1)};
}

Mat3 signed_permutation(const std::array<int, 3>& perm) {
  int inversions = 0;
  for (int a = 0; a < 3; ++a) {
    if (perm[static_cast<std::size_t>(a)] < 0 || perm[static_cast<std::size_t>(a)] > 2) {
      throw std::invalid_argument("signed_permutation: not a permutation");
    }
    for (int b = a + 1; b < 3; ++b) {
      if (perm[static_cast<std::size_t>(a)] == perm[static_cast<std::size_t>(b)]) {
        throw std::invalid_argument("signed_permutation: not a permutation");
      }
      if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    }
  }
  Mat3 m;
  for (int k = 0; k < 3; ++k) m(perm[static_cast<std::size_t>(k)], k) = 1;
  if (inversions % 2 == 1) m(perm[0], 0) = -1;
  return m;
}

Unipotent Unipotent::inverse() const { return {-x, -y, x * y - z}; }

Mat3 Unipotent::to_mat() const {
  Mat3 m = Mat3::identity();
  m(0, 1) = x;
  m(1, 2) = y;
  m(0, 2) = z;
  return m;
}

Unipotent operator*(const Unipotent& a, const Unipotent& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
}

Unipotent uni_commutator(const Unipotent& a, const Unipotent& b) {
  return a.inverse() * b.inverse() * a * b;
}

namespace {

Unipotent truncate(const Unipotent& u, int n) { return {u.x.mod(n), u.y.mod(n), u.z.mod(n)}; }

}  // namespace

UnipotentModN::UnipotentModN(int n, const Unipotent& u) : n_(n), rep_() {
  if (n < 0) throw std::invalid_argument("UnipotentModN: negative n");
  rep_ = truncate(u, n);
}

UnipotentModN UnipotentModN::inverse() const { return {n_, rep_.inverse()}; }

UnipotentModN operator*(const UnipotentModN& a, const UnipotentModN& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("UnipotentModN: mismatched congruence levels");
  return {a.n_, a.rep_ * b.rep_};
}

std::pair<Rat, Rat> label(const Unipotent& u, int n) { return {u.x.coeff(n), u.y.coeff(n)}; }

std::pair<Unipotent, Unipotent> split_at_congruence(const Unipotent& u, int n) {
  auto [x_high, x_low] = u.x.split(n);
  auto [y_high, y_low] = u.y.split(n);
  // z = z_inner + z_outer + x_inner * y_outer
  auto [z_high, z_low] = (u.z - x_high * y_low).split(n);
  return {Unipotent{x_high, y_high, z_high}, Unipotent{x_low, y_low, z_low}};
}

}  // namespace sl3
