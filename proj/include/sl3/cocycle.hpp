#pragma once

#include "sl3/links.hpp"
#include "sl3/matrix.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sl3 {

/// Formal Q-combination of edges of the quotient descending link. Zero
/// coefficients are never stored.
class LinkChain {
 public:
  LinkChain() = default;
  static LinkChain edge(const EdgeLabel& e, const Rat& coeff = 1);

  void add(const EdgeLabel& e, const Rat& coeff);
  Rat coeff(const EdgeLabel& e) const;
  const std::map<EdgeLabel, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend LinkChain operator+(LinkChain a, const LinkChain& b);
  friend LinkChain operator-(LinkChain a, const LinkChain& b);
  friend LinkChain operator*(const Rat& s, const LinkChain& c);
  friend bool operator==(const LinkChain& a, const LinkChain& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<EdgeLabel, Rat> terms_;
};

enum class LinkFamily : std::uint8_t { kQ, kR };

struct LinkVertex {
  LinkFamily family;
  Rat value;

  friend bool operator<(const LinkVertex& a, const LinkVertex& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.value < b.value;
  }
  friend bool operator==(const LinkVertex& a, const LinkVertex& b) {
    return a.family == b.family && a.value == b.value;
  }
};

using VertexChain = std::map<LinkVertex, Rat>;

/// phi_n(eta_(q,r)) = q r, extended linearly. The value does not depend on n.
Rat phi(int n, const LinkChain& c);

/// Relabels every edge (q, r) as (q + a, r + b).
LinkChain shift_chain(const LinkChain& c, const Rat& a, const Rat& b);

/// Sum of coeff * (r-vertex - q-vertex). Zero entries are dropped.
VertexChain boundary(const LinkChain& c);

/// eta(q1,r1) - eta(q2,r1) + eta(q2,r2) - eta(q1,r2)
LinkChain four_loop(const Rat& q1, const Rat& q2, const Rat& r1, const Rat& r2);

/// A cycle c equals the sum over its edges (q, r) with q != q0, r != r0 of
/// c(q, r) * four_loop(q, q0, r, r0). Returns those terms.
struct SquareTerm {
  Rat coeff;
  EdgeLabel corner;
};
std::vector<SquareTerm> square_decomposition(const LinkChain& cycle, const Rat& q0, const Rat& r0);

/// coeff * (word . C_n) summed over terms; C_n is the implicit base chamber.
struct ChamberTerm {
  Rat coeff;
  Unipotent word;
  std::string name;
};

struct ChamberChain {
  std::vector<ChamberTerm> terms;
};

/// The eight-chamber cycle built from u1 = e12(t^n) and u2 = e23(t^n).
ChamberChain sigma(int n);

/// Sends coeff * (w . C_n) to coeff * eta_label(w, n), merging labels.
LinkChain project(int n, const ChamberChain& c);

/// The projection of sigma(n).
LinkChain sigma_hat(int n);

/// 2 eta(0,0) + eta(-1,0) + eta(-1,1) - eta(0,1) - eta(0,-1) + eta(1,-1) - eta(1,0):
/// sigma_hat with the sign of eta(-1,0) flipped. Kept to report that it is not
/// a cycle under the fixed orientation.
LinkChain sign_variant_sigma_hat();

}  // namespace sl3
