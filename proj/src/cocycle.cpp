#include "sl3/cocycle.hpp"

namespace sl3 {

LinkChain LinkChain::edge(const EdgeLabel& e, const Rat& coeff) {
  LinkChain c;
  c.add(e, coeff);
  return c;
}

void LinkChain::add(const EdgeLabel& e, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat LinkChain::coeff(const EdgeLabel& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

LinkChain operator+(LinkChain a, const LinkChain& b) {
  for (const auto& [e, c] : b.terms_) a.add(e, c);
  return a;
}

LinkChain operator-(LinkChain a, const LinkChain& b) {
  for (const auto& [e, c] : b.terms_) a.add(e, -c);
  return a;
}

LinkChain operator*(const Rat& s, const LinkChain& c) {
  LinkChain out;
  for (const auto& [e, v] : c.terms_) out.add(e, s * v);
  return out;
}

std::string LinkChain::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    const Rat mag = abs(c);
    if (mag != 1) s += rat_to_string(mag) + "*";
    s += e.to_string();
  }
  return s;
}

Rat phi(int /*n*/, const LinkChain& c) {
  Rat total = 0;
  for (const auto& [e, coeff] : c.terms()) total += coeff * e.q * e.r;
  return total;
}

LinkChain shift_chain(const LinkChain& c, const Rat& a, const Rat& b) {
  LinkChain out;
  for (const auto& [e, coeff] : c.terms()) out.add({e.q + a, e.r + b}, coeff);
  return out;
}

VertexChain boundary(const LinkChain& c) {
  VertexChain out;
  auto bump = [&out](const LinkVertex& v, const Rat& x) {
    auto [it, fresh] = out.try_emplace(v, x);
    if (!fresh) {
      it->second += x;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [e, coeff] : c.terms()) {
    bump({LinkFamily::kR, e.r}, coeff);
    bump({LinkFamily::kQ, e.q}, -coeff);
  }
  return out;
}

LinkChain four_loop(const Rat& q1, const Rat& q2, const Rat& r1, const Rat& r2) {
  LinkChain c;
  c.add({q1, r1}, 1);
  c.add({q2, r1}, -1);
  c.add({q2, r2}, 1);
  c.add({q1, r2}, -1);
  return c;
}

std::vector<SquareTerm> square_decomposition(const LinkChain& cycle, const Rat& q0, const Rat& r0) {
  std::vector<SquareTerm> out;
  for (const auto& [e, coeff] : cycle.terms()) {
    if (e.q != q0 && e.r != r0) out.push_back({coeff, e});
  }
  return out;
}

ChamberChain sigma(int n) {
  if (n < 0) throw std::invalid_argument("sigma: negative n");
  const Unipotent u1 = Unipotent::e12(Poly::monomial(1, n));
  const Unipotent u2 = Unipotent::e23(Poly::monomial(1, n));
  const Unipotent u1i = u1.inverse();
  const Unipotent u2i = u2.inverse();
  ChamberChain c;
  c.terms = {
      {1, Unipotent::identity(), "1"},
      {-1, u1i, "u1^-1"},
      {1, u1i * u2, "u1^-1 u2"},
      {-1, u1i * u2 * u1, "u1^-1 u2 u1"},
      {1, uni_commutator(u1i, u2), "[u1^-1, u2]"},
      {-1, u1 * u2i * u1i, "u1 u2^-1 u1^-1"},
      {1, u1 * u2i, "u1 u2^-1"},
      {-1, u1, "u1"},
  };
  return c;
}

LinkChain project(int n, const ChamberChain& c) {
  LinkChain out;
  for (const auto& term : c.terms) {
    const auto [q, r] = label(term.word, n);
    out.add({q, r}, term.coeff);
  }
  return out;
}

LinkChain sigma_hat(int n) { return project(n, sigma(n)); }

LinkChain sign_variant_sigma_hat() {
  LinkChain c;
  c.add({0, 0}, 2);
  c.add({-1, 0}, 1);
  c.add({-1, 1}, 1);
  c.add({0, 1}, -1);
  c.add({0, -1}, -1);
  c.add({1, -1}, 1);
  c.add({1, 0}, -1);
  return c;
}

}  // namespace sl3
