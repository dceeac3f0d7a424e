#include "sl3/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl3 {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("rat_from_string: malformed rational '" + s + "'");
  }
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Poly::Poly(const Rat& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, int k) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  if (c == 0) return {};
  std::vector<Rat> cs(static_cast<std::size_t>(k) + 1);
  cs.back() = c;
  return Poly(std::move(cs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool Poly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
}

std::pair<Poly, Poly> Poly::split(int n) const {
  if (n < 0) throw std::invalid_argument("Poly::split: negative n");
  const auto cut = std::min(coeffs_.size(), static_cast<std::size_t>(n) + 1);
  std::vector<Rat> high(coeffs_.size());
  for (std::size_t k = cut; k < coeffs_.size(); ++k) high[k] = coeffs_[k];
  std::vector<Rat> low(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(cut));
  return {Poly(std::move(high)), Poly(std::move(low))};
}

Poly Poly::mod(int n) const { return split(n).second; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
  const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
  std::vector<Rat> out = big;
  for (std::size_t k = 0; k < small.size(); ++k) out[k] += small[k];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool unit = (mag == 1);
    if (!unit || k == 0) os << rat_to_string(mag);
    if (k >= 1) os << (unit ? "" : "*") << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace sl3
