#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace sl3 {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms.
using Rat = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rat make_rat(long num, long den = 1);

/// "num/den" (or "num" when den == 1), the serialization used in reports.
std::string rat_to_string(const Rat& r);

/// Inverse of rat_to_string. Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

bool is_integer(const Rat& r);

/// Degree of the zero polynomial. Strictly smaller than any degree bound.
inline constexpr int kDegNegInf = INT_MIN;

/// Dense polynomial in Q[t]. Index k of the coefficient vector holds the t^k
/// coefficient and the highest stored coefficient is always nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor): constants promote
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  /// c * t^k
  static Poly monomial(const Rat& c, int k);
  static Poly t() { return monomial(1, 1); }

  int degree() const { return coeffs_.empty() ? kDegNegInf : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// The t^k coefficient; zero past the degree.
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// True iff every coefficient is an integer (membership in Z[t]).
  bool is_integral() const;

  /// p = high + low with every term of high of exponent >= n+1 and deg(low) <= n.
  std::pair<Poly, Poly> split(int n) const;

  /// Canonical representative modulo (t^(n+1)).
  Poly mod(int n) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

inline Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
inline Rat poly_coeff(const Poly& p, int k) { return p.coeff(k); }
inline std::pair<Poly, Poly> poly_split(const Poly& p, int n) { return p.split(n); }
inline Poly poly_mod(const Poly& p, int n) { return p.mod(n); }

}  // namespace sl3
