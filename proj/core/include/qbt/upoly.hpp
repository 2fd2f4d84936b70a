#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qbt/matrix.hpp"

namespace qbt {

/// Dense univariate polynomial, coefficients stored low degree first, never with a trailing zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Field field) : field_(field) {}
  UPoly(Field field, std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  /// c * t^k
  static UPoly monomial(const Scalar& c, std::size_t k);
  static UPoly from_ints(Field field, std::vector<long long> low_first);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  const Scalar& lead() const { return c_.back(); }

  UPoly monic() const;
  UPoly derivative() const;
  UPoly scaled(const Scalar& s) const;
  Scalar operator()(const Scalar& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

struct Bezout {
  UPoly g, u, v;  ///< u*a + v*b = g, g monic
};
Bezout xgcd(const UPoly& a, const UPoly& b);

/// base^e mod m.
UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m);

/// p(A) for square A (Horner).
Matrix evaluate_at(const UPoly& p, const Matrix& a);

/// Monic least-degree polynomial annihilating the square matrix e, from the first linear
/// dependence among I, e, e^2, ...
UPoly minimal_polynomial(const Matrix& e);

}  // namespace qbt
