#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace qbt {

/// Raised for malformed input or violated preconditions. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scalar;

/// Least prime above 2^31; default evaluation field for sampling.
inline constexpr std::uint64_t kDefaultPrime = 2147483659ULL;

bool is_prime(std::uint64_t n);

/// Either the rationals or a prime field F_p with 2 < p < 2^62.
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime_field() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_integer(const mpz_class& value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// Reads "n", "n/d" or "r mod p" (the modulus must match this field).
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// Residue r in [0, p).
struct Residue {
  std::uint64_t value;
  std::uint64_t modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Exact field element: a reduced fraction or a residue modulo p.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  explicit Scalar(Residue r) : v_(r) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<Residue>(v_).value; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "num/den" for rationals, "r mod p" for residues.
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> v_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace qbt
