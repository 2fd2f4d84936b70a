#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qbt/matrix.hpp"

namespace qbt {

/// Exponent vector over x_0..x_n.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);

/// Graded-lex order, descending: higher degree first, then lexicographically larger exponent
/// vectors (x0 first). Compares true when a comes first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All degree-d monomials in n+1 variables in graded-lex order; C(n+d, d) of them.
std::vector<Monomial> monomial_basis(int n, int d);

std::string monomial_to_string(const Monomial& m);

/// Homogeneous polynomial of a fixed degree in x_0..x_n. The zero polynomial keeps its
/// nominal degree, which may be negative (for twist-forced zero entries).
class HomogeneousPoly {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  HomogeneousPoly() = default;
  HomogeneousPoly(Field field, int n, int degree) : field_(field), n_(n), degree_(degree) {}

  static HomogeneousPoly from_monomial(Field field, const Monomial& m, const Scalar& c);
  static HomogeneousPoly variable(Field field, int n, int i);
  /// Parses sums of terms such as "3*x0^2*x1 - 1/2*x2^3"; "0" is the zero polynomial.
  static HomogeneousPoly parse(Field field, int n, int degree, std::string_view text);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Monomial& m) const;

  /// Adds c * m; m must have this polynomial's degree.
  void add_term(const Monomial& m, const Scalar& c);

  HomogeneousPoly& operator+=(const HomogeneousPoly& o);
  HomogeneousPoly& operator-=(const HomogeneousPoly& o);
  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
  HomogeneousPoly scaled(const Scalar& s) const;
  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b);

  Scalar evaluate(const Vector& point) const;
  /// Coefficient vector over monomial_basis(n, degree).
  Vector coefficients() const;
  /// Reinterprets coefficients in another field (Q -> F_p reduction or identity).
  HomogeneousPoly converted(const Field& target) const;

  std::string to_string() const;

 private:
  Field field_;
  int n_ = 0;
  int degree_ = 0;
  Terms terms_;
};

/// Matrix of homogeneous polynomials realizing a sheaf map  (+)_c O(col_twist[c]) -> (+)_r O(row_twist[r]).
/// Entry (r, c) has degree row_twist[r] - col_twist[c]; entries of negative degree are zero.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field field, int n, std::vector<int> row_twists, std::vector<int> col_twists);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  std::size_t rows() const { return row_twists_.size(); }
  std::size_t cols() const { return col_twists_.size(); }
  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }
  int entry_degree(std::size_t r, std::size_t c) const { return row_twists_[r] - col_twists_[c]; }

  const HomogeneousPoly& operator()(std::size_t r, std::size_t c) const { return e_[r * cols() + c]; }
  /// Replaces an entry; its degree must match the twists.
  void set(std::size_t r, std::size_t c, HomogeneousPoly p);

  bool is_zero() const;
  /// Evaluation at a point with n+1 coordinates, not all zero.
  Matrix evaluate(const Vector& point) const;
  PolyMatrix converted(const Field& target) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  Field field_;
  int n_ = 0;
  std::vector<int> row_twists_, col_twists_;
  std::vector<HomogeneousPoly> e_;
};

PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix vcat(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);

/// Entry (r, c) = sum_i coeffs[i](r, c) * basis[i]. Columns get twist `source_twist`, rows
/// `source_twist + d` where d is the common basis degree.
PolyMatrix expand_map(const std::vector<Matrix>& coeffs, const std::vector<HomogeneousPoly>& basis, int source_twist = 0);

/// monomial_basis(n, d) as polynomials.
std::vector<HomogeneousPoly> monomial_polys(const Field& field, int n, int d);

long long binomial(long long n, long long k);

}  // namespace qbt
