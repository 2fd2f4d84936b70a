#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbt/matrix.hpp"

namespace qbt {

/// Subset of {0, ..., dim-1} as a bitmask.
using IndexSet = std::uint32_t;

IndexSet index_set(const std::vector<int>& indices);
std::vector<int> indices_of(IndexSet s);
int grade_of(IndexSet s);

/// Graded-lex order on sorted subsets: smaller first, then lexicographic on the sorted indices.
struct IndexSetOrder {
  bool operator()(IndexSet a, IndexSet b) const;
};

/// All k-subsets of {0..dim-1} in graded-lex order.
std::vector<IndexSet> exterior_basis(int dim, int k);

/// (-1)^{#{(s, t) : s in S, t in T, s > t}}, the sign of the shuffle putting S before T.
int shuffle_sign(IndexSet s, IndexSet t);

enum class Variance { OnV, OnVdual };

class ExteriorElement {
 public:
  using Terms = std::map<IndexSet, Scalar, IndexSetOrder>;

  ExteriorElement() = default;
  ExteriorElement(Field field, int dim, int grade, Variance variance);

  /// c * e_S (or c * e*_S).
  static ExteriorElement basis_element(Field field, int dim, IndexSet s, Variance variance, const Scalar& c);
  /// x_{i1} ^ x_{i2} ^ ... in the given (unsorted) order.
  static ExteriorElement wedge_of(Field field, int dim, const std::vector<int>& factors, Variance variance = Variance::OnV);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  int grade() const { return grade_; }
  Variance variance() const { return variance_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(IndexSet s) const;

  void add_term(IndexSet s, const Scalar& c);
  ExteriorElement& operator+=(const ExteriorElement& o);
  ExteriorElement& operator-=(const ExteriorElement& o);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  ExteriorElement scaled(const Scalar& s) const;
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b);

  /// Coordinates over exterior_basis(dim, grade).
  Vector coordinates() const;

  /// "x1∧x2 - x0∧x3" (dual elements use "x*").
  std::string to_string() const;

 private:
  void check_compatible(const ExteriorElement& o) const;
  Field field_;
  int dim_ = 0;
  int grade_ = 0;
  Variance variance_ = Variance::OnV;
  Terms terms_;
};

ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v);

/// Interior product of v in V with a dual element: i_v(e*_S) = sum_{j in S} (-1)^{pos(j)} v_j e*_{S - j}.
ExteriorElement contract(const Vector& v, const ExteriorElement& eta);

/// Matrix of i_v : Lambda^k V^* -> Lambda^{k-1} V^* over the exterior bases.
Matrix contraction_matrix(const Vector& v, int dim, int k);

/// Lambda^{dim-1} V -> V^*: e_S -> sgn(S, {j}) x*_j with {j} the complement of S.
ExteriorElement volume_iso(const ExteriorElement& omega);

/// Lambda^k V -> Lambda^{dim-k} V^*: e_S -> sgn(S, S^c) e*_{S^c}.
ExteriorElement hodge_to_dual(const ExteriorElement& w);
/// Inverse of hodge_to_dual: e*_T -> sgn(T^c, T) e_{T^c}.
ExteriorElement hodge_from_dual(const ExteriorElement& eta);

/// Canonical pairing <w, eta> = sum_S w_S eta_S for w in Lambda^k V, eta in Lambda^k V^*.
Scalar pairing(const ExteriorElement& w, const ExteriorElement& eta);

}  // namespace qbt
