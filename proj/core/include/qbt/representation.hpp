#pragma once

#include <cstdint>
#include <vector>

#include "qbt/matrix.hpp"
#include "qbt/quiver.hpp"

namespace qbt {

/// A representation: one vector space per vertex and one matrix per arrow (shape dims[head] x dims[tail]).
class Representation {
 public:
  Representation() = default;
  Representation(Quiver quiver, DimensionVector dims, std::vector<Matrix> maps, Field field);

  /// All maps zero.
  static Representation zero_maps(Quiver quiver, DimensionVector dims, Field field);

  const Quiver& quiver() const { return quiver_; }
  const DimensionVector& dims() const { return dims_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const Field& field() const { return field_; }
  std::size_t dim(int vertex) const { return static_cast<std::size_t>(dims_[static_cast<std::size_t>(vertex)]); }
  long long total_dim() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver quiver_;
  DimensionVector dims_;
  std::vector<Matrix> maps_;
  Field field_;
};

/// Per-vertex matrices f_i : V_i -> W_i (shape dims2[i] x dims1[i]).
using Morphism = std::vector<Matrix>;

bool is_morphism(const Representation& r1, const Representation& r2, const Morphism& f);

/// Basis of Hom(R1, R2): nullspace of the stacked system f_h A_a - B_a f_t = 0, unknowns ordered
/// vertex by vertex, row-major within each f_i.
std::vector<Morphism> hom_basis(const Representation& r1, const Representation& r2);

/// dim coker of (f_i) -> (f_h A_a - B_a f_t)_a.
long long ext1_dim(const Representation& r1, const Representation& r2);

bool is_schur(const Representation& r);

Representation direct_sum(const Representation& r1, const Representation& r2);

/// Restriction to per-vertex subspaces spanned by the columns of bases[i] (independent columns).
/// Throws InputError naming the first arrow that does not preserve the family.
Representation sub_representation(const Representation& r, const std::vector<Matrix>& bases);

/// Induced maps on the complement of the subspaces produced by complement_basis.
Representation quotient(const Representation& r, const std::vector<Matrix>& bases);

/// Maps T_h^{-1} A_a T_t for invertible per-vertex T.
Representation change_basis(const Representation& r, const std::vector<Matrix>& t);

/// Entries i.i.d. uniform in F_p (integers in [-9, 9] over Q), deterministic per seed.
Representation random_representation(const Quiver& q, const DimensionVector& v, std::uint64_t seed, const Field& field);

}  // namespace qbt
