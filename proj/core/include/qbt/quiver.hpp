#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qbt {

using DimensionVector = std::vector<long long>;

struct Arrow {
  int tail;
  int head;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertices, std::vector<Arrow> arrows);

  int vertex_count() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int vertices_ = 0;
  std::vector<Arrow> arrows_;
};

/// <v, w> = sum_i v_i w_i - sum_a v_t(a) w_h(a).
long long euler_form(const Quiver& q, const DimensionVector& v, const DimensionVector& w);
long long tits_form(const Quiver& q, const DimensionVector& v);

/// K_w: w arrows 0 -> 1.
Quiver kronecker(int w);
/// K_{m,n}: m arrows 0 -> 1, n arrows 1 -> 2.
Quiver three_vertex(int m, int n);
/// Center 0; w1 arrows 1 -> 0, then w2 arrows 2 -> 0.
Quiver syzygy_quiver(int w1, int w2);
/// Center 0; branch j (vertex j+1) contributes ws[j] arrows into the center, grouped by branch.
Quiver star_quiver(const std::vector<int>& ws);

/// Parses "kronecker:w", "three:m,n", "syzygy:w1,w2" or "star:w1,w2,...".
Quiver parse_quiver_spec(const std::string& text);

/// True when q(v) > 1: every representation of dimension v decomposes.
bool kac_forces_decomposable(const Quiver& q, const DimensionVector& v);

/// For K_w with w >= 3: true when q(v) <= 1. Throws for w < 3.
bool kronecker_is_schur_root(int w, const DimensionVector& v);

}  // namespace qbt
