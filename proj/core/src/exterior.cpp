#include "qbt/exterior.hpp"

#include <algorithm>
#include <bit>

namespace qbt {

IndexSet index_set(const std::vector<int>& indices) {
  IndexSet s = 0;
  for (int i : indices) {
    if (i < 0 || i >= 32) throw InputError("exterior index out of range");
    s |= IndexSet{1} << i;
  }
  return s;
}

std::vector<int> indices_of(IndexSet s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

int grade_of(IndexSet s) { return std::popcount(s); }

bool IndexSetOrder::operator()(IndexSet a, IndexSet b) const {
  int ga = grade_of(a), gb = grade_of(b);
  if (ga != gb) return ga < gb;
  auto ia = indices_of(a), ib = indices_of(b);
  return ia < ib;
}

std::vector<IndexSet> exterior_basis(int dim, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > dim) return out;
  for (IndexSet s = 0; s < (IndexSet{1} << dim); ++s) {
    if (grade_of(s) == k) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), IndexSetOrder{});
  return out;
}

int shuffle_sign(IndexSet s, IndexSet t) {
  int inversions = 0;
  for (int i : indices_of(s)) inversions += std::popcount(t & ((IndexSet{1} << i) - 1));
  return inversions % 2 ? -1 : 1;
}

ExteriorElement::ExteriorElement(Field field, int dim, int grade, Variance variance)
    : field_(field), dim_(dim), grade_(grade), variance_(variance) {
  if (dim < 0 || dim > 31) throw InputError("exterior dimension out of range");
  if (grade < 0 || grade > dim) throw InputError("exterior grade out of range");
}

ExteriorElement ExteriorElement::basis_element(Field field, int dim, IndexSet s, Variance variance, const Scalar& c) {
  ExteriorElement e(field, dim, grade_of(s), variance);
  e.add_term(s, c);
  return e;
}

ExteriorElement ExteriorElement::wedge_of(Field field, int dim, const std::vector<int>& factors, Variance variance) {
  ExteriorElement acc = basis_element(field, dim, 0, variance, field.one());
  for (int i : factors) acc = wedge(acc, basis_element(field, dim, index_set({i}), variance, field.one()));
  return acc;
}

Scalar ExteriorElement::coeff(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? field_.zero() : it->second;
}

void ExteriorElement::add_term(IndexSet s, const Scalar& c) {
  if (grade_of(s) != grade_ || (s >> dim_) != 0) throw InputError("index set does not fit this exterior power");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ExteriorElement::check_compatible(const ExteriorElement& o) const {
  if (o.dim_ != dim_ || o.variance_ != variance_) throw InputError("exterior elements differ in dimension or variance");
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (o.grade_ != grade_) throw InputError("adding exterior elements of different grade");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (o.grade_ != grade_) throw InputError("subtracting exterior elements of different grade");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

ExteriorElement ExteriorElement::scaled(const Scalar& s) const {
  ExteriorElement e(field_, dim_, grade_, variance_);
  for (const auto& [k, c] : terms_) e.add_term(k, c * s);
  return e;
}

bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
  return a.dim_ == b.dim_ && a.variance_ == b.variance_ && a.terms_ == b.terms_ && (a.grade_ == b.grade_ || a.is_zero());
}

Vector ExteriorElement::coordinates() const {
  Vector v;
  for (IndexSet s : exterior_basis(dim_, grade_)) v.push_back(coeff(s));
  return v;
}

std::string ExteriorElement::to_string() const {
  if (is_zero()) return "0";
  const std::string var = variance_ == Variance::OnV ? "x" : "x*";
  std::string out;
  for (const auto& [s, c] : terms_) {
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    Scalar mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) out += (mag.is_rational() && mag.rational().get_den() == 1 ? mag.rational().get_num().get_str() : mag.to_string()) + "*";
    auto idx = indices_of(s);
    if (idx.empty()) out += "1";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out += "∧";
      out += var + std::to_string(idx[i]);
    }
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v) {
  if (u.dim() != v.dim() || u.variance() != v.variance()) throw InputError("wedge: variance or dimension mismatch");
  if (u.grade() + v.grade() > u.dim()) return ExteriorElement(u.field(), u.dim(), u.dim(), u.variance());
  ExteriorElement out(u.field(), u.dim(), u.grade() + v.grade(), u.variance());
  for (const auto& [s, a] : u.terms()) {
    for (const auto& [t, b] : v.terms()) {
      if (s & t) continue;
      Scalar c = a * b;
      if (shuffle_sign(s, t) < 0) c = -c;
      out.add_term(s | t, c);
    }
  }
  return out;
}

ExteriorElement contract(const Vector& v, const ExteriorElement& eta) {
  if (eta.variance() != Variance::OnVdual) throw InputError("contract expects a dual element");
  if (eta.grade() < 1) throw InputError("contract needs grade >= 1");
  if (static_cast<int>(v.size()) != eta.dim()) throw InputError("contract: vector length mismatch");
  ExteriorElement out(eta.field(), eta.dim(), eta.grade() - 1, Variance::OnVdual);
  for (const auto& [s, c] : eta.terms()) {
    auto idx = indices_of(s);
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Scalar& vj = v[static_cast<std::size_t>(idx[pos])];
      if (vj.is_zero()) continue;
      Scalar t = c * vj;
      if (pos % 2) t = -t;
      out.add_term(s & ~(IndexSet{1} << idx[pos]), t);
    }
  }
  return out;
}

Matrix contraction_matrix(const Vector& v, int dim, int k) {
  const Field f = v.empty() ? Field::rationals() : v.front().field();
  auto src = exterior_basis(dim, k), dst = exterior_basis(dim, k - 1);
  Matrix m(f, dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Vector col = contract(v, ExteriorElement::basis_element(f, dim, src[c], Variance::OnVdual, f.one())).coordinates();
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = col[r];
  }
  return m;
}

ExteriorElement hodge_to_dual(const ExteriorElement& w) {
  if (w.variance() != Variance::OnV) throw InputError("hodge_to_dual expects an element of Lambda V");
  const IndexSet full = (IndexSet{1} << w.dim()) - 1;
  ExteriorElement out(w.field(), w.dim(), w.dim() - w.grade(), Variance::OnVdual);
  for (const auto& [s, c] : w.terms()) out.add_term(full & ~s, shuffle_sign(s, full & ~s) < 0 ? -c : c);
  return out;
}

ExteriorElement hodge_from_dual(const ExteriorElement& eta) {
  if (eta.variance() != Variance::OnVdual) throw InputError("hodge_from_dual expects a dual element");
  const IndexSet full = (IndexSet{1} << eta.dim()) - 1;
  ExteriorElement out(eta.field(), eta.dim(), eta.dim() - eta.grade(), Variance::OnV);
  for (const auto& [t, c] : eta.terms()) out.add_term(full & ~t, shuffle_sign(full & ~t, t) < 0 ? -c : c);
  return out;
}

ExteriorElement volume_iso(const ExteriorElement& omega) {
  if (omega.grade() != omega.dim() - 1) throw InputError("volume_iso expects an element of grade dim - 1");
  return hodge_to_dual(omega);
}

Scalar pairing(const ExteriorElement& w, const ExteriorElement& eta) {
  if (w.variance() != Variance::OnV || eta.variance() != Variance::OnVdual) throw InputError("pairing expects (Lambda V, Lambda V^*)");
  if (w.dim() != eta.dim()) throw InputError("pairing: dimension mismatch");
  Scalar s = w.field().zero();
  if (w.grade() != eta.grade()) return s;
  for (const auto& [k, c] : w.terms()) s += c * eta.coeff(k);
  return s;
}

}  // namespace qbt
