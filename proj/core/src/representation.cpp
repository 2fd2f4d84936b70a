#include "qbt/representation.hpp"

#include "qbt/random.hpp"

namespace qbt {

Representation::Representation(Quiver quiver, DimensionVector dims, std::vector<Matrix> maps, Field field)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)), field_(field) {
  if (static_cast<int>(dims_.size()) != quiver_.vertex_count()) throw InputError("dims length does not match the quiver");
  for (auto d : dims_) {
    if (d < 0) throw InputError("negative dimension");
  }
  if (maps_.size() != quiver_.arrow_count()) {
    throw InputError("expected " + std::to_string(quiver_.arrow_count()) + " maps, got " + std::to_string(maps_.size()));
  }
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& ar = quiver_.arrows()[a];
    if (maps_[a].rows() != dim(ar.head) || maps_[a].cols() != dim(ar.tail)) {
      throw InputError("map of arrow " + std::to_string(a) + " has shape " + std::to_string(maps_[a].rows()) + "x" +
                       std::to_string(maps_[a].cols()) + ", expected " + std::to_string(dim(ar.head)) + "x" +
                       std::to_string(dim(ar.tail)));
    }
    if (maps_[a].rows() * maps_[a].cols() > 0 && !(maps_[a].field() == field_)) throw InputError("map field mismatch");
  }
}

Representation Representation::zero_maps(Quiver quiver, DimensionVector dims, Field field) {
  std::vector<Matrix> maps;
  for (const auto& a : quiver.arrows()) {
    maps.emplace_back(field, static_cast<std::size_t>(dims.at(a.head)), static_cast<std::size_t>(dims.at(a.tail)));
  }
  return Representation(std::move(quiver), std::move(dims), std::move(maps), field);
}

long long Representation::total_dim() const {
  long long s = 0;
  for (auto d : dims_) s += d;
  return s;
}

namespace {

void check_compatible(const Representation& r1, const Representation& r2) {
  if (!(r1.quiver() == r2.quiver())) throw InputError("representations live on different quivers");
  if (!(r1.field() == r2.field())) throw InputError("representations live over different fields");
}

// Linear system of the intertwining condition. Column offsets per vertex returned in `offset`.
Matrix intertwiner_system(const Representation& r1, const Representation& r2, std::vector<std::size_t>& offset) {
  const Quiver& q = r1.quiver();
  const int nv = q.vertex_count();
  offset.assign(static_cast<std::size_t>(nv) + 1, 0);
  for (int i = 0; i < nv; ++i) offset[i + 1] = offset[i] + r2.dim(i) * r1.dim(i);
  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += r2.dim(a.head) * r1.dim(a.tail);
  Matrix m(r1.field(), eqs, offset.back());
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrows()[ai];
    const Matrix& A = r1.map(ai);
    const Matrix& B = r2.map(ai);
    const std::size_t wh = r2.dim(a.head), vt = r1.dim(a.tail), vh = r1.dim(a.head), wt = r2.dim(a.tail);
    for (std::size_t r = 0; r < wh; ++r) {
      for (std::size_t c = 0; c < vt; ++c, ++row) {
        // (f_h A)[r,c] = sum_k f_h[r,k] A[k,c]
        for (std::size_t k = 0; k < vh; ++k) {
          if (!A(k, c).is_zero()) m(row, offset[a.head] + r * vh + k) += A(k, c);
        }
        // (B f_t)[r,c] = sum_k B[r,k] f_t[k,c]
        for (std::size_t k = 0; k < wt; ++k) {
          if (!B(r, k).is_zero()) m(row, offset[a.tail] + k * vt + c) -= B(r, k);
        }
      }
    }
  }
  return m;
}

}  // namespace

bool is_morphism(const Representation& r1, const Representation& r2, const Morphism& f) {
  check_compatible(r1, r2);
  const Quiver& q = r1.quiver();
  if (static_cast<int>(f.size()) != q.vertex_count()) return false;
  for (int i = 0; i < q.vertex_count(); ++i) {
    if (f[i].rows() != r2.dim(i) || f[i].cols() != r1.dim(i)) return false;
  }
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrows()[ai];
    if (!(f[a.head] * r1.map(ai) == r2.map(ai) * f[a.tail])) return false;
  }
  return true;
}

std::vector<Morphism> hom_basis(const Representation& r1, const Representation& r2) {
  check_compatible(r1, r2);
  std::vector<std::size_t> offset;
  Matrix sys = intertwiner_system(r1, r2, offset);
  std::vector<Morphism> out;
  const int nv = r1.quiver().vertex_count();
  for (const auto& v : nullspace_basis(sys)) {
    Morphism f;
    for (int i = 0; i < nv; ++i) {
      Matrix fi(r1.field(), r2.dim(i), r1.dim(i));
      for (std::size_t r = 0; r < fi.rows(); ++r)
        for (std::size_t c = 0; c < fi.cols(); ++c) fi(r, c) = v[offset[i] + r * fi.cols() + c];
      f.push_back(std::move(fi));
    }
    out.push_back(std::move(f));
  }
  return out;
}

long long ext1_dim(const Representation& r1, const Representation& r2) {
  check_compatible(r1, r2);
  std::vector<std::size_t> offset;
  Matrix sys = intertwiner_system(r1, r2, offset);
  return static_cast<long long>(sys.rows()) - static_cast<long long>(rank(sys));
}

bool is_schur(const Representation& r) { return hom_basis(r, r).size() == 1; }

Representation direct_sum(const Representation& r1, const Representation& r2) {
  check_compatible(r1, r2);
  DimensionVector d = r1.dims();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += r2.dims()[i];
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < r1.maps().size(); ++a) maps.push_back(block_diag(r1.map(a), r2.map(a)));
  return Representation(r1.quiver(), d, std::move(maps), r1.field());
}

namespace {

void check_bases(const Representation& r, const std::vector<Matrix>& bases) {
  if (static_cast<int>(bases.size()) != r.quiver().vertex_count()) throw InputError("one subspace basis per vertex required");
  for (int i = 0; i < r.quiver().vertex_count(); ++i) {
    if (bases[i].rows() != r.dim(i)) throw InputError("subspace basis at vertex " + std::to_string(i) + " has the wrong ambient size");
    if (rank(bases[i]) != bases[i].cols()) throw InputError("subspace basis at vertex " + std::to_string(i) + " is not independent");
  }
}

Matrix as_field(const Matrix& m, const Field& f) { return m.rows() * m.cols() == 0 ? Matrix(f, m.rows(), m.cols()) : m; }

}  // namespace

Representation sub_representation(const Representation& r, const std::vector<Matrix>& bases) {
  check_bases(r, bases);
  DimensionVector d;
  for (const auto& b : bases) d.push_back(static_cast<long long>(b.cols()));
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < r.quiver().arrow_count(); ++ai) {
    const auto& a = r.quiver().arrows()[ai];
    const Matrix& st = as_field(bases[a.tail], r.field());
    const Matrix& sh = as_field(bases[a.head], r.field());
    Matrix image = r.map(ai) * st;
    auto x = solve(sh, image);
    if (!x) {
      throw InputError("subspace family is not invariant under arrow " + std::to_string(ai) + " (" + std::to_string(a.tail) +
                       "->" + std::to_string(a.head) + ")");
    }
    maps.push_back(std::move(*x));
  }
  return Representation(r.quiver(), d, std::move(maps), r.field());
}

Representation quotient(const Representation& r, const std::vector<Matrix>& bases) {
  sub_representation(r, bases);  // invariance check
  std::vector<Matrix> full;
  DimensionVector d;
  for (int i = 0; i < r.quiver().vertex_count(); ++i) {
    Matrix s = as_field(bases[i], r.field());
    Matrix c = complement_basis(s, r.dim(i));
    d.push_back(static_cast<long long>(c.cols()));
    full.push_back(hcat(s, c));
  }
  Representation conj = change_basis(r, full);
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < r.quiver().arrow_count(); ++ai) {
    const auto& a = r.quiver().arrows()[ai];
    const std::size_t kt = bases[a.tail].cols(), kh = bases[a.head].cols();
    maps.push_back(conj.map(ai).submatrix(kh, kt, static_cast<std::size_t>(d[a.head]), static_cast<std::size_t>(d[a.tail])));
  }
  return Representation(r.quiver(), d, std::move(maps), r.field());
}

Representation change_basis(const Representation& r, const std::vector<Matrix>& t) {
  if (static_cast<int>(t.size()) != r.quiver().vertex_count()) throw InputError("one change of basis per vertex required");
  std::vector<Matrix> inv;
  for (int i = 0; i < r.quiver().vertex_count(); ++i) {
    if (t[i].rows() != r.dim(i) || t[i].cols() != r.dim(i)) throw InputError("change of basis has the wrong size");
    auto ti = inverse(as_field(t[i], r.field()));
    if (!ti) throw InputError("change of basis at vertex " + std::to_string(i) + " is singular");
    inv.push_back(std::move(*ti));
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < r.quiver().arrow_count(); ++ai) {
    const auto& a = r.quiver().arrows()[ai];
    maps.push_back(inv[a.head] * r.map(ai) * as_field(t[a.tail], r.field()));
  }
  return Representation(r.quiver(), r.dims(), std::move(maps), r.field());
}

Representation random_representation(const Quiver& q, const DimensionVector& v, std::uint64_t seed, const Field& field) {
  if (static_cast<int>(v.size()) != q.vertex_count()) throw InputError("dims length does not match the quiver");
  Rng rng(seed);
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) {
    Matrix m(field, static_cast<std::size_t>(v[a.head]), static_cast<std::size_t>(v[a.tail]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rng.scalar(field);
    maps.push_back(std::move(m));
  }
  return Representation(q, v, std::move(maps), field);
}

}  // namespace qbt
