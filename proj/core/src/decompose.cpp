#include "qbt/decompose.hpp"

#include <stdexcept>

#include "qbt/factor.hpp"
#include "qbt/random.hpp"
#include "qbt/upoly.hpp"

namespace qbt {

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::CertifiedSchur:
      return "certified_schur";
    case Certificate::CertifiedSplit:
      return "certified_split";
    case Certificate::HeuristicIndecomposable:
      return "heuristic_indecomposable";
  }
  return "unknown";
}

namespace {

struct Piece {
  Representation rep;
  std::vector<Matrix> embed;  // per vertex: original coordinates of this piece's basis
  Certificate cert;
  int trials;
};

Matrix block_matrix(const Morphism& e, const Field& f) {
  Matrix big(f, 0, 0);
  for (const auto& m : e) big = block_diag(big, m);
  return big;
}

Morphism combine(const std::vector<Morphism>& basis, Rng& rng, const Field& f) {
  Morphism e;
  for (const auto& m : basis.front()) e.emplace_back(f, m.rows(), m.cols());
  for (const auto& b : basis) {
    Scalar c = rng.scalar(f);
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b[i].scaled(c);
  }
  return e;
}

// Attempts a split of r along e. On success appends both halves' pieces and returns true.
bool try_split(const Representation& r, const Morphism& e, std::uint64_t seed, int max_trials,
               const std::vector<Matrix>& embed, std::vector<Piece>& out);

void split_rec(const Representation& r, int max_trials, std::uint64_t seed, const std::vector<Matrix>& embed,
               std::vector<Piece>& out) {
  if (r.total_dim() == 0) return;
  const Field& f = r.field();
  std::vector<Morphism> end = hom_basis(r, r);
  if (end.size() == 1) {
    out.push_back({r, embed, Certificate::CertifiedSchur, 0});
    return;
  }
  for (std::size_t k = 0; k < end.size(); ++k) {
    if (try_split(r, end[k], derive_seed(seed, 2 * k), max_trials, embed, out)) return;
  }
  for (int t = 0; t < max_trials; ++t) {
    Rng rng(derive_seed(seed, 0x100000 + static_cast<std::uint64_t>(t)));
    Morphism e = combine(end, rng, f);
    if (try_split(r, e, derive_seed(seed, 0x200000 + static_cast<std::uint64_t>(t)), max_trials, embed, out)) return;
  }
  out.push_back({r, embed, Certificate::HeuristicIndecomposable, max_trials});
}

bool try_split(const Representation& r, const Morphism& e, std::uint64_t seed, int max_trials,
               const std::vector<Matrix>& embed, std::vector<Piece>& out) {
  const Field& f = r.field();
  UPoly mu = minimal_polynomial(block_matrix(e, f));
  auto split = coprime_split(mu, seed);
  if (!split) return false;
  Bezout bz = xgcd(split->first, split->second);
  UPoly w = divmod(bz.u * split->first, mu).second;
  const int nv = r.quiver().vertex_count();
  std::vector<Matrix> im, ker;
  std::size_t im_total = 0, ker_total = 0;
  for (int i = 0; i < nv; ++i) {
    Matrix pi = evaluate_at(w, e[i]);
    im.push_back(column_basis(pi));
    ker.push_back(Matrix::from_columns(f, r.dim(i), nullspace_basis(pi)));
    im_total += im.back().cols();
    ker_total += ker.back().cols();
  }
  if (im_total == 0 || ker_total == 0) return false;
  Representation p1 = sub_representation(r, im);
  Representation p2 = sub_representation(r, ker);
  std::vector<Matrix> e1, e2;
  for (int i = 0; i < nv; ++i) {
    e1.push_back(embed[i] * im[i]);
    e2.push_back(embed[i] * ker[i]);
  }
  split_rec(p1, max_trials, derive_seed(seed, 1), e1, out);
  split_rec(p2, max_trials, derive_seed(seed, 2), e2, out);
  return true;
}

}  // namespace

DecompositionReport decompose(const Representation& r, int max_trials, std::uint64_t seed) {
  const Field& f = r.field();
  const int nv = r.quiver().vertex_count();
  std::vector<Matrix> id;
  for (int i = 0; i < nv; ++i) id.push_back(Matrix::identity(f, r.dim(i)));
  std::vector<Piece> pieces;
  split_rec(r, max_trials, seed, id, pieces);

  DecompositionReport rep;
  for (int i = 0; i < nv; ++i) rep.change_of_basis.emplace_back(f, r.dim(i), 0);
  for (auto& p : pieces) {
    for (int i = 0; i < nv; ++i) rep.change_of_basis[i] = hcat(rep.change_of_basis[i], p.embed[i]);
    rep.summands.push_back(std::move(p.rep));
    rep.summand_certificates.push_back(p.cert);
    if (p.cert == Certificate::HeuristicIndecomposable) rep.trials += p.trials;
  }
  rep.certificate = rep.summands.size() == 1 ? rep.summand_certificates.front() : Certificate::CertifiedSplit;
  if (!verify_decomposition(r, rep)) throw std::logic_error("decomposition failed its block-diagonal verification");
  return rep;
}

bool verify_decomposition(const Representation& r, const DecompositionReport& report) {
  const int nv = r.quiver().vertex_count();
  DimensionVector sum(static_cast<std::size_t>(nv), 0);
  for (const auto& s : report.summands) {
    if (!(s.quiver() == r.quiver())) return false;
    for (int i = 0; i < nv; ++i) sum[i] += s.dims()[i];
  }
  if (sum != r.dims()) return false;
  if (static_cast<int>(report.change_of_basis.size()) != nv) return false;
  Representation conj = change_basis(r, report.change_of_basis);
  for (std::size_t a = 0; a < r.quiver().arrow_count(); ++a) {
    Matrix expected(r.field(), 0, 0);
    for (const auto& s : report.summands) expected = block_diag(expected, s.map(a));
    if (!(expected == conj.map(a))) return false;
  }
  return true;
}

}  // namespace qbt
