#include "qbt/hm.hpp"

#include <algorithm>

#include "qbt/random.hpp"

namespace qbt {

namespace {

void check_p(int p) {
  if (p < 2) throw InputError("HM monads need p >= 2");
  if (2 * p + 1 > 31) throw InputError("p too large for the exterior index sets");
}

int mod(int i, int m) { return ((i % m) + m) % m; }

}  // namespace

HMMonadData hm_build(int p, const Field& field) {
  check_p(p);
  HMMonadData d;
  d.p = p;
  d.field = field;
  const int dim = 2 * p + 1;
  const int sign = p % 2 ? 1 : -1;  // (-1)^{p-1}
  d.Q = {{{0, 1}, {sign, 0}}};
  d.beta.assign(static_cast<std::size_t>(dim), {});
  for (int i = 0; i < dim; ++i) {
    std::vector<int> f1, f2{mod(i, dim)};
    for (int s = 1; s <= p; ++s) f1.push_back(mod(i + s, dim));
    for (int s = p + 1; s <= 2 * p - 1; ++s) f2.push_back(mod(i + s, dim));
    d.beta[static_cast<std::size_t>(i)] = {ExteriorElement::wedge_of(field, dim, f1), ExteriorElement::wedge_of(field, dim, f2)};
  }
  // alpha = (beta Q)^t
  d.alpha.assign(2, std::vector<ExteriorElement>(static_cast<std::size_t>(dim)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) {
    for (std::size_t col = 0; col < 2; ++col) {
      ExteriorElement acc(field, dim, p, Variance::OnV);
      for (std::size_t k = 0; k < 2; ++k) {
        if (d.Q[k][col] != 0) acc += d.beta[i][k].scaled(field.from_int(d.Q[k][col]));
      }
      d.alpha[col][i] = acc;
    }
  }
  return d;
}

std::vector<std::vector<ExteriorElement>> hm_composition(const HMMonadData& d) {
  const auto dim = static_cast<std::size_t>(d.dim());
  std::vector<std::vector<ExteriorElement>> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      ExteriorElement acc(d.field, d.dim(), 2 * d.p, Variance::OnV);
      for (std::size_t k = 0; k < 2; ++k) acc += wedge(d.beta[i][k], d.alpha[k][j]);
      out[i].push_back(std::move(acc));
    }
  }
  return out;
}

bool hm_check_complex(const HMMonadData& d) {
  for (const auto& row : hm_composition(d))
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

bool hm_check_complex(int p) { return hm_check_complex(hm_build(p)); }

HMFiber hm_fiber_matrices(const HMMonadData& d, const Vector& v) {
  const int dim = d.dim();
  if (static_cast<int>(v.size()) != dim) throw InputError("fiber point needs 2p+1 coordinates");
  if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) throw InputError("fiber point is the zero vector");
  const Field& f = d.field;
  HMFiber out;
  const auto null = nullspace_basis(contraction_matrix(v, dim, d.p));
  const std::size_t grade_p = exterior_basis(dim, d.p).size();
  out.kernel_basis = Matrix::from_columns(f, grade_p, null);
  const std::size_t k = null.size();
  const auto udim = static_cast<std::size_t>(dim);

  // images i_v(hodge(alpha_{kj})) as columns, one block per component
  out.alpha_fiber = Matrix(f, 2 * k, udim);
  for (std::size_t comp = 0; comp < 2; ++comp) {
    std::vector<Vector> images;
    for (std::size_t j = 0; j < udim; ++j) images.push_back(contract(v, hodge_to_dual(d.alpha[comp][j])).coordinates());
    auto coords = solve(out.kernel_basis, Matrix::from_columns(f, grade_p, images));
    if (!coords) throw std::logic_error("alpha image leaves ker(i_v)");
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < udim; ++j) out.alpha_fiber(comp * k + l, j) = (*coords)(l, j);
  }

  out.beta_fiber = Matrix(f, udim, 2 * k);
  for (std::size_t i = 0; i < udim; ++i) {
    for (std::size_t comp = 0; comp < 2; ++comp) {
      const Vector b = d.beta[i][comp].coordinates();
      for (std::size_t l = 0; l < k; ++l) {
        Scalar s = f.zero();
        for (std::size_t q = 0; q < grade_p; ++q) {
          if (!b[q].is_zero()) s += b[q] * out.kernel_basis(q, l);
        }
        out.beta_fiber(i, comp * k + l) = s;
      }
    }
  }
  return out;
}

Matrix hm_symbolic_at(const HMMonadData& d, const Vector& v) {
  const auto dim = static_cast<std::size_t>(d.dim());
  const auto comp = hm_composition(d);
  Matrix m(d.field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Vector form = volume_iso(comp[i][j]).coordinates();
      Scalar s = d.field.zero();
      for (std::size_t q = 0; q < dim; ++q) s += form[q] * v[q];
      m(i, j) = s;
    }
  }
  return m;
}

std::pair<Representation, Representation> hm_kronecker_reps(const HMMonadData& d) {
  const auto basis = exterior_basis(d.dim(), d.p);
  const auto dim = static_cast<std::size_t>(d.dim());
  std::vector<Matrix> phi, psi;
  for (IndexSet s : basis) {
    Matrix a(d.field, dim, 2), b(d.field, 2, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < 2; ++k) {
        a(i, k) = d.beta[i][k].coeff(s);
        b(k, i) = d.alpha[k][i].coeff(s);
      }
    }
    phi.push_back(std::move(a));
    psi.push_back(std::move(b));
  }
  const Quiver q = kronecker(static_cast<int>(basis.size()));
  const auto ld = static_cast<long long>(dim);
  return {Representation(q, {2, ld}, std::move(phi), d.field), Representation(q, {ld, 2}, std::move(psi), d.field)};
}

ChernPolynomial chern_omega_twist(int n, int p, int t) {
  if (p < 0 || p > n) throw InputError("chern_omega_twist needs 0 <= p <= n");
  ChernPolynomial c(n);
  for (int q = 1; q <= p; ++q) c = c.twisted(binomial(n, q - 1), 1).inverse();
  return c.twisted(binomial(n, p), t - p);
}

BundleTriple hm_triple(int p) {
  check_p(p);
  const int n = 2 * p;
  BundleTriple t;
  t.A = {1, ChernPolynomial::line_bundle(n, -1)};
  t.B = {binomial(n, p), chern_omega_twist(n, p, p)};
  t.C = {1, ChernPolynomial(n)};
  t.m = t.n = binomial(n + 1, p);
  t.r = n + 1;
  t.realization = Realization::HM;
  t.ambient = n;
  t.p = p;
  return t;
}

CompositionTable hm_table(int p, const Field& field) {
  check_p(p);
  const int dim = 2 * p + 1;
  const auto basis = exterior_basis(dim, p);
  CompositionTable t(field, basis.size(), basis.size(), static_cast<std::size_t>(dim));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto sj = ExteriorElement::basis_element(field, dim, basis[j], Variance::OnV, field.one());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto prod = wedge(sj, ExteriorElement::basis_element(field, dim, basis[i], Variance::OnV, field.one()));
      if (prod.is_zero()) continue;
      const Vector form = volume_iso(prod).coordinates();
      for (std::size_t k = 0; k < form.size(); ++k) t.at(j, i, k) = form[k];
    }
  }
  return t;
}

MonadData hm_monad(const HMMonadData& d) {
  auto [R, Rp] = hm_kronecker_reps(d);
  MonadData m;
  m.triple = hm_triple(d.p);
  m.table = hm_table(d.p, d.field);
  m.a = d.dim();
  m.b = 2;
  m.c = d.dim();
  m.A = Rp.maps();
  m.B = R.maps();
  validate_monad(m);
  return m;
}

HMReport hm_verify(int p, std::size_t trials, std::uint64_t seed) {
  check_p(p);
  HMReport rep;
  rep.p = p;
  rep.trials = trials;
  rep.seed = seed;
  rep.prime = kDefaultPrime;
  if (p > 3) rep.note = "p > 3 is outside the tested budget";

  const HMMonadData d = hm_build(p);
  for (const auto& row : d.beta)
    for (const auto& e : row) rep.beta_entries.push_back(e.to_string());
  rep.complex_ok = hm_check_complex(d);
  if (!rep.complex_ok) rep.failures.push_back("beta alpha != 0 in Lambda^{2p} V");

  // fiber conditions over F_prime
  const Field fp = Field::prime(kDefaultPrime);
  const HMMonadData dp = hm_build(p, fp);
  const auto dim = static_cast<std::size_t>(d.dim());
  rep.kernel_dim_expected = static_cast<std::size_t>(binomial(2 * p, p));
  rep.kernel_dim_ok = rep.injective_ok = rep.surjective_ok = rep.fiber_symbol_consistent = true;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    Vector v;
    do {
      v.clear();
      for (std::size_t q = 0; q < dim; ++q) v.push_back(rng.scalar(fp));
    } while (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); }));
    const HMFiber fib = hm_fiber_matrices(dp, v);
    if (fib.kernel_dim() != rep.kernel_dim_expected) rep.kernel_dim_ok = false;
    if (rank(fib.alpha_fiber) != dim) rep.injective_ok = false;
    if (rank(fib.beta_fiber) != dim) rep.surjective_ok = false;
    if (!(fib.beta_fiber * fib.alpha_fiber == hm_symbolic_at(dp, v))) rep.fiber_symbol_consistent = false;
  }
  if (!rep.kernel_dim_ok) rep.failures.push_back("dim ker(i_v) differs from C(2p,p) at some point");
  if (!rep.injective_ok) rep.failures.push_back("alpha is not injective on some sampled fiber");
  if (!rep.surjective_ok) rep.failures.push_back("beta is not surjective on some sampled fiber");
  if (!rep.fiber_symbol_consistent) rep.failures.push_back("fiber composition disagrees with the symbolic composition");
  if (trials > 0) rep.note += (rep.note.empty() ? "" : "; ") + std::string("fiber checks are probabilistic");

  // Kronecker representations over Q
  auto [R, Rp] = hm_kronecker_reps(d);
  rep.phi_elementary = true;
  for (const auto& m : R.maps()) {
    if (m.is_zero()) continue;
    ++rep.nonzero_phi;
    std::size_t nz = 0;
    for (const auto& s : m.data()) {
      if (s.is_zero()) continue;
      ++nz;
      if (!(s.is_one() || (-s).is_one())) rep.phi_elementary = false;
    }
    if (nz != 1) rep.phi_elementary = false;
  }
  if (rep.nonzero_phi != static_cast<std::size_t>(4 * p + 2) || !rep.phi_elementary) {
    rep.failures.push_back("expected 4p+2 signed elementary coefficient matrices, found " + std::to_string(rep.nonzero_phi));
  }
  rep.r_schur = is_schur(R);
  rep.r_prime_schur = is_schur(Rp);
  if (!rep.r_schur) rep.failures.push_back("R is not Schur");
  if (!rep.r_prime_schur) rep.failures.push_back("R' is not Schur");
  rep.R = std::move(R);
  rep.R_prime = std::move(Rp);

  // monad-side invariants and verdict
  const MonadData m = hm_monad(d);
  rep.relations_ok = check_relations(m).ok;
  if (!rep.relations_ok) rep.failures.push_back("monad relations fail");
  rep.cohomology = cohomology_invariants(m);
  rep.rank_expected = 2 * (binomial(2 * p, p) - 2 * p - 1);
  if (rep.cohomology.rank != rep.rank_expected) rep.failures.push_back("rank differs from 2(C(2p,p) - 2p - 1)");
  if (!rep.cohomology.chern_consistent) rep.failures.push_back("Chern coefficients above the rank do not vanish");
  const MonadDecomposition dec = decompose_monad(m, seed);
  rep.verdict = cohomology_decomposability_verdict(m, dec);
  if (rep.verdict.verdict != MonadVerdict::Indecomposable) rep.failures.push_back("verdict is " + to_string(rep.verdict.verdict));
  return rep;
}

}  // namespace qbt
