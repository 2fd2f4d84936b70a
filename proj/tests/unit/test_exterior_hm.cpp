#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "qbt/exterior.hpp"
#include "qbt/hm.hpp"
#include "qbt/random.hpp"

using namespace qbt;

namespace {

const Field kQ;
const Field kFp = Field::prime(kDefaultPrime);

ExteriorElement e(int dim, const std::vector<int>& s, Variance var = Variance::OnV) {
  return ExteriorElement::basis_element(kQ, dim, index_set(s), var, kQ.one());
}

ExteriorElement random_element(Rng& rng, const Field& f, int dim, int k, Variance var) {
  ExteriorElement x(f, dim, k, var);
  for (IndexSet s : exterior_basis(dim, k))
    if (rng.below(2)) x.add_term(s, rng.scalar(f));
  return x;
}

Vector random_point(Rng& rng, const Field& f, int dim) {
  Vector v(static_cast<std::size_t>(dim));
  for (auto& x : v) x = rng.scalar(f);
  v[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(dim)))] = rng.nonzero_scalar(f);
  return v;
}

// sign of the sequence (S sorted, then T sorted) as a permutation
int concat_sign(IndexSet s, IndexSet t) {
  std::vector<int> seq = indices_of(s);
  for (int x : indices_of(t)) seq.push_back(x);
  return oracle::perm_sign(seq);
}

IndexSet complement(IndexSet s, int dim) { return (~s) & ((1u << dim) - 1); }

ChernPolynomial from_ll(int n, const std::vector<long long>& c) {
  std::vector<mpz_class> z;
  for (long long x : c) z.emplace_back(static_cast<long>(x));
  return ChernPolynomial(n, z);
}

}  // namespace

TEST_SUITE("exterior_hm") {

TEST_CASE("index sets and bases") {
  CHECK(indices_of(index_set({3, 1})) == std::vector<int>{1, 3});
  CHECK(grade_of(index_set({0, 2, 4})) == 3);
  const auto b = exterior_basis(5, 2);
  REQUIRE(b.size() == 10);
  CHECK(b.front() == index_set({0, 1}));
  CHECK(b[1] == index_set({0, 2}));
  CHECK(b.back() == index_set({3, 4}));
  for (int dim = 1; dim <= 9; ++dim)
    for (int k = 0; k <= dim; ++k) CHECK(static_cast<long long>(exterior_basis(dim, k).size()) == oracle::binom(dim, k));
}

TEST_CASE("wedge examples") {
  CHECK(wedge(e(5, {1, 2}), e(5, {1, 4})).is_zero());
  CHECK(wedge(e(5, {0}), e(5, {1})) == e(5, {0, 1}));
  CHECK(wedge(e(5, {1}), e(5, {0})) == e(5, {0, 1}).scaled(kQ.from_int(-1)));
  CHECK(wedge(e(5, {1, 2}), e(5, {3, 4})) == e(5, {1, 2, 3, 4}));
  CHECK(e(5, {0, 1}).to_string() == "x0∧x1");
  CHECK_THROWS_AS(wedge(e(5, {0}), e(5, {1}, Variance::OnVdual)), InputError);
}

TEST_CASE("shuffle signs and wedge_of agree with permutation parity") {
  for (int dim = 2; dim <= 7; ++dim)
    for (IndexSet s = 0; s < (1u << dim); ++s)
      for (IndexSet t = 0; t < (1u << dim); ++t) {
        if (s & t) continue;
        CHECK(shuffle_sign(s, t) == concat_sign(s, t));
      }
  const std::vector<int> f{3, 0, 4, 1};
  const auto w = ExteriorElement::wedge_of(kQ, 5, f);
  CHECK(w.coeff(index_set(f)) == kQ.from_int(oracle::perm_sign(f)));
  CHECK(ExteriorElement::wedge_of(kQ, 5, {2, 2}).is_zero());
}

TEST_CASE("contraction examples") {
  const Vector e0{kQ.one(), kQ.zero(), kQ.zero()}, e2{kQ.zero(), kQ.zero(), kQ.one()};
  CHECK(contract(e0, e(3, {0, 1}, Variance::OnVdual)) == e(3, {1}, Variance::OnVdual));
  CHECK(contract(e2, e(3, {0, 1}, Variance::OnVdual)).is_zero());
  const Vector e1{kQ.zero(), kQ.one(), kQ.zero()};
  CHECK(contract(e1, e(3, {0, 1}, Variance::OnVdual)) == e(3, {0}, Variance::OnVdual).scaled(kQ.from_int(-1)));
}

TEST_CASE("algebraic identities on random elements") {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const int dim = 5 + static_cast<int>(rng.below(3));
    const int k = 1 + static_cast<int>(rng.below(3)), l = 1 + static_cast<int>(rng.below(2)), m = static_cast<int>(rng.below(2));
    const auto a = random_element(rng, kFp, dim, k, Variance::OnVdual);
    const auto b = random_element(rng, kFp, dim, l, Variance::OnVdual);
    const auto c = random_element(rng, kFp, dim, m, Variance::OnVdual);
    // graded antisymmetry and associativity
    const Scalar sgn = kFp.from_int((k * l) % 2 ? -1 : 1);
    CHECK(wedge(a, b) == wedge(b, a).scaled(sgn));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    // i_v is an anti-derivation and squares to zero
    const Vector v = random_point(rng, kFp, dim);
    const Scalar s = kFp.from_int(k % 2 ? -1 : 1);
    CHECK(contract(v, wedge(a, b)) == wedge(contract(v, a), b) + wedge(a, contract(v, b)).scaled(s));
    if (k >= 2) CHECK(contract(v, contract(v, a)).is_zero());
    // contraction_matrix acts on coordinates
    CHECK(contraction_matrix(v, dim, k) * a.coordinates() == contract(v, a).coordinates());
  }
}

TEST_CASE("volume and Hodge identifications") {
  CHECK(volume_iso(e(5, {1, 2, 3, 4})) == e(5, {0}, Variance::OnVdual));
  for (IndexSet s : exterior_basis(5, 4)) {
    const IndexSet j = complement(s, 5);
    const auto img = volume_iso(ExteriorElement::basis_element(kQ, 5, s, Variance::OnV, kQ.one()));
    CHECK(img == ExteriorElement::basis_element(kQ, 5, j, Variance::OnVdual, kQ.from_int(concat_sign(s, j))));
  }
  for (int p = 2; p <= 3; ++p) {
    const int dim = 2 * p + 1;
    for (IndexSet s : exterior_basis(dim, p)) {
      const auto w = ExteriorElement::basis_element(kQ, dim, s, Variance::OnV, kQ.one());
      const auto h = hodge_to_dual(w);
      CHECK(h == ExteriorElement::basis_element(kQ, dim, complement(s, dim), Variance::OnVdual, kQ.from_int(concat_sign(s, complement(s, dim)))));
      CHECK(hodge_from_dual(h) == w);
    }
  }
  // e_{1,2} -> sign of (1,2,0,3,4) = +1
  CHECK(hodge_to_dual(e(5, {1, 2})) == e(5, {0, 3, 4}, Variance::OnVdual));

  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(rng, kFp, 5, 2, Variance::OnV), b = random_element(rng, kFp, 5, 2, Variance::OnV);
    const Scalar c = rng.scalar(kFp);
    CHECK(hodge_to_dual(a + b.scaled(c)) == hodge_to_dual(a) + hodge_to_dual(b).scaled(c));
    const auto o1 = random_element(rng, kFp, 5, 4, Variance::OnV), o2 = random_element(rng, kFp, 5, 4, Variance::OnV);
    CHECK(volume_iso(o1 + o2.scaled(c)) == volume_iso(o1) + volume_iso(o2).scaled(c));
    // <b, i_v(hodge(a))> = volume_iso(b ^ a)(v)
    const Vector v = random_point(rng, kFp, 5);
    const Scalar lhs = pairing(b, contract(v, hodge_to_dual(a)));
    const auto vol = volume_iso(wedge(b, a));
    Scalar rhs = kFp.zero();
    for (int j = 0; j < 5; ++j) rhs += vol.coeff(index_set({j})) * v[static_cast<std::size_t>(j)];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("HM construction for p = 2") {
  const auto d = hm_build(2);
  CHECK(d.beta[0][0] == e(5, {1, 2}));
  CHECK(d.beta[0][1] == e(5, {0, 3}));
  CHECK(d.beta[1][0] == e(5, {2, 3}));
  CHECK(d.beta[1][1] == e(5, {1, 4}));
  CHECK(d.Q[0][0] == 0);
  CHECK(d.Q[0][1] == 1);
  CHECK(d.Q[1][0] == -1);
  CHECK(d.Q[1][1] == 0);
  std::set<IndexSet> seen;
  for (const auto& row : d.beta)
    for (const auto& x : row) {
      REQUIRE(x.terms().size() == 1);
      seen.insert(x.terms().begin()->first);
    }
  CHECK(seen.size() == 10);
  // alpha = (beta Q)^t
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(d.alpha[0][i] == d.beta[i][1].scaled(kQ.from_int(-1)));
    CHECK(d.alpha[1][i] == d.beta[i][0]);
  }
  CHECK(hm_build(3).Q[1][0] == 1);
  CHECK_THROWS_AS(hm_build(1), InputError);
}

TEST_CASE("HM complex condition") {
  CHECK(hm_check_complex(2));
  CHECK(hm_check_complex(3));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      auto d = hm_build(2);
      d.beta[i][k] = d.beta[i][k].scaled(kQ.from_int(2));
      CHECK_FALSE(hm_check_complex(d));
    }
  auto swapped = hm_build(3);
  std::swap(swapped.beta[0][0], swapped.beta[1][0]);
  CHECK_FALSE(hm_check_complex(swapped));
}

TEST_CASE("diagonal entries vanish by the sign identity") {
  for (int p = 2; p <= 4; ++p) {
    const int lhs = (p % 2 ? 1 : -1) + ((p * p) % 2 ? -1 : 1);
    CHECK(lhs == 0);
    const auto d = hm_build(p);
    const auto comp = hm_composition(d);
    for (int i = 0; i < d.dim(); ++i) CHECK(comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].is_zero());
  }
  CHECK(hm_check_complex(4));
}

TEST_CASE("fiber model") {
  for (int p = 2; p <= 3; ++p) {
    const auto d = hm_build(p, kFp);
    Rng rng(static_cast<std::uint64_t>(p));
    for (int t = 0; t < 15; ++t) {
      const Vector v = random_point(rng, kFp, d.dim());
      const auto fib = hm_fiber_matrices(d, v);
      CHECK(static_cast<long long>(fib.kernel_dim()) == oracle::binom(2 * p, p));
      CHECK((contraction_matrix(v, d.dim(), p) * fib.kernel_basis).is_zero());
      CHECK(rank(fib.alpha_fiber) == static_cast<std::size_t>(d.dim()));
      CHECK(rank(fib.beta_fiber) == static_cast<std::size_t>(d.dim()));
      CHECK(fib.beta_fiber * fib.alpha_fiber == hm_symbolic_at(d, v));
      CHECK((fib.beta_fiber * fib.alpha_fiber).is_zero());
    }
  }
  const auto d = hm_build(2, kFp);
  CHECK_THROWS_AS(hm_fiber_matrices(d, Vector(5, kFp.zero())), InputError);
}

TEST_CASE("Kronecker representations") {
  const auto d = hm_build(2);
  const auto [R, Rp] = hm_kronecker_reps(d);
  CHECK(R.quiver() == kronecker(10));
  CHECK(R.dims() == DimensionVector{2, 5});
  CHECK(Rp.dims() == DimensionVector{5, 2});
  std::size_t nonzero = 0;
  for (const auto& m : R.maps()) {
    int entries = 0;
    for (const auto& s : m.data()) {
      if (s.is_zero()) continue;
      ++entries;
      CHECK((s == kQ.one() || s == kQ.from_int(-1)));
    }
    CHECK(entries <= 1);
    nonzero += entries == 1;
  }
  CHECK(nonzero == 10);
  CHECK(is_schur(R));
  CHECK(is_schur(Rp));

  const auto [R3, R3p] = hm_kronecker_reps(hm_build(3));
  std::size_t nz3 = 0;
  for (const auto& m : R3.maps()) nz3 += !m.is_zero();
  CHECK(R3.quiver() == kronecker(35));
  CHECK(nz3 == 14);
  CHECK(is_schur(R3));
  CHECK(is_schur(R3p));
}

TEST_CASE("HM monad data") {
  const auto t = hm_triple(2);
  CHECK(t.m == 10);
  CHECK(t.n == 10);
  CHECK(t.r == 5);
  CHECK(t.B.rank == 6);
  const auto m = hm_monad(hm_build(2));
  CHECK(m.a == 5);
  CHECK(m.b == 2);
  CHECK(m.c == 5);
  CHECK(m.table == hm_table(2));
}

TEST_CASE("Chern classes of twisted forms") {
  CHECK(chern_omega_twist(2, 1, 1) == from_ll(2, {1, -1, 1}));
  CHECK(chern_omega_twist(3, 0, 0) == ChernPolynomial(3));
  for (int n = 1; n <= 5; ++n) CHECK(chern_omega_twist(n, n, n) == ChernPolynomial::line_bundle(n, -1));
  // c(Omega^1) = (1 - t)^{n+1} from the Euler sequence
  for (int n = 1; n <= 5; ++n) CHECK(chern_omega_twist(n, 1, 0) == from_ll(n, oracle::linear_power(n, -1, n + 1)));

  // The rank-2 cohomology on P^4: c = c(Omega^2(2))^2 (1 - t)^{-5}
  const auto c = chern_omega_twist(4, 2, 2).pow(2) * ChernPolynomial::line_bundle(4, -1).pow(-5);
  CHECK(c[3] == 0);
  CHECK(c[4] == 0);
  // classical values c1 = 5, c2 = 10 twisted by -3: c1 - 6, c2 - 3 c1 + 9
  CHECK(c == from_ll(4, {1, 5 - 6, 10 - 15 + 9, 0, 0}));
}

TEST_CASE("HM verification report") {
  const auto r2 = hm_verify(2, 50, 0);
  CHECK(r2.passed());
  CHECK(r2.cohomology.rank == 2);
  CHECK(r2.verdict.verdict == MonadVerdict::Indecomposable);
  CHECK(r2.nonzero_phi == 10);
  CHECK(r2.kernel_dim_expected == 6);
  CHECK(r2.beta_entries.front() == "x1∧x2");
}

}
