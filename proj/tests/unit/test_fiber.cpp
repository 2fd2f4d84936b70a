#include <doctest.h>

#include "oracle.hpp"
#include "qbt/cokernel.hpp"
#include "qbt/fiber_check.hpp"
#include "qbt/groebner.hpp"
#include "qbt/random.hpp"
#include "qbt/representation.hpp"
#include "qbt/syzygy.hpp"

using namespace qbt;

namespace {

const Field kQ;
const Field kFp = Field::prime(kDefaultPrime);

PolyMatrix poly_matrix(const Field& f, int n, std::vector<int> rows, std::vector<int> cols, const std::vector<std::string>& entries) {
  PolyMatrix m(f, n, rows, cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.set(r, c, HomogeneousPoly::parse(f, n, rows[r] - cols[c], entries[r * cols.size() + c]));
  return m;
}

PolyMatrix euler_column(const Field& f) { return poly_matrix(f, 2, {1, 1, 1}, {0}, {"x0", "x1", "x2"}); }

bool witness_revalidates(const PolyMatrix& m, const FiberReport& rep) {
  if (!rep.witness) return false;
  const PolyMatrix s = sampling_matrix(m);
  return !full_rank_at(s, rep.mode, *rep.witness);
}

// Common zero of the generators among the F_q-rational points of P^n.
bool has_rational_zero(const std::vector<HomogeneousPoly>& gens, int n, std::uint64_t q) {
  const Field f = Field::prime(q);
  bool found = false;
  oracle::for_each_point(n, q, [&](const std::vector<std::uint64_t>& pt) {
    if (found) return;
    Vector v;
    for (auto x : pt) v.push_back(Scalar(Residue{x, q}));
    for (const auto& g : gens)
      if (!g.evaluate(v).is_zero()) return;
    found = true;
  });
  return found;
}

HomogeneousPoly random_form(Rng& rng, const Field& f, int n, int d) {
  HomogeneousPoly p(f, n, d);
  for (const auto& m : monomial_basis(n, d))
    if (rng.below(2)) p.add_term(m, rng.scalar(f));
  return p;
}

}  // namespace

TEST_SUITE("fiber_check") {

TEST_CASE("probabilistic examples") {
  const auto e = probabilistic_full_rank(euler_column(kQ), FiberMode::Injective, 200, 0);
  CHECK(e.verdict == FiberVerdict::PassProbabilistic);
  CHECK(e.samples == 200);
  CHECK(e.prime == kDefaultPrime);

  const auto row = poly_matrix(kQ, 2, {2}, {0, 0}, {"x0*x1", "x0*x2"});
  const auto f = probabilistic_full_rank(row, FiberMode::Surjective, 200, 0);
  REQUIRE(f.verdict == FiberVerdict::Fail);
  REQUIRE(f.witness);
  CHECK((*f.witness)[0].is_zero());
  CHECK(witness_revalidates(row, f));

  const auto p1 = poly_matrix(kQ, 1, {1}, {0, 0}, {"x0", "x1"});
  CHECK(probabilistic_full_rank(p1, FiberMode::Surjective, 200, 0).passed());

  CHECK_THROWS_AS(sampling_matrix(euler_column(Field::prime(101))), InputError);
}

TEST_CASE("witness is the one from the smallest failing trial and is deterministic") {
  const auto z = poly_matrix(kQ, 2, {1}, {0}, {"0"});
  const auto a = probabilistic_full_rank(z, FiberMode::Injective, 50, 7);
  const auto b = probabilistic_full_rank(z, FiberMode::Injective, 50, 7);
  REQUIRE(a.verdict == FiberVerdict::Fail);
  CHECK(a.witness_trial == std::optional<std::size_t>(0));
  CHECK(a.witness == b.witness);
  CHECK(witness_revalidates(z, a));
}

TEST_CASE("maximal minors") {
  const auto mins = minors_ideal(euler_column(kQ), 1);
  REQUIRE(mins.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(mins[static_cast<std::size_t>(i)] == HomogeneousPoly::variable(kQ, 2, i));

  const auto g = poly_matrix(kQ, 2, {1, 1}, {0, 0}, {"x0", "x1", "x2", "x0 + x1"});
  const auto det = minors_ideal(g, 2);
  REQUIRE(det.size() == 1);
  CHECK(det[0].degree() == 2);
  CHECK(det[0] == HomogeneousPoly::parse(kQ, 2, 2, "x0^2 + x0*x1 - x1*x2"));

  const auto z = poly_matrix(kQ, 2, {1, 1, 1}, {0, 0}, {"0", "0", "0", "0", "0", "0"});
  for (const auto& m : minors_ideal(z, 2)) CHECK(m.is_zero());
  CHECK_THROWS_AS(minors_ideal(z, 3), InputError);
  CHECK(maximal_minor_count(z) == 3);
  CHECK(max_minor_degree(z) == 2);
}

TEST_CASE("projective emptiness examples") {
  const auto x = [](int i) { return HomogeneousPoly::variable(kQ, 2, i); };
  CHECK(certified_empty_projective_locus({x(0), x(1), x(2)}) == LocusResult::Empty);
  CHECK(certified_empty_projective_locus({x(0) * x(1), x(0) * x(2)}) == LocusResult::NonEmpty);
  const auto s = [](const char* t) { return HomogeneousPoly::parse(kQ, 2, 2, t); };
  CHECK(certified_empty_projective_locus({s("x0^2 + x1^2"), s("x1^2 + x2^2"), s("x0*x2")}) == LocusResult::Empty);
  CHECK(certified_empty_projective_locus({s("x0^2 - x1*x2"), s("x0^2")}) == LocusResult::NonEmpty);

  GroebnerOptions tiny;
  tiny.max_pairs = 0;
  CHECK(certified_empty_projective_locus({s("x0^2 + x1^2"), s("x1^2 + x2^2"), s("x0*x2"), s("x1*x2")}, tiny) ==
        LocusResult::Inconclusive);
}

TEST_CASE("Groebner emptiness never contradicts a point scan over F_5") {
  const std::uint64_t q = 5;
  const Field f5 = Field::prime(q);
  Rng rng(123);
  int empty = 0, nonempty = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t k = 2 + rng.below(3);
    std::vector<HomogeneousPoly> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_form(rng, f5, 2, 1 + static_cast<int>(rng.below(2))));
    const LocusResult res = certified_empty_projective_locus(gens);
    REQUIRE(res != LocusResult::Inconclusive);
    const bool pt = has_rational_zero(gens, 2, q);
    if (pt) CHECK(res == LocusResult::NonEmpty);
    (res == LocusResult::Empty ? empty : nonempty)++;
  }
  CHECK(empty > 5);
  CHECK(nonempty > 5);
}

TEST_CASE("two forms on P^2 always meet") {
  // The pair (x0, x1^2 + x2^2) has no common zero over F_p for p = 3 mod 4 (the default prime),
  // so sampling finds nothing, but over the algebraic closure the locus is two points.
  const auto row = poly_matrix(kQ, 2, {0}, {-1, -2}, {"x0", "x1^2 + x2^2"});
  CHECK_FALSE(has_rational_zero({row(0, 0).converted(Field::prime(3)), row(0, 1).converted(Field::prime(3))}, 2, 3));
  CHECK(has_rational_zero({row(0, 0).converted(Field::prime(5)), row(0, 1).converted(Field::prime(5))}, 2, 5));
  const auto rep = global_surjective(row);
  CHECK(rep.verdict == FiberVerdict::FailCertified);
  CHECK(rep.certification == CertificationStatus::Refuted);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("global checks") {
  const auto e = global_injective(euler_column(kQ));
  CHECK(e.verdict == FiberVerdict::PassCertified);
  CHECK(e.certification == CertificationStatus::Certified);

  // conic, conic, line with no common zero: x0^2 = x1^2 = x2 = 0 only at the origin
  const auto s = poly_matrix(kQ, 2, {0}, {-2, -2, -1}, {"x0^2", "x1^2", "x2"});
  CHECK(global_surjective(s).verdict == FiberVerdict::PassCertified);

  const auto z = poly_matrix(kQ, 2, {0}, {0}, {"0"});
  const auto zr = global_injective(z);
  CHECK(zr.verdict == FiberVerdict::Fail);
  CHECK(witness_revalidates(z, zr));

  FiberOptions no_cert;
  no_cert.certify = false;
  CHECK(global_injective(euler_column(kQ), no_cert).verdict == FiberVerdict::PassProbabilistic);

  FiberOptions small_budget;
  small_budget.max_minors = 2;
  const auto big = global_injective(euler_column(kQ), small_budget);
  CHECK(big.verdict == FiberVerdict::PassProbabilistic);
  CHECK(big.certification == CertificationStatus::NotAttempted);
}

TEST_CASE("sub-representations of globally injective data stay injective") {
  Rng rng(21);
  FiberOptions opts;
  opts.trials = 60;
  opts.certify = false;
  for (std::uint64_t t = 0; t < 15; ++t) {
    const auto r = random_representation(kronecker(3), {2, 6}, derive_seed(40, t), kFp);
    const auto base = expand_map(r.maps(), monomial_polys(kFp, 2, 1));
    REQUIRE(global_injective(base, opts).passed());
    // S0 a random line, S1 its image under all arrows plus one random extra vector
    Matrix s0(kFp, 2, 1);
    s0(0, 0) = rng.scalar(kFp);
    s0(1, 0) = rng.nonzero_scalar(kFp);
    Matrix imgs = hcat(hcat(r.map(0) * s0, r.map(1) * s0), r.map(2) * s0);
    Matrix extra(kFp, 6, 1);
    for (std::size_t i = 0; i < 6; ++i) extra(i, 0) = rng.scalar(kFp);
    const auto sub = sub_representation(r, {s0, column_basis(hcat(imgs, extra))});
    const auto alpha = expand_map(sub.maps(), monomial_polys(kFp, 2, 1));
    CHECK(global_injective(alpha, opts).passed());
  }
}

TEST_CASE("quotients of globally surjective data stay surjective") {
  Rng rng(22);
  FiberOptions opts;
  opts.trials = 60;
  opts.certify = false;
  const std::vector<int> degrees{2, 1};
  const Quiver q = star_quiver(syzygy_arrow_counts(2, degrees));
  for (std::uint64_t t = 0; t < 15; ++t) {
    const auto r = random_representation(q, {2, 2, 2}, derive_seed(41, t), kFp);
    const auto pres = syzygy_from_rep(r, 2, degrees, opts);
    REQUIRE(pres.is_bundle());
    Matrix center(kFp, 2, 1);
    center(0, 0) = rng.nonzero_scalar(kFp);
    center(1, 0) = rng.scalar(kFp);
    const auto quo = quotient(r, {center, Matrix(kFp, 2, 0), Matrix(kFp, 2, 0)});
    const auto qp = syzygy_from_rep(quo, 2, degrees, opts);
    CHECK(qp.c == 1);
    CHECK(qp.is_bundle());
  }
}

}
