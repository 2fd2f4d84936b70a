#include <doctest.h>

#include "qbt/quiver.hpp"
#include "qbt/random.hpp"

using namespace qbt;

namespace {

// Direct transcription of the bilinear form, arrow by arrow.
long long naive_euler(const Quiver& q, const DimensionVector& v, const DimensionVector& w) {
  long long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  for (const Arrow& a : q.arrows()) s -= v[static_cast<std::size_t>(a.tail)] * w[static_cast<std::size_t>(a.head)];
  return s;
}

}  // namespace

TEST_SUITE("quiver_core") {

TEST_CASE("euler and tits form examples") {
  CHECK(euler_form(kronecker(3), {1, 1}, {1, 1}) == -1);
  CHECK(euler_form(kronecker(3), {0, 0}, {4, 7}) == 0);
  CHECK(euler_form(kronecker(35), {1, 35}, {1, 35}) == 1);
  CHECK(tits_form(kronecker(3), {1, 3}) == 1);
  CHECK(tits_form(kronecker(3), {1, 5}) == 11);
  // syzygy quiver for P^2 with degrees (2, 1): center carries c = 1, branches 5 and 5
  CHECK(tits_form(syzygy_quiver(6, 3), {1, 5, 5}) == 6);
  CHECK_THROWS_AS(euler_form(kronecker(3), {1}, {1, 1}), InputError);
}

TEST_CASE("constructors use the fixed vertex numbering") {
  const Quiver k3 = kronecker(3);
  CHECK(k3.vertex_count() == 2);
  CHECK(k3.arrow_count() == 3);
  for (const Arrow& a : k3.arrows()) CHECK(a == Arrow{0, 1});

  const Quiver s = syzygy_quiver(6, 3);
  CHECK(s.vertex_count() == 3);
  REQUIRE(s.arrow_count() == 9);
  for (std::size_t i = 0; i < 6; ++i) CHECK(s.arrows()[i] == Arrow{1, 0});
  for (std::size_t i = 6; i < 9; ++i) CHECK(s.arrows()[i] == Arrow{2, 0});

  const Quiver st = star_quiver({2, 1, 3});
  CHECK(st.vertex_count() == 4);
  REQUIRE(st.arrow_count() == 6);
  CHECK(st.arrows()[0] == Arrow{1, 0});
  CHECK(st.arrows()[2] == Arrow{2, 0});
  CHECK(st.arrows()[5] == Arrow{3, 0});

  const Quiver t = three_vertex(2, 3);
  CHECK(t.vertex_count() == 3);
  CHECK(t.arrows()[1] == Arrow{0, 1});
  CHECK(t.arrows()[2] == Arrow{1, 2});

  CHECK(parse_quiver_spec("kronecker:4") == kronecker(4));
  CHECK(parse_quiver_spec("three:2,3") == three_vertex(2, 3));
  CHECK(parse_quiver_spec("syzygy:6,3") == syzygy_quiver(6, 3));
  CHECK(parse_quiver_spec("star:2,1,3") == st);
  CHECK_THROWS_AS(parse_quiver_spec("cyclic:3"), InputError);
}

TEST_CASE("Kac forcing and Schur roots") {
  CHECK(kac_forces_decomposable(kronecker(3), {1, 5}));
  CHECK_FALSE(kac_forces_decomposable(kronecker(35), {1, 35}));
  CHECK_FALSE(kac_forces_decomposable(kronecker(3), {1, 1}));
  CHECK(kronecker_is_schur_root(3, {1, 3}));
  CHECK_FALSE(kronecker_is_schur_root(3, {1, 5}));
  CHECK(kronecker_is_schur_root(35, {1, 35}));
  CHECK_THROWS_AS(kronecker_is_schur_root(2, {1, 1}), InputError);
}

TEST_CASE("Euler form matches the arrow-by-arrow sum and is bilinear") {
  Rng rng(31);
  const std::vector<Quiver> qs{kronecker(4), three_vertex(2, 3), syzygy_quiver(6, 3), star_quiver({1, 2, 3})};
  for (const Quiver& q : qs) {
    for (int t = 0; t < 50; ++t) {
      DimensionVector u, v, w, uv;
      for (int i = 0; i < q.vertex_count(); ++i) {
        u.push_back(rng.between(0, 6));
        v.push_back(rng.between(0, 6));
        w.push_back(rng.between(0, 6));
        uv.push_back(u.back() + v.back());
      }
      CHECK(euler_form(q, u, w) == naive_euler(q, u, w));
      CHECK(euler_form(q, uv, w) == euler_form(q, u, w) + euler_form(q, v, w));
      CHECK(euler_form(q, w, uv) == euler_form(q, w, u) + euler_form(q, w, v));
      CHECK(tits_form(q, u) == euler_form(q, u, u));
    }
  }
}

TEST_CASE("Kronecker Tits form is a^2 + b^2 - wab") {
  for (int w = 0; w <= 10; ++w) {
    const Quiver q = kronecker(w);
    for (long long a = 0; a <= 20; ++a)
      for (long long b = 0; b <= 20; ++b) REQUIRE(tits_form(q, {a, b}) == a * a + b * b - w * a * b);
  }
}

}
