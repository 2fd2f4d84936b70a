#include "qbt/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace qbt {

std::string to_string(LocusResult r) {
  switch (r) {
    case LocusResult::Empty:
      return "empty";
    case LocusResult::NonEmpty:
      return "nonempty";
    case LocusResult::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

// Exponent of variable i in byte i.
struct Mono {
  std::uint64_t e = 0;
  int deg = 0;
  friend bool operator==(const Mono&, const Mono&) = default;
};

int exp_of(const Mono& m, int i) { return static_cast<int>((m.e >> (8 * i)) & 0xff); }

// Grevlex: true when a > b.
bool greater(const Mono& a, const Mono& b, int nv) {
  if (a.deg != b.deg) return a.deg > b.deg;
  for (int i = nv - 1; i >= 0; --i) {
    int x = exp_of(a, i), y = exp_of(b, i);
    if (x != y) return x < y;
  }
  return false;
}

bool divides(const Mono& a, const Mono& b, int nv) {
  for (int i = 0; i < nv; ++i) {
    if (exp_of(a, i) > exp_of(b, i)) return false;
  }
  return true;
}

Mono mul(const Mono& a, const Mono& b) { return {a.e + b.e, a.deg + b.deg}; }
Mono quo(const Mono& a, const Mono& b) { return {a.e - b.e, a.deg - b.deg}; }

Mono lcm(const Mono& a, const Mono& b, int nv) {
  Mono m;
  for (int i = 0; i < nv; ++i) {
    int x = std::max(exp_of(a, i), exp_of(b, i));
    m.e |= static_cast<std::uint64_t>(x) << (8 * i);
    m.deg += x;
  }
  return m;
}

bool coprime(const Mono& a, const Mono& b, int nv) {
  for (int i = 0; i < nv; ++i) {
    if (exp_of(a, i) && exp_of(b, i)) return false;
  }
  return true;
}

using Term = std::pair<Mono, Scalar>;
using Poly = std::vector<Term>;  // strictly decreasing in grevlex

struct Ctx {
  int nv;
  Field field;
};

// a - c * m * b
Poly sub_mul(const Poly& a, const Scalar& c, const Mono& m, const Poly& b, const Ctx& cx) {
  Poly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Mono mb = mul(b[j].first, m);
    if (i == a.size() || greater(mb, a[i].first, cx.nv)) {
      out.emplace_back(mb, -(c * b[j].second));
      ++j;
    } else if (greater(a[i].first, mb, cx.nv)) {
      out.push_back(a[i++]);
    } else {
      Scalar s = a[i].second - c * b[j].second;
      if (!s.is_zero()) out.emplace_back(mb, s);
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  Scalar inv = p.front().second.inverse();
  for (auto& t : p) t.second *= inv;
}

// Full normal form modulo g (monic elements).
Poly normal_form(Poly f, const std::vector<Poly>& g, const Ctx& cx) {
  Poly r;
  while (!f.empty()) {
    const Mono lt = f.front().first;
    const Poly* div = nullptr;
    for (const auto& h : g) {
      if (divides(h.front().first, lt, cx.nv)) {
        div = &h;
        break;
      }
    }
    if (div) {
      Scalar c = f.front().second;
      f = sub_mul(f, c, quo(lt, div->front().first), *div, cx);
    } else {
      r.push_back(f.front());
      f.erase(f.begin());
    }
  }
  return r;
}

Poly to_internal(const HomogeneousPoly& p, const Ctx& cx) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Mono x;
    for (int i = 0; i < cx.nv; ++i) {
      if (m[i] > 255) throw InputError("exponent too large for the Groebner kernel");
      x.e |= static_cast<std::uint64_t>(m[i]) << (8 * i);
      x.deg += m[i];
    }
    out.emplace_back(x, c);
  }
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return greater(a.first, b.first, cx.nv); });
  return out;
}

Monomial to_monomial(const Mono& m, int nv) {
  Monomial out(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) out[i] = exp_of(m, i);
  return out;
}

HomogeneousPoly to_external(const Poly& p, const Ctx& cx) {
  HomogeneousPoly out(cx.field, cx.nv - 1, p.empty() ? 0 : p.front().first.deg);
  for (const auto& [m, c] : p) out.add_term(to_monomial(m, cx.nv), c);
  return out;
}

}  // namespace

Monomial grevlex_leading(const HomogeneousPoly& p) {
  if (p.is_zero()) throw InputError("leading monomial of zero");
  Ctx cx{p.n() + 1, p.field()};
  return to_monomial(to_internal(p, cx).front().first, cx.nv);
}

GroebnerResult groebner_basis(const std::vector<HomogeneousPoly>& gens, const GroebnerOptions& opts) {
  GroebnerResult res;
  const HomogeneousPoly* first = nullptr;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      first = &g;
      break;
    }
  }
  if (!first) {
    res.complete = true;
    return res;
  }
  Ctx cx{first->n() + 1, first->field()};
  if (cx.nv > 8) throw InputError("Groebner kernel supports at most 8 variables");

  std::vector<Poly> g;
  struct Pair {
    std::size_t i, j;
    Mono lcm;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;

  auto add = [&](Poly p) {
    make_monic(p);
    const std::size_t k = g.size();
    g.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(g[i].front().first, g[k].front().first, cx.nv)});
  };

  // Homogeneous input: reduce generators in increasing degree so the basis is built degree by degree.
  std::vector<Poly> in;
  for (const auto& h : gens) {
    if (h.is_zero()) continue;
    if (h.n() + 1 != cx.nv || !(h.field() == cx.field)) throw InputError("generators differ in arity or field");
    in.push_back(to_internal(h, cx));
  }
  std::stable_sort(in.begin(), in.end(), [](const Poly& a, const Poly& b) { return a.front().first.deg < b.front().first.deg; });

  std::size_t next_input = 0;
  for (;;) {
    // Normal selection: smallest lcm; inputs enter once their degree is reached.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) { return greater(b.lcm, a.lcm, cx.nv); });
    int pair_deg = best == pairs.end() ? INT32_MAX : best->lcm.deg;
    if (next_input < in.size() && in[next_input].front().first.deg <= pair_deg) {
      Poly r = normal_form(in[next_input++], g, cx);
      if (!r.empty()) add(std::move(r));
      continue;
    }
    if (best == pairs.end()) break;
    Pair pr = *best;
    pairs.erase(best);
    done.insert({pr.i, pr.j});
    const Mono li = g[pr.i].front().first, lj = g[pr.j].front().first;
    if (coprime(li, lj, cx.nv)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(g[k].front().first, pr.lcm, cx.nv)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = done.count(key(pr.i, k)) && done.count(key(pr.j, k));
    }
    if (chain) continue;
    if (++res.pairs_reduced > opts.max_pairs || pr.lcm.deg > opts.max_degree) return res;
    Poly s = sub_mul(Poly{}, -cx.field.one(), quo(pr.lcm, li), g[pr.i], cx);
    s = sub_mul(s, cx.field.one(), quo(pr.lcm, lj), g[pr.j], cx);
    Poly r = normal_form(std::move(s), g, cx);
    if (!r.empty()) {
      if (g.size() >= opts.max_basis) return res;
      add(std::move(r));
    }
  }
  res.complete = true;
  for (const auto& p : g) {
    res.leading.push_back(to_monomial(p.front().first, cx.nv));
    res.basis.push_back(to_external(p, cx));
  }
  return res;
}

LocusResult certified_empty_projective_locus(const std::vector<HomogeneousPoly>& gens, const GroebnerOptions& opts) {
  GroebnerResult gb = groebner_basis(gens, opts);
  if (!gb.complete) return LocusResult::Inconclusive;
  if (gb.leading.empty()) return LocusResult::NonEmpty;
  const std::size_t nv = gb.leading.front().size();
  std::vector<bool> pure(nv, false);
  for (const auto& m : gb.leading) {
    int nonzero = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      if (m[i]) {
        ++nonzero;
        var = i;
      }
    }
    if (nonzero == 0) return LocusResult::Empty;
    if (nonzero == 1) pure[var] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; }) ? LocusResult::Empty : LocusResult::NonEmpty;
}

}  // namespace qbt
