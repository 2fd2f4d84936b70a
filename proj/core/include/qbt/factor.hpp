#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qbt/upoly.hpp"

namespace qbt {

/// Yun's algorithm. Returns (s_i, i) with f = lc * prod s_i^i, each s_i monic, square-free,
/// pairwise coprime and nonconstant. Valid over Q and over F_p when deg f < p.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// Complete factorization over F_p into monic irreducibles with multiplicities
/// (Cantor-Zassenhaus: distinct-degree then equal-degree splitting).
std::vector<std::pair<UPoly, int>> factor_fp(const UPoly& f, std::uint64_t seed = 0);

/// Distinct roots in F_p, ascending.
std::vector<Scalar> roots_fp(const UPoly& f, std::uint64_t seed = 0);

/// Distinct rational roots of a polynomial over Q, ascending. Candidates p/q are enumerated from
/// divisors of the cleared constant and leading coefficients; returns nullopt when either exceeds
/// the trial-division budget.
std::optional<std::vector<mpq_class>> rational_roots(const UPoly& f);

/// A factorization f = g * h with g, h monic, nonconstant and coprime, if one is detectable:
/// over F_p from the full factorization; over Q from the square-free decomposition and, for
/// square-free parts of degree <= 4, rational roots.
std::optional<std::pair<UPoly, UPoly>> coprime_split(const UPoly& f, std::uint64_t seed = 0);

}  // namespace qbt
