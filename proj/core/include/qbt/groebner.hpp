#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qbt/poly.hpp"

namespace qbt {

struct GroebnerOptions {
  std::size_t max_pairs = 20000;   ///< S-pairs reduced before giving up
  std::size_t max_basis = 4000;    ///< basis size ceiling
  int max_degree = 120;            ///< degree ceiling for basis elements
};

struct GroebnerResult {
  bool complete = false;                 ///< false when a budget ceiling was hit
  std::vector<HomogeneousPoly> basis;    ///< monic, graded-reverse-lex leading term first
  std::vector<Monomial> leading;         ///< leading monomial of each basis element
  std::size_t pairs_reduced = 0;
};

/// Buchberger over the generators' field: graded-reverse-lex order, normal selection (smallest lcm
/// first), product and chain criteria. At most 8 variables.
GroebnerResult groebner_basis(const std::vector<HomogeneousPoly>& gens, const GroebnerOptions& opts = {});

/// Grevlex leading monomial of a nonzero polynomial.
Monomial grevlex_leading(const HomogeneousPoly& p);

enum class LocusResult { Empty, NonEmpty, Inconclusive };

std::string to_string(LocusResult r);

/// Decides whether the common zero locus of homogeneous generators in P^n (over the algebraic
/// closure) is empty: true iff every variable has a pure power among the leading monomials.
LocusResult certified_empty_projective_locus(const std::vector<HomogeneousPoly>& gens, const GroebnerOptions& opts = {});

}  // namespace qbt
