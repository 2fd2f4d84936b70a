#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qbt/exterior.hpp"
#include "qbt/monad.hpp"

namespace qbt {

/// Generalized Horrocks-Mumford monad O(-1)^{2p+1} -> Omega^p(p)^2 -> O^{2p+1} on P^{2p}.
struct HMMonadData {
  int p = 2;
  Field field;
  std::vector<std::vector<ExteriorElement>> beta;   ///< (2p+1) x 2, grade p
  std::array<std::array<int, 2>, 2> Q{};
  std::vector<std::vector<ExteriorElement>> alpha;  ///< 2 x (2p+1), (beta Q)^t

  int dim() const { return 2 * p + 1; }
};

/// beta_{i1} = x_{i+1} ^ ... ^ x_{i+p}, beta_{i2} = x_i ^ x_{i+p+1} ^ ... ^ x_{i+2p-1}, indices mod 2p+1.
HMMonadData hm_build(int p, const Field& field = Field::rationals());

/// Entry (i, j) = sum_k beta_{ik} ^ alpha_{kj} in Lambda^{2p} V.
std::vector<std::vector<ExteriorElement>> hm_composition(const HMMonadData& d);
bool hm_check_complex(const HMMonadData& d);
bool hm_check_complex(int p);

struct HMFiber {
  Matrix kernel_basis;  ///< columns span ker(i_v) in Lambda^p V^*
  Matrix alpha_fiber;   ///< 2k x (2p+1), k = dim ker(i_v)
  Matrix beta_fiber;    ///< (2p+1) x 2k
  std::size_t kernel_dim() const { return kernel_basis.cols(); }
};

/// Fiber model of Omega^p(p) at [v]: ker(i_v) in Lambda^p V^*. alpha acts by w -> i_v(hodge_to_dual(w)),
/// beta by the pairing Lambda^p V x Lambda^p V^* -> k.
HMFiber hm_fiber_matrices(const HMMonadData& d, const Vector& v);

/// volume_iso of the symbolic composition, evaluated at v.
Matrix hm_symbolic_at(const HMMonadData& d, const Vector& v);

/// R from beta (Kronecker, dims (2, 2p+1)) and R' from alpha (dims (2p+1, 2)); arrow l reads the
/// coefficient of the l-th Lambda^p basis set in graded-lex order.
std::pair<Representation, Representation> hm_kronecker_reps(const HMMonadData& d);

BundleTriple hm_triple(int p);
/// c[j][i][k] = coefficient of x*_k in volume_iso(e_{S_j} ^ e_{S_i}).
CompositionTable hm_table(int p, const Field& field = Field::rationals());
/// MonadData with dims (2p+1, 2, 2p+1): A_i read from alpha, B_j from beta.
MonadData hm_monad(const HMMonadData& d);

/// Chern class of Omega^p(t) on P^n from c(Omega^q(q)) = c(Omega^{q-1}(q-1) (x) O(1))^{-1}.
ChernPolynomial chern_omega_twist(int n, int p, int t);

struct HMReport {
  int p = 2;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::vector<std::string> beta_entries;  ///< row-major (i, k)
  bool complex_ok = false;
  bool relations_ok = false;
  std::size_t kernel_dim_expected = 0;
  bool kernel_dim_ok = false;
  bool injective_ok = false;
  bool surjective_ok = false;
  bool fiber_symbol_consistent = false;
  std::size_t nonzero_phi = 0;
  bool phi_elementary = false;
  bool r_schur = false;
  bool r_prime_schur = false;
  Representation R, R_prime;
  MonadCohomologyInfo cohomology;
  long long rank_expected = 0;
  VerdictReport verdict;
  std::vector<std::string> failures;
  std::string note;

  bool passed() const { return failures.empty(); }
};

HMReport hm_verify(int p, std::size_t trials = 200, std::uint64_t seed = 0);

}  // namespace qbt
