#pragma once

// Open-orbit tests: (PP) for real pairs, (BB) for complex pairs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shtk/liealg.hpp"
#include "shtk/restricted.hpp"

namespace shtk {

struct OrbitCheckConfig {
  std::size_t samples = 5;
  int bound = 5;
  std::uint64_t seed = 0;
  /// Throws DomainError unless samples >= 1 and bound >= 1.
  void validate() const;
};

/// g = exp(ybar) exp(y) with ybar in nbar, y in n.
struct BigCellElement {
  ScalarMatrix g;
  ScalarMatrix g_inv;
  std::vector<long> ybar;
  std::vector<long> y;
};

/// Builds g from explicit integer coordinates in the nbar and n bases and
/// checks that Ad(g) preserves l (InternalError otherwise).
BigCellElement big_cell_element(const MatrixLieAlgebra& l, const RestrictedRootDatum& d,
                                const std::vector<long>& ybar, const std::vector<long>& y);
/// Coordinates drawn uniformly from [-bound, bound].
BigCellElement big_cell_element(const MatrixLieAlgebra& l, const RestrictedRootDatum& d,
                                std::mt19937_64& rng, int bound);

struct OrbitVerdict {
  bool holds = false;
  std::size_t best_codim = 0;
  bool deterministic = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  ScalarMatrix witness;
  std::size_t dim_g = 0;
  std::size_t dim_p = 0;
  std::size_t dim_p_prime = 0;
  /// true when p' + Ad(g) p was tested instead of p + Ad(g) p'.
  bool swapped = false;
};

/// Parabolics of both members of a pair, computed once.
class OrbitProblem {
 public:
  explicit OrbitProblem(ReductiveEmbedding e);

  const ReductiveEmbedding& embedding() const noexcept { return e_; }
  const RestrictedRootDatum& big_datum() const noexcept { return big_; }
  const RestrictedRootDatum& small_datum() const noexcept { return small_; }
  const std::vector<ScalarMatrix>& p_big() const noexcept { return p_big_; }
  const std::vector<ScalarMatrix>& p_small() const noexcept { return p_small_; }
  /// dim p + dim p' < dim g.
  bool dimension_obstructed() const noexcept { return p_big_.size() + p_small_.size() < e_.big().dim(); }

  /// dim g - dim(p + Ad(g) p'), or dim g - dim(p' + Ad(g) p) when swapped.
  std::size_t codim(const ScalarMatrix& g, const ScalarMatrix& g_inv, bool swapped = false) const;

 private:
  ReductiveEmbedding e_;
  RestrictedRootDatum big_;
  RestrictedRootDatum small_;
  std::vector<ScalarMatrix> p_big_;
  std::vector<ScalarMatrix> p_small_;
};

/// Throws DomainError when g is singular-looking (g g_inv != 1) or Ad(g) leaves g.
std::size_t orbit_codim(const ReductiveEmbedding& e, const ScalarMatrix& g, const ScalarMatrix& g_inv);

OrbitVerdict check_pp(const OrbitProblem& prob, const OrbitCheckConfig& cfg, bool swapped = false);
OrbitVerdict check_pp(const ReductiveEmbedding& e, const OrbitCheckConfig& cfg, bool swapped = false);

/// Big algebra complex and small algebra complex (or zero).
bool is_complex_pair(const ReductiveEmbedding& e);

/// Requires a complex pair; throws DomainError("... complexify first") otherwise.
OrbitVerdict check_bb(const OrbitProblem& prob, const OrbitCheckConfig& cfg);
OrbitVerdict check_bb(const ReductiveEmbedding& e, const OrbitCheckConfig& cfg);

/// (l + l) > diag l, the group-case form of the triple-product condition.
OrbitVerdict check_triple(const MatrixLieAlgebra& l, const OrbitCheckConfig& cfg);

}  // namespace shtk
