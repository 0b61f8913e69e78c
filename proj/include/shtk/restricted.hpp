#pragma once

// Cartan decomposition, maximal abelian subspaces and restricted roots.

#include <cstddef>
#include <string>
#include <vector>

#include "shtk/liealg.hpp"

namespace shtk {

struct CartanDecomposition {
  std::vector<ScalarMatrix> k;
  std::vector<ScalarMatrix> p;
};

CartanDecomposition cartan_decomposition(const MatrixLieAlgebra& l);

/// Maximal abelian subspace of p. Greedy over the p-basis in order, then
/// completed from the centralizer if the greedy pass stops short.
std::vector<ScalarMatrix> maximal_abelian(const MatrixLieAlgebra& l);

struct RestrictedRoot {
  /// alpha(H_i) for the basis H_1..H_r of a.
  RationalVector alpha;
  std::size_t mult = 0;
  std::vector<ScalarMatrix> space;
  bool positive = false;
};

struct RestrictedRootDatum {
  /// Basis of a, rescaled to Gaussian-integer entries.
  std::vector<ScalarMatrix> a_basis;
  std::vector<RestrictedRoot> roots;
  std::vector<ScalarMatrix> m_basis;
  std::vector<ScalarMatrix> n_basis;
  std::vector<ScalarMatrix> nbar_basis;
  RationalVector rho_n;
  /// Re tr(H_i H_j).
  RationalMatrix gram;
  std::size_t dim_g = 0;

  std::size_t real_rank() const { return a_basis.size(); }
  std::size_t dim_n() const { return n_basis.size(); }
  std::vector<const RestrictedRoot*> positive_roots() const;
};

/// Joint eigenspace decomposition of ad(a) on l. Throws InternalError when the
/// eigenvalues found do not account for all of l.
RestrictedRootDatum restricted_roots(const MatrixLieAlgebra& l, const std::vector<ScalarMatrix>& a_basis);
RestrictedRootDatum restricted_roots(const MatrixLieAlgebra& l);

/// m + a + n.
std::vector<ScalarMatrix> minimal_parabolic(const RestrictedRootDatum& d);
/// m + a + nbar.
std::vector<ScalarMatrix> opposite_parabolic(const RestrictedRootDatum& d);

/// Inner product on a^* dual to the trace form.
Rational inner_product(const RestrictedRootDatum& d, const RationalVector& x, const RationalVector& y);

struct DatumChecks {
  bool abelian = false;
  bool maximal = false;
  bool complete = false;
  bool paired = false;
  bool rho = false;
  bool rho_dominant = false;
  bool n_subalgebra = false;
  bool theta_swaps_n = false;
  bool all() const {
    return abelian && maximal && complete && paired && rho && rho_dominant && n_subalgebra && theta_swaps_n;
  }
};

DatumChecks check_datum(const MatrixLieAlgebra& l, const RestrictedRootDatum& d);

/// Basis-independent summary used to compare against closed forms: one entry
/// per positive root, (m_alpha, 2<rho_n,alpha>/<alpha,alpha>, <alpha,alpha>/<long,long>),
/// sorted.
struct RootProfileEntry {
  std::size_t mult;
  Rational rho_ratio;
  Rational length_ratio;
  friend bool operator==(const RootProfileEntry& a, const RootProfileEntry& b) {
    return a.mult == b.mult && a.rho_ratio == b.rho_ratio && a.length_ratio == b.length_ratio;
  }
  friend bool operator<(const RootProfileEntry& a, const RootProfileEntry& b) {
    if (a.mult != b.mult) return a.mult < b.mult;
    if (a.rho_ratio != b.rho_ratio) return a.rho_ratio < b.rho_ratio;
    return a.length_ratio < b.length_ratio;
  }
};

std::vector<RootProfileEntry> root_profile(const RestrictedRootDatum& d);
std::string to_string(const RootProfileEntry& e);

}  // namespace shtk
