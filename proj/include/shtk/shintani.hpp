#pragma once

// Shintani spaces for (G, G') = (O(n+1,1), O(n,1)).

#include <optional>

#include "shtk/hcparam.hpp"

namespace shtk {

struct ShintaniQuery {
  int n = 2;
  /// Length floor((n+2)/2), type B.
  InfChar lambda;
  /// Length floor((n+1)/2), type B.
  InfChar nu;
};

struct ShintaniAnswer {
  bool nonvanishing = false;
  int dim_mod = 0;
  /// Free coordinates, sign-normalized; set when the respective family matches.
  std::optional<Scalar> c_lambda;
  std::optional<Scalar> c_nu;
  /// t = c_lambda - n/2 and s = c_nu - (n-1)/2.
  std::optional<Scalar> t;
  std::optional<Scalar> s;
  std::optional<SignedPermutation> witness_lambda;
  std::optional<SignedPermutation> witness_nu;
  /// Dominant parameters rho_n + c and rho_n' - c; set when nonvanishing.
  std::optional<Scalar> lambda_plus;
  std::optional<Scalar> nu_minus;
};

/// (n/2 + t, n/2 - 1, ..., n/2 - floor(n/2)).
AffineFamily lambda_family(int n);
/// ((n-1)/2 + s, (n-1)/2 - 1, ..., (n-1)/2 - floor((n-1)/2)).
AffineFamily nu_family(int n);

/// Throws DomainError for n < 2, wrong lengths or type A input.
void validate(const ShintaniQuery& q);

ShintaniAnswer shintani_nonvanishing(const ShintaniQuery& q);
/// dim Sh_mod(lambda, nu): 1 on the affine families, 0 elsewhere.
int shintani_mod_dim(const ShintaniQuery& q);

/// a, b integers with a <= b <= 0 and a = b mod 2.
bool l_even_member(const Scalar& a, const Scalar& b);
/// Dimension of symmetry breaking operators: 2 on L_even, 1 elsewhere.
int sbo_dim(const Scalar& a, const Scalar& b);

/// (lambda_plus, nu_minus) lies outside L_even. Throws DomainError unless the
/// query is nonvanishing.
bool bridge_consistency(const ShintaniQuery& q);

}  // namespace shtk
