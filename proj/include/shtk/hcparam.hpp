#pragma once

// Infinitesimal characters as vectors in C^k modulo S_k or S_k x| (Z/2)^k.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shtk/exactmath.hpp"
#include "shtk/liealg.hpp"

namespace shtk {

enum class WeylType { A, B };

std::string to_string(WeylType t);

struct InfChar {
  std::vector<Scalar> entries;
  WeylType weyl_type = WeylType::B;
};

/// Comma-separated scalars, e.g. "5, 0" or "2+i,1,0".
InfChar parse_infchar(std::string_view text, WeylType type = WeylType::B);
std::string to_string(const InfChar& v);

/// (w x)_i = signs[i] * x[perm[i]]. Type A elements have all signs +1.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

std::vector<Scalar> act(const SignedPermutation& w, const std::vector<Scalar>& x);
/// All 2^k k! (type B) or k! (type A) elements, identity first.
std::vector<SignedPermutation> weyl_group(std::size_t k, WeylType type);

/// -x when Re x < 0, or Re x = 0 and Im x < 0; x otherwise.
Scalar sign_normalized(const Scalar& x);
/// Descending lexicographic order on (Re, Im).
bool descending(const Scalar& a, const Scalar& b);

InfChar canonical_infchar(const InfChar& v);
/// Throws DomainError on length or type mismatch.
bool infchar_equal(const InfChar& v, const InfChar& w);

/// rho of the complexified algebra in standard coordinates, with the Weyl type
/// used for comparisons (type B for the B, C, D families).
InfChar rho_g(const AlgebraName& g);
InfChar rho_g(std::string_view algebra);

/// The set W (c0 + t, tail) for t in C.
struct AffineFamily {
  std::vector<Scalar> tail;
  Scalar c0;
};

struct AffineMatch {
  /// Free coordinate; sign-normalized for type B.
  Scalar c;
  /// w (c, tail) = v.
  SignedPermutation witness;
};

/// Throws DomainError when v does not have length tail.size() + 1.
std::optional<AffineMatch> affine_membership(const InfChar& v, const AffineFamily& fam);

enum class ParamSide { Plus, Minus };

/// rho + sigma c with sigma = +-1 chosen so that Re(sigma c) >= 0 (plus; tie
/// Im >= 0) or Re(sigma c) <= 0 (minus; tie Im <= 0).
Scalar dominant_a_param(const Scalar& c, const Rational& rho, ParamSide side);

/// Surjectivity of Z(g) -> D(G/K); false only for four exceptional real forms.
bool dgk_surjective(std::string_view algebra);

}  // namespace shtk
