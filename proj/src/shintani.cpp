#include "shtk/shintani.hpp"

namespace shtk {

namespace {

AffineFamily half_integer_family(int m) {
  AffineFamily f;
  const Rational c0 = ratio(m, 2);
  f.c0 = Scalar(c0);
  for (int j = 1; j <= m / 2; ++j) f.tail.emplace_back(Rational(c0 - j));
  return f;
}

bool is_integer(const Scalar& x) { return x.is_real() && x.re().get_den() == 1; }

}  // namespace

AffineFamily lambda_family(int n) { return half_integer_family(n); }
AffineFamily nu_family(int n) { return half_integer_family(n - 1); }

void validate(const ShintaniQuery& q) {
  if (q.n < 2) throw DomainError("n must be at least 2, got " + std::to_string(q.n));
  const std::size_t kl = static_cast<std::size_t>((q.n + 2) / 2);
  const std::size_t kn = static_cast<std::size_t>((q.n + 1) / 2);
  if (q.lambda.entries.size() != kl)
    throw DomainError("lambda must have " + std::to_string(kl) + " entries for n = " + std::to_string(q.n) +
                      ", got " + std::to_string(q.lambda.entries.size()));
  if (q.nu.entries.size() != kn)
    throw DomainError("nu must have " + std::to_string(kn) + " entries for n = " + std::to_string(q.n) + ", got " +
                      std::to_string(q.nu.entries.size()));
  if (q.lambda.weyl_type != WeylType::B || q.nu.weyl_type != WeylType::B)
    throw DomainError("parameters for O(n+1,1) and O(n,1) are taken modulo signed permutations");
}

ShintaniAnswer shintani_nonvanishing(const ShintaniQuery& q) {
  validate(q);
  ShintaniAnswer a;
  const AffineFamily lf = lambda_family(q.n);
  const AffineFamily nf = nu_family(q.n);
  if (auto m = affine_membership(q.lambda, lf)) {
    a.c_lambda = m->c;
    a.t = m->c - lf.c0;
    a.witness_lambda = m->witness;
  }
  if (auto m = affine_membership(q.nu, nf)) {
    a.c_nu = m->c;
    a.s = m->c - nf.c0;
    a.witness_nu = m->witness;
  }
  a.nonvanishing = a.c_lambda && a.c_nu;
  a.dim_mod = a.nonvanishing ? 1 : 0;
  if (a.nonvanishing) {
    a.lambda_plus = dominant_a_param(*a.c_lambda, ratio(q.n, 2), ParamSide::Plus);
    a.nu_minus = dominant_a_param(*a.c_nu, ratio(q.n - 1, 2), ParamSide::Minus);
  }
  return a;
}

int shintani_mod_dim(const ShintaniQuery& q) { return shintani_nonvanishing(q).dim_mod; }

bool l_even_member(const Scalar& a, const Scalar& b) {
  if (!is_integer(a) || !is_integer(b)) return false;
  if (a.re() > b.re() || sgn(b.re()) > 0) return false;
  const Integer diff = b.re().get_num() - a.re().get_num();
  return diff % 2 == 0;
}

int sbo_dim(const Scalar& a, const Scalar& b) { return l_even_member(a, b) ? 2 : 1; }

bool bridge_consistency(const ShintaniQuery& q) {
  const ShintaniAnswer a = shintani_nonvanishing(q);
  if (!a.nonvanishing) throw DomainError("bridge check needs a nonvanishing query");
  return !l_even_member(*a.lambda_plus, *a.nu_minus);
}

}  // namespace shtk
