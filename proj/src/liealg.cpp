#include "shtk/liealg.hpp"

#include <algorithm>

namespace shtk {

std::string to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

// ---------------------------------------------------------------------------
// MatrixLieAlgebra

MatrixLieAlgebra::MatrixLieAlgebra(std::string name, Field field, std::size_t ambient,
                                   std::vector<ScalarMatrix> basis)
    : name_(std::move(name)), field_(field), ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.rows() != ambient_ || b.cols() != ambient_)
      throw DomainError(name_ + ": basis element of wrong size");
  if (basis_.empty()) return;

  std::vector<RationalVector> rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.push_back(realify(b));
  RationalMatrix stacked = stack_rows(rows);
  pivot_entries_ = pivot_columns(stacked);
  if (pivot_entries_.size() != basis_.size())
    throw DomainError(name_ + ": basis is not linearly independent over R");

  // selected entries s = M^T c, with M(j, k) = entry pivot_k of basis element j
  const std::size_t d = basis_.size();
  RationalMatrix mt(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) mt(k, j) = stacked(j, pivot_entries_[k]);
  pivot_inverse_ = inverse(mt);

  for (const auto& b : basis_)
    if (!contains(theta(b))) throw DomainError(name_ + ": basis is not stable under X -> -X^*");
}

std::optional<RationalVector> MatrixLieAlgebra::try_coordinates(const ScalarMatrix& x) const {
  if (x.rows() != ambient_ || x.cols() != ambient_)
    throw DomainError(name_ + ": matrix of wrong size");
  const std::size_t d = basis_.size();
  if (d == 0) {
    if (x.is_zero()) return RationalVector{};
    return std::nullopt;
  }
  const std::size_t entries = ambient_ * ambient_;
  RationalVector sel(d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t e = pivot_entries_[k];
    sel[k] = e < entries ? x.data()[e].re() : x.data()[e - entries].im();
  }
  RationalVector c(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (sgn(sel[k]) != 0 && sgn(pivot_inverse_(i, k)) != 0) acc += pivot_inverse_(i, k) * sel[k];
    c[i] = acc;
  }
  if (!(element(c) == x)) return std::nullopt;
  return c;
}

RationalVector MatrixLieAlgebra::coordinates(const ScalarMatrix& x) const {
  auto c = try_coordinates(x);
  if (!c) throw DomainError(name_ + ": matrix is not an element of the algebra");
  return *std::move(c);
}

ScalarMatrix MatrixLieAlgebra::element(std::span<const Rational> coords) const {
  if (coords.size() != basis_.size()) throw DomainError(name_ + ": coordinate vector of wrong length");
  ScalarMatrix x(ambient_, ambient_);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (sgn(coords[j]) == 0) continue;
    const Scalar c(coords[j]);
    const auto& b = basis_[j].data();
    for (std::size_t e = 0; e < b.size(); ++e)
      if (!b[e].is_zero()) x(e / ambient_, e % ambient_) += c * b[e];
  }
  return x;
}

RationalMatrix MatrixLieAlgebra::theta_matrix() const {
  const std::size_t d = dim();
  RationalMatrix t(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto c = try_coordinates(theta(basis_[j]));
    if (!c) throw InternalError(name_ + ": theta leaves the algebra");
    for (std::size_t i = 0; i < d; ++i) t(i, j) = (*c)[i];
  }
  return t;
}

RationalMatrix MatrixLieAlgebra::ad_matrix(const ScalarMatrix& x) const {
  const std::size_t d = dim();
  RationalMatrix a(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto c = try_coordinates(commutator(x, basis_[j]));
    if (!c) throw DomainError(name_ + ": ad(X) does not preserve the algebra");
    for (std::size_t i = 0; i < d; ++i) a(i, j) = (*c)[i];
  }
  return a;
}

AlgebraChecks check_algebra(const MatrixLieAlgebra& l) {
  AlgebraChecks r;
  const auto& b = l.basis();
  r.independent = real_span_dim(b) == b.size();
  r.closed = true;
  r.theta_stable = true;
  r.theta_involutive = true;
  r.theta_homomorphism = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto ti = MatrixLieAlgebra::theta(b[i]);
    if (!l.contains(ti)) r.theta_stable = false;
    if (!(MatrixLieAlgebra::theta(ti) == b[i])) r.theta_involutive = false;
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const auto br = commutator(b[i], b[j]);
      if (!l.contains(br)) r.closed = false;
      const auto tj = MatrixLieAlgebra::theta(b[j]);
      if (!(MatrixLieAlgebra::theta(br) == commutator(ti, tj))) r.theta_homomorphism = false;
    }
  }
  return r;
}

void validate_algebra(const MatrixLieAlgebra& l) {
  const auto r = check_algebra(l);
  if (!r.independent) throw InternalError(l.name() + ": basis not independent");
  if (!r.closed) throw InternalError(l.name() + ": not closed under bracket");
  if (!r.theta_stable) throw InternalError(l.name() + ": not theta-stable");
  if (!r.theta_involutive) throw InternalError(l.name() + ": theta is not an involution");
  if (!r.theta_homomorphism) throw InternalError(l.name() + ": theta is not a homomorphism");
}

// ---------------------------------------------------------------------------
// construction helpers

namespace {

using Condition = std::function<ScalarMatrix(const ScalarMatrix&)>;

ScalarMatrix unit(std::size_t n, std::size_t r, std::size_t c, const Scalar& v = Scalar(1)) {
  ScalarMatrix m(n, n);
  m(r, c) = v;
  return m;
}

ScalarMatrix diagonal(const std::vector<int>& d) {
  ScalarMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = Scalar(d[k]);
  return m;
}

std::vector<int> signature(int p, int q) {
  std::vector<int> d(static_cast<std::size_t>(p), 1);
  d.insert(d.end(), static_cast<std::size_t>(q), -1);
  return d;
}

// J = [[0, -I], [I, 0]]
ScalarMatrix quaternionic_j(std::size_t n) {
  ScalarMatrix j(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    j(k, n + k) = Scalar(-1);
    j(n + k, k) = Scalar(1);
  }
  return j;
}

ScalarMatrix doubled(const std::vector<int>& d) {
  std::vector<int> dd = d;
  dd.insert(dd.end(), d.begin(), d.end());
  return diagonal(dd);
}

ScalarMatrix entrywise_conj(const ScalarMatrix& x) {
  ScalarMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j).conj();
  return r;
}

ScalarMatrix trace_as_matrix(const ScalarMatrix& x) {
  ScalarMatrix r(1, 1);
  r(0, 0) = trace(x);
  return r;
}

// Real solution space inside gl(N) of a list of real-linear conditions.
std::vector<ScalarMatrix> solve_conditions(std::size_t n, bool complex_entries,
                                           const std::vector<Condition>& conditions) {
  std::vector<ScalarMatrix> ambient;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) ambient.push_back(unit(n, r, c));
  if (complex_entries)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) ambient.push_back(unit(n, r, c, Scalar::i()));
  if (conditions.empty()) return ambient;

  std::vector<RationalVector> columns;
  for (const auto& a : ambient) {
    RationalVector col;
    for (const auto& cond : conditions) {
      auto v = realify(cond(a));
      col.insert(col.end(), v.begin(), v.end());
    }
    columns.push_back(std::move(col));
  }
  RationalMatrix system = stack_rows(columns).transpose();
  std::vector<ScalarMatrix> basis;
  for (const auto& v : kernel_basis(system)) {
    ScalarMatrix x(n, n);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) x += ambient[k] * Scalar(v[k]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// X^T F + F X = 0
Condition preserves_bilinear(ScalarMatrix f) {
  return [f](const ScalarMatrix& x) { return x.transpose() * f + f * x; };
}

// X^* F + F X = 0
Condition preserves_hermitian(ScalarMatrix f) {
  return [f](const ScalarMatrix& x) { return conjugate_transpose(x) * f + f * x; };
}

// X J = J conj(X)
Condition quaternionic(std::size_t n) {
  ScalarMatrix j = quaternionic_j(n);
  return [j](const ScalarMatrix& x) { return x * j - j * entrywise_conj(x); };
}

ScalarMatrix symplectic_form(std::size_t n) { return -quaternionic_j(n); }

int checked(int v, int lo, const char* what) {
  if (v < lo) throw DomainError(std::string(what) + " out of range");
  return v;
}

constexpr int kMaxAmbient = 24;

}  // namespace

MatrixLieAlgebra zero_algebra(std::size_t ambient, Field field) {
  return MatrixLieAlgebra("0", field, ambient, {});
}

MatrixLieAlgebra construct_classical(Family f, int a, int b) {
  return construct_classical(AlgebraName{f, a, b});
}

MatrixLieAlgebra construct_classical(const AlgebraName& name) {
  const int a = name.a;
  const int b = name.b;
  const std::string label = to_string(name);
  auto size_guard = [&label](int n) {
    if (n > kMaxAmbient) throw DomainError(label + ": matrix size exceeds " + std::to_string(kMaxAmbient));
    return static_cast<std::size_t>(n);
  };
  std::vector<ScalarMatrix> basis;
  std::size_t n = 0;
  switch (name.family) {
    case Family::AbelianR:
      n = 1;
      basis = solve_conditions(1, false, {});
      break;
    case Family::GlR:
      n = size_guard(checked(a, 1, "gl(n,R): n"));
      basis = solve_conditions(n, false, {});
      break;
    case Family::SlR:
      n = size_guard(checked(a, 2, "sl(n,R): n"));
      basis = solve_conditions(n, false, {trace_as_matrix});
      break;
    case Family::So:
      checked(a, 0, "so(p,q): p");
      checked(b, 0, "so(p,q): q");
      n = size_guard(checked(a + b, 1, "so(p,q): p+q"));
      basis = solve_conditions(n, false, {preserves_bilinear(diagonal(signature(a, b)))});
      break;
    case Family::Su:
    case Family::U: {
      checked(a, 0, "su(p,q): p");
      checked(b, 0, "su(p,q): q");
      n = size_guard(checked(a + b, 1, "su(p,q): p+q"));
      std::vector<Condition> c{preserves_hermitian(diagonal(signature(a, b)))};
      if (name.family == Family::Su) c.push_back(trace_as_matrix);
      basis = solve_conditions(n, true, c);
      break;
    }
    case Family::SpR:
      n = 2 * static_cast<std::size_t>(checked(a, 1, "sp(n,R): n"));
      size_guard(static_cast<int>(n));
      basis = solve_conditions(n, false, {preserves_bilinear(symplectic_form(n / 2))});
      break;
    case Family::SlC:
      n = size_guard(checked(a, 2, "sl(n,C): n"));
      basis = solve_conditions(n, true, {trace_as_matrix});
      break;
    case Family::GlC:
      n = size_guard(checked(a, 1, "gl(n,C): n"));
      basis = solve_conditions(n, true, {});
      break;
    case Family::SoC:
      n = size_guard(checked(a, 1, "so(n,C): n"));
      basis = solve_conditions(n, true, {preserves_bilinear(ScalarMatrix::identity(n))});
      break;
    case Family::SpC:
      n = 2 * static_cast<std::size_t>(checked(a, 1, "sp(n,C): n"));
      size_guard(static_cast<int>(n));
      basis = solve_conditions(n, true, {preserves_bilinear(symplectic_form(n / 2))});
      break;
    case Family::SpPQ: {
      checked(a, 0, "sp(p,q): p");
      checked(b, 0, "sp(p,q): q");
      const auto h = static_cast<std::size_t>(checked(a + b, 1, "sp(p,q): p+q"));
      n = size_guard(static_cast<int>(2 * h));
      basis = solve_conditions(n, true, {quaternionic(h), preserves_hermitian(doubled(signature(a, b)))});
      break;
    }
    case Family::SuStar: {
      const auto h = static_cast<std::size_t>(checked(a, 1, "su*(2n): n"));
      n = size_guard(static_cast<int>(2 * h));
      basis = solve_conditions(n, true, {quaternionic(h), trace_as_matrix});
      break;
    }
    case Family::SoStar: {
      const auto h = static_cast<std::size_t>(checked(a, 1, "so*(2n): n"));
      n = size_guard(static_cast<int>(2 * h));
      basis = solve_conditions(n, true, {quaternionic(h), preserves_bilinear(ScalarMatrix::identity(n))});
      break;
    }
  }
  MatrixLieAlgebra l(label, field_of(name.family), n, std::move(basis));
  if (l.dim() != dimension_formula(name))
    throw InternalError(label + ": dimension " + std::to_string(l.dim()) + " does not match formula");
  return l;
}

MatrixLieAlgebra direct_sum(const MatrixLieAlgebra& a, const MatrixLieAlgebra& b) {
  // a complex summand next to a real one is read as a real algebra
  Field field = a.field();
  if (a.dim() == 0) field = b.field();
  else if (b.dim() > 0 && b.field() != a.field()) field = Field::Real;
  const std::size_t na = a.ambient_size();
  const std::size_t n = na + b.ambient_size();
  std::vector<ScalarMatrix> basis;
  auto place = [&](const ScalarMatrix& x, std::size_t offset) {
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(offset + i, offset + j) = x(i, j);
    return m;
  };
  for (const auto& x : a.basis()) basis.push_back(place(x, 0));
  for (const auto& x : b.basis()) basis.push_back(place(x, na));
  std::string name = a.dim() == 0 ? b.name() : b.dim() == 0 ? a.name() : a.name() + "+" + b.name();
  return MatrixLieAlgebra(std::move(name), field, n, std::move(basis));
}

MatrixLieAlgebra fixed_subalgebra(const MatrixLieAlgebra& l,
                                  const std::function<ScalarMatrix(const ScalarMatrix&)>& sigma,
                                  std::string name) {
  if (l.dim() == 0) return MatrixLieAlgebra(std::move(name), l.field(), l.ambient_size(), {});
  std::vector<RationalVector> columns;
  for (const auto& b : l.basis()) columns.push_back(realify(sigma(b) - b));
  RationalMatrix system = stack_rows(columns).transpose();
  std::vector<ScalarMatrix> basis;
  for (const auto& v : kernel_basis(system)) basis.push_back(l.element(v));
  const Field field = l.field() == Field::Complex && is_complex_subspace(basis) ? Field::Complex : Field::Real;
  return MatrixLieAlgebra(std::move(name), field, l.ambient_size(), std::move(basis));
}

MatrixLieAlgebra centralizer_of_involution(const MatrixLieAlgebra& l, const ScalarMatrix& s,
                                           std::string name) {
  // S^2 = +-1, so S^{-1} = +-S and Ad(S) X = S X S^{-1} = S X S (S^2 = 1) or -S X S (S^2 = -1)
  const ScalarMatrix sq = s * s;
  Scalar sign;
  if (sq == ScalarMatrix::identity(s.rows()))
    sign = Scalar(1);
  else if (sq == -ScalarMatrix::identity(s.rows()))
    sign = Scalar(-1);
  else
    throw DomainError("centralizer_of_involution: S^2 must be +-1");
  return fixed_subalgebra(l, [s, sign](const ScalarMatrix& x) { return s * x * s * sign; },
                          std::move(name));
}

bool is_complex_subspace(const std::vector<ScalarMatrix>& basis) {
  if (basis.empty()) return true;
  std::vector<ScalarMatrix> all = basis;
  for (const auto& b : basis) all.push_back(b * Scalar::i());
  return real_span_dim(all) == real_span_dim(basis);
}

bool needs_scalar_restriction(const MatrixLieAlgebra& l) {
  std::vector<ScalarMatrix> all = l.basis();
  for (const auto& b : l.basis()) all.push_back(b * Scalar::i());
  return real_span_dim(all) != 2 * l.dim();
}

namespace {

// X -> diag(X, conj X): the same real algebra with no complex-linear part
std::vector<ScalarMatrix> restrict_scalars(const std::vector<ScalarMatrix>& basis, std::size_t n) {
  std::vector<ScalarMatrix> out;
  for (const auto& x : basis) {
    const ScalarMatrix xc = conjugate_transpose(x).transpose();
    ScalarMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = x(i, j);
        m(n + i, n + j) = xc(i, j);
      }
    out.push_back(std::move(m));
  }
  return out;
}

MatrixLieAlgebra complexify_impl(const std::string& name, std::vector<ScalarMatrix> basis, std::size_t n) {
  const std::size_t d = basis.size();
  for (std::size_t k = 0; k < d; ++k) basis.push_back(basis[k] * Scalar::i());
  return MatrixLieAlgebra("(" + name + ")_C", Field::Complex, n, std::move(basis));
}

}  // namespace

MatrixLieAlgebra complexify(const MatrixLieAlgebra& l) {
  if (!needs_scalar_restriction(l)) return complexify_impl(l.name(), l.basis(), l.ambient_size());
  const std::size_t n = l.ambient_size();
  return complexify_impl(l.name(), restrict_scalars(l.basis(), n), 2 * n);
}

// ---------------------------------------------------------------------------
// embeddings

ReductiveEmbedding::ReductiveEmbedding(MatrixLieAlgebra big, MatrixLieAlgebra small, std::string label)
    : big_(std::move(big)), small_(std::move(small)), label_(std::move(label)) {
  if (big_.ambient_size() != small_.ambient_size())
    throw DomainError("embedding: ambient sizes differ");
  for (const auto& x : small_.basis())
    if (!big_.contains(x)) throw DomainError("embedding: " + small_.name() + " is not contained in " + big_.name());
  if (label_.empty()) label_ = big_.name() + ">" + small_.name();
}

ReductiveEmbedding diagonal_embedding(const MatrixLieAlgebra& a) {
  MatrixLieAlgebra big = direct_sum(a, a);
  std::vector<ScalarMatrix> basis;
  const std::size_t d = a.dim();
  for (std::size_t j = 0; j < d; ++j) basis.push_back(big.basis()[j] + big.basis()[d + j]);
  MatrixLieAlgebra small("diag(" + a.name() + ")", a.field(), big.ambient_size(), std::move(basis));
  return ReductiveEmbedding(std::move(big), std::move(small));
}

ReductiveEmbedding triple_diagonal_embedding(const MatrixLieAlgebra& a) {
  MatrixLieAlgebra big = direct_sum(direct_sum(a, a), a);
  std::vector<ScalarMatrix> basis;
  const std::size_t d = a.dim();
  for (std::size_t j = 0; j < d; ++j)
    basis.push_back(big.basis()[j] + big.basis()[d + j] + big.basis()[2 * d + j]);
  MatrixLieAlgebra small("diag3(" + a.name() + ")", a.field(), big.ambient_size(), std::move(basis));
  return ReductiveEmbedding(std::move(big), std::move(small));
}

ReductiveEmbedding direct_sum(const ReductiveEmbedding& a, const ReductiveEmbedding& b) {
  return ReductiveEmbedding(direct_sum(a.big(), b.big()), direct_sum(a.small(), b.small()),
                            a.label() + " + " + b.label());
}

ReductiveEmbedding complexify(const ReductiveEmbedding& e) {
  const std::size_t n = e.big().ambient_size();
  const std::string label = "(" + e.label() + ")_C";
  if (!needs_scalar_restriction(e.big())) {
    return ReductiveEmbedding(complexify_impl(e.big().name(), e.big().basis(), n),
                              complexify_impl(e.small().name(), e.small().basis(), n), label);
  }
  return ReductiveEmbedding(complexify_impl(e.big().name(), restrict_scalars(e.big().basis(), n), 2 * n),
                            complexify_impl(e.small().name(), restrict_scalars(e.small().basis(), n), 2 * n),
                            label);
}

namespace {

std::vector<int> ones_with(std::size_t n, const std::vector<std::size_t>& negative) {
  std::vector<int> d(n, 1);
  for (auto k : negative) d[k] = -1;
  return d;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t k = from; k < to; ++k) r.push_back(k);
  return r;
}

ReductiveEmbedding block_pair(const AlgebraName& big_name, const ScalarMatrix& s,
                              const std::string& small_name, const std::string& label) {
  MatrixLieAlgebra big = construct_classical(big_name);
  MatrixLieAlgebra small = centralizer_of_involution(big, s, small_name);
  return ReductiveEmbedding(std::move(big), std::move(small), label);
}

}  // namespace

ReductiveEmbedding standard_embedding(const CaseSummand& c) {
  check_side_conditions(c);
  const std::string label = to_string(c);
  const int p = c.p.value_or(0);
  const int q = c.q.value_or(0);
  const int n = c.n.value_or(0);
  const auto up = static_cast<std::size_t>(p);
  const auto uq = static_cast<std::size_t>(q);
  const auto un = static_cast<std::size_t>(n);

  switch (c.tag) {
    case CaseTag::A: {
      MatrixLieAlgebra g = construct_classical(parse_algebra_name(*c.g));
      return ReductiveEmbedding(g, g, label);
    }
    case CaseTag::B:
      return ReductiveEmbedding(construct_classical(Family::AbelianR, 1), zero_algebra(1), label);
    case CaseTag::C: {
      const AlgebraName g = parse_algebra_name(*c.g);
      if (!is_compact(g) || !is_simple(g))
        throw DomainError("case C requires a compact simple algebra, got " + *c.g);
      switch (g.family) {
        case Family::So:
          return block_pair(g, diagonal(ones_with(static_cast<std::size_t>(g.a), {static_cast<std::size_t>(g.a) - 1})),
                            "so(" + std::to_string(g.a - 1) + ")", label);
        case Family::Su:
          return block_pair(g, diagonal(ones_with(static_cast<std::size_t>(g.a), {static_cast<std::size_t>(g.a) - 1})),
                            "s(u(" + std::to_string(g.a - 1) + ")+u(1))", label);
        case Family::SpPQ:
          if (g.a < 2) throw DomainError("case C: use su(2) for sp(1)");
          return block_pair(g, doubled(ones_with(static_cast<std::size_t>(g.a), {static_cast<std::size_t>(g.a) - 1})),
                            "sp(" + std::to_string(g.a - 1) + ")+sp(1)", label);
        default: throw DomainError("case C: no matrix model for " + *c.g);
      }
    }
    case CaseTag::D: {
      const AlgebraName g = parse_algebra_name(*c.g);
      if (is_compact(g) || !is_simple(g))
        throw DomainError("case D requires a non-compact simple algebra, got " + *c.g);
      MatrixLieAlgebra big = construct_classical(g);
      MatrixLieAlgebra k = fixed_subalgebra(big, MatrixLieAlgebra::theta, "k(" + big.name() + ")");
      return ReductiveEmbedding(std::move(big), std::move(k), label);
    }
    case CaseTag::E1:
      return block_pair({Family::So, p + q, 1}, diagonal(ones_with(up + uq + 1, range(0, up))),
                        "so(" + std::to_string(p) + ")+so(" + std::to_string(q) + ",1)", label);
    case CaseTag::E2:
      return block_pair({Family::Su, p + q, 1}, diagonal(ones_with(up + uq + 1, range(0, up))),
                        "s(u(" + std::to_string(p) + ")+u(" + std::to_string(q) + ",1))", label);
    case CaseTag::E3:
      return block_pair({Family::SpPQ, p + q, 1}, doubled(ones_with(up + uq + 1, range(0, up))),
                        "sp(" + std::to_string(p) + ")+sp(" + std::to_string(q) + ",1)", label);
    case CaseTag::F1:
      return block_pair({Family::SlC, n + 1}, diagonal(ones_with(un + 1, {un})),
                        "gl(" + std::to_string(n) + ",C)", label);
    case CaseTag::F2:
      return block_pair({Family::SoC, n + 1}, diagonal(ones_with(un + 1, {un})),
                        "so(" + std::to_string(n) + ",C)", label);
    case CaseTag::F3:
      return block_pair({Family::SlR, n + 1}, diagonal(ones_with(un + 1, {un})),
                        "gl(" + std::to_string(n) + ",R)", label);
    case CaseTag::F4:
      return block_pair({Family::Su, p + 1, q}, diagonal(ones_with(up + 1 + uq, {up})),
                        "u(" + std::to_string(p) + "," + std::to_string(q) + ")", label);
    case CaseTag::F5:
      return block_pair({Family::So, p + 1, q}, diagonal(ones_with(up + 1 + uq, {up})),
                        "so(" + std::to_string(p) + "," + std::to_string(q) + ")", label);
    case CaseTag::G1: {
      const AlgebraName g = parse_algebra_name(*c.g);
      if (!is_compact(g) || !is_simple(g))
        throw DomainError("case G1 requires a compact simple algebra, got " + *c.g);
      auto e = diagonal_embedding(construct_classical(g));
      return ReductiveEmbedding(e.big(), e.small(), label);
    }
    case CaseTag::G2: {
      auto e = diagonal_embedding(construct_classical(Family::So, n, 1));
      return ReductiveEmbedding(e.big(), e.small(), label);
    }
    case CaseTag::H1: {
      // complex structure on R^{2n,2} pairing coordinates (2k, 2k+1)
      const std::size_t size = 2 * un + 2;
      ScalarMatrix jc(size, size);
      for (std::size_t k = 0; k < size; k += 2) {
        jc(k, k + 1) = Scalar(-1);
        jc(k + 1, k) = Scalar(1);
      }
      return block_pair({Family::So, 2 * n, 2}, jc, "u(" + std::to_string(n) + ",1)", label);
    }
    case CaseTag::H2:
      return block_pair({Family::SuStar, n + 1}, doubled(ones_with(un + 1, {0})),
                        "su(2)+su*(" + std::to_string(2 * n) + ")+R", label);
    case CaseTag::H3:
      return block_pair({Family::SoStar, n + 1}, doubled(ones_with(un + 1, {0})),
                        "so(2)+so*(" + std::to_string(2 * n) + ")", label);
    case CaseTag::H4:
      return block_pair({Family::SpPQ, p + 1, q}, doubled(ones_with(up + 1 + uq, {up})),
                        "sp(" + std::to_string(p) + "," + std::to_string(q) + ")+sp(1)", label);
    case CaseTag::E4:
    case CaseTag::H5: break;
  }
  throw DomainError("case " + to_string(c.tag) + ": no matrix model available (exceptional real form)");
}

// ---------------------------------------------------------------------------

RationalMatrix ad_action(const MatrixLieAlgebra& l, const ScalarMatrix& x) {
  if (!l.contains(x)) throw DomainError("ad_action: element is not in " + l.name());
  return l.ad_matrix(x);
}

ScalarMatrix exp_nilpotent(const ScalarMatrix& x) {
  const std::size_t n = x.rows();
  ScalarMatrix sum = ScalarMatrix::identity(n);
  ScalarMatrix term = ScalarMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * x;
    term *= Scalar(Rational(1, static_cast<long>(k)));
    if (term.is_zero()) return sum;
    if (k == n) break;
    sum += term;
  }
  throw DomainError("exp_nilpotent: matrix is not nilpotent");
}

ScalarMatrix conjugate(const ScalarMatrix& g, const ScalarMatrix& x, const ScalarMatrix& g_inv) {
  return g * x * g_inv;
}

}  // namespace shtk
