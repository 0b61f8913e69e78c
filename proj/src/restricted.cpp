#include "shtk/restricted.hpp"

#include <algorithm>
#include <numeric>

namespace shtk {

namespace {

// Columns of `basis` (d x k) as algebra elements.
std::vector<ScalarMatrix> elements_of(const MatrixLieAlgebra& l, const std::vector<RationalVector>& coords) {
  std::vector<ScalarMatrix> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(l.element(c));
  return out;
}

RationalMatrix columns_matrix(const std::vector<RationalVector>& cols, std::size_t d) {
  RationalMatrix m(d, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = cols[j][i];
  return m;
}

RationalVector times(const RationalMatrix& b, const RationalVector& v) {
  RationalVector out(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (sgn(v[j]) != 0 && sgn(b(i, j)) != 0) acc += b(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

// Basis (as coordinate columns) of {B c : (M B) c = 0}.
std::vector<RationalVector> restrict_kernel(const RationalMatrix& m, const std::vector<RationalVector>& basis) {
  if (basis.empty()) return {};
  const RationalMatrix b = columns_matrix(basis, m.cols());
  std::vector<RationalVector> out;
  for (const auto& c : kernel_basis(m * b)) out.push_back(times(b, c));
  return out;
}

RationalMatrix shifted(const RationalMatrix& a, const Rational& c) {
  RationalMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= c;
  return m;
}

// Multiply by the lcm of all denominators, then divide by the gcd of all numerators.
ScalarMatrix primitive_gaussian(const ScalarMatrix& x) {
  Integer den = 1;
  Integer num = 0;
  for (const auto& s : x.data()) {
    for (const Rational* r : {&s.re(), &s.im()}) {
      if (sgn(*r) == 0) continue;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r->get_den_mpz_t());
    }
  }
  for (const auto& s : x.data())
    for (const Rational* r : {&s.re(), &s.im()}) {
      if (sgn(*r) == 0) continue;
      Integer v = Rational(*r * den).get_num();
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
  if (num == 0) return x;
  return x * Scalar(Rational(den, num));
}

Integer row_abs_bound(const ScalarMatrix& h) {
  Integer best = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < h.cols(); ++j) acc += abs(h(i, j).re()) + abs(h(i, j).im());
    Integer c = acc.get_num() / acc.get_den() + (acc.get_den() == 1 ? 0 : 1);
    if (c > best) best = c;
  }
  return best;
}

bool lex_positive(const RationalVector& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return sgn(x) > 0;
  return false;
}

bool lex_greater(const RationalVector& a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool spans_contain(const std::vector<ScalarMatrix>& base, const std::vector<ScalarMatrix>& extra) {
  if (extra.empty()) return true;
  std::vector<ScalarMatrix> all = base;
  all.insert(all.end(), extra.begin(), extra.end());
  std::size_t base_dim = base.empty() ? 0 : real_span_dim(base);
  return real_span_dim(all) == base_dim;
}

// Centralizer in p (coordinates in the p list) of a set of elements.
std::vector<ScalarMatrix> centralizer_in(const std::vector<ScalarMatrix>& p, const std::vector<ScalarMatrix>& a) {
  if (a.empty()) return p;
  std::vector<RationalVector> cols;
  for (const auto& x : p) {
    RationalVector col;
    for (const auto& h : a) {
      auto v = realify(commutator(x, h));
      col.insert(col.end(), v.begin(), v.end());
    }
    cols.push_back(std::move(col));
  }
  RationalMatrix system = stack_rows(cols).transpose();
  std::vector<ScalarMatrix> out;
  for (const auto& c : kernel_basis(system)) {
    ScalarMatrix x(p.front().rows(), p.front().cols());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (sgn(c[k]) != 0) x += p[k] * Scalar(c[k]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

CartanDecomposition cartan_decomposition(const MatrixLieAlgebra& l) {
  CartanDecomposition cd;
  if (l.dim() == 0) return cd;
  const RationalMatrix t = l.theta_matrix();
  const RationalMatrix id = RationalMatrix::identity(l.dim());
  cd.k = elements_of(l, kernel_basis(t - id));
  cd.p = elements_of(l, kernel_basis(t + id));
  return cd;
}

std::vector<ScalarMatrix> maximal_abelian(const MatrixLieAlgebra& l) {
  const auto p = cartan_decomposition(l).p;
  std::vector<ScalarMatrix> a;
  for (const auto& x : p) {
    bool commutes = true;
    for (const auto& h : a)
      if (!commutator(x, h).is_zero()) {
        commutes = false;
        break;
      }
    if (!commutes) continue;
    std::vector<ScalarMatrix> trial = a;
    trial.push_back(x);
    if (real_span_dim(trial) == trial.size()) a = std::move(trial);
  }
  // completion from the centralizer; each pass strictly increases dim a
  for (;;) {
    if (p.empty()) break;
    auto z = centralizer_in(p, a);
    if (z.size() == a.size()) break;
    bool grown = false;
    for (const auto& x : z) {
      std::vector<ScalarMatrix> trial = a;
      trial.push_back(x);
      if (real_span_dim(trial) == trial.size()) {
        a = std::move(trial);
        grown = true;
        break;
      }
    }
    if (!grown) throw InternalError(l.name() + ": maximal abelian subspace could not be extended");
  }
  return a;
}

std::vector<const RestrictedRoot*> RestrictedRootDatum::positive_roots() const {
  std::vector<const RestrictedRoot*> out;
  for (const auto& r : roots)
    if (r.positive) out.push_back(&r);
  return out;
}

RestrictedRootDatum restricted_roots(const MatrixLieAlgebra& l) { return restricted_roots(l, maximal_abelian(l)); }

RestrictedRootDatum restricted_roots(const MatrixLieAlgebra& l, const std::vector<ScalarMatrix>& a_in) {
  RestrictedRootDatum d;
  d.dim_g = l.dim();
  const std::size_t dim = l.dim();
  for (const auto& h : a_in) d.a_basis.push_back(primitive_gaussian(h));
  const std::size_t r = d.a_basis.size();

  std::vector<RationalMatrix> ad;
  std::vector<Integer> bound;
  for (const auto& h : d.a_basis) {
    ad.push_back(l.ad_matrix(h));
    bound.push_back(2 * row_abs_bound(h));
  }

  struct Piece {
    RationalVector alpha;
    std::vector<RationalVector> basis;
  };
  std::vector<Piece> pieces;
  if (dim > 0) {
    std::vector<RationalVector> full;
    for (std::size_t k = 0; k < dim; ++k) {
      RationalVector v(dim);
      v[k] = 1;
      full.push_back(std::move(v));
    }
    pieces.push_back({{}, std::move(full)});
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Piece> next;
    for (auto& piece : pieces) {
      std::size_t found = 0;
      for (Integer c = -bound[i]; c <= bound[i]; ++c) {
        auto sub = restrict_kernel(shifted(ad[i], Rational(c)), piece.basis);
        if (sub.empty()) continue;
        found += sub.size();
        Piece np{piece.alpha, std::move(sub)};
        np.alpha.push_back(Rational(c));
        next.push_back(std::move(np));
        if (found == piece.basis.size()) break;
      }
      if (found != piece.basis.size())
        throw InternalError(l.name() + ": ad(a) has eigenvalues outside the integer search range");
    }
    pieces = std::move(next);
  }

  std::vector<RationalVector> l_coords;
  for (auto& piece : pieces) {
    bool zero = std::all_of(piece.alpha.begin(), piece.alpha.end(), [](const Rational& x) { return sgn(x) == 0; });
    if (zero) {
      l_coords = piece.basis;
      continue;
    }
    RestrictedRoot root;
    root.alpha = piece.alpha;
    root.mult = piece.basis.size();
    root.space = elements_of(l, piece.basis);
    root.positive = lex_positive(root.alpha);
    d.roots.push_back(std::move(root));
  }
  std::sort(d.roots.begin(), d.roots.end(),
            [](const RestrictedRoot& a, const RestrictedRoot& b) { return lex_greater(a.alpha, b.alpha); });

  // m = l cap k
  if (!l_coords.empty()) {
    const RationalMatrix t = l.theta_matrix();
    d.m_basis = elements_of(l, restrict_kernel(t - RationalMatrix::identity(dim), l_coords));
  }
  d.rho_n.assign(r, Rational(0));
  for (const auto& root : d.roots) {
    auto& target = root.positive ? d.n_basis : d.nbar_basis;
    target.insert(target.end(), root.space.begin(), root.space.end());
    if (root.positive)
      for (std::size_t i = 0; i < r; ++i) d.rho_n[i] += root.alpha[i] * static_cast<long>(root.mult);
  }
  for (auto& x : d.rho_n) x /= 2;

  d.gram = RationalMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) d.gram(i, j) = trace(d.a_basis[i] * d.a_basis[j]).re();
  return d;
}

std::vector<ScalarMatrix> minimal_parabolic(const RestrictedRootDatum& d) {
  std::vector<ScalarMatrix> out = d.m_basis;
  out.insert(out.end(), d.a_basis.begin(), d.a_basis.end());
  out.insert(out.end(), d.n_basis.begin(), d.n_basis.end());
  return out;
}

std::vector<ScalarMatrix> opposite_parabolic(const RestrictedRootDatum& d) {
  std::vector<ScalarMatrix> out = d.m_basis;
  out.insert(out.end(), d.a_basis.begin(), d.a_basis.end());
  out.insert(out.end(), d.nbar_basis.begin(), d.nbar_basis.end());
  return out;
}

Rational inner_product(const RestrictedRootDatum& d, const RationalVector& x, const RationalVector& y) {
  if (x.size() != d.real_rank() || y.size() != d.real_rank())
    throw DomainError("inner_product: vector length differs from the real rank");
  if (d.real_rank() == 0) return 0;
  const RationalMatrix g = inverse(d.gram);
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * g(i, j) * y[j];
  return acc;
}

DatumChecks check_datum(const MatrixLieAlgebra& l, const RestrictedRootDatum& d) {
  DatumChecks c;
  c.abelian = true;
  for (std::size_t i = 0; i < d.a_basis.size(); ++i)
    for (std::size_t j = i + 1; j < d.a_basis.size(); ++j)
      if (!commutator(d.a_basis[i], d.a_basis[j]).is_zero()) c.abelian = false;

  const auto p = cartan_decomposition(l).p;
  c.maximal = p.empty() ? d.a_basis.empty() : centralizer_in(p, d.a_basis).size() == d.a_basis.size();
  for (const auto& h : d.a_basis)
    if (!(MatrixLieAlgebra::theta(h) == -h)) c.maximal = false;

  std::size_t total = d.m_basis.size() + d.a_basis.size();
  for (const auto& r : d.roots) total += r.mult;
  c.complete = total == l.dim();

  c.paired = true;
  for (const auto& r : d.roots) {
    RationalVector neg = r.alpha;
    for (auto& x : neg) x = -x;
    auto it = std::find_if(d.roots.begin(), d.roots.end(), [&](const RestrictedRoot& s) { return s.alpha == neg; });
    if (it == d.roots.end() || it->mult != r.mult || it->positive == r.positive) {
      c.paired = false;
      continue;
    }
    std::vector<ScalarMatrix> image;
    for (const auto& x : r.space) image.push_back(MatrixLieAlgebra::theta(x));
    if (!spans_contain(it->space, image)) c.paired = false;
  }

  RationalVector rho(d.real_rank(), Rational(0));
  for (const auto* r : d.positive_roots())
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += r->alpha[i] * static_cast<long>(r->mult);
  for (auto& x : rho) x /= 2;
  c.rho = rho == d.rho_n;

  c.rho_dominant = true;
  for (const auto* r : d.positive_roots())
    if (sgn(inner_product(d, d.rho_n, r->alpha)) <= 0) c.rho_dominant = false;

  std::vector<ScalarMatrix> brackets;
  std::vector<ScalarMatrix> ma = d.m_basis;
  ma.insert(ma.end(), d.a_basis.begin(), d.a_basis.end());
  for (std::size_t i = 0; i < d.n_basis.size(); ++i) {
    for (std::size_t j = i + 1; j < d.n_basis.size(); ++j) brackets.push_back(commutator(d.n_basis[i], d.n_basis[j]));
    for (const auto& x : ma) brackets.push_back(commutator(x, d.n_basis[i]));
  }
  c.n_subalgebra = spans_contain(d.n_basis, brackets);

  std::vector<ScalarMatrix> theta_n;
  for (const auto& x : d.n_basis) theta_n.push_back(MatrixLieAlgebra::theta(x));
  c.theta_swaps_n = d.n_basis.size() == d.nbar_basis.size() && spans_contain(d.nbar_basis, theta_n);
  return c;
}

std::vector<RootProfileEntry> root_profile(const RestrictedRootDatum& d) {
  std::vector<RootProfileEntry> out;
  Rational longest = 0;
  for (const auto* r : d.positive_roots()) longest = std::max(longest, inner_product(d, r->alpha, r->alpha));
  for (const auto* r : d.positive_roots()) {
    const Rational aa = inner_product(d, r->alpha, r->alpha);
    out.push_back({r->mult, 2 * inner_product(d, d.rho_n, r->alpha) / aa, aa / longest});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const RootProfileEntry& e) {
  return "(m=" + std::to_string(e.mult) + ", 2<rho,a>/<a,a>=" + to_string(e.rho_ratio) +
         ", |a|^2/|long|^2=" + to_string(e.length_ratio) + ")";
}

}  // namespace shtk
