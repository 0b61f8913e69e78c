#include "shtk/exactmath.hpp"

#include <algorithm>
#include <cctype>

namespace shtk {

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

// ---------------------------------------------------------------------------
// text format

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(std::string(num), 10), d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));

  s.remove_suffix(1);
  // split at the last sign that is not the leading character
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);

  Rational im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part);
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, im};
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  std::string im;
  if (s.im() == 1)
    im = "i";
  else if (s.im() == -1)
    im = "-i";
  else
    im = to_string(s.im()) + "i";
  if (sgn(s.re()) == 0) return im;
  return to_string(s.re()) + (sgn(s.im()) > 0 ? "+" : "") + im;
}

// ---------------------------------------------------------------------------
// matrix helpers

ScalarMatrix conjugate_transpose(const ScalarMatrix& m) {
  ScalarMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c).conj();
  return t;
}

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b - b * a; }

Scalar trace(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("trace of non-square matrix");
  Scalar t;
  for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
  return t;
}

bool is_real(const ScalarMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Scalar& s) { return s.is_real(); });
}

ScalarMatrix to_scalar(const RationalMatrix& m) {
  ScalarMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
  return r;
}

RationalVector realify(const ScalarMatrix& m) {
  const std::size_t n = m.data().size();
  RationalVector v(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = m.data()[k].re();
    v[n + k] = m.data()[k].im();
  }
  return v;
}

RationalMatrix stack_rows(std::span<const RationalVector> rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("stack_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

// ---------------------------------------------------------------------------
// fraction-free elimination

namespace {

struct GaussInt {
  Integer re{0};
  Integer im{0};
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// exact quotient; the Bareiss recurrence guarantees divisibility
GaussInt divexact(const GaussInt& a, const GaussInt& d) {
  if (sgn(d.im) == 0) {
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), d.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), d.re.get_mpz_t());
    return q;
  }
  Integer norm = d.re * d.re + d.im * d.im;
  GaussInt num = mul(a, {d.re, -d.im});
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), norm.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), norm.get_mpz_t());
  return q;
}

// rows are consumed; returns the rank
std::size_t bareiss_rank(std::vector<std::vector<Integer>>& a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& ri = a[i];
      const bool lead_zero = sgn(ri[c]) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (lead_zero) {
          if (sgn(ri[j]) == 0) continue;
          t = piv * ri[j];
        } else {
          t = piv * ri[j];
          t -= ri[c] * a[r][j];
        }
        mpz_divexact(ri[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      ri[c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::size_t bareiss_rank(std::vector<std::vector<GaussInt>>& a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  GaussInt prev{1, 0};
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const GaussInt piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = divexact(sub(mul(piv, a[i][j]), mul(a[i][c], a[r][j])), prev);
      a[i][c] = {};
    }
    prev = piv;
    ++r;
  }
  return r;
}

// drop all-zero columns; they never carry a pivot
template <class Row, class IsZero>
void prune_zero_columns(std::vector<Row>& rows, IsZero is_zero) {
  if (rows.empty()) return;
  const std::size_t cols = rows.front().size();
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& row : rows)
      if (!is_zero(row[c])) {
        keep.push_back(c);
        break;
      }
  if (keep.size() == cols) return;
  for (auto& row : rows) {
    Row pruned;
    pruned.reserve(keep.size());
    for (std::size_t c : keep) pruned.push_back(std::move(row[c]));
    row = std::move(pruned);
  }
}

// Gauss-Jordan to reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == T(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!(m(r, j) == T(0))) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!(m(r, j) == T(0))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::vector<std::vector<T>> kernel_from_rref(Matrix<T> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    bool nonzero = false;
    for (const auto& x : m.row(r)) {
      if (sgn(x) == 0) continue;
      nonzero = true;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<Integer> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = m(r, c);
      if (sgn(x) == 0) continue;
      Integer q;
      mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
      row[c] = x.get_num() * q;
    }
    rows.push_back(std::move(row));
  }
  prune_zero_columns(rows, [](const Integer& x) { return sgn(x) == 0; });
  return bareiss_rank(rows);
}

std::size_t rank(const ScalarMatrix& m) {
  if (is_real(m)) {
    RationalMatrix re(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) re(r, c) = m(r, c).re();
    return rank(re);
  }
  std::vector<std::vector<GaussInt>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& x : m.row(r)) {
      if (sgn(x.re()) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
      if (sgn(x.im()) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
    }
    std::vector<GaussInt> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational re = m(r, c).re() * l;
      Rational im = m(r, c).im() * l;
      row[c] = {re.get_num(), im.get_num()};
    }
    rows.push_back(std::move(row));
  }
  prune_zero_columns(rows, [](const GaussInt& x) { return x.is_zero(); });
  return bareiss_rank(rows);
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) { return kernel_from_rref(m); }

std::vector<ScalarVector> kernel_basis(const ScalarMatrix& m) { return kernel_from_rref(m); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw DomainError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::size_t> independent_rows(const RationalMatrix& m) {
  RationalMatrix t = m.transpose();
  return rref(t);
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return rref(copy);
}

std::size_t span_dim(std::span<const ScalarMatrix> vectors) {
  if (vectors.empty()) throw DomainError("span_dim: empty list");
  const auto rows = vectors.front().rows();
  const auto cols = vectors.front().cols();
  ScalarMatrix stacked(vectors.size(), rows * cols);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].rows() != rows || vectors[k].cols() != cols)
      throw DomainError("span_dim: shape mismatch");
    for (std::size_t e = 0; e < rows * cols; ++e) stacked(k, e) = vectors[k].data()[e];
  }
  return rank(stacked);
}

std::size_t real_span_dim(std::span<const ScalarMatrix> vectors) {
  if (vectors.empty()) return 0;
  std::vector<RationalVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.rows() != vectors.front().rows() || v.cols() != vectors.front().cols())
      throw DomainError("real_span_dim: shape mismatch");
    rows.push_back(realify(v));
  }
  return rank(stack_rows(rows));
}

}  // namespace shtk
