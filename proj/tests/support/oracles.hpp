#pragma once

// Slow reference implementations used only by the tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "shtk/exactmath.hpp"

namespace oracle {

using shtk::Rational;
using shtk::RationalMatrix;

// Determinant by cofactor expansion along the first row.
inline Rational det_cofactor(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a[0][j]) == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Rational term = a[0][j] * det_cofactor(minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const RationalMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rs[i], cs[j]);
        if (sgn(det_cofactor(sub)) != 0) return k;
      }
  return 0;
}

}  // namespace oracle
