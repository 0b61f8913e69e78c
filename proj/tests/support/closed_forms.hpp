#pragma once

// Restricted root systems of the classical real forms in standard coordinates,
// written out by hand for comparison with the computed data.

#include <algorithm>
#include <vector>

#include "shtk/restricted.hpp"

namespace closed_form {

using shtk::Rational;
using shtk::RootProfileEntry;

struct Root {
  std::vector<int> v;  // standard coordinates e_1..e_r
  std::size_t mult;
};

struct System {
  std::size_t rank = 0;
  std::vector<Root> positive;
};

inline std::vector<int> unit(std::size_t r, std::size_t i, int s = 1) {
  std::vector<int> v(r, 0);
  v[i] = s;
  return v;
}

inline std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

// BC_r type pattern: e_i +- e_j with mult m1, e_i with m2, 2e_i with m3 (zero mults skipped).
inline System bc(std::size_t r, std::size_t m1, std::size_t m2, std::size_t m3) {
  System s;
  s.rank = r;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (m1) {
        s.positive.push_back({add(unit(r, i), unit(r, j, -1)), m1});
        s.positive.push_back({add(unit(r, i), unit(r, j)), m1});
      }
  for (std::size_t i = 0; i < r; ++i) {
    if (m2) s.positive.push_back({unit(r, i), m2});
    if (m3) s.positive.push_back({unit(r, i, 2), m3});
  }
  return s;
}

inline System so_pq(int p, int q) {
  if (p < q) std::swap(p, q);
  return bc(static_cast<std::size_t>(q), 1, static_cast<std::size_t>(p - q), 0);
}

inline System su_pq(int p, int q) {
  if (p < q) std::swap(p, q);
  return bc(static_cast<std::size_t>(q), 2, static_cast<std::size_t>(2 * (p - q)), 1);
}

inline System sp_r(int n) { return bc(static_cast<std::size_t>(n), 1, 0, 1); }

// A_{n-1} inside R^n; the rank is n - 1.
inline System sl_r(int n) {
  System s;
  s.rank = static_cast<std::size_t>(n - 1);
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j) s.positive.push_back({add(unit(un, i), unit(un, j, -1)), 1});
  return s;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<int>& b) {
  Rational acc = 0;
  for (std::size_t k = 0; k < b.size(); ++k) acc += a[k] * b[k];
  return acc;
}

inline std::vector<RootProfileEntry> profile(const System& s) {
  if (s.positive.empty()) return {};
  const std::size_t dim = s.positive.front().v.size();
  std::vector<Rational> rho(dim, Rational(0));
  for (const auto& r : s.positive)
    for (std::size_t k = 0; k < dim; ++k) rho[k] += Rational(r.v[k] * static_cast<long>(r.mult), 2);
  Rational longest = 0;
  for (const auto& r : s.positive) {
    std::vector<Rational> rv(r.v.begin(), r.v.end());
    longest = std::max(longest, dot(rv, r.v));
  }
  std::vector<RootProfileEntry> out;
  for (const auto& r : s.positive) {
    std::vector<Rational> rv(r.v.begin(), r.v.end());
    const Rational aa = dot(rv, r.v);
    out.push_back({r.mult, 2 * dot(rho, r.v) / aa, aa / longest});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace closed_form
