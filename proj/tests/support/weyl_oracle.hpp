#pragma once

// Brute-force orbit computations over S_k x| (Z/2)^k, independent of hcparam.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "shtk/exactmath.hpp"

namespace oracle {

using shtk::Scalar;

struct Element {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
};

inline std::vector<Element> all_elements(std::size_t k, bool with_signs) {
  std::vector<Element> out;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    const std::size_t total = with_signs ? (std::size_t{1} << k) : 1;
    for (std::size_t mask = 0; mask < total; ++mask) {
      Element e{p, {}};
      for (std::size_t i = 0; i < k; ++i) e.signs.push_back((mask & (std::size_t{1} << i)) ? -1 : 1);
      out.push_back(e);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<Scalar> act(const Element& e, const std::vector<Scalar>& x) {
  std::vector<Scalar> y;
  for (std::size_t i = 0; i < x.size(); ++i) y.push_back(Scalar(e.signs[i]) * x[e.perm[i]]);
  return y;
}

inline bool lex_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].re() != b[i].re()) return a[i].re() < b[i].re();
    if (a[i].im() != b[i].im()) return a[i].im() < b[i].im();
  }
  return false;
}

// Lexicographically largest point of the orbit.
inline std::vector<Scalar> orbit_max(const std::vector<Scalar>& v, bool with_signs) {
  std::vector<Scalar> best = v;
  for (const auto& e : all_elements(v.size(), with_signs)) {
    auto y = act(e, v);
    if (lex_less(best, y)) best = y;
  }
  return best;
}

// Every free value x with w (x, tail) = v for some group element w, reduced
// to the half plane Re > 0 (or Re = 0, Im >= 0) when signs are allowed.
inline std::vector<Scalar> free_values(const std::vector<Scalar>& v, const std::vector<Scalar>& tail,
                                       bool with_signs) {
  std::vector<Scalar> out;
  const std::size_t k = v.size();
  for (const auto& e : all_elements(k, with_signs)) {
    std::optional<Scalar> x;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (e.perm[i] == 0) x = Scalar(e.signs[i]) * v[i];
      else ok = Scalar(e.signs[i]) * tail[e.perm[i] - 1] == v[i];
    }
    if (!ok) continue;
    Scalar c = *x;
    if (with_signs && (sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0))) c = -c;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

}  // namespace oracle
