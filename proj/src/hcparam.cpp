#include "shtk/hcparam.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace shtk {

namespace {

// Positive real part first, ties by imaginary part.
int half_plane_sign(const Scalar& x) {
  if (sgn(x.re()) != 0) return sgn(x.re());
  return sgn(x.im());
}

std::vector<Scalar> a_rho(int n) {
  std::vector<Scalar> out;
  for (int j = 0; j < n; ++j) out.emplace_back(Rational(n - 1 - 2 * j, 2));
  return out;
}

std::vector<Scalar> so_rho(int N) {
  std::vector<Scalar> out;
  const int m = N / 2;
  for (int j = 0; j < m; ++j) {
    if (N % 2) out.emplace_back(Rational(2 * (m - j) - 1, 2));
    else out.emplace_back(Rational(m - 1 - j));
  }
  return out;
}

std::vector<Scalar> sp_rho(int n) {
  std::vector<Scalar> out;
  for (int j = n; j >= 1; --j) out.emplace_back(j);
  return out;
}

std::string lower_stripped(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string to_string(WeylType t) { return t == WeylType::A ? "A" : "B"; }

InfChar parse_infchar(std::string_view text, WeylType type) {
  InfChar v;
  v.weyl_type = type;
  std::size_t start = 0;
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) return v;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      try {
        v.entries.push_back(parse_scalar(text.substr(start, i - start)));
      } catch (const ParseError& e) {
        throw ParseError(std::string("infinitesimal character entry: ") + e.what(), start);
      }
      start = i + 1;
    }
  }
  return v;
}

std::string to_string(const InfChar& v) {
  std::string out;
  for (const auto& x : v.entries) {
    if (!out.empty()) out += ",";
    out += to_string(x);
  }
  return out;
}

std::vector<Scalar> act(const SignedPermutation& w, const std::vector<Scalar>& x) {
  if (w.perm.size() != x.size() || w.signs.size() != x.size())
    throw DomainError("signed permutation size does not match vector length");
  std::vector<Scalar> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = w.signs[i] < 0 ? -x[w.perm[i]] : x[w.perm[i]];
  return out;
}

std::vector<SignedPermutation> weyl_group(std::size_t k, WeylType type) {
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const std::size_t masks = type == WeylType::B ? (std::size_t{1} << k) : 1;
  do {
    for (std::size_t m = 0; m < masks; ++m) {
      SignedPermutation w{perm, std::vector<int>(k, 1)};
      for (std::size_t i = 0; i < k; ++i)
        if (m >> i & 1) w.signs[i] = -1;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Scalar sign_normalized(const Scalar& x) { return half_plane_sign(x) < 0 ? -x : x; }

bool descending(const Scalar& a, const Scalar& b) {
  if (a.re() != b.re()) return a.re() > b.re();
  return a.im() > b.im();
}

InfChar canonical_infchar(const InfChar& v) {
  InfChar out = v;
  if (out.weyl_type == WeylType::B)
    for (auto& x : out.entries) x = sign_normalized(x);
  std::sort(out.entries.begin(), out.entries.end(), descending);
  return out;
}

bool infchar_equal(const InfChar& v, const InfChar& w) {
  if (v.entries.size() != w.entries.size())
    throw DomainError("infinitesimal characters of different lengths");
  if (v.weyl_type != w.weyl_type) throw DomainError("infinitesimal characters of different Weyl types");
  return canonical_infchar(v).entries == canonical_infchar(w).entries;
}

InfChar rho_g(const AlgebraName& g) {
  switch (g.family) {
    case Family::GlR:
    case Family::SlR:
    case Family::SlC:
    case Family::GlC: return {a_rho(g.a), WeylType::A};
    case Family::Su:
    case Family::U: return {a_rho(g.a + g.b), WeylType::A};
    case Family::SuStar: return {a_rho(2 * g.a), WeylType::A};
    case Family::So: return {so_rho(g.a + g.b), WeylType::B};
    case Family::SoC: return {so_rho(g.a), WeylType::B};
    case Family::SoStar: return {so_rho(2 * g.a), WeylType::B};
    case Family::SpR:
    case Family::SpC: return {sp_rho(g.a), WeylType::B};
    case Family::SpPQ: return {sp_rho(g.a + g.b), WeylType::B};
    case Family::AbelianR: break;
  }
  throw DomainError("rho is not defined for the abelian algebra " + to_string(g));
}

InfChar rho_g(std::string_view algebra) {
  const std::string s = lower_stripped(algebra);
  // "sl(n)" / "gl(n)" without a field: the complex type is meant
  if ((s.rfind("sl(", 0) == 0 || s.rfind("gl(", 0) == 0) && s.find(',') == std::string::npos && s.back() == ')')
    return rho_g(parse_algebra_name(s.substr(0, s.size() - 1) + ",C)"));
  return rho_g(parse_algebra_name(algebra));
}

std::optional<AffineMatch> affine_membership(const InfChar& v, const AffineFamily& fam) {
  const std::size_t k = v.entries.size();
  if (k != fam.tail.size() + 1)
    throw DomainError("vector of length " + std::to_string(k) + " against a family with tail of length " +
                      std::to_string(fam.tail.size()));
  const bool signed_ = v.weyl_type == WeylType::B;
  auto norm = [&](const Scalar& x) { return signed_ ? sign_normalized(x) : x; };

  for (std::size_t j = 0; j < k; ++j) {
    SignedPermutation w{std::vector<std::size_t>(k, 0), std::vector<int>(k, 1)};
    std::vector<bool> used(fam.tail.size(), false);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (i == j) continue;
      const Scalar vi = norm(v.entries[i]);
      ok = false;
      for (std::size_t t = 0; t < fam.tail.size(); ++t) {
        if (used[t] || !(norm(fam.tail[t]) == vi)) continue;
        used[t] = true;
        w.perm[i] = t + 1;
        w.signs[i] = fam.tail[t] == v.entries[i] ? 1 : -1;
        ok = true;
        break;
      }
    }
    if (!ok) continue;
    AffineMatch m;
    m.c = norm(v.entries[j]);
    w.perm[j] = 0;
    w.signs[j] = m.c == v.entries[j] ? 1 : -1;
    m.witness = std::move(w);
    return m;
  }
  return std::nullopt;
}

Scalar dominant_a_param(const Scalar& c, const Rational& rho, ParamSide side) {
  const int h = half_plane_sign(c);
  int sigma = 1;
  if (side == ParamSide::Plus) sigma = h < 0 ? -1 : 1;
  else sigma = h > 0 ? -1 : 1;
  return Scalar(rho) + (sigma < 0 ? -c : c);
}

bool dgk_surjective(std::string_view algebra) {
  const std::string s = lower_stripped(algebra);
  static const char* const kExceptions[] = {"e6(-14)", "e6(-26)", "e7(-25)", "e8(-24)"};
  static const char* const kOthers[] = {"e6(6)",  "e6(2)",   "e6(-78)", "e7(7)",  "e7(-5)",   "e7(-133)",
                                        "e8(8)",  "e8(-248)", "f4(4)",   "f4(-20)", "f4(-52)", "g2(2)",
                                        "g2(-14)", "e6",      "e7",      "e8",      "f4",      "g2"};
  for (const char* e : kExceptions)
    if (s == e) return false;
  for (const char* e : kOthers)
    if (s == e) return true;
  if (s.size() > 1 && (s[0] == 'e' || s[0] == 'f' || s[0] == 'g') && std::isdigit(static_cast<unsigned char>(s[1])))
    throw DomainError("unknown exceptional real form '" + std::string(algebra) + "'");
  const AlgebraName g = parse_algebra_name(algebra);
  if (!is_simple(g)) throw DomainError(to_string(g) + " is not simple");
  return true;
}

}  // namespace shtk
