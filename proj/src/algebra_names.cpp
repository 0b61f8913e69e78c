#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "shtk/liealg.hpp"

namespace shtk {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  // unicode field letters
  for (auto [from, to] : {std::pair<std::string, std::string>{"\xE2\x84\x9D", "R"}, {"\xE2\x84\x82", "C"}}) {
    for (std::size_t pos = out.find(from); pos != std::string::npos; pos = out.find(from))
      out.replace(pos, from.size(), to);
  }
  return out;
}

bool is_exceptional(const std::string& s) {
  if (s.empty()) return false;
  const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  if (c != 'e' && c != 'f' && c != 'g') return false;
  if (s.size() < 2 || !std::isdigit(static_cast<unsigned char>(s[1]))) return false;
  return true;
}

int to_int(const std::string& s, const std::string& whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("algebra name '" + whole + "': expected an integer, got '" + s + "'");
  return v;
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

AlgebraName parse_algebra_name(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s == "R") return {Family::AbelianR, 1, 0};
  if (is_exceptional(s)) throw DomainError("no matrix model available for exceptional algebra " + s);

  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw DomainError("unknown algebra name '" + s + "'");
  const std::string head = s.substr(0, open);
  const auto args = split_args(s.substr(open + 1, s.size() - open - 2));
  auto field_arg = [&]() -> char {
    if (args.size() == 2 && (args[1] == "R" || args[1] == "C")) return args[1][0];
    return 0;
  };
  auto one = [&](int lo) {
    const int v = to_int(args[0], s);
    if (v < lo) throw DomainError("algebra name '" + s + "': parameter out of range");
    return v;
  };
  auto pq = [&](Family f) -> AlgebraName {
    if (args.size() == 1) return {f, one(1), 0};
    if (args.size() != 2) throw DomainError("algebra name '" + s + "': expected (p,q) or (n)");
    const int p = to_int(args[0], s);
    const int q = to_int(args[1], s);
    if (p < 0 || q < 0 || p + q < 1) throw DomainError("algebra name '" + s + "': parameter out of range");
    return {f, p, q};
  };
  auto starred = [&](Family f) -> AlgebraName {
    if (args.size() != 1) throw DomainError("algebra name '" + s + "': expected (2n)");
    const int m = one(2);
    if (m % 2 != 0) throw DomainError("algebra name '" + s + "': argument must be even");
    return {f, m / 2, 0};
  };

  const char fld = field_arg();
  if (head == "gl" || head == "sl") {
    if (!fld) throw DomainError("algebra name '" + s + "': expected (n,R) or (n,C)");
    const bool sl = head == "sl";
    const int n = one(sl ? 2 : 1);
    if (fld == 'R') return {sl ? Family::SlR : Family::GlR, n, 0};
    return {sl ? Family::SlC : Family::GlC, n, 0};
  }
  if (head == "so" || head == "o") {
    if (fld == 'C') return {Family::SoC, one(1), 0};
    if (fld == 'R') return {Family::So, one(1), 0};
    return pq(Family::So);
  }
  if (head == "su") return pq(Family::Su);
  if (head == "u") return pq(Family::U);
  if (head == "sp") {
    if (fld == 'R') return {Family::SpR, one(1), 0};
    if (fld == 'C') return {Family::SpC, one(1), 0};
    return pq(Family::SpPQ);
  }
  if (head == "su*") return starred(Family::SuStar);
  if (head == "so*" || head == "o*") return starred(Family::SoStar);
  throw DomainError("unknown algebra name '" + s + "'");
}

std::string to_string(const AlgebraName& n) {
  const std::string a = std::to_string(n.a);
  const std::string b = std::to_string(n.b);
  auto pq = [&](const char* head) {
    return std::string(head) + "(" + (n.b == 0 ? a : a + "," + b) + ")";
  };
  switch (n.family) {
    case Family::GlR: return "gl(" + a + ",R)";
    case Family::SlR: return "sl(" + a + ",R)";
    case Family::So: return pq("so");
    case Family::Su: return pq("su");
    case Family::U: return pq("u");
    case Family::SpR: return "sp(" + a + ",R)";
    case Family::SlC: return "sl(" + a + ",C)";
    case Family::GlC: return "gl(" + a + ",C)";
    case Family::SoC: return "so(" + a + ",C)";
    case Family::SpC: return "sp(" + a + ",C)";
    case Family::SpPQ: return pq("sp");
    case Family::SuStar: return "su*(" + std::to_string(2 * n.a) + ")";
    case Family::SoStar: return "so*(" + std::to_string(2 * n.a) + ")";
    case Family::AbelianR: return "R";
  }
  return "?";
}

Field field_of(Family f) {
  switch (f) {
    case Family::SlC:
    case Family::GlC:
    case Family::SoC:
    case Family::SpC: return Field::Complex;
    default: return Field::Real;
  }
}

bool is_compact(const AlgebraName& n) {
  switch (n.family) {
    case Family::So:
    case Family::Su:
    case Family::U:
    case Family::SpPQ: return n.a == 0 || n.b == 0;
    case Family::SuStar:
    case Family::SoStar: return n.a == 1;
    default: return false;
  }
}

bool is_simple(const AlgebraName& n) {
  switch (n.family) {
    case Family::GlR:
    case Family::GlC:
    case Family::U:
    case Family::AbelianR: return false;
    case Family::SlR:
    case Family::SlC: return n.a >= 2;
    case Family::So: {
      const int N = n.a + n.b;
      if (N < 3) return false;
      if (N == 4 && n.a != 1 && n.b != 1) return false;  // so(4), so(2,2)
      return true;
    }
    case Family::SoC: return n.a >= 3 && n.a != 4;
    case Family::Su: return n.a + n.b >= 2;
    case Family::SpR:
    case Family::SpC:
    case Family::SpPQ:
    case Family::SuStar: return n.a + n.b >= 1;
    case Family::SoStar: return n.a >= 3;
  }
  return false;
}

std::size_t dimension_formula(const AlgebraName& n) {
  const auto a = static_cast<std::size_t>(n.a);
  const auto N = static_cast<std::size_t>(n.a + n.b);
  switch (n.family) {
    case Family::GlR: return a * a;
    case Family::SlR: return a * a - 1;
    case Family::So: return N * (N - 1) / 2;
    case Family::Su: return N * N - 1;
    case Family::U: return N * N;
    case Family::SpR: return a * (2 * a + 1);
    case Family::SlC: return 2 * (a * a - 1);
    case Family::GlC: return 2 * a * a;
    case Family::SoC: return a * (a - 1);
    case Family::SpC: return 2 * a * (2 * a + 1);
    case Family::SpPQ: return N * (2 * N + 1);
    case Family::SuStar: return 4 * a * a - 1;
    case Family::SoStar: return a * (2 * a - 1);
    case Family::AbelianR: return 1;
  }
  return 0;
}

}  // namespace shtk
