#include "shtk/classification.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace shtk {

namespace {

// ---------------------------------------------------------------------------
// sides of a pair as structured terms

struct Term;
using Terms = std::vector<Term>;

struct Term {
  enum class Kind { Name, SBlock, Diag, Literal };
  Kind kind = Kind::Name;
  AlgebraName name;                // Name
  std::vector<AlgebraName> parts;  // SBlock: s(x_1 + ... + x_k)
  Terms inner;                     // Diag
  std::string literal;             // Literal: exceptional algebra
};

Term named(Family f, int a, int b = 0) {
  Term t;
  t.name = {f, a, b};
  return t;
}

Term sblock(std::vector<AlgebraName> parts) {
  Term t;
  t.kind = Term::Kind::SBlock;
  t.parts = std::move(parts);
  return t;
}

Term diag(Terms inner) {
  Term t;
  t.kind = Term::Kind::Diag;
  t.inner = std::move(inner);
  return t;
}

Term literal(std::string s) {
  Term t;
  t.kind = Term::Kind::Literal;
  t.literal = std::move(s);
  return t;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split_plus(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == '+' && depth == 0)) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

bool is_exceptional_text(const std::string& s) {
  return s.size() >= 2 && (s[0] == 'e' || s[0] == 'f' || s[0] == 'g') &&
         std::isdigit(static_cast<unsigned char>(s[1]));
}

Terms parse_side(const std::string& text) {
  Terms out;
  const std::string s = strip(text);
  if (s == "0" || s == "{0}") return out;
  for (const auto& piece : split_plus(s)) {
    if (piece.empty()) throw ParseError("empty algebra name in '" + text + "'");
    if (piece == "0") continue;
    if (piece.rfind("diag(", 0) == 0 && piece.back() == ')') {
      out.push_back(diag(parse_side(piece.substr(5, piece.size() - 6))));
    } else if (piece.rfind("s(", 0) == 0 && piece.back() == ')') {
      std::vector<AlgebraName> parts;
      for (const auto& x : split_plus(piece.substr(2, piece.size() - 3))) parts.push_back(parse_algebra_name(x));
      if (parts.empty()) throw ParseError("empty s(...) in '" + text + "'");
      const Family f = parts.front().family;
      for (const auto& x : parts)
        if ((f != Family::U && f != Family::GlR && f != Family::GlC) || x.family != f)
          throw DomainError("s(...) expects u(.), gl(.,R) or gl(.,C) parts of one kind: " + piece);
      out.push_back(sblock(std::move(parts)));
    } else if (is_exceptional_text(piece)) {
      out.push_back(literal(piece));
    } else {
      Term t;
      t.name = parse_algebra_name(piece);
      out.push_back(t);
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep = "+") {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

std::string to_text(const Terms& ts) {
  std::vector<std::string> xs;
  for (const auto& t : ts) {
    switch (t.kind) {
      case Term::Kind::Name: xs.push_back(to_string(t.name)); break;
      case Term::Kind::Literal: xs.push_back(t.literal); break;
      case Term::Kind::Diag: xs.push_back("diag(" + to_text(t.inner) + ")"); break;
      case Term::Kind::SBlock: {
        std::vector<std::string> ps;
        for (const auto& p : t.parts) ps.push_back(to_string(p));
        xs.push_back("s(" + join(ps) + ")");
        break;
      }
    }
  }
  return xs.empty() ? "0" : join(xs);
}

// ---------------------------------------------------------------------------
// canonical factor multisets

// Low-rank isomorphisms among simple algebras and the two non-simple so(4)-type cases.
const std::map<std::string, std::vector<std::string>>& isomorphisms() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"sl(2,R)", {"so(2,1)"}},   {"su(1,1)", {"so(2,1)"}},   {"sp(1,R)", {"so(2,1)"}},
      {"su(2)", {"so(3)"}},       {"sp(1)", {"so(3)"}},       {"su*(2)", {"so(3)"}},
      {"sl(2,C)", {"so(3,1)"}},   {"so(3,C)", {"so(3,1)"}},   {"sp(1,C)", {"so(3,1)"}},
      {"so(4)", {"so(3)", "so(3)"}},
      {"so(2,2)", {"so(2,1)", "so(2,1)"}},
      {"so(4,C)", {"so(3,1)", "so(3,1)"}},
      {"so*(4)", {"so(3)", "so(2,1)"}},
      {"sp(2,R)", {"so(3,2)"}},   {"sp(1,1)", {"so(4,1)"}},   {"sp(2)", {"so(5)"}},
      {"sl(4,R)", {"so(3,3)"}},   {"su(2,2)", {"so(4,2)"}},   {"su*(4)", {"so(5,1)"}},
      {"su(4)", {"so(6)"}},       {"so*(6)", {"su(3,1)"}},    {"so*(8)", {"so(6,2)"}},
      {"so(5,C)", {"sp(2,C)"}},   {"so(6,C)", {"sl(4,C)"}},
  };
  return m;
}

void push_simple(std::vector<std::string>& out, AlgebraName n) {
  switch (n.family) {
    case Family::So:
    case Family::Su:
    case Family::U:
    case Family::SpPQ:
      if (n.a < n.b) std::swap(n.a, n.b);
      break;
    default: break;
  }
  const std::string s = to_string(n);
  const auto& iso = isomorphisms();
  if (auto it = iso.find(s); it != iso.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  } else {
    out.push_back(s);
  }
}

void push_factors(std::vector<std::string>& out, const AlgebraName& n) {
  const int a = n.a;
  const int b = n.b;
  switch (n.family) {
    case Family::AbelianR:
      for (int k = 0; k < a; ++k) out.push_back("R");
      return;
    case Family::GlR:
      if (a >= 2) push_simple(out, {Family::SlR, a});
      out.push_back("R");
      return;
    case Family::SlR:
    case Family::SlC:
      if (a >= 2) push_simple(out, n);
      return;
    case Family::GlC:
      if (a >= 2) push_simple(out, {Family::SlC, a});
      out.push_back("R");
      out.push_back("u(1)");
      return;
    case Family::So:
      if (a + b <= 1) return;
      if (a + b == 2) {
        out.push_back(a == 1 ? "R" : "u(1)");
        return;
      }
      push_simple(out, n);
      return;
    case Family::Su:
      if (a + b >= 2) push_simple(out, n);
      return;
    case Family::U:
      if (a + b >= 2) push_simple(out, {Family::Su, a, b});
      out.push_back("u(1)");
      return;
    case Family::SoC:
      if (a <= 1) return;
      if (a == 2) {
        out.push_back("R");
        out.push_back("u(1)");
        return;
      }
      push_simple(out, n);
      return;
    case Family::SoStar:
      if (a == 1) {
        out.push_back("u(1)");
        return;
      }
      push_simple(out, n);
      return;
    case Family::SpR:
    case Family::SpC:
    case Family::SpPQ:
    case Family::SuStar:
      push_simple(out, n);
      return;
  }
}

void erase_one(std::vector<std::string>& v, const std::string& x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) throw InternalError("normalization: missing abelian factor " + x);
  v.erase(it);
}

std::vector<std::string> tokens(const Terms& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) {
    switch (t.kind) {
      case Term::Kind::Name: push_factors(out, t.name); break;
      case Term::Kind::Literal: out.push_back(t.literal); break;
      case Term::Kind::Diag: out.push_back("diag(" + join(tokens(t.inner)) + ")"); break;
      case Term::Kind::SBlock: {
        std::vector<std::string> xs;
        for (const auto& p : t.parts) push_factors(xs, p);
        const Family f = t.parts.front().family;
        if (f == Family::U) erase_one(xs, "u(1)");
        else if (f == Family::GlR) erase_one(xs, "R");
        else {
          erase_one(xs, "R");
          erase_one(xs, "u(1)");
        }
        out.insert(out.end(), xs.begin(), xs.end());
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string key_of(const Terms& big, const Terms& small) {
  return join(tokens(big)) + ">" + join(tokens(small));
}

// ---------------------------------------------------------------------------
// textual model of each table case

AlgebraName algebra_param(const CaseSummand& c) { return parse_algebra_name(*c.g); }

void push_if(Terms& ts, Family f, int a, int b = 0) {
  if (a + b >= 1) ts.push_back(named(f, a, b));
}

Terms maximal_compact_terms(const AlgebraName& g) {
  Terms k;
  const int a = g.a;
  const int b = g.b;
  switch (g.family) {
    case Family::SlR: push_if(k, Family::So, a); break;
    case Family::So:
      push_if(k, Family::So, a);
      push_if(k, Family::So, b);
      break;
    case Family::Su: {
      std::vector<AlgebraName> parts;
      if (a > 0) parts.push_back({Family::U, a, 0});
      if (b > 0) parts.push_back({Family::U, b, 0});
      k.push_back(sblock(parts));
      break;
    }
    case Family::SpR:
    case Family::SoStar: push_if(k, Family::U, a); break;
    case Family::SlC: push_if(k, Family::Su, a); break;
    case Family::SoC: push_if(k, Family::So, a); break;
    case Family::SpC: push_if(k, Family::SpPQ, a); break;
    case Family::SpPQ:
      push_if(k, Family::SpPQ, a);
      push_if(k, Family::SpPQ, b);
      break;
    case Family::SuStar: push_if(k, Family::SpPQ, a); break;
    default: throw DomainError("case D requires a non-compact simple algebra, got " + to_string(g));
  }
  return k;
}

std::pair<Terms, Terms> case_terms(const CaseSummand& c) {
  check_side_conditions(c);
  const int p = c.p.value_or(0);
  const int q = c.q.value_or(0);
  const int n = c.n.value_or(0);
  Terms big;
  Terms small;
  switch (c.tag) {
    case CaseTag::A: {
      Term t;
      t.name = algebra_param(c);
      return {{t}, {t}};
    }
    case CaseTag::B: return {{named(Family::AbelianR, 1)}, {}};
    case CaseTag::C: {
      const AlgebraName g = algebra_param(c);
      if (!is_compact(g) || !is_simple(g)) throw DomainError("case C requires a compact simple algebra, got " + *c.g);
      big.push_back(named(g.family, g.a, g.b));
      if (g.family == Family::So) push_if(small, Family::So, g.a - 1);
      else if (g.family == Family::Su) small.push_back(sblock({{Family::U, g.a - 1, 0}, {Family::U, 1, 0}}));
      else if (g.family == Family::SpPQ) {
        push_if(small, Family::SpPQ, g.a - 1);
        small.push_back(named(Family::SpPQ, 1));
      } else {
        throw DomainError("case C: no model for " + *c.g);
      }
      return {big, small};
    }
    case CaseTag::D: {
      const AlgebraName g = algebra_param(c);
      if (is_compact(g) || !is_simple(g)) throw DomainError("case D requires a non-compact simple algebra, got " + *c.g);
      big.push_back(named(g.family, g.a, g.b));
      return {big, maximal_compact_terms(g)};
    }
    case CaseTag::E1:
      big.push_back(named(Family::So, p + q, 1));
      push_if(small, Family::So, p);
      small.push_back(named(Family::So, q, 1));
      return {big, small};
    case CaseTag::E2: {
      big.push_back(named(Family::Su, p + q, 1));
      std::vector<AlgebraName> parts;
      if (p > 0) parts.push_back({Family::U, p, 0});
      parts.push_back({Family::U, q, 1});
      small.push_back(sblock(parts));
      return {big, small};
    }
    case CaseTag::E3:
      big.push_back(named(Family::SpPQ, p + q, 1));
      push_if(small, Family::SpPQ, p);
      small.push_back(named(Family::SpPQ, q, 1));
      return {big, small};
    case CaseTag::E4: return {{literal("f4(-20)")}, {named(Family::So, 8, 1)}};
    case CaseTag::F1: return {{named(Family::SlC, n + 1)}, {named(Family::GlC, n)}};
    case CaseTag::F2: return {{named(Family::SoC, n + 1)}, {named(Family::SoC, n)}};
    case CaseTag::F3: return {{named(Family::SlR, n + 1)}, {named(Family::GlR, n)}};
    case CaseTag::F4: return {{named(Family::Su, p + 1, q)}, {named(Family::U, p, q)}};
    case CaseTag::F5: return {{named(Family::So, p + 1, q)}, {named(Family::So, p, q)}};
    case CaseTag::G1: {
      const AlgebraName g = algebra_param(c);
      if (!is_compact(g) || !is_simple(g)) throw DomainError("case G1 requires a compact simple algebra, got " + *c.g);
      Term t;
      t.name = g;
      return {{t, t}, {diag({t})}};
    }
    case CaseTag::G2: {
      Term t = named(Family::So, n, 1);
      return {{t, t}, {diag({t})}};
    }
    case CaseTag::H1: return {{named(Family::So, 2 * n, 2)}, {named(Family::U, n, 1)}};
    case CaseTag::H2:
      return {{named(Family::SuStar, n + 1)},
              {named(Family::Su, 2), named(Family::SuStar, n), named(Family::AbelianR, 1)}};
    case CaseTag::H3: return {{named(Family::SoStar, n + 1)}, {named(Family::So, 2), named(Family::SoStar, n)}};
    case CaseTag::H4:
      big.push_back(named(Family::SpPQ, p + 1, q));
      push_if(small, Family::SpPQ, p, q);
      small.push_back(named(Family::SpPQ, 1));
      return {big, small};
    case CaseTag::H5: return {{literal("e6(-26)")}, {named(Family::So, 9, 1), named(Family::AbelianR, 1)}};
  }
  throw InternalError("case_terms: unhandled tag");
}

// ---------------------------------------------------------------------------
// lookup tables

constexpr int kTableRange = 24;

CaseSummand pq_case(CaseTag t, int p, int q) {
  CaseSummand c;
  c.tag = t;
  c.p = p;
  c.q = q;
  return c;
}

CaseSummand plain_case(CaseTag t) {
  CaseSummand c;
  c.tag = t;
  return c;
}

CaseSummand n_case(CaseTag t, int n) {
  CaseSummand c;
  c.tag = t;
  c.n = n;
  return c;
}

CaseSummand g_case(CaseTag t, const AlgebraName& g) {
  CaseSummand c;
  c.tag = t;
  c.g = to_string(g);
  return c;
}

std::vector<AlgebraName> compact_simple_list() {
  std::vector<AlgebraName> out;
  for (int n = 2; n <= kTableRange; ++n) out.push_back({Family::Su, n, 0});
  for (int n = 5; n <= kTableRange; ++n) out.push_back({Family::So, n, 0});
  for (int n = 2; 2 * n <= kTableRange; ++n) out.push_back({Family::SpPQ, n, 0});
  out.push_back({Family::So, 3, 0});
  return out;
}

std::vector<AlgebraName> noncompact_simple_list() {
  std::vector<AlgebraName> out;
  for (int n = 2; n <= kTableRange; ++n) out.push_back({Family::SlR, n});
  for (int n = 2; n <= kTableRange / 2; ++n) out.push_back({Family::SlC, n});
  for (int p = 1; p <= kTableRange; ++p)
    for (int q = 1; q <= p && p + q <= kTableRange; ++q) {
      const AlgebraName so{Family::So, p, q};
      if (p + q >= 3 && is_simple(so)) out.push_back(so);
      out.push_back({Family::Su, p, q});
      if (2 * (p + q) <= kTableRange) out.push_back({Family::SpPQ, p, q});
    }
  for (int n = 1; 2 * n <= kTableRange; ++n) out.push_back({Family::SpR, n});
  for (int n = 1; 4 * n <= kTableRange; ++n) out.push_back({Family::SpC, n});
  for (int n = 3; 2 * n <= kTableRange; ++n)
    if (n != 4) out.push_back({Family::SoC, n});
  for (int n = 2; 2 * n <= kTableRange; ++n) out.push_back({Family::SuStar, n});
  for (int n = 3; 2 * n <= kTableRange; ++n) out.push_back({Family::SoStar, n});
  return out;
}

// Every table case with parameters in range, bounded ones first so that a
// raw pair is reported under the most specific name.
std::vector<CaseSummand> enumerate_cases() {
  std::vector<CaseSummand> out;
  out.push_back(plain_case(CaseTag::B));
  for (int n = 2; n <= kTableRange; ++n) out.push_back(n_case(CaseTag::F1, n));
  for (int n = 2; n <= kTableRange; ++n) out.push_back(n_case(CaseTag::F2, n));
  for (int n = 1; n <= kTableRange; ++n) out.push_back(n_case(CaseTag::F3, n));
  for (auto t : {CaseTag::F4, CaseTag::F5})
    for (int s = 1; s <= kTableRange; ++s)
      for (int p = 0; p <= s; ++p) {
        CaseSummand c = pq_case(t, p, s - p);
        try {
          check_side_conditions(c);
        } catch (const DomainError&) {
          continue;
        }
        out.push_back(c);
      }
  for (auto t : {CaseTag::E1, CaseTag::E2, CaseTag::E3, CaseTag::H4})
    for (int s = 0; s <= kTableRange; ++s)
      for (int p = 0; p <= s; ++p) {
        CaseSummand c = pq_case(t, p, s - p);
        try {
          check_side_conditions(c);
        } catch (const DomainError&) {
          continue;
        }
        out.push_back(c);
      }
  out.push_back(plain_case(CaseTag::E4));
  out.push_back(plain_case(CaseTag::H5));
  for (auto t : {CaseTag::G2, CaseTag::H1, CaseTag::H2, CaseTag::H3})
    for (int n = 1; n <= kTableRange; ++n) {
      CaseSummand c = n_case(t, n);
      try {
        check_side_conditions(c);
      } catch (const DomainError&) {
        continue;
      }
      out.push_back(c);
    }
  for (const auto& g : compact_simple_list()) out.push_back(g_case(CaseTag::G1, g));
  for (const auto& g : compact_simple_list()) out.push_back(g_case(CaseTag::C, g));
  for (const auto& g : noncompact_simple_list()) out.push_back(g_case(CaseTag::D, g));
  return out;
}

struct Tables {
  std::map<std::string, CaseSummand> cases;
  std::map<std::string, std::string> negatives;  // key -> note
};

const Tables& tables() {
  static const Tables t = [] {
    Tables t;
    for (const auto& c : enumerate_cases()) {
      const auto [big, small] = case_terms(c);
      t.cases.emplace(key_of(big, small), c);
    }
    for (int n = 2; n + 1 <= kTableRange / 2; ++n) {
      const std::string note = "real-forms example: sp(n+1,R) > sp(n,R)+sp(1,R) has infinite-dimensional Shintani spaces";
      t.negatives.emplace(key_of({named(Family::SpR, n + 1)}, {named(Family::SpR, n), named(Family::SpR, 1)}), note);
      t.negatives.emplace(key_of({named(Family::SpC, n + 1)}, {named(Family::SpC, n), named(Family::SpC, 1)}),
                          "real-forms example: sp(n+1,C) > sp(n,C)+sp(1,C) has no open Borel orbit");
    }
    return t;
  }();
  return t;
}

std::optional<AlgebraName> single_simple(const std::vector<std::string>& toks) {
  if (toks.size() != 1) return std::nullopt;
  if (toks[0] == "R" || toks[0] == "u(1)" || toks[0].rfind("diag(", 0) == 0 || is_exceptional_text(toks[0]))
    return std::nullopt;
  AlgebraName n = parse_algebra_name(toks[0]);
  if (!is_simple(n)) return std::nullopt;
  return n;
}

// ---------------------------------------------------------------------------
// boundedness: isomorphism with a sum of A, B, F1..F5

bool in_bounded_list(CaseTag t) {
  switch (t) {
    case CaseTag::A:
    case CaseTag::B:
    case CaseTag::F1:
    case CaseTag::F2:
    case CaseTag::F3:
    case CaseTag::F4:
    case CaseTag::F5: return true;
    default: return false;
  }
}

std::string canonical_token(const AlgebraName& g) {
  std::vector<std::string> out;
  push_factors(out, g);
  return out.size() == 1 ? out[0] : std::string();
}

std::optional<std::vector<CaseSummand>> bounded_form(const CaseSummand& c) {
  using V = std::vector<CaseSummand>;
  if (in_bounded_list(c.tag)) return V{c};
  const int p = c.p.value_or(0);
  const int q = c.q.value_or(0);
  const int n = c.n.value_or(0);
  switch (c.tag) {
    case CaseTag::E1:
      if (p == 0) return V{g_case(CaseTag::A, {Family::So, q, 1})};
      if (p == 1) return V{pq_case(CaseTag::F5, q, 1)};
      if (q == 0) return V{pq_case(CaseTag::F5, 0, p)};
      if (p == 2 && q == 1) return V{n_case(CaseTag::F2, 2)};
      return std::nullopt;
    case CaseTag::E2:
      if (p == 0) return V{g_case(CaseTag::A, {Family::Su, q, 1})};
      if (p == 1) return V{pq_case(CaseTag::F4, q, 1)};
      if (q == 0) return V{pq_case(CaseTag::F4, 0, p)};
      return std::nullopt;
    case CaseTag::E3:
      if (p == 0) return V{g_case(CaseTag::A, {Family::SpPQ, q, 1})};
      if (p == 1 && q == 0) return V{pq_case(CaseTag::F5, 0, 4)};
      return std::nullopt;
    case CaseTag::H4:
      if (p == 0 && q == 0) return V{g_case(CaseTag::A, {Family::SpPQ, 1, 0})};
      if (p == 0 && q == 1) return V{pq_case(CaseTag::F5, 0, 4)};
      if (p == 1 && q == 0) return V{pq_case(CaseTag::F5, 4, 0)};
      return std::nullopt;
    case CaseTag::G1:
      if (canonical_token(algebra_param(c)) == "so(3)") return V{pq_case(CaseTag::F5, 3, 0)};
      return std::nullopt;
    case CaseTag::G2:
      if (n == 2) return V{pq_case(CaseTag::F5, 1, 2)};
      if (n == 3) return V{n_case(CaseTag::F2, 3)};
      return std::nullopt;
    case CaseTag::H1:
      if (n == 1) return V{g_case(CaseTag::A, {Family::SlR, 2}), pq_case(CaseTag::F5, 0, 2)};
      if (n == 2) return V{pq_case(CaseTag::F4, 1, 2)};
      return std::nullopt;
    case CaseTag::H3:
      if (n == 1) return V{pq_case(CaseTag::F5, 2, 0), pq_case(CaseTag::F5, 0, 2)};
      return std::nullopt;
    case CaseTag::C: {
      const AlgebraName g = algebra_param(c);
      if (g.family == Family::So && g.a >= 3) return V{pq_case(CaseTag::F5, g.a - 1, 0)};
      if (g.family == Family::Su && g.a >= 2) return V{pq_case(CaseTag::F4, g.a - 1, 0)};
      if (g.family == Family::SpPQ && g.a == 2) return V{pq_case(CaseTag::F5, 4, 0)};
      return std::nullopt;
    }
    case CaseTag::D: {
      const std::string t = canonical_token(algebra_param(c));
      if (t.empty()) return std::nullopt;
      const AlgebraName k = parse_algebra_name(t);
      if (k.family == Family::So && k.b == 1 && k.a >= 2) return V{pq_case(CaseTag::F5, 0, k.a)};
      if (k.family == Family::Su && k.b == 1 && k.a >= 1) return V{pq_case(CaseTag::F4, 0, k.a)};
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

SummandVerdict case_verdict(const CaseSummand& c, std::string text) {
  case_terms(c);  // validates the parameters
  SummandVerdict v;
  v.summand = std::move(text);
  v.matched = {c};
  v.finite = true;
  if (auto b = bounded_form(c)) {
    v.bounded = true;
    v.bounded_via = *b;
  } else {
    v.bounded = false;
  }
  return v;
}

// ---------------------------------------------------------------------------
// matrix realization plans for raw pairs

struct Plan {
  enum class Kind { Diagonal, Blocks, Sigma } kind = Kind::Blocks;
  AlgebraName big;
  // Blocks: each block is a list of ambient indices carrying -1 in its S
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t ambient = 0;
  // Sigma: one of the transpose-type involutions
  enum class Sigma { Conjugate, OrthogonalR, SymplecticR, OrthogonalC, SymplecticC } sigma = Sigma::Conjugate;
  int p = 0;
  int q = 0;
  bool symmetric = false;
};

std::size_t real_dim(const Terms& ts) {
  std::size_t d = 0;
  for (const auto& t : ts) {
    switch (t.kind) {
      case Term::Kind::Name: d += dimension_formula(t.name); break;
      case Term::Kind::Diag: d += real_dim(t.inner); break;
      case Term::Kind::Literal: throw DomainError("no matrix model available for " + t.literal);
      case Term::Kind::SBlock: {
        std::size_t s = 0;
        for (const auto& x : t.parts) s += dimension_formula(x);
        s -= t.parts.front().family == Family::GlC ? 2 : 1;
        d += s;
        break;
      }
    }
  }
  return d;
}

struct Block {
  int pos = 0;
  int neg = 0;
};

// Per-family reading of the small side as a list of blocks.
std::optional<std::vector<Block>> read_blocks(const AlgebraName& big, const Terms& small) {
  std::vector<Block> blocks;
  auto only_names = [&](auto accept) -> bool {
    for (const auto& t : small) {
      if (t.kind != Term::Kind::Name) return false;
      auto b = accept(t.name);
      if (!b) return false;
      blocks.push_back(*b);
    }
    return true;
  };
  auto sblock_of = [&](Family part) -> bool {
    if (small.size() != 1) return false;
    const Term& t = small[0];
    if (t.kind == Term::Kind::SBlock) {
      if (t.parts.front().family != part) return false;
      for (const auto& x : t.parts) blocks.push_back({x.a, x.b});
      return true;
    }
    if (t.kind == Term::Kind::Name && t.name.family == part) {
      blocks.push_back({t.name.a, t.name.b});
      return true;
    }
    return false;
  };
  switch (big.family) {
    case Family::So: {
      bool ok = only_names([](const AlgebraName& x) -> std::optional<Block> {
        if (x.family == Family::So) return Block{x.a, x.b};
        if (x.family == Family::AbelianR && x.a == 1) return Block{1, 1};
        return std::nullopt;
      });
      if (!ok) return std::nullopt;
      break;
    }
    case Family::Su:
    case Family::U:
      if (!sblock_of(Family::U)) return std::nullopt;
      break;
    case Family::SlR:
      if (!sblock_of(Family::GlR)) return std::nullopt;
      break;
    case Family::SlC:
      if (!sblock_of(Family::GlC)) return std::nullopt;
      break;
    case Family::SpR:
    case Family::SpC:
    case Family::SpPQ: {
      const Family part = big.family;
      bool ok = only_names([&](const AlgebraName& x) -> std::optional<Block> {
        if (x.family == part) return Block{x.a, part == Family::SpPQ ? x.b : 0};
        return std::nullopt;
      });
      if (!ok) return std::nullopt;
      break;
    }
    default: return std::nullopt;
  }
  return blocks;
}

std::optional<Plan> plan_blocks(const AlgebraName& big, const Terms& small) {
  auto blocks = read_blocks(big, small);
  if (!blocks || blocks->empty()) return std::nullopt;
  const bool signature = big.family == Family::So || big.family == Family::Su || big.family == Family::U ||
                         big.family == Family::SpPQ;
  const int P = big.a;
  const int Q = signature ? big.b : 0;
  int sp = 0;
  int sq = 0;
  for (const auto& b : *blocks) {
    if (b.pos < 0 || b.neg < 0) return std::nullopt;
    sp += b.pos;
    sq += b.neg;
  }
  if (sp > P || sq > Q) return std::nullopt;
  const int left = (P - sp) + (Q - sq);
  const bool exact_only = big.family == Family::SpR || big.family == Family::SpC || big.family == Family::SpPQ;
  if (left > 1 || (exact_only && left != 0)) return std::nullopt;
  if (left == 1) blocks->push_back({P - sp, Q - sq});
  if (blocks->size() < 2) return std::nullopt;

  Plan plan;
  plan.kind = Plan::Kind::Blocks;
  plan.big = big;
  const auto h = static_cast<std::size_t>(P + Q);
  int next_pos = 0;
  int next_neg = 0;
  std::size_t copies = 1;
  if (big.family == Family::SpR || big.family == Family::SpC || big.family == Family::SpPQ) copies = 2;
  plan.ambient = h * copies;
  for (const auto& b : *blocks) {
    std::vector<std::size_t> idx;
    for (int k = 0; k < b.pos; ++k) idx.push_back(static_cast<std::size_t>(next_pos + k));
    for (int k = 0; k < b.neg; ++k) idx.push_back(static_cast<std::size_t>(P + next_neg + k));
    next_pos += b.pos;
    next_neg += b.neg;
    if (copies == 2) {
      const auto n0 = idx.size();
      for (std::size_t k = 0; k < n0; ++k) idx.push_back(idx[k] + h);
    }
    plan.blocks.push_back(std::move(idx));
  }
  plan.symmetric = plan.blocks.size() == 2;
  return plan;
}

std::optional<Plan> plan_gl_in_sp(const AlgebraName& big, const Terms& small) {
  if (small.size() != 1 || small[0].kind != Term::Kind::Name) return std::nullopt;
  const AlgebraName& s = small[0].name;
  const bool real = big.family == Family::SpR && s.family == Family::GlR;
  const bool cplx = big.family == Family::SpC && s.family == Family::GlC;
  if (!(real || cplx) || s.a != big.a) return std::nullopt;
  Plan plan;
  plan.kind = Plan::Kind::Blocks;
  plan.big = big;
  plan.ambient = static_cast<std::size_t>(2 * big.a);
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  for (int k = 0; k < big.a; ++k) {
    first.push_back(static_cast<std::size_t>(k));
    second.push_back(static_cast<std::size_t>(big.a + k));
  }
  plan.blocks = {first, second};
  plan.symmetric = true;
  return plan;
}

std::optional<Plan> plan_sigma(const AlgebraName& big, const Terms& small) {
  if (small.size() != 1 || small[0].kind != Term::Kind::Name) return std::nullopt;
  const AlgebraName& s = small[0].name;
  Plan plan;
  plan.kind = Plan::Kind::Sigma;
  plan.big = big;
  plan.symmetric = true;
  if (big.family == Family::Su && s.family == Family::So &&
      ((s.a == big.a && s.b == big.b) || (s.a == big.b && s.b == big.a))) {
    plan.sigma = Plan::Sigma::Conjugate;
    return plan;
  }
  if (big.family == Family::SlR && s.family == Family::So && s.a + s.b == big.a) {
    plan.sigma = Plan::Sigma::OrthogonalR;
    plan.p = s.a;
    plan.q = s.b;
    return plan;
  }
  if (big.family == Family::SlR && s.family == Family::SpR && 2 * s.a == big.a) {
    plan.sigma = Plan::Sigma::SymplecticR;
    return plan;
  }
  if (big.family == Family::SlC && s.family == Family::SoC && s.a == big.a) {
    plan.sigma = Plan::Sigma::OrthogonalC;
    return plan;
  }
  if (big.family == Family::SlC && s.family == Family::SpC && 2 * s.a == big.a) {
    plan.sigma = Plan::Sigma::SymplecticC;
    return plan;
  }
  return std::nullopt;
}

std::optional<Plan> plan_raw(const Terms& big, const Terms& small) {
  if (big.size() == 2 && big[0].kind == Term::Kind::Name && big[1].kind == Term::Kind::Name &&
      big[0].name == big[1].name && small.size() == 1 && small[0].kind == Term::Kind::Diag &&
      small[0].inner.size() == 1 && small[0].inner[0].kind == Term::Kind::Name && small[0].inner[0].name == big[0].name) {
    Plan plan;
    plan.kind = Plan::Kind::Diagonal;
    plan.big = big[0].name;
    plan.symmetric = true;
    return plan;
  }
  if (big.size() != 1 || big[0].kind != Term::Kind::Name) return std::nullopt;
  const AlgebraName& g = big[0].name;
  if (auto p = plan_sigma(g, small)) return p;
  if (auto p = plan_gl_in_sp(g, small)) return p;
  return plan_blocks(g, small);
}

ScalarMatrix reflection(std::size_t n, const std::vector<std::size_t>& negative) {
  ScalarMatrix s = ScalarMatrix::identity(n);
  for (auto k : negative) s(k, k) = Scalar(-1);
  return s;
}

ScalarMatrix symplectic_omega(std::size_t m) {
  ScalarMatrix o(2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    o(k, m + k) = Scalar(1);
    o(m + k, k) = Scalar(-1);
  }
  return o;
}

ReductiveEmbedding build(const Plan& plan, const std::string& small_name, const std::string& label) {
  MatrixLieAlgebra big = construct_classical(plan.big);
  switch (plan.kind) {
    case Plan::Kind::Diagonal: {
      auto e = diagonal_embedding(big);
      return ReductiveEmbedding(e.big(), e.small(), label);
    }
    case Plan::Kind::Blocks: {
      if (big.ambient_size() != plan.ambient) throw InternalError("block plan ambient size mismatch");
      MatrixLieAlgebra small = big;
      for (std::size_t k = 0; k + 1 < plan.blocks.size(); ++k)
        small = centralizer_of_involution(small, reflection(plan.ambient, plan.blocks[k]), small_name);
      return ReductiveEmbedding(std::move(big), std::move(small), label);
    }
    case Plan::Kind::Sigma: {
      const std::size_t n = big.ambient_size();
      std::function<ScalarMatrix(const ScalarMatrix&)> sigma;
      switch (plan.sigma) {
        case Plan::Sigma::Conjugate:
          sigma = [](const ScalarMatrix& x) { return conjugate_transpose(x).transpose(); };
          break;
        case Plan::Sigma::OrthogonalR: {
          std::vector<std::size_t> neg;
          for (int k = plan.p; k < plan.p + plan.q; ++k) neg.push_back(static_cast<std::size_t>(k));
          const ScalarMatrix i = reflection(n, neg);
          sigma = [i](const ScalarMatrix& x) { return -(i * x.transpose() * i); };
          break;
        }
        case Plan::Sigma::OrthogonalC:
          sigma = [](const ScalarMatrix& x) { return -x.transpose(); };
          break;
        case Plan::Sigma::SymplecticR:
        case Plan::Sigma::SymplecticC: {
          const ScalarMatrix o = symplectic_omega(n / 2);
          sigma = [o](const ScalarMatrix& x) { return o * x.transpose() * o; };
          break;
        }
      }
      MatrixLieAlgebra small = fixed_subalgebra(big, sigma, small_name);
      return ReductiveEmbedding(std::move(big), std::move(small), label);
    }
  }
  throw InternalError("build: unhandled plan");
}

SummandVerdict raw_verdict(const RawPair& r, std::string text) {
  SummandVerdict v;
  v.summand = std::move(text);
  const Terms big = parse_side(r.big);
  const Terms small = parse_side(r.small);
  const auto bt = tokens(big);
  const auto st = tokens(small);
  const std::string key = join(bt) + ">" + join(st);
  const auto& t = tables();
  if (auto it = t.cases.find(key); it != t.cases.end()) {
    SummandVerdict cv = case_verdict(it->second, v.summand);
    cv.note = "identified with " + to_string(it->second);
    return cv;
  }
  if (auto it = t.negatives.find(key); it != t.negatives.end()) {
    v.finite = false;
    v.bounded = false;
    v.note = it->second;
    return v;
  }
  if (!bt.empty() && bt == st) {
    for (const auto& tok : bt) v.matched.push_back(g_case(CaseTag::A, parse_algebra_name(tok)));
    v.bounded_via = v.matched;
    v.finite = true;
    v.bounded = true;
    v.note = "trivial case G = G'";
    return v;
  }
  if (bt.size() == 2 && bt[0] == bt[1] && st.size() == 1 && st[0] == "diag(" + bt[0] + ")") {
    if (auto g = single_simple({bt[0]}); g && !is_compact(*g)) {
      // compact and so(n,1) factors were found in the table above
      v.finite = false;
      v.bounded = false;
      v.note = "group case of a non-compact simple algebra other than so(n,1)";
      return v;
    }
  }
  v.note = "indeterminate by table";
  return v;
}

SummandVerdict summand_verdict(const DescriptorSummand& s) {
  if (const auto* c = std::get_if<CaseSummand>(&s)) return case_verdict(*c, to_string(*c));
  return raw_verdict(std::get<RawPair>(s), to_string(s));
}

std::optional<bool> conjunction(const std::vector<std::optional<bool>>& xs) {
  bool unknown = false;
  for (const auto& x : xs) {
    if (x == false) return false;
    if (!x) unknown = true;
  }
  if (unknown) return std::nullopt;
  return true;
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "unknown";
  return *b ? "yes" : "no";
}

}  // namespace

// ---------------------------------------------------------------------------

ClassificationVerdict classify(const PairDescriptor& d) {
  if (d.summands.empty()) throw DomainError("empty descriptor");
  ClassificationVerdict out;
  std::vector<std::optional<bool>> fin;
  std::vector<std::optional<bool>> bdd;
  for (const auto& s : d.summands) {
    auto v = summand_verdict(s);
    fin.push_back(v.finite);
    bdd.push_back(v.bounded);
    if (!v.finite) out.notes.push_back(v.summand + ": " + v.note);
    out.summands.push_back(std::move(v));
  }
  out.finite = conjunction(fin);
  out.bounded = conjunction(bdd);
  if (out.finite == false) out.bounded = false;
  return out;
}

ClassificationVerdict classify_finite(const PairDescriptor& d) {
  auto v = classify(d);
  v.bounded.reset();
  for (auto& s : v.summands) {
    s.bounded.reset();
    s.bounded_via.clear();
  }
  return v;
}

ClassificationVerdict classify_bounded(const PairDescriptor& d) {
  auto v = classify(d);
  v.finite.reset();
  for (auto& s : v.summands) s.finite.reset();
  return v;
}

ReductiveEmbedding realize(const DescriptorSummand& s) {
  if (const auto* c = std::get_if<CaseSummand>(&s)) return standard_embedding(*c);
  const auto& r = std::get<RawPair>(s);
  const std::string label = to_string(s);
  const Terms big = parse_side(r.big);
  const Terms small = parse_side(r.small);
  if (auto plan = plan_raw(big, small)) {
    auto e = build(*plan, to_text(small), label);
    const std::size_t want = real_dim(small);
    if (e.small().dim() == want) return e;
  }
  const auto& t = tables();
  if (auto it = t.cases.find(key_of(big, small)); it != t.cases.end()) {
    auto e = standard_embedding(it->second);
    return ReductiveEmbedding(e.big(), e.small(), label + " (as " + to_string(it->second) + ")");
  }
  throw DomainError("no matrix realization for " + label);
}

ReductiveEmbedding realize(const PairDescriptor& d) {
  if (d.summands.empty()) throw DomainError("empty descriptor");
  std::optional<ReductiveEmbedding> out;
  for (const auto& s : d.summands) {
    auto e = realize(s);
    out = out ? direct_sum(*out, e) : std::move(e);
  }
  return *out;
}

CrossValidation cross_validate(const PairDescriptor& d, const OrbitCheckConfig& cfg) {
  cfg.validate();
  CrossValidation out;
  out.table = classify(d);
  std::vector<std::optional<bool>> pps;
  std::vector<std::optional<bool>> bbs;
  for (std::size_t k = 0; k < d.summands.size(); ++k) {
    SummandCheck c;
    const auto& tv = out.table.summands[k];
    c.summand = tv.summand;
    c.table_finite = tv.finite;
    c.table_bounded = tv.bounded;
    try {
      const auto e = realize(d.summands[k]);
      c.pp = check_pp(e, cfg);
      c.bb = is_complex_pair(e) ? check_bb(e, cfg) : check_bb(complexify(e), cfg);
    } catch (const DomainError& err) {
      c.note = std::string("not checked: ") + err.what();
    }
    std::optional<bool> agree;
    auto compare = [&agree](const std::optional<bool>& table, const std::optional<OrbitVerdict>& v) {
      if (!table || !v) return;
      const bool same = *table == v->holds;
      agree = agree.value_or(true) && same;
    };
    compare(c.table_finite, c.pp);
    compare(c.table_bounded, c.bb);
    if (c.pp && c.bb && c.bb->holds && !c.pp->holds) agree = false;
    c.agree = agree;
    if (c.agree == false) out.agreement = false;
    pps.push_back(c.pp ? std::optional<bool>(c.pp->holds) : std::nullopt);
    bbs.push_back(c.bb ? std::optional<bool>(c.bb->holds) : std::nullopt);
    out.summands.push_back(std::move(c));
  }
  out.pp = conjunction(pps);
  out.bb = conjunction(bbs);
  return out;
}

EquivalenceReport equivalence_report(bool pp, bool bb) {
  if (bb && !pp) throw DomainError("(BB) without (PP) is impossible: (BB) implies (PP)");
  static const char* const labels[][3] = {
      {"(i)", "(PP)", "P P' is open in G for some minimal parabolic subgroups P, P'"},
      {"(ii)", "(Sh)", "dim Sh(lambda,nu) < infinity for all infinitesimal characters (lambda,nu)"},
      {"(iii)", "(Sh_mod)", "dim Sh_mod(lambda,nu) < infinity for all (lambda,nu)"},
      {"(iv)", "(Sh_mod)_1", "dim Sh_mod(rho_g, rho_g') < infinity"},
      {"(v)", "(inf-restr)", "dim Hom_G'(pi|G', tau) < infinity for admissible smooth pi, tau"},
      {"(vi)", "(inf-restr)_K", "the same for pi, tau^vee with cyclic spherical vectors"},
      {"(vii)", "(H-restr)", "dim Hom_G'(pi|G', tau) < infinity for admissible Hilbert pi, tau"},
      {"(viii)", "(H-restr)_K", "the same for pi, tau^vee with cyclic spherical vectors"},
      {"(ix)", "(inf-tensor)", "dim Hom_G'(pi (x) tau, C) < infinity for admissible smooth pi, tau"},
      {"(x)", "(inf-tensor)_K", "the same for pi, tau with cyclic spherical vectors"},
      {"(xi)", "(H-tensor)", "dim Hom_G'(pi (x) tau, C) < infinity for admissible Hilbert pi, tau"},
      {"(xii)", "(H-tensor)_K", "the same for pi, tau with cyclic spherical vectors"},
  };
  EquivalenceReport r;
  for (const auto& l : labels) r.conditions.push_back({l[0], l[1], l[2], pp});
  r.uniformly_bounded = bb;
  r.bounded_statement = bb ? "dim Sh(lambda,nu) <= C uniformly in (lambda,nu); B B' is open in G_C for Borel subgroups"
                           : "dim Sh(lambda,nu) is not bounded uniformly in (lambda,nu)";
  return r;
}

std::string explain(const PairDescriptor& d, const OrbitCheckConfig& cfg) {
  std::ostringstream os;
  const auto cv = cross_validate(d, cfg);
  os << "descriptor: " << to_string(d) << "\n";
  for (std::size_t k = 0; k < cv.summands.size(); ++k) {
    const auto& tv = cv.table.summands[k];
    const auto& sc = cv.summands[k];
    os << "summand " << tv.summand << "\n";
    if (!tv.matched.empty()) {
      std::vector<std::string> xs;
      for (const auto& c : tv.matched) xs.push_back(to_string(c));
      os << "  table case: " << join(xs, ", ") << "\n";
    }
    if (!tv.bounded_via.empty()) {
      std::vector<std::string> xs;
      for (const auto& c : tv.bounded_via) xs.push_back(to_string(c));
      os << "  isomorphic to: " << join(xs, " + ") << "\n";
    }
    if (!tv.note.empty()) os << "  note: " << tv.note << "\n";
    os << "  table: finite " << yes_no(tv.finite) << ", bounded " << yes_no(tv.bounded) << "\n";
    if (sc.pp) {
      os << "  (PP): " << (sc.pp->holds ? "open orbit" : "no open orbit") << ", best codim " << sc.pp->best_codim
         << " after " << sc.pp->samples << " samples" << (sc.pp->deterministic ? " (dimension count)" : "") << "\n";
    }
    if (sc.bb) {
      os << "  (BB): " << (sc.bb->holds ? "open orbit" : "no open orbit") << ", best codim " << sc.bb->best_codim
         << " after " << sc.bb->samples << " samples" << (sc.bb->deterministic ? " (dimension count)" : "") << "\n";
    }
    if (!sc.note.empty()) os << "  " << sc.note << "\n";
    if (sc.agree) os << "  checkers " << (*sc.agree ? "agree" : "DISAGREE") << " with the table\n";
  }
  // the checkers decide what the table leaves open
  const std::optional<bool> finite = cv.table.finite ? cv.table.finite : cv.pp;
  std::optional<bool> bounded = cv.table.bounded ? cv.table.bounded : cv.bb;
  if (finite == false) bounded = false;
  os << "finite: " << yes_no(finite) << (cv.table.finite ? "" : " (by checker)") << "\n";
  os << "bounded: " << yes_no(bounded) << (cv.table.bounded ? "" : " (by checker)") << "\n";
  if (finite) {
    const auto rep = equivalence_report(*finite, bounded.value_or(false));
    for (const auto& c : rep.conditions) os << "  " << c.label << " " << c.name << ": " << (c.holds ? "holds" : "fails") << "\n";
    os << "  " << rep.bounded_statement << "\n";
  }
  return os.str();
}

}  // namespace shtk
