#include "shtk/cases.hpp"

#include "shtk/error.hpp"

namespace shtk {

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
    case CaseTag::D: return "D";
    case CaseTag::E1: return "E1";
    case CaseTag::E2: return "E2";
    case CaseTag::E3: return "E3";
    case CaseTag::E4: return "E4";
    case CaseTag::F1: return "F1";
    case CaseTag::F2: return "F2";
    case CaseTag::F3: return "F3";
    case CaseTag::F4: return "F4";
    case CaseTag::F5: return "F5";
    case CaseTag::G1: return "G1";
    case CaseTag::G2: return "G2";
    case CaseTag::H1: return "H1";
    case CaseTag::H2: return "H2";
    case CaseTag::H3: return "H3";
    case CaseTag::H4: return "H4";
    case CaseTag::H5: return "H5";
  }
  return "?";
}

std::optional<CaseTag> parse_case_tag(std::string_view s) {
  for (CaseTag t : kAllCaseTags)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

ParamShape param_shape(CaseTag t) {
  switch (t) {
    case CaseTag::B:
    case CaseTag::E4:
    case CaseTag::H5: return ParamShape::None;
    case CaseTag::A:
    case CaseTag::C:
    case CaseTag::D:
    case CaseTag::G1: return ParamShape::Algebra;
    case CaseTag::E1:
    case CaseTag::E2:
    case CaseTag::E3:
    case CaseTag::F4:
    case CaseTag::F5:
    case CaseTag::H4: return ParamShape::PQ;
    default: return ParamShape::N;
  }
}

std::string to_string(const CaseSummand& c) {
  std::string s = to_string(c.tag);
  std::string params;
  auto add = [&params](const std::string& kv) { params += (params.empty() ? "" : ",") + kv; };
  if (c.p) add("p=" + std::to_string(*c.p));
  if (c.q) add("q=" + std::to_string(*c.q));
  if (c.n) add("n=" + std::to_string(*c.n));
  if (c.g) add("g=" + *c.g);
  if (!params.empty()) s += ":" + params;
  return s;
}

bool has_matrix_model(CaseTag t) { return t != CaseTag::E4 && t != CaseTag::H5; }

void check_side_conditions(const CaseSummand& c) {
  const std::string tag = to_string(c.tag);
  auto fail = [&tag](const std::string& why) { throw DomainError("case " + tag + ": " + why); };
  switch (param_shape(c.tag)) {
    case ParamShape::None:
      if (c.p || c.q || c.n || c.g) fail("takes no parameters");
      return;
    case ParamShape::Algebra:
      if (!c.g) fail("requires g=<algebra>");
      if (c.p || c.q || c.n) fail("takes only g=<algebra>");
      return;
    case ParamShape::N:
      if (!c.n) fail("requires n");
      if (c.p || c.q || c.g) fail("takes only n");
      break;
    case ParamShape::PQ:
      if (!c.p || !c.q) fail("requires p and q");
      if (c.n || c.g) fail("takes only p and q");
      if (*c.p < 0 || *c.q < 0) fail("p and q must be non-negative");
      break;
  }
  const int pq = c.p && c.q ? *c.p + *c.q : 0;
  switch (c.tag) {
    case CaseTag::E1:
    case CaseTag::F5:
      if (pq < 2) fail("requires p+q >= 2");
      break;
    case CaseTag::E2:
    case CaseTag::E3:
    case CaseTag::F4:
      if (pq < 1) fail("requires p+q >= 1");
      break;
    case CaseTag::F1:
    case CaseTag::F2:
    case CaseTag::G2:
      if (*c.n < 2) fail("requires n >= 2");
      break;
    case CaseTag::F3:
    case CaseTag::H1:
    case CaseTag::H2:
    case CaseTag::H3:
      if (*c.n < 1) fail("requires n >= 1");
      break;
    default: break;
  }
}

}  // namespace shtk
