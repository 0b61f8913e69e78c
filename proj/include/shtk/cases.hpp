#pragma once

// Case labels of the symmetric-pair classification tables and their parameters.

#include <optional>
#include <string>
#include <string_view>

namespace shtk {

enum class CaseTag { A, B, C, D, E1, E2, E3, E4, F1, F2, F3, F4, F5, G1, G2, H1, H2, H3, H4, H5 };

inline constexpr CaseTag kAllCaseTags[] = {
    CaseTag::A,  CaseTag::B,  CaseTag::C,  CaseTag::D,  CaseTag::E1, CaseTag::E2, CaseTag::E3,
    CaseTag::E4, CaseTag::F1, CaseTag::F2, CaseTag::F3, CaseTag::F4, CaseTag::F5, CaseTag::G1,
    CaseTag::G2, CaseTag::H1, CaseTag::H2, CaseTag::H3, CaseTag::H4, CaseTag::H5};

std::string to_string(CaseTag t);
std::optional<CaseTag> parse_case_tag(std::string_view s);

enum class ParamShape { None, PQ, N, Algebra };
ParamShape param_shape(CaseTag t);

/// One summand of a pair descriptor given by table case.
struct CaseSummand {
  CaseTag tag = CaseTag::A;
  std::optional<int> p;
  std::optional<int> q;
  std::optional<int> n;
  /// Algebra name for A, C, D, G1 (canonical text form).
  std::optional<std::string> g;

  friend bool operator==(const CaseSummand&, const CaseSummand&) = default;
};

/// "F5:p=2,q=1", "B", "D:g=so(3,1)".
std::string to_string(const CaseSummand& c);

/// Throws DomainError when a required parameter is missing, an unexpected one
/// is present, or a side condition of the table fails.
void check_side_conditions(const CaseSummand& c);

/// False for the exceptional entries (E4, H5).
bool has_matrix_model(CaseTag t);

}  // namespace shtk
