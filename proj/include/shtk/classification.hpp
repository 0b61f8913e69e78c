#pragma once

// Pair descriptors, the finiteness / boundedness tables, and their
// cross-validation against the open-orbit checkers.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shtk/cases.hpp"
#include "shtk/liealg.hpp"
#include "shtk/sphericity.hpp"

namespace shtk {

/// "big>small" with each side a '+'-separated list of algebra names.
struct RawPair {
  std::string big;
  std::string small;
  friend bool operator==(const RawPair&, const RawPair&) = default;
};

using DescriptorSummand = std::variant<CaseSummand, RawPair>;

struct PairDescriptor {
  std::vector<DescriptorSummand> summands;
  friend bool operator==(const PairDescriptor&, const PairDescriptor&) = default;
};

/// Grammar: summands joined by '+'; each is "CASE[:k=v,...]", "big>small" or
/// "[big>small]". Outside brackets, a bare algebra name after a raw pair is
/// appended to that pair's small side; a bare name before one is prepended to
/// its big side. Throws ParseError (with the offending offset) or DomainError
/// for violated side conditions.
PairDescriptor parse_descriptor(std::string_view text);
std::string to_string(const DescriptorSummand& s);
std::string to_string(const PairDescriptor& d);

/// Non-symmetric pairs of the boundedness remark; stored as data only.
struct DocumentedPair {
  const char* text;
  const char* note;
};
const std::vector<DocumentedPair>& documented_nonsymmetric_pairs();

struct SummandVerdict {
  std::string summand;
  /// Table cases the summand is identified with (a low-rank alias may expand to several).
  std::vector<CaseSummand> matched;
  /// Cases from the boundedness list that the summand is isomorphic to, if any.
  std::vector<CaseSummand> bounded_via;
  std::optional<bool> finite;
  std::optional<bool> bounded;
  std::string note;
};

struct ClassificationVerdict {
  std::optional<bool> finite;
  std::optional<bool> bounded;
  std::vector<SummandVerdict> summands;
  std::vector<std::string> notes;
};

/// Both verdicts at once; finite and bounded are nullopt when some summand is
/// not identifiable from the tables.
ClassificationVerdict classify(const PairDescriptor& d);
ClassificationVerdict classify_finite(const PairDescriptor& d);
ClassificationVerdict classify_bounded(const PairDescriptor& d);

/// Matrix realization of one summand / the whole descriptor (block-diagonal).
ReductiveEmbedding realize(const DescriptorSummand& s);
ReductiveEmbedding realize(const PairDescriptor& d);

struct SummandCheck {
  std::string summand;
  std::optional<bool> table_finite;
  std::optional<bool> table_bounded;
  std::optional<OrbitVerdict> pp;
  std::optional<OrbitVerdict> bb;
  std::string note;
  /// nullopt when nothing could be compared.
  std::optional<bool> agree;
};

struct CrossValidation {
  ClassificationVerdict table;
  std::vector<SummandCheck> summands;
  std::optional<bool> pp;
  std::optional<bool> bb;
  bool agreement = true;
};

CrossValidation cross_validate(const PairDescriptor& d, const OrbitCheckConfig& cfg);

struct EquivalentCondition {
  const char* label;  // "(i)".."(xii)"
  const char* name;   // "(PP)", "(Sh)", ...
  const char* statement;
  bool holds;
};

struct EquivalenceReport {
  std::vector<EquivalentCondition> conditions;
  bool uniformly_bounded = false;
  std::string bounded_statement;
};

EquivalenceReport equivalence_report(bool pp, bool bb);

/// Human-readable account of the table match and the checker results.
std::string explain(const PairDescriptor& d, const OrbitCheckConfig& cfg);

}  // namespace shtk
