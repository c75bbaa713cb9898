#pragma once

// Classification of forms by their linear content, and point-count censuses
// over the canonical form space of PRM(d, m).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prm/bounds.hpp"
#include "prm/poly.hpp"

namespace prm {

enum class ClassTag { IsUnionOfLines, Pencil, NearPencil, ContainsHyperplane, LineFree };

std::string to_string(ClassTag tag);

struct CConditions {
  bool applicable = false;  // false when the form has no linear factor
  bool c1 = false;          // 2 <= d - s <= d - 1
  bool c2 = false;          // residual has (d - s - 1) q + 1 points
  bool c3 = false;          // linear part is s distinct concurrent lines
  bool c4 = false;          // linear part and residual share no rational point
};

struct CurveClassification {
  int d = 0;
  std::uint64_t points = 0;
  int s = 0;                // degree of the product of linear factors
  int linefree_degree = 0;  // d - s
  std::set<ClassTag> tags;
  std::optional<CConditions> c_conditions;  // set for plane curves only

  bool has(ClassTag t) const { return tags.count(t) != 0; }
  /// Stable text key, e.g. "IsUnionOfLines+NearPencil;s=3".
  std::string key() const;
};

/// Exactly one of IsUnionOfLines, ContainsHyperplane (some but not all of the
/// form is linear) and LineFree is set. Pencil and NearPencil refine
/// IsUnionOfLines for squarefree plane curves. Throws ZeroPolynomial.
CurveClassification classify(const Form& form);

/// Remark conditions on a plane curve L ∪ N split into its linear part L and residual N.
CConditions c_conditions_check(const Form& form);

struct ZanellaResult {
  std::uint64_t a = 0;      // largest hyperplane section
  std::int64_t bound = 0;   // a q + 1
  bool holds = true;
};

ZanellaResult zanella_check(const Field& field, int m, const std::vector<ProjectivePoint>& points);

/// Lines through P (off the conic) that miss every rational point of a
/// nonsingular conic. Throws PointOnConic, or DomainViolation when the conic
/// does not have q+1 points or contains a line.
std::uint64_t passant_profile(const Form& conic, const ProjectivePoint& P);

enum class CensusMode { Exhaustive, Sampled };

std::string to_string(CensusMode mode);

struct CensusOptions {
  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0xC0DE;
  std::size_t top_k = 3;
  std::uint64_t budget = 10'000'000'000ull;
  int workers = 0;
};

struct CensusEntry {
  std::uint64_t count = 0;  // rational points
  std::uint64_t tally = 0;  // normalized forms with that many points
  Form witness;             // the form of smallest canonical index
};

struct BoundCheck {
  std::string bound;
  std::int64_t value = 0;
  bool valid = false;
  bool ok = true;
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  std::string note;
};

struct AttainerSummary {
  std::uint64_t target = 0;
  std::uint64_t tally = 0;
  std::map<std::string, std::uint64_t> histogram;  // classification key -> forms
  std::int64_t formula = 0;                        // closed-form attainer count (m = 2)
  std::string note;
};

struct CensusReport {
  std::int64_t q = 0;
  int d = 0;
  int m = 0;
  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t forms = 0;  // normalized forms enumerated or sampled
  std::uint64_t seed = 0;
  std::vector<CensusEntry> top;
  std::vector<BoundCheck> checks;
  std::map<std::uint64_t, std::uint64_t> histogram;  // points -> forms
  std::optional<AttainerSummary> second;             // m = 2, 3 <= d <= q, exhaustive

  bool all_ok() const;
};

/// Point-count census of degree-d forms on P^m (1 <= d <= q). Exhaustive mode
/// throws BudgetExceeded when the form space is larger than the budget.
CensusReport census(FieldPtr field, int d, int m, const CensusOptions& opts = {});

/// Forms with exactly `target` points and the histogram of their classifications.
AttainerSummary attainer_census(FieldPtr field, int d, int m, std::uint64_t target,
                                std::uint64_t budget = 10'000'000'000ull, int workers = 0);

}  // namespace prm
