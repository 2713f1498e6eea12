#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace webmend {

enum class IssueType { FontSizing = 1, TapTargetSpacing = 2, ContentSizing = 3 };

inline constexpr IssueType kAllIssues[] = {IssueType::FontSizing, IssueType::TapTargetSpacing,
                                           IssueType::ContentSizing};

inline std::string_view issue_name(IssueType t) {
  switch (t) {
    case IssueType::FontSizing: return "FontSizing";
    case IssueType::TapTargetSpacing: return "TapTargetSpacing";
    case IssueType::ContentSizing: return "ContentSizing";
  }
  return "?";
}

// One optimization coordinate: a segment and one of its detected issues.
struct IssuePair {
  int segment_id = 0;
  IssueType issue = IssueType::FontSizing;

  auto operator<=>(const IssuePair&) const = default;
};

inline constexpr double kMinMultiplier = 0.25;
inline constexpr double kMaxMultiplier = 4.0;

inline double clamp_multiplier(double x) { return std::clamp(x, kMinMultiplier, kMaxMultiplier); }

inline bool in_domain(double x) { return x >= kMinMultiplier && x <= kMaxMultiplier; }

// Multipliers X_i^j, one per IssuePair in (segment, issue) order.
struct Candidate {
  std::vector<double> values;

  std::size_t dimension() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  bool operator==(const Candidate&) const = default;

  static Candidate identity(std::size_t d) { return {std::vector<double>(d, 1.0)}; }

  void clamp() {
    for (auto& v : values) v = clamp_multiplier(v);
  }

  void check_domain() const {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!in_domain(values[i])) {
        throw DomainError("candidate coordinate " + std::to_string(i) + " = " + std::to_string(values[i]) +
                          " outside [0.25, 4]");
      }
    }
  }
};

}  // namespace webmend
