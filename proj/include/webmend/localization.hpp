#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "candidate.hpp"
#include "page.hpp"
#include "segmentation.hpp"

namespace webmend {

// Thresholds and penalty weights of the usability scorer.
struct UsabilityConfig {
  double min_font_px = 16;
  double min_tap_px = 48;
  double min_tap_spacing_px = 8;
  double weight_font = 40;
  double weight_tap = 30;
  double weight_content = 30;
};

struct Diagnostic {
  IssueType issue = IssueType::FontSizing;
  NodeId node = kNoNode;
  double measured = 0;  // font size, tap min dimension / spacing, or right edge
  std::string detail;
};

struct SegmentIssues {
  int segment_id = 0;
  std::set<IssueType> issues;
  std::vector<Diagnostic> diagnostics;
};

struct IssueReport {
  std::vector<SegmentIssues> entries;  // ascending segment id, only segments with issues

  bool empty() const { return entries.empty(); }

  std::vector<IssuePair> pairs() const {
    std::vector<IssuePair> out;
    for (const auto& e : entries) {
      for (IssueType t : e.issues) out.push_back({e.segment_id, t});
    }
    return out;
  }

  const SegmentIssues* find(int segment_id) const {
    for (const auto& e : entries) {
      if (e.segment_id == segment_id) return &e;
    }
    return nullptr;
  }
};

struct UsabilityScore {
  double U = 100;
  double p_font = 0;
  double p_tap = 0;
  double p_content = 0;
};

struct TapCheck {
  NodeId node = kNoNode;
  double min_dimension = 0;
  double spacing = std::numeric_limits<double>::infinity();  // to the nearest other tappable

  bool undersized(const UsabilityConfig& cfg) const { return min_dimension < cfg.min_tap_px; }
  bool crowded(const UsabilityConfig& cfg) const { return spacing < cfg.min_tap_spacing_px; }
  bool failing(const UsabilityConfig& cfg) const { return undersized(cfg) || crowded(cfg); }
};

inline std::vector<TapCheck> tap_checks(const Page& page) {
  std::vector<NodeId> taps;
  for (const auto& n : page.dom().nodes()) {
    if (page.style(n.id).tappable) taps.push_back(n.id);
  }
  std::vector<TapCheck> out;
  out.reserve(taps.size());
  for (NodeId t : taps) {
    const Rect& r = page.box(t).rect;
    TapCheck c{t, std::min(r.w, r.h)};
    for (NodeId o : taps) {
      if (o != t) c.spacing = std::min(c.spacing, edge_distance(r, page.box(o).rect));
    }
    out.push_back(c);
  }
  return out;
}

inline double overflow_px(const Page& page, NodeId id) {
  return std::max(0.0, page.box(id).rect.right() - page.viewport.width);
}

/// Finds font-sizing, tap-target and content-sizing problems per segment.
/// Nodes are attributed to the segment owning them via SegmentSet::segment_of.
inline IssueReport detect_issues(const Page& page, const SegmentSet& segments, const UsabilityConfig& cfg = {}) {
  std::vector<SegmentIssues> per(segments.size());
  for (std::size_t i = 0; i < per.size(); ++i) per[i].segment_id = static_cast<int>(i) + 1;
  auto bucket = [&](NodeId id) -> SegmentIssues& {
    return per[static_cast<std::size_t>(segments.segment_of[static_cast<std::size_t>(id)] - 1)];
  };

  for (const auto& n : page.dom().nodes()) {
    const double fs = page.style(n.id).font_size_px;
    if (!n.text.empty() && fs < cfg.min_font_px) {
      auto& b = bucket(n.id);
      b.issues.insert(IssueType::FontSizing);
      b.diagnostics.push_back({IssueType::FontSizing, n.id, fs, "font-size below legible minimum"});
    }
    if (overflow_px(page, n.id) > 0) {
      auto& b = bucket(n.id);
      b.issues.insert(IssueType::ContentSizing);
      b.diagnostics.push_back(
          {IssueType::ContentSizing, n.id, page.box(n.id).rect.right(), "box extends past the viewport"});
    }
  }
  for (const auto& t : tap_checks(page)) {
    if (!t.failing(cfg)) continue;
    auto& b = bucket(t.node);
    b.issues.insert(IssueType::TapTargetSpacing);
    if (t.undersized(cfg)) {
      b.diagnostics.push_back({IssueType::TapTargetSpacing, t.node, t.min_dimension, "tap target too small"});
    }
    if (t.crowded(cfg)) {
      b.diagnostics.push_back({IssueType::TapTargetSpacing, t.node, t.spacing, "tap target too close to another"});
    }
  }

  IssueReport report;
  for (auto& b : per) {
    if (!b.issues.empty()) report.entries.push_back(std::move(b));
  }
  return report;
}

/// Deterministic 0-100 mobile-friendliness score:
/// U = clamp(100 - 40 p_font - 30 p_tap - 30 p_content, 0, 100).
inline UsabilityScore usability(const Page& page, const UsabilityConfig& cfg = {}) {
  std::size_t chars = 0;
  std::size_t small_chars = 0;
  double worst_overflow = 0;
  for (const auto& n : page.dom().nodes()) {
    chars += n.text.size();
    if (page.style(n.id).font_size_px < cfg.min_font_px) small_chars += n.text.size();
    worst_overflow = std::max(worst_overflow, overflow_px(page, n.id));
  }
  const auto taps = tap_checks(page);
  const auto failing = std::count_if(taps.begin(), taps.end(), [&](const TapCheck& t) { return t.failing(cfg); });

  UsabilityScore s;
  s.p_font = chars == 0 ? 0.0 : static_cast<double>(small_chars) / static_cast<double>(chars);
  s.p_tap = taps.empty() ? 0.0 : static_cast<double>(failing) / static_cast<double>(taps.size());
  s.p_content = std::min(1.0, worst_overflow / page.viewport.width);
  s.U = std::clamp(100.0 - cfg.weight_font * s.p_font - cfg.weight_tap * s.p_tap - cfg.weight_content * s.p_content,
                   0.0, 100.0);
  return s;
}

/// Initial candidate derived from the measured defects of each pair:
/// fonts scale to the legible minimum, tap targets to the minimum size (or
/// spacing), and overflowing content back inside the viewport.
inline Candidate suggest_candidate(const Page& page, const SegmentSet& segments, const IssueReport& report,
                                   const UsabilityConfig& cfg = {}) {
  Candidate c;
  for (const auto& pair : report.pairs()) {
    const SegmentIssues* entry = report.find(pair.segment_id);
    double x = 1.0;
    switch (pair.issue) {
      case IssueType::FontSizing: {
        double min_font = std::numeric_limits<double>::infinity();
        for (const auto& d : entry->diagnostics) {
          if (d.issue == IssueType::FontSizing) min_font = std::min(min_font, d.measured);
        }
        x = cfg.min_font_px / min_font;
        break;
      }
      case IssueType::TapTargetSpacing: {
        const auto& seg = segments.by_id(pair.segment_id);
        double ratio = 1.0;
        for (const auto& t : tap_checks(page)) {
          if (std::find(seg.scope.begin(), seg.scope.end(), t.node) == seg.scope.end()) continue;
          if (t.undersized(cfg) && t.min_dimension > 0) ratio = std::max(ratio, cfg.min_tap_px / t.min_dimension);
          if (t.crowded(cfg) && t.spacing > 0) ratio = std::max(ratio, cfg.min_tap_spacing_px / t.spacing);
        }
        x = ratio;
        break;
      }
      case IssueType::ContentSizing: {
        double right = 0;
        for (const auto& d : entry->diagnostics) {
          if (d.issue == IssueType::ContentSizing) right = std::max(right, d.measured);
        }
        x = page.viewport.width / right;
        break;
      }
    }
    c.values.push_back(clamp_multiplier(x));
  }
  return c;
}

}  // namespace webmend
