#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "candidate.hpp"
#include "page.hpp"
#include "segmentation.hpp"

namespace webmend {

// Property dependence graph for one (segment, issue): a star from the root to
// every other issue-relevant node, each edge carrying the ratio of the node's
// primary value to the root's.
struct Pdg {
  int segment_id = 0;
  IssueType issue = IssueType::FontSizing;
  NodeId root = kNoNode;
  std::vector<NodeId> nodes;        // ascending ids, root included
  std::map<NodeId, double> ratio;   // M(n) for every non-root node
  std::map<NodeId, double> primary;
  std::vector<Property> properties;

  std::size_t edge_count() const { return ratio.size(); }
};

inline std::vector<Property> issue_properties(IssueType issue) {
  switch (issue) {
    case IssueType::FontSizing: return {Property::FontSize, Property::LineHeight};
    case IssueType::TapTargetSpacing:
      return {Property::Width,       Property::Height,       Property::PaddingTop,    Property::PaddingRight,
              Property::PaddingBottom, Property::PaddingLeft, Property::MarginTop,     Property::MarginRight,
              Property::MarginBottom,  Property::MarginLeft};
    case IssueType::ContentSizing: return {Property::Width};
  }
  return {};
}

inline bool is_issue_relevant(const Page& page, NodeId id, IssueType issue) {
  const DomNode& n = page.dom().node(id);
  const ComputedStyle& s = page.style(id);
  switch (issue) {
    case IssueType::FontSizing: return !n.text.empty();
    case IssueType::TapTargetSpacing: return s.tappable;
    case IssueType::ContentSizing:
      // Percentages up to 100% follow their container and need no edge of their own.
      return n.tag == "img" || s.width.mode == SizeSpec::Mode::Px ||
             (s.width.mode == SizeSpec::Mode::Percent && s.width.value > 100.0);
  }
  return false;
}

inline double primary_value(const Page& page, NodeId id, IssueType issue) {
  const Rect& r = page.box(id).rect;
  switch (issue) {
    case IssueType::FontSizing: return page.style(id).font_size_px;
    case IssueType::TapTargetSpacing: return std::min(r.w, r.h);
    case IssueType::ContentSizing: return r.w;
  }
  return 0;
}

/// Root is the node with the largest primary value, ties to the smallest id.
inline Pdg build_pdg(const Segment& segment, IssueType issue, const Page& page) {
  Pdg g;
  g.segment_id = segment.id;
  g.issue = issue;
  g.properties = issue_properties(issue);
  for (NodeId id : segment.scope) {
    if (is_issue_relevant(page, id, issue)) g.nodes.push_back(id);
  }
  if (g.nodes.empty()) {
    throw EmptyPdg("segment " + std::to_string(segment.id) + " has no node relevant to " +
                   std::string(issue_name(issue)));
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  g.root = g.nodes.front();
  for (NodeId id : g.nodes) {
    g.primary[id] = primary_value(page, id, issue);
    if (g.primary[id] > g.primary[g.root]) g.root = id;
  }
  const double root_value = g.primary[g.root];
  for (NodeId id : g.nodes) {
    if (id == g.root) continue;
    // A degenerate root (zero size) maps every node to ratio 1.
    g.ratio[id] = root_value > 0 ? g.primary[id] / root_value : 1.0;
  }
  return g;
}

// One property value a PDG scales, taken from the original page.
struct ScaledProperty {
  NodeId node = kNoNode;
  Property property = Property::Width;
  CssValue original;
};

inline std::vector<ScaledProperty> scaled_properties(const Pdg& pdg, const Page& original) {
  std::vector<ScaledProperty> out;
  for (NodeId id : pdg.nodes) {
    const ComputedStyle& s = original.style(id);
    const LayoutBox& b = original.box(id);
    switch (pdg.issue) {
      case IssueType::FontSizing:
        out.push_back({id, Property::FontSize, CssValue::px(s.font_size_px)});
        // A font-relative line-height follows the font size on its own.
        if (!s.line_height_factor) out.push_back({id, Property::LineHeight, CssValue::px(s.line_height_px)});
        break;
      case IssueType::TapTargetSpacing: {
        out.push_back({id, Property::Width, CssValue::px(b.content_rect.w)});
        out.push_back({id, Property::Height, CssValue::px(b.content_rect.h)});
        const double pads[] = {s.padding.top, s.padding.right, s.padding.bottom, s.padding.left};
        const double margins[] = {s.margin.top, s.margin.right, s.margin.bottom, s.margin.left};
        for (std::size_t k = 0; k < 4; ++k) {
          if (pads[k] > 0) out.push_back({id, kPaddingProperties[k], CssValue::px(pads[k])});
        }
        for (std::size_t k = 0; k < 4; ++k) {
          if (margins[k] > 0) out.push_back({id, kMarginProperties[k], CssValue::px(margins[k])});
        }
        break;
      }
      case IssueType::ContentSizing:
        if (s.width.mode == SizeSpec::Mode::Percent) {
          out.push_back({id, Property::Width, CssValue::percent(s.width.value)});
        } else if (s.width.mode == SizeSpec::Mode::Px) {
          out.push_back({id, Property::Width, CssValue::px(s.width.value)});
        } else {
          out.push_back({id, Property::Width, CssValue::px(b.content_rect.w)});
        }
        break;
    }
  }
  return out;
}

/// Sets the root's value to x times its original and every other node to
/// x * root * M(n), i.e. x times its own original, so ratios inside the
/// PDG are preserved. Companion properties scale by the same x.
inline Overrides propagate(const Pdg& pdg, double x, const Page& original) {
  if (!in_domain(x)) throw DomainError("multiplier " + std::to_string(x) + " outside [0.25, 4]");
  Overrides out;
  for (const auto& sp : scaled_properties(pdg, original)) {
    CssValue v = sp.original;
    v.number *= x;
    out[sp.node][sp.property] = v;
  }
  return out;
}

inline double quantize_hundredths(double v) { return std::round(v * 100.0) / 100.0; }

/// Overrides for a whole candidate. Pairs at exactly 1.0 contribute nothing;
/// when several pairs scale the same property their multipliers compose.
/// Values are rounded to 0.01 so an emitted stylesheet reproduces them exactly.
inline Overrides candidate_overrides(const std::vector<Pdg>& pdgs, const Candidate& candidate, const Page& original) {
  if (candidate.dimension() != pdgs.size()) {
    throw DimensionMismatch("candidate has " + std::to_string(candidate.dimension()) + " coordinates, page has " +
                            std::to_string(pdgs.size()) + " issue pairs");
  }
  candidate.check_domain();
  std::map<std::pair<NodeId, Property>, std::pair<CssValue, double>> acc;
  for (std::size_t i = 0; i < pdgs.size(); ++i) {
    if (candidate[i] == 1.0) continue;
    for (const auto& sp : scaled_properties(pdgs[i], original)) {
      auto [it, inserted] = acc.try_emplace({sp.node, sp.property}, sp.original, 1.0);
      it->second.second *= candidate[i];
    }
  }
  Overrides out;
  for (const auto& [key, entry] : acc) {
    CssValue v = entry.first;
    v.number = quantize_hundredths(v.number * entry.second);
    out[key.first][key.second] = v;
  }
  return out;
}

}  // namespace webmend
