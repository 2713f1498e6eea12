#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "css.hpp"
#include "html.hpp"

namespace webmend {

inline constexpr double kDefaultFontSize = 16.0;
inline constexpr double kDefaultLineHeightFactor = 1.2;

enum class Display { Block, Inline };

struct Edges {
  double top = 0;
  double right = 0;
  double bottom = 0;
  double left = 0;

  double horizontal() const { return left + right; }
  double vertical() const { return top + bottom; }
  bool operator==(const Edges&) const = default;
};

struct SizeSpec {
  enum class Mode { Auto, Px, Percent };
  Mode mode = Mode::Auto;
  double value = 0;

  static SizeSpec auto_() { return {}; }
  static SizeSpec px(double v) { return {Mode::Px, v}; }
  static SizeSpec percent(double v) { return {Mode::Percent, v}; }
  bool operator==(const SizeSpec&) const = default;
};

struct ComputedStyle {
  double font_size_px = kDefaultFontSize;
  double line_height_px = kDefaultFontSize * kDefaultLineHeightFactor;
  // Set while line-height is still the font-relative default; descendants
  // inheriting it recompute against their own font size.
  std::optional<double> line_height_factor = kDefaultLineHeightFactor;
  SizeSpec width;
  SizeSpec height;
  Edges margin;
  Edges padding;
  Display display = Display::Block;
  bool tappable = false;

  bool operator==(const ComputedStyle&) const = default;
};

// Indexed by NodeId.
using StyleMap = std::vector<ComputedStyle>;

// Per-node property assignments applied after every stylesheet rule.
using Overrides = std::map<NodeId, std::map<Property, CssValue>>;

inline Display default_display(std::string_view tag) {
  if (tag == "a" || tag == "span" || tag == "button" || tag == "input" || tag == "img") {
    return Display::Inline;
  }
  return Display::Block;
}

namespace detail {

inline double& edge_ref(Edges& e, Property p) {
  switch (p) {
    case Property::MarginTop:
    case Property::PaddingTop: return e.top;
    case Property::MarginRight:
    case Property::PaddingRight: return e.right;
    case Property::MarginBottom:
    case Property::PaddingBottom: return e.bottom;
    default: return e.left;
  }
}

inline SizeSpec to_size(const CssValue& v, bool allow_percent) {
  switch (v.kind) {
    case CssValue::Kind::Px: return SizeSpec::px(v.number);
    case CssValue::Kind::Percent: return allow_percent ? SizeSpec::percent(v.number) : SizeSpec::auto_();
    default: return SizeSpec::auto_();
  }
}

inline void apply_declarations(const std::map<Property, CssValue>& decls, std::map<Property, CssValue>& specified) {
  for (const auto& [p, v] : decls) specified[p] = v;
}

}  // namespace detail

inline std::optional<double> attribute_px(const DomNode& n, const std::string& name) {
  auto it = n.attrs.find(name);
  if (it == n.attrs.end()) return std::nullopt;
  std::string_view s = it->second;
  if (s.ends_with("px")) s.remove_suffix(2);
  auto v = detail::parse_number(s);
  if (!v || *v < 0) return std::nullopt;
  return v;
}

/// Resolves the cascade for every node. Matching rules apply in
/// (specificity, source order) order, overrides apply last. font-size and
/// line-height inherit; the root starts at 16px with line-height 1.2em.
inline StyleMap cascade(const Dom& dom, const std::vector<CssRule>& rules, const Overrides& overrides = {}) {
  StyleMap styles(dom.size());
  std::vector<const CssRule*> matching;
  for (const DomNode& node : dom.nodes()) {
    std::map<Property, CssValue> specified;
    // img width/height attributes act as lowest-priority hints.
    if (node.tag == "img") {
      if (auto w = attribute_px(node, "width")) specified[Property::Width] = CssValue::px(*w);
      if (auto h = attribute_px(node, "height")) specified[Property::Height] = CssValue::px(*h);
    }

    matching.clear();
    for (const auto& rule : rules) {
      if (rule.selector.matches(dom, node.id)) matching.push_back(&rule);
    }
    std::stable_sort(matching.begin(), matching.end(), [](const CssRule* a, const CssRule* b) {
      if (a->specificity != b->specificity) return a->specificity < b->specificity;
      return a->source_order < b->source_order;
    });
    for (const CssRule* rule : matching) detail::apply_declarations(rule->declarations, specified);
    if (auto it = overrides.find(node.id); it != overrides.end()) {
      detail::apply_declarations(it->second, specified);
    }

    const ComputedStyle* parent = node.parent == kNoNode ? nullptr : &styles[static_cast<std::size_t>(node.parent)];
    ComputedStyle& cs = styles[static_cast<std::size_t>(node.id)];
    cs = ComputedStyle{};

    const double parent_font = parent ? parent->font_size_px : kDefaultFontSize;
    cs.font_size_px = parent_font;
    if (auto it = specified.find(Property::FontSize); it != specified.end()) {
      cs.font_size_px = it->second.kind == CssValue::Kind::Percent ? parent_font * it->second.number / 100.0
                                                                   : it->second.number;
    }

    if (auto it = specified.find(Property::LineHeight); it != specified.end()) {
      cs.line_height_factor.reset();
      cs.line_height_px = it->second.kind == CssValue::Kind::Percent
                              ? cs.font_size_px * it->second.number / 100.0
                              : it->second.number;
    } else if (parent && !parent->line_height_factor) {
      cs.line_height_factor.reset();
      cs.line_height_px = parent->line_height_px;
    } else {
      cs.line_height_factor = parent ? *parent->line_height_factor : kDefaultLineHeightFactor;
      cs.line_height_px = *cs.line_height_factor * cs.font_size_px;
    }

    if (auto it = specified.find(Property::Width); it != specified.end()) cs.width = detail::to_size(it->second, true);
    // Percentage heights are unsupported and resolve to auto.
    if (auto it = specified.find(Property::Height); it != specified.end()) {
      cs.height = detail::to_size(it->second, false);
    }
    for (Property p : kMarginProperties) {
      if (auto it = specified.find(p); it != specified.end()) detail::edge_ref(cs.margin, p) = it->second.number;
    }
    for (Property p : kPaddingProperties) {
      if (auto it = specified.find(p); it != specified.end()) detail::edge_ref(cs.padding, p) = it->second.number;
    }

    cs.display = default_display(node.tag);
    if (auto it = specified.find(Property::Display); it != specified.end()) {
      cs.display = it->second.kind == CssValue::Kind::Inline ? Display::Inline : Display::Block;
    }
    cs.tappable = is_tappable_tag(node.tag);
  }
  return styles;
}

}  // namespace webmend
