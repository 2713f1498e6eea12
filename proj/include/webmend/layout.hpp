#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "geometry.hpp"
#include "html.hpp"
#include "style.hpp"

namespace webmend {

inline constexpr double kCharWidthFactor = 0.6;
inline constexpr double kDefaultReplacedSize = 100.0;  // img without width/height
inline constexpr double kDefaultInputWidth = 120.0;

struct Viewport {
  double width = 360;
  double height = 640;

  bool operator==(const Viewport&) const = default;
};

struct LayoutBox {
  NodeId node_id = kNoNode;
  Rect rect;          // includes padding
  Rect content_rect;  // rect minus padding

  bool operator==(const LayoutBox&) const = default;
};

// Indexed by NodeId.
using BoxMap = std::vector<LayoutBox>;

inline double text_width(std::size_t chars, double font_size_px) {
  return static_cast<double>(chars) * kCharWidthFactor * font_size_px;
}

// Number of wrapped lines for a run of text; 0 for empty text.
inline int text_lines(std::size_t chars, double font_size_px, double content_width) {
  if (chars == 0) return 0;
  const double tw = text_width(chars, font_size_px);
  const double usable = std::max(content_width, kCharWidthFactor * font_size_px);
  // The epsilon absorbs representation error, e.g. 100 * 0.6 * 16 landing just above 960.
  return std::max(1, static_cast<int>(std::ceil(tw / usable - 1e-9)));
}

namespace detail {

class LayoutEngine {
 public:
  LayoutEngine(const Dom& dom, const StyleMap& styles) : dom_(dom), styles_(styles), boxes_(dom.size()) {
    for (const auto& n : dom.nodes()) boxes_[static_cast<std::size_t>(n.id)].node_id = n.id;
  }

  BoxMap run(const Viewport& vp) {
    place_block(0, 0, 0, vp.width);
    return std::move(boxes_);
  }

 private:
  const Dom& dom_;
  const StyleMap& styles_;
  BoxMap boxes_;

  const ComputedStyle& style(NodeId id) const { return styles_[static_cast<std::size_t>(id)]; }

  static std::optional<double> resolve(const SizeSpec& s, double containing) {
    switch (s.mode) {
      case SizeSpec::Mode::Px: return s.value;
      case SizeSpec::Mode::Percent: return containing * s.value / 100.0;
      case SizeSpec::Mode::Auto: return std::nullopt;
    }
    return std::nullopt;
  }

  static bool is_replaced(const DomNode& n) { return n.tag == "img" || n.tag == "input"; }

  // Lays out the node's own text followed by its children; returns content height.
  double layout_contents(NodeId id, double cx, double cy, double content_w) {
    const DomNode& n = dom_.node(id);
    const ComputedStyle& cs = style(id);
    double y = cy + text_lines(n.text.size(), cs.font_size_px, content_w) * cs.line_height_px;
    y = flow_children(id, cx, y, content_w);
    return y - cy;
  }

  // Stacks block children and line-wraps runs of inline children.
  double flow_children(NodeId id, double cx, double cy, double content_w) {
    const auto& children = dom_.node(id).children;
    double y = cy;
    std::size_t i = 0;
    while (i < children.size()) {
      NodeId child = children[i];
      if (!flows_inline(child)) {
        y = place_block(child, cx, y, content_w);
        ++i;
        continue;
      }
      double line_x = cx;
      double line_h = 0;
      for (; i < children.size() && flows_inline(children[i]); ++i) {
        const NodeId c = children[i];
        const ComputedStyle& s = style(c);
        const double content = inline_content_width(c, content_w);
        const double outer_w = content + s.padding.horizontal() + s.margin.horizontal();
        if (line_x > cx && line_x + outer_w > cx + content_w) {
          y += line_h;
          line_x = cx;
          line_h = 0;
        }
        const double h = place_box(c, line_x + s.margin.left, y + s.margin.top, content);
        line_h = std::max(line_h, h + s.margin.vertical());
        line_x += outer_w;
      }
      y += line_h;
    }
    return y;
  }

  // Inline elements with element children are laid out as blocks.
  bool flows_inline(NodeId id) const {
    return style(id).display == Display::Inline && dom_.node(id).children.empty();
  }

  double inline_content_width(NodeId id, double containing_w) const {
    const DomNode& n = dom_.node(id);
    const ComputedStyle& s = style(id);
    if (auto w = resolve(s.width, containing_w)) return *w;
    if (n.tag == "img") return kDefaultReplacedSize;
    if (n.tag == "input") return kDefaultInputWidth;
    const double avail = std::max(0.0, containing_w - s.margin.horizontal() - s.padding.horizontal());
    return std::min(text_width(n.text.size(), s.font_size_px), avail);
  }

  // Positions a box whose content width is known; returns its border-box height.
  double place_box(NodeId id, double x, double y, double content_w) {
    const DomNode& n = dom_.node(id);
    const ComputedStyle& s = style(id);
    const double cx = x + s.padding.left;
    const double cy = y + s.padding.top;
    double content_h = 0;
    if (auto h = resolve(s.height, 0)) {
      layout_contents(id, cx, cy, content_w);
      content_h = *h;
    } else if (n.tag == "img") {
      content_h = kDefaultReplacedSize;
    } else if (n.tag == "input") {
      content_h = s.line_height_px;
    } else {
      content_h = layout_contents(id, cx, cy, content_w);
    }
    LayoutBox& box = boxes_[static_cast<std::size_t>(id)];
    box.content_rect = {cx, cy, content_w, content_h};
    box.rect = {x, y, content_w + s.padding.horizontal(), content_h + s.padding.vertical()};
    return box.rect.h;
  }

  // Block in normal flow at the current cursor; returns the cursor below it (margins included).
  double place_block(NodeId id, double cx, double cy, double containing_w) {
    const DomNode& n = dom_.node(id);
    const ComputedStyle& s = style(id);
    double content_w = 0;
    if (auto w = resolve(s.width, containing_w)) {
      content_w = *w;
    } else if (is_replaced(n)) {
      content_w = n.tag == "img" ? kDefaultReplacedSize : kDefaultInputWidth;
    } else {
      content_w = std::max(0.0, containing_w - s.margin.horizontal() - s.padding.horizontal());
    }
    const double h = place_box(id, cx + s.margin.left, cy + s.margin.top, content_w);
    return cy + s.margin.top + h + s.margin.bottom;
  }
};

}  // namespace detail

/// Simplified block/inline flow. Widths resolve against the parent content
/// width and are never clamped to the viewport, so overflow stays visible.
/// Text occupies ceil(chars * 0.6 * font_size / content_width) lines.
inline BoxMap layout(const Dom& dom, const StyleMap& styles, const Viewport& viewport) {
  return detail::LayoutEngine(dom, styles).run(viewport);
}

}  // namespace webmend
