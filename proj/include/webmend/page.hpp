#pragma once

#include <memory>
#include <string_view>

#include "css.hpp"
#include "html.hpp"
#include "layout.hpp"
#include "style.hpp"

namespace webmend {

// Parsed source shared by every rendering of a page.
struct Document {
  Dom dom;
  Stylesheet sheet;
};

// A document rendered at one viewport, optionally under property overrides.
struct Page {
  std::shared_ptr<const Document> doc;
  Viewport viewport;
  Overrides overrides;
  StyleMap styles;
  BoxMap boxes;

  const Dom& dom() const { return doc->dom; }
  const ComputedStyle& style(NodeId id) const { return styles[static_cast<std::size_t>(id)]; }
  const LayoutBox& box(NodeId id) const { return boxes[static_cast<std::size_t>(id)]; }

  static Page render(std::shared_ptr<const Document> doc, const Viewport& vp, Overrides overrides = {}) {
    Page p;
    p.styles = cascade(doc->dom, doc->sheet.rules, overrides);
    p.boxes = layout(doc->dom, p.styles, vp);
    p.doc = std::move(doc);
    p.viewport = vp;
    p.overrides = std::move(overrides);
    return p;
  }

  static Page load(std::string_view html, std::string_view css, const Viewport& vp = {}) {
    auto doc = std::make_shared<Document>();
    doc->dom = parse_html(html);
    doc->sheet = parse_css(css);
    return render(std::move(doc), vp);
  }

  // Same document and viewport, different overrides.
  Page rerender(Overrides o) const { return render(doc, viewport, std::move(o)); }
};

}  // namespace webmend
