#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <webmend/webmend.hpp>

namespace webmend::testing {

inline Page load(std::string_view body, std::string_view css = {}, Viewport vp = {}) {
  return Page::load("<html><body>" + std::string(body) + "</body></html>", css, vp);
}

// n-th node (0-based, document order) with the given tag.
inline NodeId nth_tag(const Dom& dom, std::string_view tag, int n = 0) {
  for (const auto& node : dom.nodes()) {
    if (node.tag == tag && n-- == 0) return node.id;
  }
  throw std::out_of_range("no such node: " + std::string(tag));
}

inline NodeId by_id(const Dom& dom, std::string_view element_id) {
  for (const auto& node : dom.nodes()) {
    if (node.element_id == element_id) return node.id;
  }
  throw std::out_of_range("no such id: " + std::string(element_id));
}

inline bool boxes_equal(const BoxMap& a, const BoxMap& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].rect == b[i].rect) || !(a[i].content_rect == b[i].content_rect)) return false;
  }
  return true;
}

}  // namespace webmend::testing
