#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace webmend {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

struct DomNode {
  NodeId id = kNoNode;
  std::string tag;         // normalized tag, unsupported tags become "div"
  std::string source_tag;  // tag as written in the source
  std::map<std::string, std::string> attrs;
  std::vector<std::string> classes;
  std::string element_id;
  std::string text;
  std::vector<NodeId> children;
  NodeId parent = kNoNode;
  int depth = 0;

  bool is_leaf() const { return children.empty(); }
  bool has_class(std::string_view c) const {
    return std::find(classes.begin(), classes.end(), c) != classes.end();
  }
};

inline bool is_supported_tag(std::string_view tag) {
  static constexpr std::array<std::string_view, 18> kTags = {
      "div", "p",  "span", "a",  "button", "input", "img", "body", "html",
      "h1",  "h2", "h3",   "h4", "h5",     "h6",    "ul",  "li",   "nav"};
  return std::find(kTags.begin(), kTags.end(), tag) != kTags.end();
}

inline bool is_void_tag(std::string_view tag) { return tag == "input" || tag == "img"; }

inline bool is_tappable_tag(std::string_view tag) {
  return tag == "a" || tag == "button" || tag == "input";
}

// Element tree. Node ids are preorder indices, so id order is document order
// and the root (the <html> element) has id 0.
class Dom {
 public:
  Dom() = default;
  explicit Dom(std::vector<DomNode> nodes) : nodes_(std::move(nodes)) {}

  const DomNode& root() const { return nodes_.front(); }
  const DomNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<DomNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(NodeId id) const { return id >= 0 && static_cast<std::size_t>(id) < nodes_.size(); }

  std::vector<NodeId> leaves() const {
    std::vector<NodeId> out;
    for (const auto& n : nodes_) {
      if (n.is_leaf()) out.push_back(n.id);
    }
    return out;
  }

  NodeId lowest_common_ancestor(NodeId a, NodeId b) const {
    while (node(a).depth > node(b).depth) a = node(a).parent;
    while (node(b).depth > node(a).depth) b = node(b).parent;
    while (a != b) {
      a = node(a).parent;
      b = node(b).parent;
    }
    return a;
  }

  bool is_ancestor(NodeId ancestor, NodeId n) const {
    for (NodeId cur = node(n).parent; cur != kNoNode; cur = node(cur).parent) {
      if (cur == ancestor) return true;
    }
    return false;
  }

  // Last node of the subtree rooted at id (preorder numbering makes subtrees contiguous).
  NodeId subtree_end(NodeId id) const {
    NodeId cur = id;
    while (!node(cur).children.empty()) cur = node(cur).children.back();
    return cur;
  }

 private:
  std::vector<DomNode> nodes_;
};

namespace detail {

class HtmlScanner {
 public:
  explicit HtmlScanner(std::string_view src) : src_(src) {}

  Dom parse() {
    skip_misc();
    if (eof()) fail("empty document");
    if (peek() != '<') fail("text outside the root element");
    parse_element(kNoNode, 0);
    skip_misc();
    if (!eof()) fail("content after the root element");
    if (nodes_.front().tag != "html") {
      throw ParseError("root element must be <html>", 1, 1);
    }
    return Dom(std::move(nodes_));
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<DomNode> nodes_;

  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  std::pair<int, int> position(std::size_t at) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    auto [line, col] = position(at);
    throw ParseError(what, line, col);
  }

  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  // Whitespace, comments and doctype declarations.
  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<!--")) {
        skip_comment();
      } else if (starts_with("<!")) {
        auto end = src_.find('>', pos_);
        if (end == std::string_view::npos) fail("unterminated declaration");
        pos_ = end + 1;
      } else {
        return;
      }
    }
  }

  void skip_comment() {
    auto end = src_.find("-->", pos_ + 4);
    if (end == std::string_view::npos) fail("unterminated comment");
    pos_ = end + 3;
  }

  std::string read_name() {
    std::string name;
    while (!eof()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':') {
        name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        ++pos_;
      } else {
        break;
      }
    }
    return name;
  }

  static std::string decode_entities(std::string_view raw) {
    static const std::array<std::pair<std::string_view, std::string_view>, 6> kEntities = {{
        {"&amp;", "&"}, {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&#39;", "'"}, {"&nbsp;", " "},
    }};
    std::string out;
    for (std::size_t i = 0; i < raw.size();) {
      bool matched = false;
      if (raw[i] == '&') {
        for (auto [ent, rep] : kEntities) {
          if (raw.substr(i).starts_with(ent)) {
            out += rep;
            i += ent.size();
            matched = true;
            break;
          }
        }
      }
      if (!matched) out.push_back(raw[i++]);
    }
    return out;
  }

  static void append_text(std::string& dst, std::string_view raw) {
    for (char c : decode_entities(raw)) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!dst.empty() && dst.back() != ' ') dst.push_back(' ');
      } else {
        dst.push_back(c);
      }
    }
  }

  void parse_attributes(DomNode& node, bool& self_closed) {
    self_closed = false;
    for (;;) {
      skip_space();
      if (eof()) fail("unterminated start tag");
      if (peek() == '>') {
        ++pos_;
        return;
      }
      if (peek() == '/' && peek(1) == '>') {
        pos_ += 2;
        self_closed = true;
        return;
      }
      const std::size_t attr_start = pos_;
      std::string name = read_name();
      if (name.empty()) fail("malformed attribute");
      skip_space();
      std::string value;
      if (peek() == '=') {
        ++pos_;
        skip_space();
        char quote = peek();
        if (quote != '"' && quote != '\'') fail_at("attribute value must be quoted", attr_start);
        ++pos_;
        auto end = src_.find(quote, pos_);
        if (end == std::string_view::npos) fail_at("unterminated attribute value", attr_start);
        value = decode_entities(src_.substr(pos_, end - pos_));
        pos_ = end + 1;
      }
      if (node.attrs.count(name)) fail_at("duplicate attribute '" + name + "'", attr_start);
      node.attrs[name] = value;
    }
  }

  NodeId parse_element(NodeId parent, int depth) {
    const std::size_t open_at = pos_;
    ++pos_;  // '<'
    std::string source_tag = read_name();
    if (source_tag.empty()) fail_at("malformed start tag", open_at);

    const NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
    {
      DomNode& n = nodes_.back();
      n.id = id;
      n.source_tag = source_tag;
      n.tag = is_supported_tag(source_tag) ? source_tag : "div";
      n.parent = parent;
      n.depth = depth;
    }
    bool self_closed = false;
    parse_attributes(nodes_[static_cast<std::size_t>(id)], self_closed);
    {
      DomNode& n = nodes_[static_cast<std::size_t>(id)];
      if (auto it = n.attrs.find("class"); it != n.attrs.end()) {
        std::istringstream ss(it->second);
        for (std::string c; ss >> c;) n.classes.push_back(c);
      }
      if (auto it = n.attrs.find("id"); it != n.attrs.end()) n.element_id = it->second;
    }
    if (self_closed || is_void_tag(source_tag)) return id;

    std::string text;
    for (;;) {
      if (eof()) fail_at("unclosed <" + source_tag + ">", open_at);
      if (starts_with("<!--")) {
        skip_comment();
      } else if (starts_with("</")) {
        const std::size_t close_at = pos_;
        pos_ += 2;
        std::string closing = read_name();
        skip_space();
        if (peek() != '>') fail_at("malformed end tag", close_at);
        ++pos_;
        if (closing != source_tag) {
          fail_at("unexpected </" + closing + ">, expected </" + source_tag + ">", close_at);
        }
        break;
      } else if (peek() == '<') {
        NodeId child = parse_element(id, depth + 1);
        nodes_[static_cast<std::size_t>(id)].children.push_back(child);
      } else {
        auto next = src_.find('<', pos_);
        if (next == std::string_view::npos) next = src_.size();
        append_text(text, src_.substr(pos_, next - pos_));
        pos_ = next;
      }
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    if (!text.empty() && text.front() == ' ') text.erase(0, 1);
    nodes_[static_cast<std::size_t>(id)].text = std::move(text);
    return id;
  }
};

inline std::string escape_html(std::string_view s, bool attribute) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
          break;
        }
        [[fallthrough]];
      default: out.push_back(c);
    }
  }
  return out;
}

inline void serialize_node(const Dom& dom, NodeId id, const std::map<NodeId, std::string>& injected_ids,
                           std::string& out) {
  const DomNode& n = dom.node(id);
  out += std::string(static_cast<std::size_t>(n.depth) * 2, ' ');
  out += "<" + n.source_tag;
  auto attrs = n.attrs;
  if (auto it = injected_ids.find(id); it != injected_ids.end()) attrs["id"] = it->second;
  for (const auto& [k, v] : attrs) out += " " + k + "=\"" + escape_html(v, true) + "\"";
  out += ">";
  if (is_void_tag(n.source_tag)) {
    out += "\n";
    return;
  }
  if (n.children.empty()) {
    out += escape_html(n.text, false) + "</" + n.source_tag + ">\n";
    return;
  }
  out += "\n";
  if (!n.text.empty()) {
    out += std::string(static_cast<std::size_t>(n.depth + 1) * 2, ' ') + escape_html(n.text, false) + "\n";
  }
  for (NodeId c : n.children) serialize_node(dom, c, injected_ids, out);
  out += std::string(static_cast<std::size_t>(n.depth) * 2, ' ') + "</" + n.source_tag + ">\n";
}

}  // namespace detail

/// Parses the supported HTML subset: properly nested elements, quoted
/// attributes, text, comments and a leading doctype. Whitespace in text is
/// collapsed; an element's text runs are joined into DomNode::text.
/// Throws ParseError carrying the 1-based line and column of the problem.
inline Dom parse_html(std::string_view source) { return detail::HtmlScanner(source).parse(); }

/// Writes the tree back out, optionally forcing the id attribute of some nodes.
/// Parsing the result yields the same tree (text whitespace is already normalized).
inline std::string serialize_html(const Dom& dom, const std::map<NodeId, std::string>& injected_ids = {}) {
  std::string out = "<!DOCTYPE html>\n";
  detail::serialize_node(dom, 0, injected_ids, out);
  return out;
}

}  // namespace webmend
