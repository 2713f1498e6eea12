#pragma once

#include <array>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "html.hpp"

namespace webmend {

enum class Property {
  FontSize,
  LineHeight,
  Width,
  Height,
  MarginTop,
  MarginRight,
  MarginBottom,
  MarginLeft,
  PaddingTop,
  PaddingRight,
  PaddingBottom,
  PaddingLeft,
  Display,
};

inline constexpr std::array<Property, 4> kMarginProperties = {
    Property::MarginTop, Property::MarginRight, Property::MarginBottom, Property::MarginLeft};
inline constexpr std::array<Property, 4> kPaddingProperties = {
    Property::PaddingTop, Property::PaddingRight, Property::PaddingBottom, Property::PaddingLeft};

inline std::string_view property_name(Property p) {
  switch (p) {
    case Property::FontSize: return "font-size";
    case Property::LineHeight: return "line-height";
    case Property::Width: return "width";
    case Property::Height: return "height";
    case Property::MarginTop: return "margin-top";
    case Property::MarginRight: return "margin-right";
    case Property::MarginBottom: return "margin-bottom";
    case Property::MarginLeft: return "margin-left";
    case Property::PaddingTop: return "padding-top";
    case Property::PaddingRight: return "padding-right";
    case Property::PaddingBottom: return "padding-bottom";
    case Property::PaddingLeft: return "padding-left";
    case Property::Display: return "display";
  }
  return "?";
}

inline std::optional<Property> property_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Property::Display); ++i) {
    auto p = static_cast<Property>(i);
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

struct CssValue {
  enum class Kind { Px, Percent, Auto, Block, Inline };
  Kind kind = Kind::Px;
  double number = 0;

  static CssValue px(double v) { return {Kind::Px, v}; }
  static CssValue percent(double v) { return {Kind::Percent, v}; }
  static CssValue keyword(Kind k) { return {k, 0}; }

  bool is_length() const { return kind == Kind::Px || kind == Kind::Percent; }
  bool operator==(const CssValue&) const = default;
};

// Two-decimal rendering used for emitted stylesheets.
inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

inline std::string to_css(const CssValue& v) {
  switch (v.kind) {
    case CssValue::Kind::Px: return format_number(v.number) + "px";
    case CssValue::Kind::Percent: return format_number(v.number) + "%";
    case CssValue::Kind::Auto: return "auto";
    case CssValue::Kind::Block: return "block";
    case CssValue::Kind::Inline: return "inline";
  }
  return "";
}

struct Specificity {
  int ids = 0;
  int classes = 0;
  int tags = 0;

  auto operator<=>(const Specificity&) const = default;
};

struct SimpleSelector {
  enum class Kind { Tag, Class, Id };
  Kind kind = Kind::Tag;
  std::string name;

  bool matches(const DomNode& n) const {
    switch (kind) {
      case Kind::Tag: return n.tag == name;
      case Kind::Class: return n.has_class(name);
      case Kind::Id: return !n.element_id.empty() && n.element_id == name;
    }
    return false;
  }
};

// Descendant-combinator chain, outermost first.
struct Selector {
  std::vector<SimpleSelector> chain;

  Specificity specificity() const {
    Specificity s;
    for (const auto& simple : chain) {
      switch (simple.kind) {
        case SimpleSelector::Kind::Id: ++s.ids; break;
        case SimpleSelector::Kind::Class: ++s.classes; break;
        case SimpleSelector::Kind::Tag: ++s.tags; break;
      }
    }
    return s;
  }

  // Right-to-left matching; greedy ancestor search is exact for descendant-only chains.
  bool matches(const Dom& dom, NodeId id) const {
    if (chain.empty() || !chain.back().matches(dom.node(id))) return false;
    int k = static_cast<int>(chain.size()) - 2;
    for (NodeId cur = dom.node(id).parent; k >= 0 && cur != kNoNode; cur = dom.node(cur).parent) {
      if (chain[static_cast<std::size_t>(k)].matches(dom.node(cur))) --k;
    }
    return k < 0;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& s : chain) {
      if (!out.empty()) out += ' ';
      if (s.kind == SimpleSelector::Kind::Class) out += '.';
      if (s.kind == SimpleSelector::Kind::Id) out += '#';
      out += s.name;
    }
    return out;
  }
};

struct CssRule {
  Selector selector;
  std::map<Property, CssValue> declarations;
  Specificity specificity;
  int source_order = 0;
};

struct CssWarning {
  int line = 0;
  int column = 0;
  std::string message;
};

struct Stylesheet {
  std::vector<CssRule> rules;
  std::vector<CssWarning> warnings;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<CssValue> parse_length(std::string_view s) {
  s = trim(s);
  if (s.ends_with("px")) {
    auto v = parse_number(s.substr(0, s.size() - 2));
    if (v) return CssValue::px(*v);
  } else if (s.ends_with("%")) {
    auto v = parse_number(s.substr(0, s.size() - 1));
    if (v) return CssValue::percent(*v);
  } else if (auto v = parse_number(s); v && *v == 0) {
    return CssValue::px(0);
  }
  return std::nullopt;
}

inline std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Validates one declaration; returns an error message when it must be dropped.
inline std::optional<std::string> parse_declaration(std::string_view name, std::string_view raw,
                                                    std::map<Property, CssValue>& out) {
  const std::string value{trim(raw)};
  if (name == "margin" || name == "padding") {
    auto words = split_words(value);
    if (words.empty() || words.size() > 4) return "expected 1 to 4 values for " + std::string(name);
    std::vector<CssValue> vals;
    for (auto w : words) {
      auto v = parse_length(w);
      if (!v || v->kind != CssValue::Kind::Px || v->number < 0) {
        return "invalid " + std::string(name) + " value '" + std::string(w) + "'";
      }
      vals.push_back(*v);
    }
    // top right bottom left, CSS shorthand expansion
    const std::size_t n = vals.size();
    const std::array<CssValue, 4> edges = {vals[0], vals[n > 1 ? 1 : 0], vals[n > 2 ? 2 : 0],
                                           vals[n > 3 ? 3 : (n > 1 ? 1 : 0)]};
    const auto& props = name == "margin" ? kMarginProperties : kPaddingProperties;
    for (std::size_t i = 0; i < 4; ++i) out[props[i]] = edges[i];
    return std::nullopt;
  }

  auto prop = property_from_name(name);
  if (!prop) return "unsupported property '" + std::string(name) + "'";

  switch (*prop) {
    case Property::Display:
      if (value == "block") {
        out[*prop] = CssValue::keyword(CssValue::Kind::Block);
      } else if (value == "inline" || value == "inline-block") {
        out[*prop] = CssValue::keyword(CssValue::Kind::Inline);
      } else {
        return "unsupported display '" + value + "'";
      }
      return std::nullopt;
    case Property::FontSize:
    case Property::LineHeight: {
      auto v = parse_length(value);
      if (!v || v->number <= 0) return "invalid " + std::string(name) + " '" + value + "'";
      out[*prop] = *v;
      return std::nullopt;
    }
    case Property::Width:
    case Property::Height: {
      if (value == "auto") {
        out[*prop] = CssValue::keyword(CssValue::Kind::Auto);
        return std::nullopt;
      }
      auto v = parse_length(value);
      if (!v || v->number < 0) return "invalid " + std::string(name) + " '" + value + "'";
      out[*prop] = *v;
      return std::nullopt;
    }
    default: {
      auto v = parse_length(value);
      if (!v || v->kind != CssValue::Kind::Px || v->number < 0) {
        return "invalid " + std::string(name) + " '" + value + "'";
      }
      out[*prop] = *v;
      return std::nullopt;
    }
  }
}

inline std::optional<Selector> parse_selector(std::string_view text) {
  Selector sel;
  for (auto word : split_words(text)) {
    SimpleSelector simple;
    if (word.front() == '.') {
      simple.kind = SimpleSelector::Kind::Class;
      word.remove_prefix(1);
    } else if (word.front() == '#') {
      simple.kind = SimpleSelector::Kind::Id;
      word.remove_prefix(1);
    }
    if (word.empty()) return std::nullopt;
    for (char c : word) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) return std::nullopt;
    }
    simple.name = std::string(word);
    if (simple.kind == SimpleSelector::Kind::Tag) {
      for (auto& c : simple.name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    sel.chain.push_back(std::move(simple));
  }
  if (sel.chain.empty()) return std::nullopt;
  return sel;
}

class CssScanner {
 public:
  explicit CssScanner(std::string_view src) : src_(strip_comments(src)) {}

  Stylesheet parse() {
    Stylesheet sheet;
    std::size_t pos = 0;
    int order = 0;
    for (;;) {
      while (pos < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos]))) ++pos;
      if (pos >= src_.size()) break;
      const std::size_t open = src_.find_first_of("{}", pos);
      if (open == std::string::npos) fail_at("expected '{'", pos);
      if (src_[open] == '}') fail_at("unbalanced '}'", open);
      const std::size_t close = src_.find_first_of("{}", open + 1);
      if (close == std::string::npos) fail_at("unclosed '{'", open);
      if (src_[close] == '{') fail_at("nested '{' is not supported", close);

      const std::string_view prelude = std::string_view(src_).substr(pos, open - pos);

      std::map<Property, CssValue> decls;
      std::size_t at = open + 1;
      for (std::size_t semi; at <= close; at = semi + 1) {
        semi = src_.find(';', at);
        if (semi == std::string::npos || semi > close) semi = close;
        std::string_view decl = trim(std::string_view(src_).substr(at, semi - at));
        if (!decl.empty()) {
          const std::size_t decl_at = static_cast<std::size_t>(decl.data() - src_.data());
          auto colon = decl.find(':');
          if (colon == std::string_view::npos) {
            warn(sheet, decl_at, "malformed declaration '" + std::string(decl) + "'");
          } else {
            std::string name{trim(decl.substr(0, colon))};
            for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (auto err = parse_declaration(name, decl.substr(colon + 1), decls)) warn(sheet, decl_at, *err);
          }
        }
        if (semi == close) break;
      }

      std::size_t start = 0;
      for (;;) {
        auto comma = prelude.find(',', start);
        auto part = prelude.substr(start, comma == std::string_view::npos ? prelude.npos : comma - start);
        if (auto sel = parse_selector(part)) {
          CssRule rule;
          rule.selector = std::move(*sel);
          rule.specificity = rule.selector.specificity();
          rule.declarations = decls;
          rule.source_order = order++;
          sheet.rules.push_back(std::move(rule));
        } else {
          warn(sheet, static_cast<std::size_t>(trim(part).data() - src_.data()), "unsupported selector '" + std::string(trim(part)) + "'");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      pos = close + 1;
    }
    return sheet;
  }

 private:
  std::string src_;

  // Comments become spaces so positions keep their line/column.
  static std::string strip_comments(std::string_view src) {
    std::string out(src);
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i] == '/' && out[i + 1] == '*') {
        std::size_t end = out.find("*/", i + 2);
        std::size_t stop = end == std::string::npos ? out.size() : end + 2;
        for (std::size_t k = i; k < stop; ++k) {
          if (out[k] != '\n') out[k] = ' ';
        }
        i = stop - 1;
      }
    }
    return out;
  }

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

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    auto [line, col] = position(at);
    throw ParseError(what, line, col);
  }

  void warn(Stylesheet& sheet, std::size_t at, std::string message) const {
    auto [line, col] = position(at);
    sheet.warnings.push_back({line, col, std::move(message)});
  }
};

}  // namespace detail

/// Parses the supported CSS subset. Unsupported properties and malformed
/// declarations are dropped and recorded in Stylesheet::warnings; unbalanced
/// braces throw ParseError. Selector lists expand to one rule per selector.
inline Stylesheet parse_css(std::string_view source) { return detail::CssScanner(source).parse(); }

}  // namespace webmend
