#include <gtest/gtest.h>

#include "support.hpp"

namespace webmend {
namespace {

TEST(ParseCss, SingleTagRule) {
  const Stylesheet s = parse_css("p { font-size: 10px; }");
  ASSERT_EQ(s.rules.size(), 1u);
  EXPECT_EQ(s.rules[0].specificity, (Specificity{0, 0, 1}));
  EXPECT_EQ(s.rules[0].declarations.at(Property::FontSize), CssValue::px(10));
  EXPECT_TRUE(s.warnings.empty());
}

TEST(ParseCss, CompoundSelectorSpecificity) {
  const Stylesheet s = parse_css("#nav .item a { width: 50%; }");
  ASSERT_EQ(s.rules.size(), 1u);
  EXPECT_EQ(s.rules[0].specificity, (Specificity{1, 1, 1}));
  EXPECT_EQ(s.rules[0].declarations.at(Property::Width), CssValue::percent(50));
}

TEST(ParseCss, UnsupportedPropertyDroppedWithWarning) {
  const Stylesheet s = parse_css("p { color: red; font-size: 10px }");
  ASSERT_EQ(s.rules.size(), 1u);
  EXPECT_EQ(s.rules[0].declarations.size(), 1u);
  EXPECT_EQ(s.rules[0].declarations.count(Property::FontSize), 1u);
  EXPECT_EQ(s.warnings.size(), 1u);
}

TEST(ParseCss, UnbalancedBracesAreErrors) {
  EXPECT_THROW(parse_css("p { font-size: 10px;"), ParseError);
  EXPECT_THROW(parse_css("p { font-size: 10px; } }"), ParseError);
  EXPECT_THROW(parse_css("p { a { } }"), ParseError);
}

TEST(ParseCss, ShorthandExpandsToEdges) {
  const Stylesheet s = parse_css("div { margin: 1px 2px 3px; padding: 4px }");
  const auto& d = s.rules.at(0).declarations;
  EXPECT_EQ(d.at(Property::MarginTop), CssValue::px(1));
  EXPECT_EQ(d.at(Property::MarginRight), CssValue::px(2));
  EXPECT_EQ(d.at(Property::MarginBottom), CssValue::px(3));
  EXPECT_EQ(d.at(Property::MarginLeft), CssValue::px(2));
  for (Property p : kPaddingProperties) EXPECT_EQ(d.at(p), CssValue::px(4));
}

TEST(ParseCss, SelectorListsSplitIntoRules) {
  const Stylesheet s = parse_css("h1, .x p { display: block }");
  ASSERT_EQ(s.rules.size(), 2u);
  EXPECT_EQ(s.rules[0].selector.to_string(), "h1");
  EXPECT_EQ(s.rules[1].selector.to_string(), ".x p");
  EXPECT_LT(s.rules[0].source_order, s.rules[1].source_order);
}

TEST(ParseCss, InvalidValuesWarnAndAreDropped) {
  const Stylesheet s = parse_css("p { font-size: -3px; width: wide; margin: 1px 2px 3px 4px 5px; height: auto }");
  ASSERT_EQ(s.rules.size(), 1u);
  EXPECT_EQ(s.rules[0].declarations.size(), 1u);
  EXPECT_EQ(s.rules[0].declarations.at(Property::Height).kind, CssValue::Kind::Auto);
  EXPECT_EQ(s.warnings.size(), 3u);
}

TEST(ParseCss, UnsupportedSelectorsAreSkipped) {
  const Stylesheet s = parse_css("a:hover { width: 10px } div > p { width: 5px } p { width: 1px }");
  ASSERT_EQ(s.rules.size(), 1u);
  EXPECT_EQ(s.warnings.size(), 2u);
}

TEST(ParseCss, CommentsIgnoredAndWarningPositions) {
  const Stylesheet s = parse_css("/* x { } */\np {\n  color: red;\n}");
  ASSERT_EQ(s.warnings.size(), 1u);
  EXPECT_EQ(s.warnings[0].line, 3);
}

TEST(Selector, MatchesDescendantChains) {
  const Dom dom = parse_html(R"(<html><body><nav id="nav"><div class="item"><a>x</a></div></nav><a>y</a></body></html>)");
  const Stylesheet s = parse_css("#nav .item a { width: 1px } a { width: 2px } div a { width: 3px }");
  const NodeId inner = testing::nth_tag(dom, "a", 0);
  const NodeId outer = testing::nth_tag(dom, "a", 1);
  EXPECT_TRUE(s.rules[0].selector.matches(dom, inner));
  EXPECT_FALSE(s.rules[0].selector.matches(dom, outer));
  EXPECT_TRUE(s.rules[1].selector.matches(dom, outer));
  EXPECT_TRUE(s.rules[2].selector.matches(dom, inner));
  EXPECT_FALSE(s.rules[2].selector.matches(dom, outer));
}

TEST(FormatNumber, TwoDecimalsTrimmed) {
  EXPECT_EQ(format_number(20), "20");
  EXPECT_EQ(format_number(12.5), "12.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.33");
  EXPECT_EQ(to_css(CssValue::percent(50)), "50%");
  EXPECT_EQ(to_css(CssValue::px(7.25)), "7.25px");
}

}  // namespace
}  // namespace webmend
