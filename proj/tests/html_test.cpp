#include <gtest/gtest.h>

#include "support.hpp"

namespace webmend {
namespace {

TEST(ParseHtml, MinimalDocumentHasThreeNodes) {
  const Dom dom = parse_html("<html><body><p>hi</p></body></html>");
  ASSERT_EQ(dom.size(), 3u);
  EXPECT_EQ(dom.root().tag, "html");
  EXPECT_EQ(dom.node(2).tag, "p");
  EXPECT_EQ(dom.node(2).text, "hi");
  EXPECT_EQ(dom.node(2).parent, 1);
}

TEST(ParseHtml, NestedParagraphsAreSiblingsAtDepthThree) {
  const Dom dom = parse_html("<html><body><div><p>x</p><p>y</p></div></body></html>");
  const NodeId a = testing::nth_tag(dom, "p", 0);
  const NodeId b = testing::nth_tag(dom, "p", 1);
  EXPECT_EQ(dom.node(a).depth, 3);
  EXPECT_EQ(dom.node(b).depth, 3);
  EXPECT_EQ(dom.node(a).parent, dom.node(b).parent);
  EXPECT_EQ(dom.node(dom.node(a).parent).children, (std::vector<NodeId>{a, b}));
}

TEST(ParseHtml, UnclosedElementReportsCloseTagPosition) {
  const std::string src = "<html><body><p>x</body></html>";
  try {
    parse_html(src);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), static_cast<int>(src.find("</body>")) + 1);
  }
}

TEST(ParseHtml, ErrorPositionCountsLines) {
  try {
    parse_html("<html>\n<body>\n  <div></p>\n</body></html>");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 8);
  }
}

TEST(ParseHtml, UnsupportedTagsBecomeDiv) {
  const Dom dom = parse_html("<html><body><header><section>t</section></header></body></html>");
  EXPECT_EQ(dom.node(2).tag, "div");
  EXPECT_EQ(dom.node(2).source_tag, "header");
  EXPECT_EQ(dom.node(3).tag, "div");
}

TEST(ParseHtml, AttributesClassesAndIds) {
  const Dom dom = parse_html(R"(<html><body><a id="go" class="btn  big" href="#">Go</a></body></html>)");
  const DomNode& a = dom.node(2);
  EXPECT_EQ(a.element_id, "go");
  EXPECT_EQ(a.classes, (std::vector<std::string>{"btn", "big"}));
  EXPECT_TRUE(a.has_class("big"));
  EXPECT_EQ(a.attrs.at("href"), "#");
}

TEST(ParseHtml, VoidElementsAndDoctype) {
  const Dom dom = parse_html("<!DOCTYPE html><html><body><img src=\"a.png\"><input><p>t</p></body></html>");
  ASSERT_EQ(dom.size(), 5u);
  EXPECT_TRUE(dom.node(2).is_leaf());
  EXPECT_EQ(dom.node(3).tag, "input");
  EXPECT_EQ(dom.node(4).parent, 1);
}

TEST(ParseHtml, WhitespaceCollapsesAndEntitiesDecode) {
  const Dom dom = parse_html("<html><body><p>  a \n  b &amp; c&lt;d  </p></body></html>");
  EXPECT_EQ(dom.node(2).text, "a b & c<d");
}

TEST(ParseHtml, CommentsAreSkipped) {
  const Dom dom = parse_html("<html><!-- <p>no</p> --><body><p>yes</p></body></html>");
  EXPECT_EQ(dom.size(), 3u);
}

TEST(ParseHtml, RejectsMalformedInput) {
  EXPECT_THROW(parse_html("<body></body>"), ParseError);
  EXPECT_THROW(parse_html("<html><body></body>"), ParseError);
  EXPECT_THROW(parse_html("<html><body><p a=\"1\" a=\"2\">x</p></body></html>"), ParseError);
  EXPECT_THROW(parse_html("<html><body><p>x</p></body></html><html></html>"), ParseError);
}

TEST(ParseHtml, PreorderIdsAndTreeQueries) {
  const Dom dom = parse_html("<html><body><div><p>a</p><p>b</p></div><ul><li>c</li></ul></body></html>");
  for (const auto& n : dom.nodes()) {
    for (NodeId c : n.children) {
      EXPECT_GT(c, n.id);
      EXPECT_EQ(dom.node(c).depth, n.depth + 1);
    }
  }
  EXPECT_EQ(dom.leaves(), (std::vector<NodeId>{3, 4, 6}));
  EXPECT_EQ(dom.lowest_common_ancestor(3, 4), 2);
  EXPECT_EQ(dom.lowest_common_ancestor(3, 6), 1);
  EXPECT_TRUE(dom.is_ancestor(1, 6));
  EXPECT_FALSE(dom.is_ancestor(2, 6));
  EXPECT_EQ(dom.subtree_end(2), 4);
}

TEST(SerializeHtml, RoundTripsStructureWithInjectedIds) {
  const Dom dom = parse_html(R"(<html><body><div class="a"><p>x &amp; y</p></div></body></html>)");
  const std::string out = serialize_html(dom, {{3, "wm-3"}});
  const Dom again = parse_html(out);
  ASSERT_EQ(again.size(), dom.size());
  EXPECT_EQ(again.node(3).element_id, "wm-3");
  EXPECT_EQ(again.node(3).text, "x & y");
  EXPECT_TRUE(again.node(2).has_class("a"));
}

}  // namespace
}  // namespace webmend
