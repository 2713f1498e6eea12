#include <random>

#include <gtest/gtest.h>

#include "random_pages.hpp"
#include "support.hpp"

namespace webmend {
namespace {

IssueReport report_for(const Page& p, double theta = kDefaultTheta) {
  return detect_issues(p, segment(p.dom(), p.boxes, theta));
}

TEST(DetectIssues, CleanPageHasEmptyReport) {
  const Page p = testing::load("<p>readable text</p><div><a>x</a><a>y</a></div>",
                               "a { width: 48px; height: 48px; margin-right: 10px }");
  EXPECT_TRUE(report_for(p).empty());
  EXPECT_EQ(usability(p).U, 100);
}

TEST(DetectIssues, SmallFontInSecondSegment) {
  const Page p = testing::load("<div><div><p>a</p></div></div><ul><li>b</li></ul>", "li { font-size: 10px }");
  const IssueReport r = report_for(p, 2);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].segment_id, 2);
  EXPECT_EQ(r.entries[0].issues, (std::set<IssueType>{IssueType::FontSizing}));
  EXPECT_EQ(r.pairs(), (std::vector<IssuePair>{{2, IssueType::FontSizing}}));
}

// Leaves: div.wide (depth 2) and two links (depth 3) under a sibling div.
// Pairwise distances 1.5, 1.5, 1 are all below theta = 4, so one segment.
// div.wide: right edge 500 > 360. Links: 30x30 boxes at x = 0 and x = 32,
// so min dimension 30 < 48 and gap 2 < 8.
TEST(DetectIssues, OverflowAndCrowdedLinksShareSegment) {
  const Page p = testing::load(R"(<div class="wide"></div><div><a>x</a><a>y</a></div>)",
                               ".wide { width: 500px } a { width: 30px; height: 30px; margin-right: 2px }");
  const Dom& dom = p.dom();
  EXPECT_EQ(p.box(2).rect.right(), 500);
  EXPECT_EQ(p.box(testing::nth_tag(dom, "a", 0)).rect.w, 30);
  EXPECT_EQ(edge_distance(p.box(testing::nth_tag(dom, "a", 0)).rect, p.box(testing::nth_tag(dom, "a", 1)).rect), 2);

  const IssueReport r = report_for(p);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].segment_id, 1);
  EXPECT_EQ(r.entries[0].issues, (std::set<IssueType>{IssueType::TapTargetSpacing, IssueType::ContentSizing}));
}

TEST(Usability, IssueFreeIs100) { EXPECT_EQ(usability(testing::load("<p>fine</p>")).U, 100); }

TEST(Usability, AllSmallTextIs60) {
  const UsabilityScore s = usability(testing::load("<p>tiny</p><p>words</p>", "p { font-size: 10px }"));
  EXPECT_EQ(s.p_font, 1);
  EXPECT_EQ(s.U, 60);
}

// 4 of 8 characters small, 4 inputs 19.2px tall, a 396px box on a 360px viewport.
TEST(Usability, MixedPenalties) {
  const Page p = testing::load(R"(<p class="s">aaaa</p><p>bbbb</p><input><input><input><input><div class="w"></div>)",
                               ".s { font-size: 10px } .w { width: 396px }");
  const UsabilityScore s = usability(p);
  EXPECT_DOUBLE_EQ(s.p_font, 0.5);
  EXPECT_DOUBLE_EQ(s.p_tap, 1);
  EXPECT_NEAR(s.p_content, 0.1, 1e-12);
  EXPECT_NEAR(s.U, 47, 1e-9);
}

Candidate suggestion_for(const Page& p) {
  const SegmentSet s = segment(p.dom(), p.boxes);
  return suggest_candidate(p, s, detect_issues(p, s));
}

TEST(SuggestCandidate, FontRatio) {
  EXPECT_EQ(suggestion_for(testing::load("<p>a</p><p>b</p>", "p { font-size: 10px }")).values,
            (std::vector<double>{1.6}));
}

TEST(SuggestCandidate, TapRatio) {
  const Page p = testing::load("<a>x</a><a>y</a>", "a { width: 30px; height: 40px; margin-right: 20px }");
  EXPECT_EQ(suggestion_for(p).values, (std::vector<double>{1.6}));
}

TEST(SuggestCandidate, OverflowRatio) {
  EXPECT_EQ(suggestion_for(testing::load("<div>x</div>", "div { width: 720px }")).values,
            (std::vector<double>{0.5}));
}

TEST(SuggestCandidate, ClampedToDomain) {
  EXPECT_EQ(suggestion_for(testing::load("<p>a</p>", "p { font-size: 2px }")).values, (std::vector<double>{4.0}));
}

TEST(SuggestCandidate, UniformSmallFontsAreFixedBySuggestion) {
  for (int px : {6, 9, 12, 15}) {
    const std::string css = "p, li { font-size: " + std::to_string(px) + "px }";
    const auto problem = RepairProblem::build(
        testing::load("<p>one two</p><div><p>three</p></div><ul><li>four</li></ul>", css));
    ASSERT_EQ(problem.report().entries.size(), problem.segments().size());
    EXPECT_EQ(problem.score(problem.suggestion(), {}).U, 100) << px << "px";
  }
}

std::string random_css(std::mt19937& rng) {
  std::uniform_int_distribution<int> font(10, 20), pad(0, 20), width(100, 500);
  return "p { font-size: " + std::to_string(font(rng)) + "px } a { padding: " + std::to_string(pad(rng)) +
         "px; font-size: " + std::to_string(font(rng)) + "px } div { width: " + std::to_string(width(rng)) + "px }";
}

TEST(Usability, PerfectScoreIffEmptyReport) {
  std::mt19937 rng(3);
  int clean = 0;
  for (int i = 0; i < 300; ++i) {
    const Page p = Page::load(testing::random_page(rng), random_css(rng));
    const bool empty = report_for(p).empty();
    clean += empty;
    EXPECT_EQ(usability(p).U == 100, empty) << i;
  }
  EXPECT_GT(clean, 0);
}

TEST(Usability, MonotoneUnderFontGrowthAndOverflowShrink) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> lambda(1.0, 3.0), shrink(0.2, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Page p = Page::load(testing::random_page(rng), random_css(rng));
    const double l = lambda(rng);
    Overrides fonts;
    for (const auto& n : p.dom().nodes()) {
      if (!n.text.empty() && p.style(n.id).font_size_px < 16) {
        fonts[n.id][Property::FontSize] = CssValue::px(p.style(n.id).font_size_px * l);
      }
    }
    const Page grown = p.rerender(fonts);
    EXPECT_LE(usability(grown).p_font, usability(p).p_font);

    const double k = shrink(rng);
    Overrides widths;
    for (const auto& n : p.dom().nodes()) {
      if (p.style(n.id).width.mode == SizeSpec::Mode::Px) {
        widths[n.id][Property::Width] = CssValue::px(p.style(n.id).width.value * k);
      }
    }
    EXPECT_LE(usability(p.rerender(widths)).p_content, usability(p).p_content);
  }
}

}  // namespace
}  // namespace webmend
