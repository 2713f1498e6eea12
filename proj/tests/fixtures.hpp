#pragma once

#include <array>
#include <string_view>

namespace webmend::testing {

// Pages with exactly one (segment, issue) pair, one per issue type.
struct OneDimFixture {
  std::string_view name;
  std::string_view html;
  std::string_view css;
  double theta = 4.0;
};

inline constexpr std::array<OneDimFixture, 3> kOneDimFixtures = {{
    {"font",
     "<html><body><div class=\"box\"><span>alpha beta</span><span>gamma delta</span></div></body></html>",
     ".box { width: 180px } span { font-size: 10px }"},
    {"tap",
     "<html><body><nav><a>home</a><a>news</a><a>sport</a><a>about</a></nav><p>Body text</p></body></html>",
     "a { padding: 4px; margin: 0 4px 4px 0 }"},
    {"content",
     "<html><body><div class=\"promo\">Limited offer today only</div><p>Regular content follows here</p></body></html>",
     ".promo { width: 500px }", 1.0},
}};

}  // namespace webmend::testing
