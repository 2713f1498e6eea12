#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "candidate.hpp"
#include "error.hpp"
#include "optimizer.hpp"

namespace webmend {

struct CorpusSpec {
  int count = 20;
  std::uint64_t seed = 42;
  double small_font_probability = 0.7;
  double tap_probability = 0.6;
  double overflow_probability = 0.5;
  std::pair<int, int> nav_links = {3, 6};
  std::pair<int, int> sections = {1, 3};
  std::pair<int, int> cards_per_section = {1, 3};
  std::pair<int, int> sidebar_links = {2, 5};
  std::pair<double, double> small_font_px = {9, 14};
  std::pair<double, double> overflow_px = {420, 640};
};

struct InjectedDefect {
  IssueType issue = IssueType::FontSizing;
  std::string region;  // class name of the affected region
  std::string detail;
};

struct CorpusPage {
  std::string name;
  std::string html;
  std::string css;
  std::vector<InjectedDefect> defects;
};

namespace detail {

inline constexpr std::array<std::string_view, 24> kWords = {
    "mobile", "layout", "reader", "update", "market", "weather", "travel", "forum",  "science", "report",
    "season", "guide",  "review", "latest", "local",  "events", "policy", "health", "player",  "archive",
    "daily",  "notes",  "press",  "search"};

class PageBuilder {
 public:
  PageBuilder(const CorpusSpec& spec, Rng& rng) : spec_(spec), rng_(rng) {}

  CorpusPage build(const std::string& name) {
    CorpusPage page;
    page.name = name;
    // Roll defects; a page must carry at least one.
    do {
      small_font_ = bernoulli(spec_.small_font_probability);
      tap_ = bernoulli(spec_.tap_probability);
      overflow_ = bernoulli(spec_.overflow_probability);
    } while (!small_font_ && !tap_ && !overflow_);

    std::string css = base_css();
    if (small_font_) {
      const double px = std::round(uniform(spec_.small_font_px.first, spec_.small_font_px.second));
      const int region = uniform_int(0, 2);
      static constexpr std::array<std::string_view, 3> kRegions = {"card", "sidebar", "site-footer"};
      static constexpr std::array<std::string_view, 3> kSelectors = {".card p", ".sidebar a", ".site-footer p"};
      css += std::string(kSelectors[static_cast<std::size_t>(region)]) + " { font-size: " + std::to_string(int(px)) +
             "px; }\n";
      page.defects.push_back({IssueType::FontSizing, std::string(kRegions[static_cast<std::size_t>(region)]),
                              "font-size " + std::to_string(int(px)) + "px"});
    }
    if (tap_) {
      const int pad = uniform_int(2, 6);
      const int gap = uniform_int(3, 5);
      const bool nav = bernoulli(0.6);
      const std::string sel = nav ? ".nav-link" : ".sidebar a";
      css += sel + " { padding: " + std::to_string(pad) + "px; margin: 0 " + std::to_string(gap) + "px " +
             std::to_string(gap) + "px 0; }\n";
      if (!nav) css += ".sidebar li { margin-bottom: 0; }\n";
      page.defects.push_back({IssueType::TapTargetSpacing, nav ? "menu" : "sidebar",
                              "padding " + std::to_string(pad) + "px, gap " + std::to_string(gap) + "px"});
    }
    if (overflow_) {
      media_width_ = static_cast<int>(std::round(uniform(spec_.overflow_px.first, spec_.overflow_px.second)));
      media_is_image_ = bernoulli(0.5);
      if (!media_is_image_) css += ".promo { width: " + std::to_string(media_width_) + "px; }\n";
      page.defects.push_back({IssueType::ContentSizing, "banner",
                              (media_is_image_ ? "image width " : "promo width ") + std::to_string(media_width_) + "px"});
    }
    page.css = std::move(css);
    page.html = html();
    return page;
  }

 private:
  const CorpusSpec& spec_;
  Rng& rng_;
  bool small_font_ = false;
  bool tap_ = false;
  bool overflow_ = false;
  int media_width_ = 0;
  bool media_is_image_ = false;

  bool bernoulli(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  int uniform_int(std::pair<int, int> r) { return uniform_int(r.first, r.second); }

  std::string word() { return std::string(kWords[static_cast<std::size_t>(uniform_int(0, kWords.size() - 1))]); }

  std::string sentence(int min_chars, int max_chars) {
    const int target = uniform_int(min_chars, max_chars);
    std::string s = word();
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    while (static_cast<int>(s.size()) < target) s += " " + word();
    return s + ".";
  }

  static std::string base_css() {
    return ".site-header { padding: 8px 12px; }\n"
           ".logo { font-size: 20px; }\n"
           ".nav-link { padding: 16px 12px; margin: 0 10px 10px 0; }\n"
           ".wrap { padding: 0 12px; }\n"
           ".card { margin-bottom: 12px; }\n"
           ".card h2 { font-size: 22px; }\n"
           ".card p { font-size: 16px; line-height: 24px; }\n"
           ".frame { padding: 8px 0; }\n"
           ".sidebar { padding: 0 12px; }\n"
           ".sidebar li { margin-bottom: 10px; }\n"
           ".sidebar a { padding: 16px 8px; }\n"
           ".site-footer { padding: 12px; }\n"
           ".site-footer p { font-size: 16px; }\n";
  }

  std::string html() {
    std::string h = "<!DOCTYPE html>\n<html>\n<body>\n";
    h += "  <header class=\"site-header\">\n    <div class=\"bar\">\n";
    h += "      <div class=\"brand\"><p class=\"logo\">" + word() + " " + word() + "</p></div>\n";
    h += "      <nav class=\"menu\">\n";
    const int links = uniform_int(spec_.nav_links);
    for (int i = 0; i < links; ++i) h += "        <a class=\"nav-link\" href=\"#\">" + word() + "</a>\n";
    h += "      </nav>\n    </div>\n  </header>\n";

    if (overflow_) {
      h += "  <div class=\"banner\">\n    <div class=\"frame\">\n      <div class=\"media\">\n";
      if (media_is_image_) {
        h += "        <img class=\"hero\" src=\"hero.png\" width=\"" + std::to_string(media_width_) +
             "\" height=\"120\">\n";
      } else {
        h += "        <p class=\"promo\">" + sentence(40, 90) + "</p>\n";
      }
      h += "      </div>\n    </div>\n  </div>\n";
    }
    h += "  <main class=\"content\">\n    <div class=\"wrap\">\n";
    const int sections = uniform_int(spec_.sections);
    for (int s = 0; s < sections; ++s) {
      h += "      <div class=\"section\">\n";
      const int cards = uniform_int(spec_.cards_per_section);
      for (int c = 0; c < cards; ++c) {
        h += "        <div class=\"card\">\n";
        h += "          <h2>" + sentence(8, 20) + "</h2>\n";
        h += "          <p>" + sentence(60, 200) + "</p>\n";
        h += "        </div>\n";
      }
      h += "      </div>\n";
    }
    h += "    </div>\n  </main>\n";

    h += "  <div class=\"sidebar\">\n    <ul class=\"links\">\n";
    const int side = uniform_int(spec_.sidebar_links);
    for (int i = 0; i < side; ++i) h += "      <li><a href=\"#\">" + word() + " " + word() + "</a></li>\n";
    h += "    </ul>\n  </div>\n";

    h += "  <footer class=\"site-footer\">\n    <div class=\"inner\">\n      <div class=\"row\">\n";
    h += "        <p>" + sentence(30, 80) + "</p>\n";
    h += "      </div>\n    </div>\n  </footer>\n</body>\n</html>\n";
    return h;
  }
};

}  // namespace detail

/// Synthetic mobile-unfriendly pages with a ground-truth defect manifest.
/// Deterministic for a given spec; every page carries at least one defect.
inline std::vector<CorpusPage> generate_corpus(const CorpusSpec& spec) {
  if (spec.small_font_probability <= 0 && spec.tap_probability <= 0 && spec.overflow_probability <= 0) {
    throw AllHealthy("all defect probabilities are zero; the corpus would contain no buggy page");
  }
  Rng rng = make_rng(spec.seed, 0xC0);
  std::vector<CorpusPage> pages;
  for (int i = 0; i < spec.count; ++i) {
    detail::PageBuilder builder(spec, rng);
    char name[32];
    std::snprintf(name, sizeof name, "page_%02d", i + 1);
    pages.push_back(builder.build(name));
  }
  return pages;
}

}  // namespace webmend
