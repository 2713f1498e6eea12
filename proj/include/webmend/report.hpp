#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "aesthetics.hpp"
#include "corpus.hpp"
#include "fitness.hpp"
#include "localization.hpp"
#include "optimizer.hpp"
#include "page.hpp"
#include "segmentation.hpp"

namespace webmend {

using Json = nlohmann::ordered_json;

inline Json rect_json(const Rect& r) { return Json::array({r.x, r.y, r.w, r.h}); }

// Box tree sorted by node id.
inline Json snapshot_json(const Page& page) {
  Json out = Json::array();
  for (const auto& n : page.dom().nodes()) {
    out.push_back({{"node_id", n.id},
                   {"tag", n.tag},
                   {"rect", rect_json(page.box(n.id).rect)},
                   {"font_size", page.style(n.id).font_size_px},
                   {"tappable", page.style(n.id).tappable}});
  }
  return out;
}

inline Json segments_json(const SegmentSet& segments) {
  Json out = Json::array();
  for (const auto& s : segments.segments) {
    out.push_back({{"segment_id", s.id}, {"members", s.members}, {"rect", rect_json(s.bounding_rect)}});
  }
  return out;
}

inline Json issues_json(const IssueReport& report) {
  Json out = Json::array();
  for (const auto& e : report.entries) {
    Json issues = Json::array();
    for (IssueType t : e.issues) issues.push_back(issue_name(t));
    Json diags = Json::array();
    for (const auto& d : e.diagnostics) {
      diags.push_back({{"issue", issue_name(d.issue)}, {"node_id", d.node}, {"measured", d.measured}, {"detail", d.detail}});
    }
    out.push_back({{"segment_id", e.segment_id}, {"issues", issues}, {"diagnostics", diags}});
  }
  return out;
}

inline Json edge_diffs_json(const std::vector<EdgeDiff>& diffs) {
  Json out = Json::array();
  for (const auto& d : diffs) {
    out.push_back({{"model", d.kind == LayoutGraph::Kind::SegmentModel ? "SM" : "ISM"},
                   {"segment_id", d.segment_id},
                   {"from", d.from},
                   {"to", d.to},
                   {"before", d.before.to_string()},
                   {"after", d.after.to_string()}});
  }
  return out;
}

inline Json pairs_json(const std::vector<IssuePair>& pairs, const Candidate& c) {
  Json out = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.push_back({{"segment_id", pairs[i].segment_id}, {"issue", issue_name(pairs[i].issue)}, {"x", c[i]}});
  }
  return out;
}

inline Json manifest_json(const CorpusPage& page) {
  Json defects = Json::array();
  for (const auto& d : page.defects) {
    defects.push_back({{"issue", issue_name(d.issue)}, {"region", d.region}, {"detail", d.detail}});
  }
  return {{"page", page.name}, {"html", page.name + ".html"}, {"css", page.name + ".css"}, {"defects", defects}};
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string trace_csv(const RunTrace& trace) {
  std::string out = "eval,U,A,F,bestF\n";
  for (const auto& r : trace.rows) {
    out += std::to_string(r.eval) + "," + format_double(r.U) + "," + format_double(r.A) + "," + format_double(r.F) +
           "," + format_double(r.best_F) + "\n";
  }
  return out;
}

}  // namespace webmend
