#pragma once

#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "layout.hpp"
#include "segmentation.hpp"

namespace webmend {

enum class RelLabel : std::uint8_t { Intersection, Containment, Above, Below, Left, Right };

inline std::string_view label_name(RelLabel l) {
  switch (l) {
    case RelLabel::Intersection: return "intersection";
    case RelLabel::Containment: return "containment";
    case RelLabel::Above: return "above";
    case RelLabel::Below: return "below";
    case RelLabel::Left: return "left";
    case RelLabel::Right: return "right";
  }
  return "?";
}

class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<RelLabel> labels) {
    for (auto l : labels) insert(l);
  }

  void insert(RelLabel l) { bits_.set(static_cast<std::size_t>(l)); }
  bool has(RelLabel l) const { return bits_.test(static_cast<std::size_t>(l)); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool has_directional() const {
    return has(RelLabel::Above) || has(RelLabel::Below) || has(RelLabel::Left) || has(RelLabel::Right);
  }

  // |a \ b| + |b \ a|
  friend std::size_t symmetric_difference(const LabelSet& a, const LabelSet& b) { return (a.bits_ ^ b.bits_).count(); }

  bool operator==(const LabelSet&) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < 6; ++i) {
      if (!bits_.test(i)) continue;
      if (!out.empty()) out += '+';
      out += label_name(static_cast<RelLabel>(i));
    }
    return out.empty() ? "none" : out;
  }

 private:
  std::bitset<6> bits_;
};

/// Spatial relation of u to v. Containment (closed edges) wins; otherwise
/// any combination of directional labels with closed comparisons; a pair
/// that is neither contained nor separable on some axis is an Intersection.
/// For rects of positive size that last case is exactly a positive-area overlap.
inline LabelSet edge_labels(const Rect& u, const Rect& v) {
  if (u.contains(v)) return {RelLabel::Containment};
  LabelSet s;
  if (u.bottom() <= v.top()) s.insert(RelLabel::Above);
  if (u.top() >= v.bottom()) s.insert(RelLabel::Below);
  if (u.right() <= v.left()) s.insert(RelLabel::Left);
  if (u.left() >= v.right()) s.insert(RelLabel::Right);
  if (s.empty()) s.insert(RelLabel::Intersection);
  return s;
}

struct LayoutGraph {
  enum class Kind { SegmentModel, IntraSegment };
  Kind kind = Kind::SegmentModel;
  int segment_id = 0;  // for IntraSegment graphs
  std::vector<int> nodes;  // segment ids (SM) or node ids (ISM)
  // Row-major n x n, diagonal unused.
  std::vector<LabelSet> labels;

  std::size_t size() const { return nodes.size(); }
  std::size_t edge_count() const { return nodes.size() * (nodes.size() > 0 ? nodes.size() - 1 : 0); }
  const LabelSet& edge(std::size_t i, std::size_t j) const { return labels[i * nodes.size() + j]; }
};

inline LayoutGraph complete_graph(LayoutGraph::Kind kind, std::vector<int> nodes, const std::vector<Rect>& rects) {
  LayoutGraph g;
  g.kind = kind;
  g.nodes = std::move(nodes);
  const std::size_t n = g.nodes.size();
  g.labels.assign(n * n, LabelSet{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) g.labels[i * n + j] = edge_labels(rects[i], rects[j]);
    }
  }
  return g;
}

/// Segment model: nodes are segments, placed at the bounding rect of their members in `boxes`.
inline LayoutGraph build_sm(const SegmentSet& segments, const BoxMap& boxes) {
  std::vector<int> ids;
  std::vector<Rect> rects;
  for (const auto& s : segments.segments) {
    ids.push_back(s.id);
    rects.push_back(member_bounds(s.members, boxes));
  }
  return complete_graph(LayoutGraph::Kind::SegmentModel, std::move(ids), rects);
}

/// Intra-segment model: nodes are the segment's member elements.
inline LayoutGraph build_ism(const Segment& segment, const BoxMap& boxes) {
  std::vector<int> ids(segment.members.begin(), segment.members.end());
  std::vector<Rect> rects;
  for (NodeId m : segment.members) rects.push_back(boxes[static_cast<std::size_t>(m)].rect);
  auto g = complete_graph(LayoutGraph::Kind::IntraSegment, std::move(ids), rects);
  g.segment_id = segment.id;
  return g;
}

struct EdgeDiff {
  LayoutGraph::Kind kind;
  int segment_id;  // ISM owner, 0 for SM
  int from;
  int to;
  LabelSet before;
  LabelSet after;
};

namespace detail {

inline std::size_t graph_difference(const LayoutGraph& a, const LayoutGraph& b, std::vector<EdgeDiff>* explain) {
  std::size_t total = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t d = symmetric_difference(a.edge(i, j), b.edge(i, j));
      total += d;
      if (d > 0 && explain) {
        explain->push_back({a.kind, a.segment_id, a.nodes[i], a.nodes[j], a.edge(i, j), b.edge(i, j)});
      }
    }
  }
  return total;
}

}  // namespace detail

/// Layout difference between two renderings of the same document, using the
/// segmentation of the original for both: the summed symmetric difference of
/// edge labels over the segment model and every intra-segment model.
inline long aesthetic_score(const BoxMap& original, const BoxMap& patched, const SegmentSet& segments,
                            std::vector<EdgeDiff>* explain = nullptr) {
  std::size_t total = detail::graph_difference(build_sm(segments, original), build_sm(segments, patched), explain);
  for (const auto& s : segments.segments) {
    total += detail::graph_difference(build_ism(s, original), build_ism(s, patched), explain);
  }
  return static_cast<long>(total);
}

}  // namespace webmend
