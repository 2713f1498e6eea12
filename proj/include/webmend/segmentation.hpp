#pragma once

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"
#include "html.hpp"
#include "layout.hpp"

namespace webmend {

inline constexpr double kDefaultTheta = 4.0;

struct Segment {
  int id = 0;
  std::vector<NodeId> leaves;   // the partitioned leaves, document order
  std::vector<NodeId> members;  // leaves plus every node whose leaves all fall in this segment
  std::vector<NodeId> scope;    // every node whose first leaf falls in this segment
  NodeId root = kNoNode;        // lowest common ancestor of the leaves
  Rect bounding_rect;
};

struct SegmentSet {
  std::vector<Segment> segments;  // ids dense from 1, in document order
  double theta = kDefaultTheta;
  std::vector<int> segment_of;    // NodeId -> owning segment id (scope assignment)

  const Segment& by_id(int id) const { return segments.at(static_cast<std::size_t>(id - 1)); }
  std::size_t size() const { return segments.size(); }
};

/// Average depth of the two leaves below their lowest common ancestor:
/// (depth(a) + depth(b) - 2 * depth(lca)) / 2.
inline double leaf_distance(NodeId a, NodeId b, const Dom& dom) {
  if (!dom.node(a).is_leaf()) throw NotALeaf("node " + std::to_string(a) + " has children");
  if (!dom.node(b).is_leaf()) throw NotALeaf("node " + std::to_string(b) + " has children");
  const NodeId lca = dom.lowest_common_ancestor(a, b);
  return (dom.node(a).depth + dom.node(b).depth - 2 * dom.node(lca).depth) / 2.0;
}

inline Rect member_bounds(const std::vector<NodeId>& members, const BoxMap& boxes) {
  Rect r = boxes[static_cast<std::size_t>(members.front())].rect;
  for (NodeId m : members) r = united(r, boxes[static_cast<std::size_t>(m)].rect);
  return r;
}

/// Clusters leaves into segments. Starting from one segment per leaf, adjacent
/// segments (document order) merge while their average pairwise leaf distance
/// is below theta; left-to-right passes repeat until nothing merges.
inline SegmentSet segment(const Dom& dom, const BoxMap& boxes, double theta = kDefaultTheta) {
  const std::vector<NodeId> leaves = dom.leaves();
  const std::size_t n = leaves.size();

  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i * n + j] = dist[j * n + i] = leaf_distance(leaves[i], leaves[j], dom);
    }
  }

  // Groups are contiguous index ranges [begin, end) into `leaves`.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups.emplace_back(i, i + 1);

  auto average = [&](const auto& a, const auto& b) {
    double sum = 0;
    for (std::size_t i = a.first; i < a.second; ++i) {
      for (std::size_t j = b.first; j < b.second; ++j) sum += dist[i * n + j];
    }
    return sum / static_cast<double>((a.second - a.first) * (b.second - b.first));
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < groups.size();) {
      if (average(groups[i], groups[i + 1]) < theta) {
        groups[i].second = groups[i + 1].second;
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
      } else {
        ++i;
      }
    }
  }

  SegmentSet set;
  set.theta = theta;
  set.segment_of.assign(dom.size(), 0);
  std::vector<int> leaf_segment(dom.size(), 0);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    Segment s;
    s.id = static_cast<int>(g) + 1;
    for (std::size_t i = groups[g].first; i < groups[g].second; ++i) {
      s.leaves.push_back(leaves[i]);
      leaf_segment[static_cast<std::size_t>(leaves[i])] = s.id;
    }
    s.root = s.leaves.front();
    for (NodeId l : s.leaves) s.root = dom.lowest_common_ancestor(s.root, l);
    set.segments.push_back(std::move(s));
  }

  for (const DomNode& node : dom.nodes()) {
    NodeId first = node.id;
    while (!dom.node(first).is_leaf()) first = dom.node(first).children.front();
    const int first_seg = leaf_segment[static_cast<std::size_t>(first)];
    const int last_seg = leaf_segment[static_cast<std::size_t>(dom.subtree_end(node.id))];
    Segment& s = set.segments[static_cast<std::size_t>(first_seg - 1)];
    s.scope.push_back(node.id);
    // Segments are contiguous in leaf order, so equal end segments mean every leaf is inside.
    if (first_seg == last_seg) s.members.push_back(node.id);
    set.segment_of[static_cast<std::size_t>(node.id)] = first_seg;
  }
  for (auto& s : set.segments) s.bounding_rect = member_bounds(s.members, boxes);
  return set;
}

}  // namespace webmend
