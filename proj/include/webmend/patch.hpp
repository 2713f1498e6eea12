#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "css.hpp"
#include "fitness.hpp"
#include "html.hpp"

namespace webmend {

struct PatchArtifact {
  std::string header;                    // provenance comment
  std::string css;                       // header + override rules
  std::map<NodeId, std::string> injected_ids;
  std::string html;                      // source document with injected ids
  ScoreReport score;
};

// 64-bit FNV-1a, stable across platforms; used for config fingerprints.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail {

inline std::string unique_injected_id(const Dom& dom, NodeId id) {
  std::set<std::string> taken;
  for (const auto& n : dom.nodes()) {
    if (!n.element_id.empty()) taken.insert(n.element_id);
  }
  std::string candidate = "wm-" + std::to_string(id);
  while (taken.count(candidate)) candidate += "x";
  return candidate;
}

inline bool id_is_unique(const Dom& dom, const std::string& value) {
  return std::count_if(dom.nodes().begin(), dom.nodes().end(),
                       [&](const DomNode& n) { return n.element_id == value; }) == 1;
}

}  // namespace detail

/// Override stylesheet for a candidate. Each affected node gets one rule with
/// an id-selector chain long enough to outrank every original rule matching
/// it (ties are won by source order, as the patch is appended last). Nodes
/// without a usable unique id receive an injected one. Values are the
/// candidate's quantized overrides, so re-parsing the patch reproduces them.
inline PatchArtifact emit_patch(const RepairProblem& problem, const Candidate& candidate, const ScoreReport& score,
                                const std::string& provenance = {}) {
  const Page& page = problem.original();
  const Dom& dom = page.dom();
  const Overrides overrides = problem.overrides(candidate);

  PatchArtifact out;
  out.score = score;
  out.header = "/* webmend patch";
  if (!provenance.empty()) out.header += " " + provenance;
  out.header += " */\n";

  std::map<NodeId, std::string> selector_ids;
  auto id_for = [&](NodeId n) -> const std::string& {
    auto it = selector_ids.find(n);
    if (it != selector_ids.end()) return it->second;
    const DomNode& node = dom.node(n);
    std::string value;
    if (!node.element_id.empty() && detail::id_is_unique(dom, node.element_id)) {
      value = node.element_id;
    } else {
      if (!node.element_id.empty()) throw Error("node " + std::to_string(n) + " shares its id with another element");
      value = detail::unique_injected_id(dom, n);
      out.injected_ids[n] = value;
    }
    return selector_ids.emplace(n, value).first->second;
  };

  std::string rules;
  for (const auto& [node_id, props] : overrides) {
    int needed_ids = 0;
    for (const auto& rule : page.doc->sheet.rules) {
      if (!rule.selector.matches(dom, node_id)) continue;
      const bool relevant = std::any_of(props.begin(), props.end(),
                                        [&](const auto& kv) { return rule.declarations.count(kv.first) > 0; });
      if (relevant) needed_ids = std::max(needed_ids, rule.specificity.ids);
    }
    const int length = std::min(needed_ids + 1, dom.node(node_id).depth + 1);
    std::vector<NodeId> chain;
    for (NodeId cur = node_id; static_cast<int>(chain.size()) < length; cur = dom.node(cur).parent) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());

    std::string selector;
    for (NodeId c : chain) {
      if (!selector.empty()) selector += ' ';
      selector += "#" + id_for(c);
    }
    rules += selector + " {\n";
    for (const auto& [prop, value] : props) {
      rules += "  " + std::string(property_name(prop)) + ": " + to_css(value) + ";\n";
    }
    rules += "}\n";
  }
  out.css = out.header + rules;
  out.html = serialize_html(dom, out.injected_ids);
  return out;
}

}  // namespace webmend
