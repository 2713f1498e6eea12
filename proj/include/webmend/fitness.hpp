#pragma once

#include <atomic>
#include <cmath>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "aesthetics.hpp"
#include "candidate.hpp"
#include "error.hpp"
#include "localization.hpp"
#include "page.hpp"
#include "pdg.hpp"
#include "segmentation.hpp"

namespace webmend {

// Shape of the penalty applied below the usability threshold.
enum class GVariant { Exponential, Quadratic, Cubic };

inline std::string_view g_variant_name(GVariant g) {
  switch (g) {
    case GVariant::Exponential: return "exp";
    case GVariant::Quadratic: return "quad";
    case GVariant::Cubic: return "cubic";
  }
  return "?";
}

inline GVariant parse_g_variant(std::string_view s) {
  if (s == "exp") return GVariant::Exponential;
  if (s == "quad") return GVariant::Quadratic;
  if (s == "cubic") return GVariant::Cubic;
  throw Error("unknown G variant '" + std::string(s) + "' (expected exp, quad or cubic)");
}

struct FitnessConfig {
  double alpha = -1.0;
  double beta = 1.0;
  GVariant g = GVariant::Quadratic;
  double threshold = 80.0;

  void validate() const {
    if (!(alpha < 0)) throw DomainError("alpha must be negative");
    if (!(beta > 0)) throw DomainError("beta must be positive");
  }
};

/// E(y) = G(y) for y < 0, y - 1 otherwise. G is -y^2 (quadratic), y^3
/// (cubic) or -e^(-y) (exponential, negated so that a negative alpha still
/// penalizes pages below the threshold).
inline double transfer_E(double y, GVariant g) {
  if (y >= 0) return y - 1.0;
  switch (g) {
    case GVariant::Quadratic: return -y * y;
    case GVariant::Cubic: return y * y * y;
    case GVariant::Exponential: return -std::exp(-y);
  }
  return 0;
}

inline double combine_fitness(double U, double A, const FitnessConfig& cfg) {
  return cfg.alpha * transfer_E(U - cfg.threshold, cfg.g) + cfg.beta * A;
}

struct ScoreReport {
  double U = 0;
  double A = 0;
  double F = 0;
  long eval_index = 0;
  UsabilityScore usability;
};

// Everything about a page that stays fixed while candidates are searched.
class RepairProblem {
 public:
  static RepairProblem build(Page original, double theta = kDefaultTheta, UsabilityConfig ucfg = {}) {
    RepairProblem p;
    p.original_ = std::move(original);
    p.usability_cfg_ = ucfg;
    p.segments_ = segment(p.original_.dom(), p.original_.boxes, theta);
    p.report_ = detect_issues(p.original_, p.segments_, ucfg);
    p.pairs_ = p.report_.pairs();
    for (const auto& pair : p.pairs_) p.pdgs_.push_back(build_pdg(p.segments_.by_id(pair.segment_id), pair.issue, p.original_));
    p.suggestion_ = suggest_candidate(p.original_, p.segments_, p.report_, ucfg);
    return p;
  }

  const Page& original() const { return original_; }
  const SegmentSet& segments() const { return segments_; }
  const IssueReport& report() const { return report_; }
  const std::vector<IssuePair>& pairs() const { return pairs_; }
  const std::vector<Pdg>& pdgs() const { return pdgs_; }
  const Candidate& suggestion() const { return suggestion_; }
  const UsabilityConfig& usability_config() const { return usability_cfg_; }
  std::size_t dimension() const { return pairs_.size(); }

  Overrides overrides(const Candidate& c) const { return candidate_overrides(pdgs_, c, original_); }
  Page render(const Candidate& c) const { return original_.rerender(overrides(c)); }

  // Scores a candidate without touching any counter.
  ScoreReport score(const Candidate& c, const FitnessConfig& cfg) const {
    const Page patched = render(c);
    ScoreReport r;
    r.usability = usability(patched, usability_cfg_);
    r.U = r.usability.U;
    r.A = static_cast<double>(aesthetic_score(original_.boxes, patched.boxes, segments_));
    r.F = combine_fitness(r.U, r.A, cfg);
    return r;
  }

 private:
  Page original_;
  UsabilityConfig usability_cfg_;
  SegmentSet segments_;
  IssueReport report_;
  std::vector<IssuePair> pairs_;
  std::vector<Pdg> pdgs_;
  Candidate suggestion_;
};

/// Fitness function with its evaluation counter, the termination currency of
/// both optimizers. evaluate() is reentrant; the counter is atomic.
class Evaluator {
 public:
  Evaluator(const RepairProblem& problem, FitnessConfig cfg) : problem_(problem), cfg_(cfg) { cfg_.validate(); }

  ScoreReport evaluate(const Candidate& c) const {
    ScoreReport r = problem_.score(c, cfg_);
    r.eval_index = counter_.fetch_add(1) + 1;
    return r;
  }

  long evaluations() const { return counter_.load(); }
  const RepairProblem& problem() const { return problem_; }
  const FitnessConfig& config() const { return cfg_; }

 private:
  const RepairProblem& problem_;
  FitnessConfig cfg_;
  mutable std::atomic<long> counter_{0};
};

}  // namespace webmend
