#pragma once

#include <cmath>
#include <deque>
#include <random>
#include <vector>

#include "candidate.hpp"
#include "error.hpp"
#include "fitness.hpp"
#include "optimizer.hpp"

namespace webmend {

struct TeraConfig {
  int neighborhood = 10;
  long evaluations = 150;
  int tabu_size = 5;
  double delta = 0.3;
  double quantum = 0.05;  // tabu equality resolution
  std::uint64_t seed = 42;
  unsigned threads = 1;

  void validate() const {
    if (neighborhood < 1) throw DomainError("neighborhood size must be at least 1");
    if (tabu_size < 1) throw DomainError("tabu list size must be at least 1");
    if (!(delta > 0)) throw DomainError("neighbor range must be positive");
    if (!(quantum > 0)) throw DomainError("tabu quantum must be positive");
    if (evaluations < 1) throw DomainError("evaluation budget must be positive");
  }
};

// FIFO memory of recently accepted candidates, compared on a quantized grid.
class TabuList {
 public:
  TabuList(std::size_t capacity, double quantum) : capacity_(capacity), quantum_(quantum) {}

  void push(const Candidate& c) {
    items_.push_back(c);
    if (items_.size() > capacity_) items_.pop_front();
  }

  bool contains(const Candidate& c) const {
    const auto key = quantize(c);
    for (const auto& item : items_) {
      if (quantize(item) == key) return true;
    }
    return false;
  }

  const std::deque<Candidate>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::size_t capacity_;
  double quantum_;
  std::deque<Candidate> items_;

  std::vector<long> quantize(const Candidate& c) const {
    std::vector<long> key;
    key.reserve(c.dimension());
    for (double v : c.values) key.push_back(std::lround(v / quantum_));
    return key;
  }
};

/// `count` candidates with every coordinate uniform in [x - delta, x + delta], clamped to the domain.
inline std::vector<Candidate> get_neighbors(const Candidate& center, double delta, int count, Rng& rng) {
  std::vector<Candidate> out;
  out.reserve(static_cast<std::size_t>(count));
  std::uniform_real_distribution<double> offset(-delta, delta);
  for (int k = 0; k < count; ++k) {
    Candidate c = center;
    if (delta > 0) {
      for (auto& v : c.values) v += offset(rng);
    }
    c.clamp();
    out.push_back(std::move(c));
  }
  return out;
}

/// Tabu-search repair starting from the suggested candidate. Each iteration
/// samples a neighborhood of the current candidate and moves to the last
/// non-tabu neighbor that is no worse than the running choice. When nothing
/// qualifies it moves to the best non-tabu neighbor anyway, so the search
/// cannot stall at a local minimum. The accepted candidate enters the tabu
/// list, which evicts its oldest entry beyond tabu_size.
inline RunResult tera_run(const RepairProblem& problem, const TeraConfig& cfg, const FitnessConfig& fitness,
                          TabuList* tabu_out = nullptr) {
  cfg.validate();
  if (problem.dimension() == 0) throw NoIssues("page has no issues to repair");

  Evaluator ev(problem, fitness);
  Rng rng = make_rng(cfg.seed, 0);
  TabuList tabu(static_cast<std::size_t>(cfg.tabu_size), cfg.quantum);

  RunResult result;
  Candidate current = problem.suggestion();
  ScoreReport current_score = evaluate_batch(ev, {current}, 1).front();
  Candidate best = current;
  ScoreReport best_score = current_score;
  tabu.push(current);
  result.accepted.push_back(current);
  result.trace.rows.push_back(make_row(current, current_score, best_score.F));

  while (ev.evaluations() < cfg.evaluations) {
    const int count = static_cast<int>(std::min<long>(cfg.neighborhood, cfg.evaluations - ev.evaluations()));
    const auto neighbors = get_neighbors(current, cfg.delta, count, rng);
    const auto scores = evaluate_batch(ev, neighbors, cfg.threads);

    std::size_t chosen = neighbors.size();
    double choice_F = current_score.F;
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      if (scores[i].F <= choice_F && !tabu.contains(neighbors[i])) {
        chosen = i;
        choice_F = scores[i].F;
      }
    }
    if (chosen == neighbors.size()) {
      for (std::size_t i = 0; i < neighbors.size(); ++i) {
        if (tabu.contains(neighbors[i])) continue;
        if (chosen == neighbors.size() || scores[i].F < scores[chosen].F) chosen = i;
      }
    }
    if (chosen != neighbors.size()) {
      current = neighbors[chosen];
      current_score = scores[chosen];
    }
    if (current_score.F <= best_score.F) {
      best = current;
      best_score = current_score;
    }
    tabu.push(current);
    result.accepted.push_back(current);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      result.trace.rows.push_back(make_row(neighbors[i], scores[i], best_score.F));
    }
  }

  result.best = best;
  result.best_score = best_score;
  result.evaluations = ev.evaluations();
  if (tabu_out) *tabu_out = tabu;
  return result;
}

}  // namespace webmend
