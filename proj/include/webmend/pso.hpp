#pragma once

#include <random>
#include <vector>

#include "candidate.hpp"
#include "error.hpp"
#include "fitness.hpp"
#include "optimizer.hpp"

namespace webmend {

struct PbraConfig {
  int population = 10;
  long evaluations = 150;
  double inertia_start = 0.9;
  double inertia_end = 0.4;
  double c1 = 0.5;
  double c2 = 0.5;
  double init_spread = 0.3;  // initial position std-dev and velocity half-range
  std::uint64_t seed = 42;
  unsigned threads = 1;

  void validate() const {
    if (population < 2) throw DomainError("population must be at least 2");
    if (evaluations < population) throw DomainError("evaluation budget must cover one generation");
    if (!(inertia_end > 0 && inertia_end <= inertia_start)) throw DomainError("need 0 < inertia_end <= inertia_start");
  }
};

struct Particle {
  Candidate position;
  std::vector<double> velocity;
  Candidate best_position;
  ScoreReport best_score;
};

/// v' = w v + c1 r1 (pBest - P) + c2 r2 (gBest - P), componentwise.
inline std::vector<double> velocity_update(const std::vector<double>& velocity, const Candidate& position,
                                           const Candidate& personal_best, const Candidate& global_best, double w,
                                           double c1, double c2, double r1, double r2) {
  const std::size_t d = velocity.size();
  if (position.dimension() != d || personal_best.dimension() != d || global_best.dimension() != d) {
    throw DimensionMismatch("velocity update operands differ in dimension");
  }
  std::vector<double> next(d);
  for (std::size_t i = 0; i < d; ++i) {
    next[i] = w * velocity[i] + c1 * r1 * (personal_best[i] - position[i]) + c2 * r2 * (global_best[i] - position[i]);
  }
  return next;
}

/// Particle-swarm repair. Particle 0 starts at the suggested candidate, the
/// rest at Gaussian perturbations of it. Each generation moves every particle
/// against the gBest of the previous generation, evaluates the batch, then
/// updates pBest (strict <) and gBest (<=) in particle order. Inertia decays
/// linearly from inertia_start to inertia_end over the evaluation budget.
inline RunResult pbra_run(const RepairProblem& problem, const PbraConfig& cfg, const FitnessConfig& fitness) {
  cfg.validate();
  const std::size_t d = problem.dimension();
  if (d == 0) throw NoIssues("page has no issues to repair");

  Evaluator ev(problem, fitness);
  const auto T = static_cast<std::size_t>(cfg.population);
  std::vector<Rng> rngs;
  for (std::size_t t = 0; t < T; ++t) rngs.push_back(make_rng(cfg.seed, t));

  std::vector<Particle> swarm(T);
  std::vector<Candidate> batch;
  for (std::size_t t = 0; t < T; ++t) {
    Particle& p = swarm[t];
    p.position = problem.suggestion();
    if (t > 0) {
      std::normal_distribution<double> gauss(0.0, cfg.init_spread);
      for (auto& x : p.position.values) x += gauss(rngs[t]);
      p.position.clamp();
    }
    std::uniform_real_distribution<double> initial(-cfg.init_spread, cfg.init_spread);
    p.velocity.resize(d);
    for (auto& v : p.velocity) v = initial(rngs[t]);
    batch.push_back(p.position);
  }

  RunResult result;
  auto scores = evaluate_batch(ev, batch, cfg.threads);
  Candidate gbest = swarm[0].position;
  ScoreReport gbest_score = scores[0];
  for (std::size_t t = 0; t < T; ++t) {
    swarm[t].best_position = swarm[t].position;
    swarm[t].best_score = scores[t];
    if (swarm[t].best_score.F <= gbest_score.F) {
      gbest = swarm[t].best_position;
      gbest_score = swarm[t].best_score;
    }
    result.trace.rows.push_back(make_row(swarm[t].position, scores[t], gbest_score.F));
  }

  while (ev.evaluations() < cfg.evaluations) {
    const double progress = static_cast<double>(ev.evaluations()) / static_cast<double>(cfg.evaluations);
    const double w = cfg.inertia_start - (cfg.inertia_start - cfg.inertia_end) * progress;
    const std::size_t moving = std::min<std::size_t>(T, static_cast<std::size_t>(cfg.evaluations - ev.evaluations()));

    batch.clear();
    for (std::size_t t = 0; t < moving; ++t) {
      Particle& p = swarm[t];
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const double r1 = unit(rngs[t]);
      const double r2 = unit(rngs[t]);
      p.velocity = velocity_update(p.velocity, p.position, p.best_position, gbest, w, cfg.c1, cfg.c2, r1, r2);
      for (std::size_t i = 0; i < d; ++i) p.position.values[i] += p.velocity[i];
      p.position.clamp();
      batch.push_back(p.position);
    }
    scores = evaluate_batch(ev, batch, cfg.threads);
    for (std::size_t t = 0; t < moving; ++t) {
      Particle& p = swarm[t];
      if (scores[t].F < p.best_score.F) {
        p.best_position = p.position;
        p.best_score = scores[t];
      }
      if (p.best_score.F <= gbest_score.F) {
        gbest = p.best_position;
        gbest_score = p.best_score;
      }
      result.trace.rows.push_back(make_row(p.position, scores[t], gbest_score.F));
    }
  }

  result.best = gbest;
  result.best_score = gbest_score;
  result.evaluations = ev.evaluations();
  return result;
}

}  // namespace webmend
