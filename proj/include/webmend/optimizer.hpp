#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <random>
#include <vector>

#include "candidate.hpp"
#include "fitness.hpp"

namespace webmend {

struct TraceRow {
  long eval = 0;
  Candidate candidate;
  double U = 0;
  double A = 0;
  double F = 0;
  double best_F = 0;  // incumbent after this evaluation was processed
};

struct RunTrace {
  std::vector<TraceRow> rows;

  // First evaluation whose candidate reached the threshold, or -1.
  long evals_to_threshold(double threshold = 80.0) const {
    for (const auto& r : rows) {
      if (r.U >= threshold) return r.eval;
    }
    return -1;
  }
};

struct RunResult {
  Candidate best;
  ScoreReport best_score;
  RunTrace trace;
  long evaluations = 0;
  std::vector<Candidate> accepted;  // TERA: current candidate after each iteration, starting point first
};

using Rng = std::mt19937_64;

// Independent deterministic stream per (seed, stream index).
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
  return Rng(seq);
}

/// Evaluates candidates, concurrently when threads > 1. Evaluation indices
/// follow batch order regardless of completion order.
inline std::vector<ScoreReport> evaluate_batch(const Evaluator& ev, const std::vector<Candidate>& batch,
                                               unsigned threads = 1) {
  const long base = ev.evaluations();
  std::vector<ScoreReport> out(batch.size());
  if (threads <= 1 || batch.size() <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = ev.evaluate(batch[i]);
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t workers = std::min<std::size_t>(threads, batch.size());
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < batch.size(); i += workers) out[i] = ev.evaluate(batch[i]);
      }));
    }
    for (auto& j : jobs) j.get();
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].eval_index = base + static_cast<long>(i) + 1;
  return out;
}

inline TraceRow make_row(const Candidate& c, const ScoreReport& r, double best_F) {
  return {r.eval_index, c, r.U, r.A, r.F, best_F};
}

}  // namespace webmend
