#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "fitness.hpp"
#include "page.hpp"
#include "pso.hpp"
#include "tabu.hpp"

namespace webmend {

enum class Algorithm { Pso, Tabu };

inline std::string_view algorithm_name(Algorithm a) { return a == Algorithm::Pso ? "pso" : "tabu"; }

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "pso" || s == "pbra") return Algorithm::Pso;
  if (s == "tabu" || s == "tera") return Algorithm::Tabu;
  throw Error("unknown algorithm '" + std::string(s) + "' (expected pso or tabu)");
}

struct BenchPage {
  std::string name;
  std::string html;
  std::string css;
};

struct BenchMatrix {
  std::vector<Algorithm> algorithms = {Algorithm::Pso, Algorithm::Tabu};
  std::vector<GVariant> g_variants = {GVariant::Quadratic};
  std::vector<int> populations = {10};  // PBRA only; TERA cells ignore it
  int runs = 10;
};

struct BenchConfig {
  PbraConfig pbra;
  TeraConfig tera;
  FitnessConfig fitness;
  Viewport viewport;
  double theta = kDefaultTheta;
  std::uint64_t seed = 42;  // run r uses seed + r
  unsigned threads = 1;     // concurrent page cells
};

struct BenchRun {
  std::string page;
  Algorithm algorithm = Algorithm::Pso;
  GVariant g = GVariant::Quadratic;
  int population = 0;  // 0 for TERA
  int run = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  double U = 0;
  double A = 0;
  double F = 0;
  long evals_to_threshold = -1;
  double wall_ms = 0;
};

struct BenchSummary {
  std::string page;
  Algorithm algorithm = Algorithm::Pso;
  GVariant g = GVariant::Quadratic;
  int population = 0;
  int runs = 0;
  int failed = 0;
  double mean_U = 0;
  double mean_A = 0;
  double mean_F = 0;
  double median_F = 0;
  double median_A = 0;
  int repaired = 0;  // runs ending with U >= threshold
  double mean_evals_to_threshold = -1;  // over runs that reached it
  double median_evals_to_threshold = -1;
  double wall_ms = 0;
};

struct BenchResult {
  std::vector<BenchRun> runs;
  std::vector<BenchSummary> summary;
};

inline double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline RunResult run_algorithm(const RepairProblem& problem, Algorithm algo, const BenchConfig& cfg, GVariant g,
                               int population, std::uint64_t seed) {
  FitnessConfig fc = cfg.fitness;
  fc.g = g;
  if (algo == Algorithm::Pso) {
    PbraConfig pc = cfg.pbra;
    pc.population = population;
    pc.seed = seed;
    return pbra_run(problem, pc, fc);
  }
  TeraConfig tc = cfg.tera;
  tc.seed = seed;
  return tera_run(problem, tc, fc);
}

inline BenchSummary summarize(const std::vector<BenchRun>& runs, double threshold) {
  BenchSummary s;
  s.page = runs.front().page;
  s.algorithm = runs.front().algorithm;
  s.g = runs.front().g;
  s.population = runs.front().population;
  s.runs = static_cast<int>(runs.size());
  std::vector<double> Fs, As, evals;
  for (const auto& r : runs) {
    s.wall_ms += r.wall_ms;
    if (!r.ok) {
      ++s.failed;
      continue;
    }
    s.mean_U += r.U;
    s.mean_A += r.A;
    s.mean_F += r.F;
    Fs.push_back(r.F);
    As.push_back(r.A);
    if (r.U >= threshold) ++s.repaired;
    if (r.evals_to_threshold >= 0) evals.push_back(static_cast<double>(r.evals_to_threshold));
  }
  if (!Fs.empty()) {
    const auto n = static_cast<double>(Fs.size());
    s.mean_U /= n;
    s.mean_A /= n;
    s.mean_F /= n;
    s.median_F = median(Fs);
    s.median_A = median(As);
  }
  if (!evals.empty()) {
    s.mean_evals_to_threshold = std::accumulate(evals.begin(), evals.end(), 0.0) / static_cast<double>(evals.size());
    s.median_evals_to_threshold = median(evals);
  }
  return s;
}

namespace detail {

inline std::vector<BenchRun> bench_page(const BenchPage& page, const BenchMatrix& matrix, const BenchConfig& cfg) {
  std::vector<BenchRun> out;
  std::unique_ptr<RepairProblem> problem;
  std::string load_error;
  try {
    problem = std::make_unique<RepairProblem>(RepairProblem::build(Page::load(page.html, page.css, cfg.viewport), cfg.theta));
  } catch (const std::exception& e) {
    load_error = e.what();
  }
  for (Algorithm algo : matrix.algorithms) {
    for (GVariant g : matrix.g_variants) {
      std::vector<int> pops = algo == Algorithm::Pso ? matrix.populations : std::vector<int>{0};
      for (int pop : pops) {
        for (int r = 0; r < matrix.runs; ++r) {
          BenchRun run;
          run.page = page.name;
          run.algorithm = algo;
          run.g = g;
          run.population = pop;
          run.run = r;
          run.seed = cfg.seed + static_cast<std::uint64_t>(r);
          const auto start = std::chrono::steady_clock::now();
          try {
            if (!problem) throw Error(load_error);
            const RunResult res = run_algorithm(*problem, algo, cfg, g, pop, run.seed);
            run.ok = true;
            run.U = res.best_score.U;
            run.A = res.best_score.A;
            run.F = res.best_score.F;
            run.evals_to_threshold = res.trace.evals_to_threshold(cfg.fitness.threshold);
          } catch (const std::exception& e) {
            run.error = e.what();
          }
          run.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          out.push_back(std::move(run));
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Runs every (page, algorithm, G, population) cell `runs` times with seeds
/// seed..seed+runs-1. Failures are recorded per run and never stop the matrix.
/// Page cells may run concurrently; results are ordered as the input.
inline BenchResult bench(const std::vector<BenchPage>& pages, const BenchMatrix& matrix, const BenchConfig& cfg) {
  std::vector<std::vector<BenchRun>> per_page(pages.size());
  if (cfg.threads <= 1) {
    for (std::size_t i = 0; i < pages.size(); ++i) per_page[i] = detail::bench_page(pages[i], matrix, cfg);
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t workers = std::min<std::size_t>(cfg.threads, pages.size());
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < pages.size(); i += workers) per_page[i] = detail::bench_page(pages[i], matrix, cfg);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  BenchResult result;
  for (auto& runs : per_page) {
    for (std::size_t i = 0; i < runs.size();) {
      std::size_t j = i;
      while (j < runs.size() && runs[j].algorithm == runs[i].algorithm && runs[j].g == runs[i].g &&
             runs[j].population == runs[i].population) {
        ++j;
      }
      result.summary.push_back(summarize({runs.begin() + static_cast<std::ptrdiff_t>(i),
                                          runs.begin() + static_cast<std::ptrdiff_t>(j)},
                                         cfg.fitness.threshold));
      i = j;
    }
    result.runs.insert(result.runs.end(), runs.begin(), runs.end());
  }
  return result;
}

inline constexpr std::string_view kSummaryCsvHeader =
    "page,algo,g,pop,runs,failed,mean_U,mean_A,mean_F,median_F,median_A,repaired,mean_evals_to_80,"
    "median_evals_to_80,wall_ms";

/// Summary rows as CSV. wall_ms is the only column that varies between identical invocations.
inline std::string summary_csv(const std::vector<BenchSummary>& rows, bool include_wall_time = true) {
  std::string out(kSummaryCsvHeader);
  if (!include_wall_time) out.resize(out.rfind(','));
  out += '\n';
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%s,%d,%d,%d,%.4f,%.4f,%.4f,%.4f,%.4f,%d,%.2f,%.2f", r.page.c_str(),
                  std::string(algorithm_name(r.algorithm)).c_str(), std::string(g_variant_name(r.g)).c_str(),
                  r.population, r.runs, r.failed, r.mean_U, r.mean_A, r.mean_F, r.median_F, r.median_A, r.repaired,
                  r.mean_evals_to_threshold, r.median_evals_to_threshold);
    out += buf;
    if (include_wall_time) {
      std::snprintf(buf, sizeof buf, ",%.1f", r.wall_ms);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace webmend
