#include <gtest/gtest.h>

#include <webmend/report.hpp>

#include "support.hpp"

namespace webmend {
namespace {

TEST(VelocityUpdate, Examples) {
  const Candidate p{{1.0}};
  EXPECT_EQ(velocity_update({0.7}, p, Candidate{{2.0}}, Candidate{{3.0}}, 1, 0.5, 0.5, 0, 0), (std::vector<double>{0.7}));
  const auto v = velocity_update({0.2}, p, Candidate{{1.1}}, Candidate{{1.3}}, 0.5, 0.5, 0.5, 1, 1);
  EXPECT_NEAR(v[0], 0.3, 1e-12);
  EXPECT_EQ(velocity_update({0.4, -0.2}, Candidate{{1, 2}}, Candidate{{1, 2}}, Candidate{{1, 2}}, 0.5, 0.5, 0.5, 0.3, 0.9),
            (std::vector<double>{0.2, -0.1}));
  EXPECT_THROW(velocity_update({0.1}, Candidate{{1, 2}}, p, p, 1, 1, 1, 1, 1), DimensionMismatch);
}

TEST(GetNeighbors, ZeroRangeAndClamp) {
  Rng rng = make_rng(42, 0);
  for (const auto& n : get_neighbors(Candidate{{1.3, 2.0}}, 0, 10, rng)) EXPECT_EQ(n, (Candidate{{1.3, 2.0}}));
  const auto ns = get_neighbors(Candidate{{0.3}}, 0.3, 200, rng);
  EXPECT_EQ(ns.size(), 200u);
  bool clamped = false;
  for (const auto& n : ns) {
    EXPECT_GE(n[0], 0.25);
    EXPECT_LE(n[0], 0.6);
    clamped |= n[0] == 0.25;
  }
  EXPECT_TRUE(clamped);
}

TEST(GetNeighbors, SeededDeterminism) {
  Rng a = make_rng(42, 0), b = make_rng(42, 0);
  EXPECT_EQ(get_neighbors(Candidate{{1, 1}}, 0.3, 10, a), get_neighbors(Candidate{{1, 1}}, 0.3, 10, b));
}

TEST(TabuList, FifoEvictionKeepsLastAccepted) {
  TabuList tabu(5, 0.05);
  std::vector<Candidate> accepted;
  for (int i = 0; i < 7; ++i) {
    accepted.push_back(Candidate{{1.0 + 0.2 * i}});
    tabu.push(accepted.back());
  }
  ASSERT_EQ(tabu.size(), 5u);
  EXPECT_EQ(std::vector<Candidate>(tabu.items().begin(), tabu.items().end()),
            std::vector<Candidate>(accepted.begin() + 2, accepted.end()));
  EXPECT_FALSE(tabu.contains(accepted[0]));
  EXPECT_TRUE(tabu.contains(Candidate{{2.21}}));
  EXPECT_FALSE(tabu.contains(Candidate{{2.3}}));
}

const RepairProblem& corpus_problem(std::size_t i) {
  static const std::vector<RepairProblem> problems = [] {
    CorpusSpec spec;
    spec.count = 5;
    std::vector<RepairProblem> out;
    for (const auto& cp : generate_corpus(spec)) out.push_back(RepairProblem::build(Page::load(cp.html, cp.css)));
    return out;
  }();
  return problems.at(i);
}

TEST(Pbra, OptimalSuggestionFoundAtFirstEvaluation) {
  const auto problem = RepairProblem::build(testing::load("<p>lonely</p>", "p { font-size: 10px }"));
  const ScoreReport s = problem.score(problem.suggestion(), {});
  ASSERT_EQ(s.F, -19);  // U = 100 and A = 0: nothing can score lower
  const RunResult r = pbra_run(problem, {}, {});
  EXPECT_EQ(r.trace.rows.front().candidate, problem.suggestion());
  EXPECT_EQ(r.trace.rows.front().best_F, -19);
  EXPECT_EQ(r.best_score.F, -19);
}

TEST(Pbra, DeterministicAndThreadIndependent) {
  for (std::size_t i = 0; i < 3; ++i) {
    PbraConfig cfg;
    const RunResult a = pbra_run(corpus_problem(i), cfg, {});
    const RunResult b = pbra_run(corpus_problem(i), cfg, {});
    cfg.threads = 4;
    const RunResult c = pbra_run(corpus_problem(i), cfg, {});
    EXPECT_EQ(trace_csv(a.trace), trace_csv(b.trace));
    EXPECT_EQ(trace_csv(a.trace), trace_csv(c.trace));
    EXPECT_EQ(a.best, c.best);
  }
}

TEST(Pbra, BudgetIncumbentAndGlobalBest) {
  for (std::size_t i = 0; i < 5; ++i) {
    for (long budget : {150L, 147L, 23L}) {
      PbraConfig cfg;
      cfg.evaluations = budget;
      const RunResult r = pbra_run(corpus_problem(i), cfg, {});
      EXPECT_EQ(r.evaluations, budget);
      EXPECT_EQ(static_cast<long>(r.trace.rows.size()), budget);
      double lowest = 1e300;
      for (std::size_t k = 0; k < r.trace.rows.size(); ++k) {
        EXPECT_EQ(r.trace.rows[k].eval, static_cast<long>(k) + 1);
        if (k > 0) {
          EXPECT_LE(r.trace.rows[k].best_F, r.trace.rows[k - 1].best_F);
        }
        lowest = std::min(lowest, r.trace.rows[k].F);
        EXPECT_EQ(r.trace.rows[k].best_F, lowest);
      }
      EXPECT_EQ(r.best_score.F, lowest);
    }
  }
}

TEST(Pbra, RejectsBadConfigAndCleanPages) {
  PbraConfig cfg;
  cfg.population = 1;
  EXPECT_THROW(pbra_run(corpus_problem(0), cfg, {}), DomainError);
  const auto clean = RepairProblem::build(testing::load("<p>fine</p>"));
  EXPECT_THROW(pbra_run(clean, {}, {}), NoIssues);
  EXPECT_THROW(tera_run(clean, {}, {}), NoIssues);
}

TEST(Tera, OptimalSuggestionIsKept) {
  const auto problem = RepairProblem::build(testing::load("<p>lonely</p>", "p { font-size: 10px }"));
  const RunResult r = tera_run(problem, {}, {});
  EXPECT_EQ(r.accepted.front(), problem.suggestion());
  EXPECT_EQ(r.trace.rows.front().best_F, -19);
  EXPECT_EQ(r.best_score.F, -19);
}

TEST(Tera, TabuHoldsLastFiveAcceptedAfterSevenIterations) {
  TeraConfig cfg;
  cfg.evaluations = 1 + 7 * cfg.neighborhood;
  TabuList tabu(0, cfg.quantum);
  const RunResult r = tera_run(corpus_problem(0), cfg, {}, &tabu);
  ASSERT_EQ(r.accepted.size(), 8u);  // starting point plus 7 iterations
  EXPECT_EQ(std::vector<Candidate>(tabu.items().begin(), tabu.items().end()),
            std::vector<Candidate>(r.accepted.end() - 5, r.accepted.end()));
}

TEST(Tera, SoundnessBudgetAndIncumbent) {
  for (std::size_t i = 0; i < 5; ++i) {
    for (long budget : {150L, 95L}) {
      TeraConfig cfg;
      cfg.evaluations = budget;
      const RunResult r = tera_run(corpus_problem(i), cfg, {});
      EXPECT_EQ(r.evaluations, budget);
      TabuList replay(static_cast<std::size_t>(cfg.tabu_size), cfg.quantum);
      replay.push(r.accepted.front());
      for (std::size_t k = 1; k < r.accepted.size(); ++k) {
        if (!(r.accepted[k] == r.accepted[k - 1])) {
          EXPECT_FALSE(replay.contains(r.accepted[k])) << "move " << k;
        }
        replay.push(r.accepted[k]);
      }
      for (std::size_t k = 1; k < r.trace.rows.size(); ++k) {
        EXPECT_LE(r.trace.rows[k].best_F, r.trace.rows[k - 1].best_F);
      }
      EXPECT_EQ(r.trace.rows.back().best_F, r.best_score.F);
    }
  }
}

TEST(Tera, DeterministicAndThreadIndependent) {
  TeraConfig cfg;
  const RunResult a = tera_run(corpus_problem(1), cfg, {});
  cfg.threads = 4;
  const RunResult b = tera_run(corpus_problem(1), cfg, {});
  EXPECT_EQ(trace_csv(a.trace), trace_csv(b.trace));
  EXPECT_EQ(a.accepted, b.accepted);
}

}  // namespace
}  // namespace webmend
