#include <gtest/gtest.h>

#include "support.hpp"

namespace webmend {
namespace {

constexpr GVariant kAllVariants[] = {GVariant::Exponential, GVariant::Quadratic, GVariant::Cubic};

TEST(TransferE, ThresholdValues) {
  for (GVariant g : kAllVariants) {
    EXPECT_EQ(transfer_E(0, g), -1);
    EXPECT_EQ(transfer_E(20, g), 19);
  }
  EXPECT_EQ(transfer_E(-5, GVariant::Quadratic), -25);
  EXPECT_EQ(transfer_E(-5, GVariant::Cubic), -125);
  EXPECT_DOUBLE_EQ(transfer_E(-5, GVariant::Exponential), -std::exp(5.0));
}

TEST(Fitness, CombinationExamples) {
  const FitnessConfig cfg;
  EXPECT_EQ(combine_fitness(100, 0, cfg), -19);
  EXPECT_EQ(combine_fitness(80, 0, cfg), 1);
  EXPECT_EQ(combine_fitness(60, 10, cfg), 410);
}

TEST(Fitness, IdentityOnCleanPage) {
  const auto problem = RepairProblem::build(testing::load("<p>fine</p>"));
  EXPECT_EQ(problem.dimension(), 0u);
  const ScoreReport r = problem.score(Candidate{}, {});
  EXPECT_EQ(r.U, 100);
  EXPECT_EQ(r.A, 0);
  EXPECT_EQ(r.F, -19);
}

TEST(Fitness, StrictlyDecreasingInUsabilityOnEachSide) {
  for (GVariant g : kAllVariants) {
    FitnessConfig cfg;
    cfg.g = g;
    for (double A : {0.0, 5.0, 40.0}) {
      for (auto [lo, hi] : {std::pair{0, 799}, std::pair{800, 1000}}) {
        for (int i = lo; i < hi; ++i) {
          EXPECT_GT(combine_fitness(i * 0.1, A, cfg), combine_fitness((i + 1) * 0.1, A, cfg))
              << g_variant_name(g) << " U=" << i * 0.1;
        }
      }
    }
  }
}

// E jumps from G(0-) to -1 at the threshold; the jump is kept as defined.
TEST(Fitness, ThresholdDiscontinuity) {
  FitnessConfig cfg;
  EXPECT_NEAR(combine_fitness(80 - 1e-9, 0, cfg), 0, 1e-12);
  EXPECT_EQ(combine_fitness(80, 0, cfg), 1);
  cfg.g = GVariant::Exponential;
  EXPECT_NEAR(combine_fitness(80 - 1e-9, 0, cfg), 1, 1e-8);
}

TEST(Fitness, StrictlyIncreasingInAesthetics) {
  const FitnessConfig cfg;
  for (double U : {30.0, 79.5, 80.0, 95.0}) {
    for (int A = 0; A < 50; ++A) EXPECT_LT(combine_fitness(U, A, cfg), combine_fitness(U, A + 1, cfg));
  }
}

TEST(Fitness, DeficitDominatesAesthetics) {
  const FitnessConfig cfg;
  for (int a = 0; a <= 50; ++a) {
    for (int b = 0; b <= 50; ++b) EXPECT_GT(combine_fitness(60, a, cfg), combine_fitness(79, b, cfg));
  }
}

TEST(Fitness, ConfigValidation) {
  FitnessConfig cfg;
  cfg.alpha = 1;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = {};
  cfg.beta = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
  EXPECT_EQ(parse_g_variant("exp"), GVariant::Exponential);
  EXPECT_THROW(parse_g_variant("linear"), Error);
}

TEST(Evaluator, CountsCallsAndRejectsBadCandidates) {
  const auto problem = RepairProblem::build(testing::load("<p>a</p>", "p { font-size: 10px }"));
  Evaluator ev(problem, {});
  EXPECT_EQ(ev.evaluate(Candidate{{1.6}}).eval_index, 1);
  EXPECT_EQ(ev.evaluate(Candidate{{1.0}}).eval_index, 2);
  EXPECT_THROW(ev.evaluate(Candidate{{5.0}}), DomainError);
  EXPECT_THROW(ev.evaluate(Candidate{{1.0, 1.0}}), DimensionMismatch);
  EXPECT_EQ(ev.evaluations(), 2);
}

TEST(Evaluator, ScoreMatchesDefinition) {
  const auto problem = RepairProblem::build(testing::load("<p>a</p><p>b</p>", "p { font-size: 10px }"));
  for (double x : {0.5, 1.0, 1.2, 1.6, 3.0}) {
    const ScoreReport r = problem.score(Candidate{{x}}, {});
    EXPECT_EQ(r.F, -1 * transfer_E(r.U - 80, GVariant::Quadratic) + r.A);
  }
}

}  // namespace
}  // namespace webmend
