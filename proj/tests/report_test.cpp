#include <gtest/gtest.h>

#include <webmend/report.hpp>

#include "support.hpp"

namespace webmend {
namespace {

TEST(Report, SnapshotSortedByNodeId) {
  const Page p = testing::load("<a>x</a>", "a { padding: 1px }");
  const Json j = snapshot_json(p);
  ASSERT_EQ(j.size(), 3u);
  for (std::size_t i = 0; i < j.size(); ++i) EXPECT_EQ(j[i]["node_id"], static_cast<int>(i));
  EXPECT_EQ(j[2]["tag"], "a");
  EXPECT_EQ(j[2]["tappable"], true);
  EXPECT_EQ(j[2]["rect"].size(), 4u);
  EXPECT_EQ(j[2]["font_size"], 16.0);
}

TEST(Report, TraceCsvHeader) {
  RunTrace t;
  t.rows.push_back({1, Candidate{{1.5}}, 90, 2, -7, -7});
  EXPECT_EQ(trace_csv(t), "eval,U,A,F,bestF\n1,90.000000,2.000000,-7.000000,-7.000000\n");
}

}  // namespace
}  // namespace webmend
