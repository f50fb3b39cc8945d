#include <gtest/gtest.h>

#include "hultman/classify.hpp"
#include "hultman/report.hpp"

using namespace hultman;

namespace {

Element B(const char* s, int n) { return parse_element(s, Family::B, n); }

void expect_all(const ClassificationReport& r, bool value) {
  for (Condition c : kAllConditions) {
    ASSERT_TRUE(r.outcome(c).value) << condition_key(c);
    EXPECT_EQ(*r.outcome(c).value, value) << condition_key(c);
  }
}

}  // namespace

TEST(Conditions, Parse) {
  const auto s = ConditionSet::parse("1,3,5");
  EXPECT_TRUE(s.has(Condition::Chambers));
  EXPECT_FALSE(s.has(Condition::Distance));
  EXPECT_TRUE(s.has(Condition::Patterns));
  EXPECT_THROW(ConditionSet::parse("0,2"), std::invalid_argument);
  EXPECT_THROW(ConditionSet::parse("6"), std::invalid_argument);
}

TEST(Classify, Examples) {
  expect_all(classify(B("362514", 3)), true);
  expect_all(classify(B("426153", 3)), false);
  expect_all(classify(Element::identity(Family::B, 3)), true);
  const auto r = classify(B("426153", 3));
  EXPECT_EQ(r.chambers, 18u);
  EXPECT_EQ(r.interval, 20u);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].u, B("132546", 3));
  EXPECT_EQ(r.violations, (std::vector<CoessBox>{{3, 2, 1}, {5, 4, 1}}));
}

TEST(Classify, OnlyRequestedConditions) {
  ClassifyOptions opt;
  opt.conditions = ConditionSet::parse("3,5");
  const auto r = Classifier(Family::B, 3, opt).classify(B("426153", 3));
  EXPECT_FALSE(r.outcome(Condition::Chambers).value);
  EXPECT_FALSE(r.outcome(Condition::Distance).value);
  EXPECT_EQ(r.outcome(Condition::Inclusions).value, false);
  EXPECT_FALSE(r.chambers);
}

TEST(Classify, BudgetLeavesConditionUndecided) {
  ClassifyOptions opt;
  opt.hull_budget = 3;
  const auto r = Classifier(Family::B, 3, opt).classify(longest_element(Family::B, 3));
  EXPECT_FALSE(r.outcome(Condition::Hull).value);
  EXPECT_FALSE(r.outcome(Condition::Hull).error.empty());
  EXPECT_TRUE(r.consistent());
}

TEST(Classify, RejectsForeignElements) {
  EXPECT_THROW(Classifier(Family::B, 3).classify(B("2143", 2)), std::invalid_argument);
}

TEST(Verify, TypeACountsAgree) {
  const auto s = verify_equivalence(Family::A, 4);
  EXPECT_TRUE(s.agreement());
  EXPECT_EQ(s.total, 24u);
  for (std::size_t k : s.satisfied) EXPECT_EQ(k, 23u);
}

TEST(Verify, ThreadCountDoesNotChangeResults) {
  VerifyOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = verify_equivalence(Family::B, 3, one), b = verify_equivalence(Family::B, 3, four);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) EXPECT_EQ(to_json(a.reports[i]), to_json(b.reports[i]));
}

TEST(Verify, HullSampling) {
  VerifyOptions opt;
  opt.hull_sample = 10;
  const auto s = verify_equivalence(Family::B, 3, opt);
  EXPECT_EQ(s.decided[static_cast<int>(Condition::Hull) - 1], 10u);
  EXPECT_EQ(s.decided[static_cast<int>(Condition::Distance) - 1], 48u);
  EXPECT_TRUE(s.agreement());
}

TEST(Minimal, TypeAOnly) {
  const auto m = find_minimal_non_hultman(6, 0);
  std::vector<std::string> got;
  for (const auto& p : m) got.push_back(to_string(p.element));
  EXPECT_EQ(got, (std::vector<std::string>{"4231", "35142", "42513", "351624"}));
}

TEST(Minimal, ThroughB3) {
  const auto m = find_minimal_non_hultman(4, 3);
  std::set<std::string> b3;
  for (const auto& p : m)
    if (p.family() == Family::B) b3.insert(to_string(p.element));
  std::set<std::string> listed;
  for (const auto& p : hultman_patterns())
    if (p.family() == Family::B && p.n() == 3) listed.insert(to_string(p.element));
  EXPECT_EQ(b3, listed);
}

TEST(Witnesses, ReferenceRows) {
  const auto t = witness_table();
  EXPECT_EQ(t.patterns.size(), 31u);
  for (const auto& p : t.patterns) {
    EXPECT_TRUE(p.non_hultman_by_chambers()) << p.pattern.label();
    EXPECT_FALSE(p.failures.empty()) << p.pattern.label();
  }
  auto find = [&](const char* w, const char* u) {
    for (const auto& r : t.rows)
      if (r.row.w == w && r.row.u == u) return r;
    throw std::runtime_error("row not found");
  };
  EXPECT_EQ(find("35142", "12435").status, RowStatus::Match);
  EXPECT_EQ(find("426153", "132546").status, RowStatus::Match);
  const auto bad = find("4231", "2143");
  EXPECT_EQ(bad.status, RowStatus::ParityInconsistent);
  EXPECT_EQ(bad.directed, 3);
  EXPECT_EQ(bad.undirected, 3);
  EXPECT_EQ(find("351624", "423156").status, RowStatus::NotBelow);
  EXPECT_EQ(t.count(RowStatus::Mismatch), 0u);
}

TEST(Report, JsonFields) {
  const auto j = to_json(classify(B("426153", 3)));
  for (const char* key : {"element", "family", "rank", "conditions", "c", "s", "witnesses", "violations", "matched_pattern"})
    EXPECT_TRUE(j.contains(key)) << key;
  for (const char* key : {"chambers", "distance", "pseudo_inclusions", "relaxed_hull", "bp_avoidance"})
    EXPECT_FALSE(j["conditions"][key].get<bool>()) << key;
  EXPECT_EQ(j["element"], "426153");
  EXPECT_EQ(j["family"], "B");
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["witnesses"][0]["u"], "132546");
  EXPECT_EQ(j["witnesses"][0]["lD"], 4);
  EXPECT_EQ(j["witnesses"][0]["lT"], 2);
  EXPECT_EQ(j["matched_pattern"], "426153 in B_3");
}
