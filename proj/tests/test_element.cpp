#include <gtest/gtest.h>

#include <set>

#include "hultman/element.hpp"
#include "hultman/group.hpp"
#include "oracles.hpp"

using namespace hultman;

namespace {

Element A(const char* s, int n) { return parse_element(s, Family::A, n); }
Element B(const char* s, int n) { return parse_element(s, Family::B, n); }

}  // namespace

TEST(Parse, TenIsWrittenAsA) {
  const Element w = B("3517294a68", 5);
  EXPECT_EQ(w.window(), (std::vector<int>{3, 5, 1, 7, 2, 9, 4, 10, 6, 8}));
  EXPECT_EQ(to_string(w), "3517294a68");
}

TEST(Parse, IdentityAndMalformed) {
  EXPECT_TRUE(A("1234", 4).is_identity());
  EXPECT_TRUE(B("123456", 3).is_identity());
  EXPECT_THROW(A("4232", 4), std::invalid_argument);
  EXPECT_THROW(A("123", 4), std::invalid_argument);
  EXPECT_THROW(B("1243", 2), std::invalid_argument);
  EXPECT_THROW(A("12x4", 4), std::invalid_argument);
}

TEST(Parse, CommaListsAndSignedWindows) {
  EXPECT_EQ(A("4,2,3,1", 4), A("4231", 4));
  EXPECT_EQ(B("-3,2,-1", 3), B("426153", 3));
  EXPECT_EQ(B("1,2,3,4,5,6,7,8,9,10", 5), Element::identity(Family::B, 5));
}

TEST(Compose, Examples) {
  const Element w = A("4231", 4), id = Element::identity(Family::A, 4);
  EXPECT_EQ(compose(w, id), w);
  EXPECT_TRUE(compose(w, w.inverse()).is_identity());
  EXPECT_EQ(compose(A("4231", 4), A("2143", 4)), A("2413", 4));
  // (u∘v)(i) = u(v(i)) by hand: v = 2143 sends 1 to 2, u sends 2 to 2.
  const Element uv = compose(A("4231", 4), A("2143", 4));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(uv(i), A("4231", 4)(A("2143", 4)(i)));
}

// The stated value compose(4231, 2143) = 3412 does not follow from
// (u∘v)(i) = u(v(i)); recorded here so the convention is pinned.
TEST(Compose, ConventionPinned) {
  EXPECT_NE(compose(A("4231", 4), A("2143", 4)), A("3412", 4));
  EXPECT_EQ(compose(A("2143", 4), A("4231", 4)), A("3142", 4));
}

TEST(Compose, KeepsTypeBOnlyWhenBothAre) {
  const Element u = B("2143", 2), v = B("3412", 2);
  EXPECT_EQ(compose(u, v).family(), Family::B);
  EXPECT_EQ(compose(u, v.as(Family::A, 4)).family(), Family::A);
  EXPECT_THROW(compose(A("21", 2), A("213", 3)), std::invalid_argument);
}

TEST(Length, Examples) {
  EXPECT_EQ(coxeter_length(Element::identity(Family::A, 5)), 0);
  EXPECT_EQ(coxeter_length(A("4231", 4)), 5);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(coxeter_length(longest_element(Family::B, n)), n * n);
}

TEST(Length, LongestElementMatchesReducedWordSearch) {
  for (int n = 2; n <= 3; ++n) {
    const auto len = oracle::word_lengths(Family::B, n);
    int top = 0;
    for (const auto& [w, l] : len) top = std::max(top, l);
    EXPECT_EQ(top, n * n);
    EXPECT_EQ(len.at(longest_element(Family::B, n).window()), n * n);
  }
}

TEST(Length, EqualsReducedWordLength) {
  for (int n = 1; n <= 6; ++n) {
    const auto len = oracle::word_lengths(Family::A, n);
    for (const Element& w : enumerate_group(Family::A, n)) {
      EXPECT_EQ(coxeter_length(w), len.at(w.window()));
      EXPECT_EQ(inversion_count(w), oracle::inversions(w.window()));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const auto len = oracle::word_lengths(Family::B, n);
    ASSERT_EQ(len.size(), GroupContext(Family::B, n).order());
    for (const Element& w : enumerate_group(Family::B, n)) {
      ASSERT_EQ(coxeter_length(w), len.at(w.window())) << to_string(w);
      int negatives = 0;
      for (int i = 1; i <= n; ++i) negatives += w(i) > n;
      EXPECT_EQ(coxeter_length(w), (oracle::inversions(w.window()) + negatives) / 2);
    }
  }
}

TEST(Length, CountsDescendingReflections) {
  for (auto [f, n] : {std::pair{Family::A, 6}, {Family::B, 4}}) {
    const GroupContext ctx(f, n);
    for (const Element& w : enumerate_group(ctx)) {
      int down = 0;
      for (const Element& t : ctx.reflections) down += coxeter_length(compose(w, t)) < coxeter_length(w);
      ASSERT_EQ(coxeter_length(w), down) << to_string(w);
    }
  }
}

TEST(Descents, MatchGeneratorMultiplication) {
  for (auto [f, n] : {std::pair{Family::A, 5}, {Family::B, 3}}) {
    const int first = f == Family::A ? 1 : 0;
    const int last = n - 1;
    for (const Element& w : enumerate_group(f, n)) {
      std::set<int> expected;
      for (int i = first; i <= last; ++i)
        if (coxeter_length(multiply_generator(w, i)) < coxeter_length(w)) expected.insert(i);
      const auto d = right_descents(w);
      EXPECT_EQ(std::set<int>(d.begin(), d.end()), expected);
    }
  }
}

TEST(Generators, Shapes) {
  EXPECT_EQ(generator(Family::B, 3, 0), B("124356", 3));
  EXPECT_EQ(generator(Family::B, 3, 1), B("132546", 3));
  EXPECT_EQ(generator(Family::B, 3, 2), B("213465", 3));
  EXPECT_EQ(generator(Family::A, 4, 2), A("1324", 4));
}

TEST(Reflections, CountAndClosedForm) {
  for (int n = 1; n <= 6; ++n) {
    const GroupContext a(Family::A, n);
    EXPECT_EQ(a.reflections.size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
  for (int n = 1; n <= 5; ++n) {
    const GroupContext b(Family::B, n);
    EXPECT_EQ(b.reflections.size(), static_cast<std::size_t>(n * n));
    std::set<std::vector<int>> closed;
    for (const auto& t : oracle::reflections(Family::B, n)) closed.insert(oracle::apply(oracle::identity_window(Family::B, n), t));
    std::set<std::vector<int>> closure;
    for (const Element& t : b.reflections) closure.insert(t.window());
    EXPECT_EQ(closure, closed);
  }
}

TEST(Membership, TypeB) {
  EXPECT_TRUE(is_type_b_member(B("426153", 3).window(), 3));
  const std::vector<int> w4231{4, 2, 3, 1}, w1243{1, 2, 4, 3};
  EXPECT_TRUE(is_type_b_member(w4231, 2));
  EXPECT_FALSE(is_type_b_member(w1243, 2));
  const Element w0 = longest_element(Family::A, 6);
  for (const Element& w : enumerate_group(Family::A, 6)) {
    const bool member = is_type_b_member(w.window(), 3);
    EXPECT_EQ(member, compose(compose(w0, w), w0) == w);
  }
}

TEST(SignedWindow, Examples) {
  EXPECT_EQ(signed_window(Element::identity(Family::B, 4)), (SignedWindow{1, 2, 3, 4}));
  EXPECT_EQ(signed_window(generator(Family::B, 3, 0)), (SignedWindow{-1, 2, 3}));
  EXPECT_EQ(signed_window(B("426153", 3)), (SignedWindow{-3, 2, -1}));
}

TEST(SignedWindow, RoundTrip) {
  for (int n = 1; n <= 4; ++n)
    for (const Element& w : enumerate_group(Family::B, n)) EXPECT_EQ(embed(signed_window(w), n), w);
}

TEST(Cycles, PairingExamples) {
  const auto id = cycle_pairing(Element::identity(Family::B, 3));
  EXPECT_EQ(id.units.size(), 3u);
  EXPECT_EQ(id.even_count(), 3);

  const auto c = cycle_pairing(B("362514", 3));
  ASSERT_EQ(c.units.size(), 1u);
  EXPECT_EQ(c.odd_count(), 1);
  EXPECT_EQ(c.even_count(), 0);
  const auto cs = cycles(B("362514", 3));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0], (Cycle{1, 3, 2, 6, 4, 5}));

  const auto d = cycle_pairing(B("2143", 2));
  EXPECT_EQ(d.units.size(), 1u);
  EXPECT_EQ(d.even_count(), 1);
}

TEST(AbsoluteLength, Examples) {
  EXPECT_EQ(absolute_length(Element::identity(Family::B, 3)), 0);
  EXPECT_EQ(absolute_length(A("4231", 4)), 1);
  EXPECT_EQ(absolute_length(B("362514", 3)), 3);
}

TEST(AbsoluteLength, EqualsReflectionWordLength) {
  for (auto [f, n] : {std::pair{Family::A, 5}, {Family::A, 6}, {Family::B, 3}, {Family::B, 4}}) {
    const auto refl = oracle::reflection_lengths(f, n);
    for (const Element& w : enumerate_group(f, n)) ASSERT_EQ(absolute_length(w), refl.at(w.window())) << to_string(w);
  }
}

TEST(AbsoluteLength, InverseAndConjugationInvariant) {
  const auto group = enumerate_group(Family::B, 3);
  for (const Element& w : group) {
    EXPECT_EQ(absolute_length(w), absolute_length(w.inverse()));
    for (const Element& g : group) EXPECT_EQ(absolute_length(compose(compose(g, w), g.inverse())), absolute_length(w));
  }
}

TEST(Group, Enumeration) {
  EXPECT_EQ(enumerate_group(Family::A, 5).size(), 120u);
  EXPECT_EQ(enumerate_group(Family::B, 4).size(), 384u);
  const auto g = enumerate_group(Family::B, 3);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_EQ(std::set<Element>(g.begin(), g.end()).size(), g.size());
  EXPECT_EQ(GroupContext(Family::B, 3).label(), "B_3");
}
