#include <gtest/gtest.h>

#include "hultman/bruhat.hpp"
#include "hultman/hull.hpp"
#include "hultman/patterns.hpp"
#include "oracles.hpp"

using namespace hultman;

namespace {

Element A(const char* s, int n) { return parse_element(s, Family::A, n); }
Element B(const char* s, int n) { return parse_element(s, Family::B, n); }

/// All embeddings of a given kind and pattern rank into a host.
std::vector<ParabolicEmbedding> embeddings(EmbeddingKind kind, int m, Family host_family, int host_n) {
  std::vector<ParabolicEmbedding> out;
  const int N = ambient_degree(host_family, host_n);
  if (kind == EmbeddingKind::BinB) {
    detail::for_each_subset(host_n, m, [&](const std::vector<int>& chosen) {
      std::vector<int> idx;
      for (int k : chosen) {
        idx.push_back(host_n + 1 - k);
        idx.push_back(host_n + k);
      }
      std::sort(idx.begin(), idx.end());
      out.push_back({kind, idx});
      return false;
    });
    return out;
  }
  detail::for_each_subset(N, m, [&](const std::vector<int>& idx) {
    try {
      validate_embedding({kind, idx}, host_family, host_n);
      out.push_back({kind, idx});
    } catch (const std::invalid_argument&) {
    }
    return false;
  });
  return out;
}

Family pattern_family(EmbeddingKind k) { return k == EmbeddingKind::BinB ? Family::B : Family::A; }

}  // namespace

TEST(Classical, Examples) {
  const auto r = classical_contains(A("48631725", 8), A("35142", 5));
  ASSERT_TRUE(r.contains);
  EXPECT_EQ(r.embedding->indices, (std::vector<int>{1, 2, 5, 6, 7}));
  EXPECT_FALSE(classical_contains(A("68435271", 8), A("35142", 5)).contains);
}

TEST(Flatten, Examples) {
  const auto id = Element::identity(Family::B, 4);
  EXPECT_TRUE(flatten(id, {EmbeddingKind::AinB, {1, 2, 5}}).is_identity());
  EXPECT_EQ(flatten(B("426153", 3), {EmbeddingKind::AinB, {2, 3, 6}}), A("132", 3));
}

// The relative order of 52863174 on positions (1,2,3,6,7,8) is 426153; the
// window 426351 written for it is not in B_3 (4 + 1 != 7).
TEST(Flatten, TypeBInTypeB) {
  const Element f = flatten(B("52863174", 4), {EmbeddingKind::BinB, {1, 2, 3, 6, 7, 8}});
  EXPECT_EQ(f, B("426153", 3));
  const std::vector<int> stated{4, 2, 6, 3, 5, 1};
  EXPECT_FALSE(is_type_b_member(stated, 3));
}

TEST(Flatten, RejectsBadEmbeddings) {
  const Element w = B("52863174", 4);
  EXPECT_THROW(flatten(w, {EmbeddingKind::AinB, {1, 8}}), std::invalid_argument);
  EXPECT_THROW(flatten(w, {EmbeddingKind::BinB, {1, 2, 6, 8}}), std::invalid_argument);
  EXPECT_THROW(flatten(w, {EmbeddingKind::AinA, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(flatten(w, {EmbeddingKind::AinB, {2, 1}}), std::invalid_argument);
}

TEST(BpContains, Examples) {
  const auto r = bp_contains(B("52863174", 4), make_pattern("4231", Family::A, 4));
  ASSERT_TRUE(r.contains);
  EXPECT_EQ(r.embedding->kind, EmbeddingKind::AinB);
  EXPECT_EQ(r.embedding->indices, (std::vector<int>{1, 2, 5, 6}));
  EXPECT_TRUE(bp_contains(B("52863174", 4), make_pattern("426153", Family::B, 3)).contains);
  EXPECT_FALSE(bp_contains(A("4231", 4), make_pattern("426153", Family::B, 3)).contains);
}

// Reversing the Dynkin diagram maps 35142 to 42513, so each BP contains the other.
TEST(BpContains, DiagramReversal) {
  EXPECT_EQ(reversal_conjugate(A("35142", 5)), A("42513", 5));
  EXPECT_TRUE(bp_contains(A("35142", 5), make_pattern("42513", Family::A, 5)).contains);
  EXPECT_TRUE(bp_contains(A("42513", 5), make_pattern("35142", Family::A, 5)).contains);
  EXPECT_FALSE(classical_contains(A("35142", 5), A("42513", 5)).contains);
}

TEST(BpContains, RankOneTypeAPatternAlwaysMatches) {
  for (const Element& w : enumerate_group(Family::B, 2)) EXPECT_TRUE(bp_contains(w, make_pattern("1", Family::A, 1)).contains);
}

// fl(w v) = fl(w) v and, if fl(w) <= fl(wv), then w <= wv.
TEST(Flatten, EquivariantAndLiftsOrder) {
  struct Case {
    EmbeddingKind kind;
    int m;
    Family host;
    int n;
  };
  for (const Case& c : {Case{EmbeddingKind::AinA, 3, Family::A, 5}, Case{EmbeddingKind::AinB, 2, Family::B, 3},
                        Case{EmbeddingKind::AinB, 3, Family::B, 3}, Case{EmbeddingKind::BinB, 2, Family::B, 3}}) {
    const auto pattern_group = enumerate_group(pattern_family(c.kind), c.m);
    for (const auto& e : embeddings(c.kind, c.m, c.host, c.n))
      for (const Element& w : enumerate_group(c.host, c.n))
        for (const Element& x : pattern_group) {
          const Element wv = compose(w, embed_pattern_element(x, e, c.host, c.n));
          const Element fw = flatten(w, e);
          ASSERT_EQ(flatten(wv, e), compose(fw, x));
          if (bruhat_leq(fw, compose(fw, x))) ASSERT_TRUE(bruhat_leq(w, wv));
        }
  }
}

// Inv(fl(w)) = Inv(w) ∩ P, with reflections of P identified through φ.
TEST(Flatten, InversionSets) {
  for (auto [kind, m, host, n] : {std::tuple{EmbeddingKind::AinB, 3, Family::B, 3}, {EmbeddingKind::BinB, 2, Family::B, 3}}) {
    const auto len = oracle::word_lengths(host, n);
    const GroupContext pctx(pattern_family(kind), m);
    for (const auto& e : embeddings(kind, m, host, n))
      for (const Element& w : enumerate_group(host, n)) {
        const Element f = flatten(w, e);
        for (const Element& t : pctx.reflections) {
          const Element phi_t = embed_pattern_element(t, e, host, n);
          const bool in_w = len.at(compose(w, phi_t).window()) < len.at(w.window());
          const bool in_f = coxeter_length(compose(f, t)) < coxeter_length(f);
          ASSERT_EQ(in_w, in_f);
        }
      }
  }
}

TEST(Flatten, UnflatteningOrderTypeA) {
  const auto s3 = enumerate_group(Family::A, 3);
  for (const auto& e : embeddings(EmbeddingKind::AinA, 3, Family::A, 5))
    for (const Element& w : enumerate_group(Family::A, 5))
      for (const Element& v : s3) {
        const Element wv = compose(w, embed_pattern_element(v, e, Family::A, 5));
        if (bruhat_leq(w, wv)) ASSERT_TRUE(bruhat_leq(flatten(w, e), compose(flatten(w, e), v)));
      }
}

TEST(Flatten, UnflatteningOrderFailsInTypeB) {
  const ParabolicEmbedding e{EmbeddingKind::AinB, {2, 3, 6}};
  const Element w = B("426153", 3), u = B("132546", 3);
  EXPECT_EQ(embed_pattern_element(A("132", 3), e, Family::B, 3), w);
  EXPECT_EQ(embed_pattern_element(A("213", 3), e, Family::B, 3), u);
  EXPECT_TRUE(bruhat_leq(u, w));
  EXPECT_FALSE(bruhat_leq(A("213", 3), A("132", 3)));
}

TEST(BpContains, Transitive) {
  // Host B_4, intermediate B_3, pattern S_3: flatten twice.
  const auto b4 = enumerate_group(Family::B, 4);
  for (const Element& w : b4)
    for (const auto& e1 : embeddings(EmbeddingKind::BinB, 3, Family::B, 4))
      for (const auto& e2 : embeddings(EmbeddingKind::AinB, 3, Family::B, 3)) {
        const Element mid = flatten(w, e1);
        const PatternSpec v{flatten(mid, e2)};
        ASSERT_TRUE(bp_contains(mid, v).contains);
        ASSERT_TRUE(bp_contains(w, v).contains);
      }
}

TEST(PatternList, Shape) {
  const auto& list = hultman_patterns();
  ASSERT_EQ(list.size(), 31u);
  int a = 0, b3 = 0, b4 = 0, b5 = 0;
  for (const auto& p : list) {
    if (p.family() == Family::A) ++a;
    else if (p.n() == 3) ++b3;
    else if (p.n() == 4) ++b4;
    else if (p.n() == 5) ++b5;
  }
  EXPECT_EQ(a, 4);
  EXPECT_EQ(b3, 10);
  EXPECT_EQ(b4, 14);
  EXPECT_EQ(b5, 3);
}

TEST(PatternList, Avoidance) {
  EXPECT_TRUE(avoids_listed_patterns(Element::identity(Family::B, 4)));
  EXPECT_FALSE(avoids_listed_patterns(B("426153", 3)));
  EXPECT_TRUE(avoids_listed_patterns(B("362514", 3)));
  const auto m = first_listed_pattern(B("426153", 3));
  ASSERT_TRUE(m);
  EXPECT_EQ(to_string(m->pattern.element), "426153");
}

// Containing a listed pattern forces non-Hultman, and conversely, on B_3 and B_4.
TEST(PatternList, ContainmentMatchesDistanceCondition) {
  for (int n = 3; n <= 4; ++n) {
    const BruhatGraph g(GroupContext(Family::B, n));
    for (const Element& w : g.elements()) ASSERT_EQ(avoids_listed_patterns(w), is_hultman(w, g).hultman) << to_string(w);
  }
}
