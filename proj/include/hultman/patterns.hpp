#pragma once

// Classical and Billey-Postnikov pattern containment.
//
// A parabolic embedding is described by the host positions it occupies; the
// flattening of w is the standardization of w at those positions. For the
// type-B parabolics this agrees with the inversion-set definition once the
// Coxeter isomorphism is fixed as below.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hultman/element.hpp"

namespace hultman {

enum class EmbeddingKind { AinA, AinB, BinB };

inline std::string_view embedding_kind_name(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::AinA: return "A-in-A";
    case EmbeddingKind::AinB: return "A-in-B";
    case EmbeddingKind::BinB: return "B-in-B";
  }
  return "?";
}

/// A pattern together with the group it lives in: 4231 in S_4 and 4231 in
/// B_2 are different patterns.
struct PatternSpec {
  Element element;

  Family family() const { return element.family(); }
  int n() const { return element.n(); }
  std::string label() const { return to_string(element) + (family() == Family::A ? " in S_" : " in B_") + std::to_string(n()); }

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

inline PatternSpec make_pattern(std::string_view text, Family family, int n) {
  return PatternSpec{parse_element(text, family, n)};
}

struct ParabolicEmbedding {
  EmbeddingKind kind = EmbeddingKind::AinA;
  std::vector<int> indices;  // strictly increasing host positions; B-in-B lists all 2m

  /// Pattern-group rank m.
  int pattern_n() const { return kind == EmbeddingKind::BinB ? static_cast<int>(indices.size()) / 2 : static_cast<int>(indices.size()); }

  friend bool operator==(const ParabolicEmbedding&, const ParabolicEmbedding&) = default;
};

inline std::string to_string(const ParabolicEmbedding& e) {
  std::string s = std::string(embedding_kind_name(e.kind)) + " (";
  for (std::size_t i = 0; i < e.indices.size(); ++i) s += (i ? "," : "") + std::to_string(e.indices[i]);
  return s + ")";
}

/// Throws std::invalid_argument unless the embedding fits a host of the given shape.
inline void validate_embedding(const ParabolicEmbedding& e, Family host_family, int host_n) {
  const int N = ambient_degree(host_family, host_n);
  const auto& ix = e.indices;
  if (ix.empty()) throw std::invalid_argument("empty embedding");
  for (std::size_t k = 0; k < ix.size(); ++k) {
    if (ix[k] < 1 || ix[k] > N) throw std::invalid_argument("embedding index out of range");
    if (k && ix[k] <= ix[k - 1]) throw std::invalid_argument("embedding indices must increase");
  }
  switch (e.kind) {
    case EmbeddingKind::AinA:
      if (host_family != Family::A) throw std::invalid_argument("A-in-A needs a type A host");
      break;
    case EmbeddingKind::AinB:
      if (host_family != Family::B) throw std::invalid_argument("A-in-B needs a type B host");
      for (int a : ix)
        for (int b : ix)
          if (a + b == N + 1) throw std::invalid_argument("A-in-B indices may not contain a mirror pair");
      break;
    case EmbeddingKind::BinB: {
      if (host_family != Family::B) throw std::invalid_argument("B-in-B needs a type B host");
      const std::size_t len = ix.size();
      if (len % 2) throw std::invalid_argument("B-in-B index list must have even length");
      for (std::size_t j = 0; j < len; ++j)
        if (ix[j] + ix[len - 1 - j] != N + 1) throw std::invalid_argument("B-in-B indices must be mirror closed");
      break;
    }
  }
}

namespace detail {

inline std::vector<int> standardize(const Element& w, const std::vector<int>& positions) {
  std::vector<int> values;
  values.reserve(positions.size());
  for (int i : positions) values.push_back(w(i));
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : values) v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  return values;
}

/// Calls f(subset) for each m-subset of {1..N} in lexicographic order; stops
/// when f returns true.
template <class F>
bool for_each_subset(int N, int m, F&& f) {
  if (m > N || m < 0) return false;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (f(idx)) return true;
    int k = m - 1;
    while (k >= 0 && idx[k] == N - m + k + 1) --k;
    if (k < 0) return false;
    ++idx[k];
    for (int j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Relative-order flattening into the pattern group (S_m or B_m).
inline Element flatten(const Element& w, const ParabolicEmbedding& e) {
  validate_embedding(e, w.family(), w.n());
  const auto window = detail::standardize(w, e.indices);
  if (e.kind == EmbeddingKind::BinB) return Element::from_window(window, Family::B, e.pattern_n());
  return Element::from_window(window, Family::A, e.pattern_n());
}

/// The image φ(x) of a pattern-group element in the host group.
inline Element embed_pattern_element(const Element& x, const ParabolicEmbedding& e, Family host_family, int host_n) {
  validate_embedding(e, host_family, host_n);
  const int N = ambient_degree(host_family, host_n);
  if (x.degree() != static_cast<int>(e.indices.size())) throw std::invalid_argument("pattern element does not fit embedding");
  std::vector<int> window(N);
  std::iota(window.begin(), window.end(), 1);
  for (int j = 1; j <= x.degree(); ++j) {
    window[e.indices[j - 1] - 1] = e.indices[x(j) - 1];
    if (e.kind == EmbeddingKind::AinB) window[N - e.indices[j - 1]] = N + 1 - e.indices[x(j) - 1];
  }
  return Element::from_window(window, host_family, host_n);
}

/// w0 v w0 in S_m (Dynkin diagram reversal).
inline Element reversal_conjugate(const Element& v) {
  const Element w0 = longest_element(Family::A, v.degree());
  return compose(compose(w0, v.as(Family::A, v.degree())), w0);
}

struct ContainmentResult {
  bool contains = false;
  std::optional<ParabolicEmbedding> embedding;
};

/// Classical containment; the witness is the lexicographically least index set.
inline ContainmentResult classical_contains(const Element& w, const Element& v) {
  ContainmentResult result;
  const int m = v.degree();
  const std::vector<int> target = v.window();
  detail::for_each_subset(w.degree(), m, [&](const std::vector<int>& idx) {
    if (detail::standardize(w, idx) != target) return false;
    result.contains = true;
    result.embedding = ParabolicEmbedding{EmbeddingKind::AinA, idx};
    return true;
  });
  return result;
}

/// Billey-Postnikov containment of the pattern in w.
inline ContainmentResult bp_contains(const Element& w, const PatternSpec& pattern) {
  ContainmentResult result;
  const Element& v = pattern.element;
  const int m = v.degree();

  if (pattern.family() == Family::A) {
    const std::vector<int> direct = v.window();
    const std::vector<int> reversed = reversal_conjugate(v).window();
    const int N = w.degree();
    const EmbeddingKind kind = w.family() == Family::A ? EmbeddingKind::AinA : EmbeddingKind::AinB;
    detail::for_each_subset(N, m, [&](const std::vector<int>& idx) {
      if (kind == EmbeddingKind::AinB)
        for (int a : idx)
          if (std::binary_search(idx.begin(), idx.end(), N + 1 - a)) return false;
      const auto flat = detail::standardize(w, idx);
      if (flat != direct && flat != reversed) return false;
      result.contains = true;
      result.embedding = ParabolicEmbedding{kind, idx};
      return true;
    });
    return result;
  }

  // Type B patterns only embed in type B hosts, through the canonical
  // isomorphism (no diagram automorphism).
  if (w.family() != Family::B) return result;
  const int n = w.n();
  const int pm = pattern.n();
  const std::vector<int> target = v.window();
  detail::for_each_subset(n, pm, [&](const std::vector<int>& chosen) {
    // chosen are coordinates 1..n; coordinate k sits at positions n+1-k and n+k.
    std::vector<int> idx;
    for (int k : chosen) {
      idx.push_back(n + 1 - k);
      idx.push_back(n + k);
    }
    std::sort(idx.begin(), idx.end());
    if (detail::standardize(w, idx) != target) return false;
    result.contains = true;
    result.embedding = ParabolicEmbedding{EmbeddingKind::BinB, idx};
    return true;
  });
  return result;
}

// ---------------------------------------------------------------------------
// The BP-avoidance list for type B (and its type A part).

inline const std::vector<PatternSpec>& hultman_patterns() {
  static const std::vector<PatternSpec> list = [] {
    std::vector<PatternSpec> l;
    l.push_back(make_pattern("4231", Family::A, 4));
    l.push_back(make_pattern("35142", Family::A, 5));
    l.push_back(make_pattern("42513", Family::A, 5));
    l.push_back(make_pattern("351624", Family::A, 6));
    for (const char* s : {"563412", "653421", "645231", "635241", "624351", "642531", "536142", "426153", "462513",
                          "623451"})
      l.push_back(make_pattern(s, Family::B, 3));
    for (const char* s : {"47618325", "46718235", "57163824", "37581426", "47163825", "46172835", "37518426",
                          "35718246", "37145826", "37154826", "52618374", "42681375", "42618375", "35172846"})
      l.push_back(make_pattern(s, Family::B, 4));
    for (const char* s : {"3517294a68", "3517924a68", "3617294a58"}) l.push_back(make_pattern(s, Family::B, 5));
    return l;
  }();
  return list;
}

struct PatternMatch {
  PatternSpec pattern;
  ParabolicEmbedding embedding;
};

/// First listed pattern that w BP contains, or nothing when w avoids the list.
/// Type A hosts are tested against the four type A patterns only.
inline std::optional<PatternMatch> first_listed_pattern(const Element& w) {
  for (const PatternSpec& p : hultman_patterns()) {
    if (w.family() == Family::A && p.family() == Family::B) continue;
    auto r = bp_contains(w, p);
    if (r.contains) return PatternMatch{p, *r.embedding};
  }
  return std::nullopt;
}

inline bool avoids_listed_patterns(const Element& w) { return !first_listed_pattern(w).has_value(); }

}  // namespace hultman
