#pragma once

// Basic elements v(p,q,r), the reduced coessential set E'(w), reduced-word
// counts and the Coxeter-theoretic coessential set.

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hultman/bruhat.hpp"
#include "hultman/coessential.hpp"
#include "hultman/element.hpp"
#include "hultman/group.hpp"
#include "hultman/rank.hpp"

namespace hultman {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline void append_run(std::vector<int>& out, int from, int to) {
  for (int v = from; v <= to; ++v) out.push_back(v);
}

inline std::string triple_text(int p, int q, int r) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

}  // namespace detail

/// The minimal element v with r_v(p,q) = r+1. Throws std::domain_error when
/// no element of the group reaches that rank, or r is below the identity rank.
inline Element basic_element(int p, int q, int r, Family family, int n) {
  const int N = ambient_degree(family, n);
  if (p < 1 || p > N || q < 1 || q > N) throw std::domain_error("box out of range " + detail::triple_text(p, q, r));
  if (r < identity_rank(p, q)) throw std::domain_error("rank below the identity rank " + detail::triple_text(p, q, r));

  std::vector<int> head;
  if (family == Family::A) {
    if (r >= std::min(q, N - p + 1)) throw std::domain_error("infeasible rank condition " + detail::triple_text(p, q, r));
    detail::append_run(head, 1, q - r - 1);
    detail::append_run(head, p, p + r);
    detail::append_run(head, q - r, p - 1);
    detail::append_run(head, p + r + 1, N);
    return Element::from_window(head, Family::A, n);
  }

  // Only the first half is tabulated; other boxes use the rotation
  // (p,q,r) -> (2n+2-p, 2n-q, p-q-1+r).
  if (q > n || (q == n && p <= n)) {
    if (q == N || p == 1) throw std::domain_error("infeasible rank condition " + detail::triple_text(p, q, r));
    return basic_element(2 * n + 2 - p, 2 * n - q, p - q - 1 + r, family, n);
  }
  if (p + r <= n) {
    detail::append_run(head, 1, q - r - 1);
    detail::append_run(head, p, p + r);
    detail::append_run(head, q - r, p - 1);
    detail::append_run(head, p + r + 1, n);
  } else if (p <= n) {
    detail::append_run(head, 1, q - r - 1);
    detail::append_run(head, p, n);
    detail::append_run(head, 2 * n + 2 - p, n + r + 1);
    detail::append_run(head, q - r, n - r - 1);
  } else if (p + q < 2 * n + 2) {
    detail::append_run(head, 1, q - r - 1);
    detail::append_run(head, p, p + r);
    detail::append_run(head, q - r, 2 * n - p - r);
    detail::append_run(head, 2 * n + 2 - p, n);
  } else {
    detail::append_run(head, 1, 2 * n - p - r);
    detail::append_run(head, 2 * n + 2 - p, q);
    detail::append_run(head, p, p + r);
    detail::append_run(head, q + 1, n);
  }
  if (static_cast<int>(head.size()) != n)
    throw std::domain_error("infeasible rank condition " + detail::triple_text(p, q, r));
  std::vector<int> window(head);
  window.resize(N);
  for (int i = 1; i <= n; ++i) window[N - i] = N + 1 - head[i - 1];
  Element v;
  try {
    v = Element::from_window(window, Family::B, n);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("infeasible rank condition " + detail::triple_text(p, q, r));
  }
  if (RankGrid(v)(p, q) != r + 1) throw std::domain_error("infeasible rank condition " + detail::triple_text(p, q, r));
  return v;
}

/// Number of reduced words, by R(v) = sum over right descents s of R(vs).
inline BigInt count_reduced_words(const Element& v) {
  std::unordered_map<std::uint64_t, BigInt> memo;
  auto rec = [&](auto& self, const Element& x) -> BigInt {
    if (x.is_identity()) return 1;
    if (auto it = memo.find(x.key()); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int s : right_descents(x)) total += self(self, multiply_generator(x, s));
    memo.emplace(x.key(), total);
    return total;
  };
  return rec(rec, v);
}

inline bool has_unique_reduced_word(const Element& v) { return count_reduced_words(v) == 1; }

/// 𝓔(w): the Bruhat-minimal elements of {v : v ≰ w}, in window order.
inline std::vector<Element> coxeter_coessential(const Element& w, std::span<const Element> group) {
  const RankGrid gw(w);
  std::vector<Element> above;
  std::vector<RankGrid> grids;
  for (const Element& v : group) {
    RankGrid g(v);
    if (!g.dominated_by(gw)) {
      above.push_back(v);
      grids.push_back(std::move(g));
    }
  }
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < above.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < above.size() && is_min; ++j)
      if (j != i && grids[j].dominated_by(grids[i])) is_min = false;
    if (is_min) minimal.push_back(above[i]);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

inline std::vector<Element> coxeter_coessential(const Element& w) {
  return coxeter_coessential(w, enumerate_group(w.family(), w.n()));
}

// ---------------------------------------------------------------------------
// E'(w) for type B.

/// Mirror of a box under the rotation about (n+1, n).
inline std::pair<int, int> mirror_box(int p, int q, int n) { return {2 * n + 2 - p, 2 * n - q}; }

/// E(w) split into mirror orbits (pairs, or the fixed box (n+1, n) alone).
inline std::vector<std::vector<CoessBox>> mirror_orbits(const std::vector<CoessBox>& boxes, int n) {
  std::vector<std::vector<CoessBox>> orbits;
  std::vector<bool> taken(boxes.size(), false);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (taken[i]) continue;
    taken[i] = true;
    std::vector<CoessBox> orbit{boxes[i]};
    const auto [mp, mq] = mirror_box(boxes[i].p, boxes[i].q, n);
    for (std::size_t j = i + 1; j < boxes.size(); ++j)
      if (!taken[j] && boxes[j].p == mp && boxes[j].q == mq) {
        taken[j] = true;
        orbit.push_back(boxes[j]);
      }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

/// The unique minimal mirror-closed subset of E(w) whose rank conditions still
/// cut out {v in B_n : v <= w}, found by removing orbits one at a time and
/// checking each removal against a scan of the whole group.
inline std::vector<CoessBox> reduced_coessential(const Element& w, std::span<const Element> group) {
  if (w.family() != Family::B) throw std::invalid_argument("reduced_coessential: element is not type B");
  const RankGrid gw(w);
  const auto boxes = coessential_set(w, gw);
  std::vector<RankGrid> grids;
  std::vector<bool> below;
  grids.reserve(group.size());
  for (const Element& v : group) {
    grids.emplace_back(v);
    below.push_back(grids.back().dominated_by(gw));
  }
  auto characterizes = [&](const std::vector<CoessBox>& subset) {
    for (std::size_t i = 0; i < grids.size(); ++i)
      if (rank_conditions_hold(grids[i], subset) != below[i]) return false;
    return true;
  };

  auto orbits = mirror_orbits(boxes, w.n());
  std::vector<bool> kept(orbits.size(), true);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    kept[k] = false;
    std::vector<CoessBox> trial;
    for (std::size_t j = 0; j < orbits.size(); ++j)
      if (kept[j]) trial.insert(trial.end(), orbits[j].begin(), orbits[j].end());
    if (!characterizes(trial)) kept[k] = true;
  }
  std::vector<CoessBox> result;
  for (std::size_t j = 0; j < orbits.size(); ++j)
    if (kept[j]) result.insert(result.end(), orbits[j].begin(), orbits[j].end());
  std::sort(result.begin(), result.end());
  return result;
}

inline std::vector<CoessBox> reduced_coessential(const Element& w) {
  return reduced_coessential(w, enumerate_group(Family::B, w.n()));
}

/// Offsets proposed for the redundancy rule r_w(2n+2-p, q) = r_w(p,q) + offset.
enum class RedundancyOffset { PMinusNMinus1, NMinusPPlus1, PMinusQMinus1 };

/// Range of the box (p,q). With q = n the mirror of (p,q) is the partner box
/// (2n+2-p, q) itself, so only q < n can drop a pair without losing its witness.
enum class RedundancyBounds { PQAtMostN, PQBelowN, PAtMostNQBelowN };

struct RedundancyRule {
  RedundancyOffset offset = RedundancyOffset::PMinusNMinus1;
  RedundancyBounds bounds = RedundancyBounds::PAtMostNQBelowN;
};

inline int redundancy_offset(RedundancyOffset o, int p, int q, int n) {
  switch (o) {
    case RedundancyOffset::PMinusNMinus1: return p - n - 1;
    case RedundancyOffset::NMinusPPlus1: return n - p + 1;
    case RedundancyOffset::PMinusQMinus1: return p - q - 1;
  }
  return 0;
}

/// E(w) minus the orbits of boxes (p,q) for which (2n+2-p, q) is also in E(w)
/// with the rank relation given by the rule.
inline std::vector<CoessBox> reduced_coessential_closed_form(const Element& w, RedundancyRule rule = {}) {
  if (w.family() != Family::B) throw std::invalid_argument("reduced_coessential: element is not type B");
  const int n = w.n();
  const RankGrid g(w);
  const auto boxes = coessential_set(w, g);
  auto in_e = [&](int p, int q) {
    return std::any_of(boxes.begin(), boxes.end(), [&](const CoessBox& b) { return b.p == p && b.q == q; });
  };
  std::vector<std::pair<int, int>> redundant;
  for (const CoessBox& b : boxes) {
    const bool in_bounds = rule.bounds == RedundancyBounds::PQAtMostN   ? b.p <= n && b.q <= n
                           : rule.bounds == RedundancyBounds::PQBelowN ? b.p < n && b.q < n
                                                                       : b.p <= n && b.q < n;
    if (!in_bounds) continue;
    const int partner = 2 * n + 2 - b.p;
    if (!in_e(partner, b.q)) continue;
    if (g(partner, b.q) != b.r + redundancy_offset(rule.offset, b.p, b.q, n)) continue;
    redundant.emplace_back(b.p, b.q);
    redundant.push_back(mirror_box(b.p, b.q, n));
  }
  std::vector<CoessBox> result;
  for (const CoessBox& b : boxes)
    if (std::find(redundant.begin(), redundant.end(), std::pair{b.p, b.q}) == redundant.end()) result.push_back(b);
  return result;
}

}  // namespace hultman
