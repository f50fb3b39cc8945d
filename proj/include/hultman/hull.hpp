#pragma once

// Right hulls, inclusion conditions and the hull-constrained enumeration.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hultman/coessential.hpp"
#include "hultman/element.hpp"
#include "hultman/rank.hpp"

namespace hultman {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultHullBudget = 100'000'000;

/// Boxes of E(w) that miss the identity rank. For type B the box (n+1, n)
/// with r = 1 is allowed (pseudo-inclusions).
inline std::vector<CoessBox> inclusion_violations(const Element& w, const std::vector<CoessBox>& boxes) {
  std::vector<CoessBox> bad;
  for (const CoessBox& b : boxes) {
    if (b.r == identity_rank(b.p, b.q)) continue;
    if (w.family() == Family::B && b.p == w.n() + 1 && b.q == w.n() && b.r == 1) continue;
    bad.push_back(b);
  }
  return bad;
}

inline std::vector<CoessBox> inclusion_violations(const Element& w) {
  return inclusion_violations(w, coessential_set(w));
}

/// Every coessential box attains the identity rank bound (S_N sense, ignores family).
inline bool is_defined_by_inclusions(const Element& w) {
  for (const CoessBox& b : coessential_set(w))
    if (b.r != identity_rank(b.p, b.q)) return false;
  return true;
}

inline bool is_defined_by_pseudo_inclusions(const Element& w) {
  if (w.family() != Family::B) throw std::invalid_argument("pseudo-inclusions are defined for type B elements only");
  return inclusion_violations(w).empty();
}

/// Column bounds of H(w): (i, j) is in the hull iff lo[j] <= i <= hi[j].
struct HullBounds {
  std::vector<int> lo, hi;  // 1-indexed, entry 0 unused

  bool contains(const Element& u) const {
    for (int j = 1; j < static_cast<int>(lo.size()); ++j)
      if (u(j) < lo[j] || u(j) > hi[j]) return false;
    return true;
  }
};

inline HullBounds hull_bounds(const Element& w) {
  const int N = w.degree();
  HullBounds h{std::vector<int>(N + 1), std::vector<int>(N + 1)};
  int run = 0;
  for (int j = 1; j <= N; ++j) h.hi[j] = run = std::max(run, w(j));
  run = N + 1;
  for (int j = N; j >= 1; --j) h.lo[j] = run = std::min(run, w(j));
  return h;
}

inline bool in_hull(const Element& u, const Element& w) {
  if (u.degree() != w.degree()) throw std::invalid_argument("in_hull: degree mismatch");
  return hull_bounds(w).contains(u);
}

struct HullSearchResult {
  bool holds = true;
  std::optional<Element> counterexample;  // as an element of S_N
  std::uint64_t nodes = 0;
};

namespace detail {

// Depth-first placement of u(1), u(2), ... inside the column bounds with a
// used-value mask. The running column counts give r_u(., q) exactly, so the
// tableau comparison against r_w is done incrementally. A prefix that already
// exceeds r_w only needs one completion to be a counterexample.
class HullSearch {
 public:
  HullSearch(const Element& w, std::optional<int> pivot, std::uint64_t budget)
      : N_(w.degree()), bounds_(hull_bounds(w)), grid_(w), pivot_(pivot), budget_(budget), u_(N_ + 1), count_(N_ + 2) {}

  HullSearchResult run() {
    HullSearchResult result;
    if (descend(1, false)) {
      result.holds = false;
      result.counterexample = Element::from_window(std::vector<int>(u_.begin() + 1, u_.end()), Family::A, N_);
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool descend(int q, bool violated) {
    if (q > N_) return violated;
    for (int v = bounds_.lo[q]; v <= bounds_.hi[q]; ++v) {
      if (used_ >> v & 1u) continue;
      if (++nodes_ > budget_)
        throw BudgetExceeded("hull enumeration exceeded " + std::to_string(budget_) + " nodes");
      for (int p = 1; p <= v; ++p) ++count_[p];
      // Relaxed search: the pivot column caps r_u(n+1, n) at 1.
      const bool allowed = !pivot_ || q != *pivot_ || count_[*pivot_ + 1] <= 1;
      if (allowed) {
        bool now = violated;
        for (int p = 1; !now && p <= N_; ++p) now = count_[p] > grid_(p, q);
        used_ |= 1u << v;
        u_[q] = v;
        const bool found = descend(q + 1, now);
        used_ &= ~(1u << v);
        if (found) {
          for (int p = 1; p <= v; ++p) --count_[p];
          return true;
        }
      }
      for (int p = 1; p <= v; ++p) --count_[p];
    }
    return false;
  }

  int N_;
  HullBounds bounds_;
  RankGrid grid_;
  std::optional<int> pivot_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint32_t used_ = 0;
  std::vector<int> u_;
  std::vector<int> count_;
};

}  // namespace detail

/// Right hull condition: every u in S_N with u ⊆ H(w) satisfies u <= w.
inline HullSearchResult satisfies_right_hull(const Element& w, std::uint64_t budget = kDefaultHullBudget) {
  return detail::HullSearch(w, std::nullopt, budget).run();
}

/// Relaxed right hull condition for w in B_n; u ranges over all of S_{2n}.
inline HullSearchResult satisfies_relaxed_right_hull(const Element& w, std::uint64_t budget = kDefaultHullBudget) {
  if (w.family() != Family::B) throw std::invalid_argument("relaxed right hull is defined for type B elements only");
  const int n = w.n();
  if (RankGrid(w)(n + 1, n) == 1) return detail::HullSearch(w, n, budget).run();
  return detail::HullSearch(w, std::nullopt, budget).run();
}

/// Checks u ⊆ H(w) <=> r_u(p,q) <= r_w(p,q) on the boxes of E(w) that attain
/// the identity bound. Exhaustive over S_N when N <= exhaustive_limit,
/// otherwise over `samples` random u.
inline bool hull_equiv_check(const Element& w, int exhaustive_limit = 7, int samples = 20000,
                             std::uint64_t seed = 0x5eed) {
  const int N = w.degree();
  std::vector<CoessBox> tight;
  for (const CoessBox& b : coessential_set(w))
    if (b.r == identity_rank(b.p, b.q)) tight.push_back(b);
  const HullBounds bounds = hull_bounds(w);
  auto agrees = [&](const std::vector<int>& window) {
    const Element u = Element::from_window(window, Family::A, N);
    return bounds.contains(u) == rank_conditions_hold(RankGrid(u), tight);
  };
  std::vector<int> window(N);
  std::iota(window.begin(), window.end(), 1);
  if (N <= exhaustive_limit) {
    do {
      if (!agrees(window)) return false;
    } while (std::next_permutation(window.begin(), window.end()));
    return true;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::shuffle(window.begin(), window.end(), rng);
    if (!agrees(window)) return false;
  }
  return true;
}

}  // namespace hultman
