#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "hultman/element.hpp"
#include "hultman/rank.hpp"

namespace hultman {

/// One coessential box (p, q) with its rank value r = r_w(p,q).
struct CoessBox {
  int p = 0;
  int q = 0;
  int r = 0;

  friend bool operator==(const CoessBox&, const CoessBox&) = default;
  friend auto operator<=>(const CoessBox&, const CoessBox&) = default;
};

/// D(w) = {(p,q) : p > w(q), w^{-1}(p) > q}, ordered by (p, q).
inline std::vector<std::pair<int, int>> diagram(const Element& w) {
  const Element inv = w.inverse();
  std::vector<std::pair<int, int>> boxes;
  for (int p = 1; p <= w.degree(); ++p)
    for (int q = 1; q <= w.degree(); ++q)
      if (p > w(q) && inv(p) > q) boxes.emplace_back(p, q);
  return boxes;
}

/// E(w) via w^{-1}(p-1) <= q < w^{-1}(p) and w(q) < p <= w(q+1), ordered by (p, q).
inline std::vector<CoessBox> coessential_set(const Element& w, const RankGrid& grid) {
  const Element inv = w.inverse();
  std::vector<CoessBox> out;
  for (int p = 2; p <= w.degree(); ++p)
    for (int q = inv(p - 1); q < inv(p); ++q)
      if (w(q) < p && p <= w(q + 1)) out.push_back({p, q, grid(p, q)});
  return out;
}

inline std::vector<CoessBox> coessential_set(const Element& w) { return coessential_set(w, RankGrid(w)); }

/// u <= w using only the boxes of E(w).
inline bool rank_conditions_hold(const RankGrid& u, const std::vector<CoessBox>& boxes) {
  return std::all_of(boxes.begin(), boxes.end(), [&](const CoessBox& b) { return u(b.p, b.q) <= b.r; });
}

}  // namespace hultman
