#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hultman/element.hpp"

namespace hultman {

/// SW rank function r_w(p,q) = #{k <= q : w(k) >= p}.
///
/// Indices use the matrix convention (p = value row, q = position column).
/// Out-of-range queries with q = 0 or p = N+1 return 0.
class RankGrid {
 public:
  RankGrid() = default;

  explicit RankGrid(const Element& w) : degree_(w.degree()), cells_((degree_ + 2) * (degree_ + 1), 0) {
    const int N = degree_;
    for (int p = 1; p <= N; ++p)
      for (int q = 1; q <= N; ++q) cells_[index(p, q)] = static_cast<std::uint8_t>(at(p, q - 1) + (w(q) >= p));
  }

  int degree() const { return degree_; }

  int at(int p, int q) const { return cells_[index(p, q)]; }
  int operator()(int p, int q) const { return at(p, q); }

  /// Entrywise comparison over the full N x N table.
  bool dominated_by(const RankGrid& other) const {
    for (int p = 1; p <= degree_; ++p)
      for (int q = 1; q <= degree_; ++q)
        if (at(p, q) > other.at(p, q)) return false;
    return true;
  }

  friend bool operator==(const RankGrid&, const RankGrid&) = default;

 private:
  int index(int p, int q) const { return p * (degree_ + 1) + q; }

  int degree_ = 0;
  std::vector<std::uint8_t> cells_;
};

inline RankGrid rank_grid(const Element& w) { return RankGrid(w); }

/// The identity's rank, max(0, q-p+1): the smallest value any permutation attains.
inline constexpr int identity_rank(int p, int q) { return std::max(0, q - p + 1); }

}  // namespace hultman
