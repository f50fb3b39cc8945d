#pragma once

// Bruhat order, interval sizes, the Bruhat graph and its two distances.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hultman/coessential.hpp"
#include "hultman/element.hpp"
#include "hultman/group.hpp"
#include "hultman/rank.hpp"

namespace hultman {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Tableau criterion: u <= w iff r_u <= r_w entrywise. Type B order is the
/// order induced from S_{2n}, so the same test applies to embedded windows.
inline bool bruhat_leq(const Element& u, const Element& w) {
  if (u.degree() != w.degree()) throw std::invalid_argument("bruhat_leq: degree mismatch");
  return RankGrid(u).dominated_by(RankGrid(w));
}

/// Same relation, checked only on the coessential boxes of w.
inline bool bruhat_leq_essential(const Element& u, const Element& w) {
  if (u.degree() != w.degree()) throw std::invalid_argument("bruhat_leq: degree mismatch");
  return rank_conditions_hold(RankGrid(u), coessential_set(w));
}

/// s(w) = #[id, w], by scanning the whole group.
inline std::size_t interval_size(const Element& w, std::span<const Element> group) {
  const RankGrid gw(w);
  std::size_t count = 0;
  for (const Element& u : group) count += RankGrid(u).dominated_by(gw);
  return count;
}

inline std::size_t interval_size(const Element& w) {
  const auto group = enumerate_group(w.family(), w.n());
  return interval_size(w, group);
}

/// ℓ_T(u, w) = ℓ_T(w^{-1} u).
inline int undirected_distance(const Element& u, const Element& w) {
  return absolute_length(compose(w.inverse(), u));
}

inline constexpr std::size_t kDefaultGraphBound = 50'000;

/// Directed graph on the group with an edge u -> ut whenever t is a reflection
/// and ℓ(ut) > ℓ(u). Immutable once built.
class BruhatGraph {
 public:
  explicit BruhatGraph(const GroupContext& ctx, std::size_t max_vertices = kDefaultGraphBound) : ctx_(ctx) {
    if (ctx.order() > max_vertices)
      throw std::length_error(ctx.label() + " has " + std::to_string(ctx.order()) +
                              " elements, above the configured bound of " + std::to_string(max_vertices));
    elements_ = enumerate_group(ctx);
    const std::size_t size = elements_.size();
    index_.reserve(size * 2);
    lengths_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      index_.emplace(elements_[i].key(), static_cast<int>(i));
      lengths_[i] = coxeter_length(elements_[i]);
    }

    std::vector<std::vector<int>> out(size), in(size);
    for (std::size_t i = 0; i < size; ++i)
      for (const Element& t : ctx.reflections) {
        const int j = index_of(compose(elements_[i], t));
        if (lengths_[j] > lengths_[i]) {
          out[i].push_back(j);
          in[j].push_back(static_cast<int>(i));
        }
      }
    flatten_adjacency(out, out_offsets_, out_targets_);
    flatten_adjacency(in, in_offsets_, in_targets_);
  }

  const GroupContext& context() const { return ctx_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t edge_count() const { return out_targets_.size(); }

  const Element& element(int i) const { return elements_[i]; }
  std::span<const Element> elements() const { return elements_; }
  int length(int i) const { return lengths_[i]; }

  int index_of(const Element& w) const {
    auto it = index_.find(w.key());
    if (it == index_.end() || !ctx_.contains(w))
      throw std::invalid_argument("element " + to_string(w) + " is not in " + ctx_.label());
    return it->second;
  }

  std::span<const int> out_edges(int i) const {
    return {out_targets_.data() + out_offsets_[i], out_targets_.data() + out_offsets_[i + 1]};
  }
  std::span<const int> in_edges(int i) const {
    return {in_targets_.data() + in_offsets_[i], in_targets_.data() + in_offsets_[i + 1]};
  }

  /// ℓ_D(u, target) for every u, by one BFS along reversed edges; kInfinity when
  /// no directed path exists.
  std::vector<int> distances_to(int target) const {
    std::vector<int> dist(size(), kInfinity);
    std::vector<int> queue;
    queue.reserve(size());
    dist[target] = 0;
    queue.push_back(target);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int u : in_edges(v))
        if (dist[u] == kInfinity) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
    }
    return dist;
  }

  int directed_distance(const Element& u, const Element& w) const { return distances_to(index_of(w))[index_of(u)]; }

 private:
  static void flatten_adjacency(const std::vector<std::vector<int>>& lists, std::vector<std::uint32_t>& offsets,
                                std::vector<int>& targets) {
    offsets.assign(lists.size() + 1, 0);
    for (std::size_t i = 0; i < lists.size(); ++i)
      offsets[i + 1] = offsets[i] + static_cast<std::uint32_t>(lists[i].size());
    targets.reserve(offsets.back());
    for (const auto& l : lists) targets.insert(targets.end(), l.begin(), l.end());
  }

  GroupContext ctx_;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::uint32_t> out_offsets_, in_offsets_;
  std::vector<int> out_targets_, in_targets_;
};

struct DistanceWitness {
  Element u;
  int directed = 0;
  int undirected = 0;
};

struct HultmanResult {
  bool hultman = true;
  std::optional<DistanceWitness> witness;  // a failing u of least length
};

/// Every u with a directed path to w (equivalently u <= w) and ℓ_D(u,w) != ℓ_T(u,w),
/// in vertex order.
inline std::vector<DistanceWitness> distance_failures(const Element& w, const BruhatGraph& g) {
  const auto dist = g.distances_to(g.index_of(w));
  const Element w_inv = w.inverse();
  std::vector<DistanceWitness> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (dist[i] == kInfinity) continue;
    const int lt = absolute_length(compose(w_inv, g.element(static_cast<int>(i))));
    if (lt != dist[i]) out.push_back({g.element(static_cast<int>(i)), dist[i], lt});
  }
  return out;
}

inline HultmanResult is_hultman(const Element& w, const BruhatGraph& g) {
  const auto failures = distance_failures(w, g);
  HultmanResult result;
  if (failures.empty()) return result;
  result.hultman = false;
  const DistanceWitness* best = &failures.front();
  for (const auto& f : failures)
    if (g.length(g.index_of(f.u)) < g.length(g.index_of(best->u))) best = &f;
  result.witness = *best;
  return result;
}

}  // namespace hultman
