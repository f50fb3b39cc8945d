#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hultman/element.hpp"

namespace hultman {

/// Ambient group descriptor: S_n (family A) or B_n inside S_{2n} (family B).
struct GroupContext {
  Family family = Family::A;
  int n = 1;
  std::vector<Element> generators;
  std::vector<Element> reflections;  // lexicographic by window

  GroupContext() = default;

  GroupContext(Family f, int rank) : family(f), n(rank) {
    const Element id = Element::identity(f, rank);  // validates the shape
    if (f == Family::A) {
      for (int i = 1; i < n; ++i) generators.push_back(generator(f, n, i));
    } else {
      for (int i = 0; i < n; ++i) generators.push_back(generator(f, n, i));
    }
    // Closure of the generators under conjugation by generators.
    std::set<Element> found(generators.begin(), generators.end());
    std::vector<Element> frontier(generators.begin(), generators.end());
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const Element& t : frontier)
        for (const Element& s : generators) {
          Element c = compose(compose(s, t), s);
          if (found.insert(c).second) next.push_back(c);
        }
      frontier = std::move(next);
    }
    reflections.assign(found.begin(), found.end());
    (void)id;
  }

  int degree() const { return ambient_degree(family, n); }
  Element identity() const { return Element::identity(family, n); }
  Element longest() const { return longest_element(family, n); }

  std::size_t order() const {
    std::size_t m = 1;
    for (int i = 2; i <= n; ++i) m *= static_cast<std::size_t>(i);
    if (family == Family::B) m <<= n;
    return m;
  }

  std::string label() const { return (family == Family::A ? "S_" : "B_") + std::to_string(n); }

  bool contains(const Element& w) const { return w.family() == family && w.n() == n; }
};

/// Every element of the group, in lexicographic window order.
inline std::vector<Element> enumerate_group(Family family, int n) {
  std::vector<Element> out;
  if (family == Family::A) {
    std::vector<int> window(n);
    std::iota(window.begin(), window.end(), 1);
    do {
      out.push_back(Element::from_window(window, Family::A, n));
    } while (std::next_permutation(window.begin(), window.end()));
    return out;
  }
  std::vector<int> magnitudes(n);
  std::iota(magnitudes.begin(), magnitudes.end(), 1);
  std::vector<int> sigma(n);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      for (int k = 0; k < n; ++k) sigma[k] = (signs >> k & 1u) ? -magnitudes[k] : magnitudes[k];
      out.push_back(embed(sigma, n));
    }
  } while (std::next_permutation(magnitudes.begin(), magnitudes.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Element> enumerate_group(const GroupContext& ctx) { return enumerate_group(ctx.family, ctx.n); }

}  // namespace hultman
