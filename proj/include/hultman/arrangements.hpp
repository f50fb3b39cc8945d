#pragma once

// Inversion arrangements and exact chamber counts.
//
// Every hyperplane is one of x_i - x_j = 0, x_i + x_j = 0 or x_i = 0, so every
// intersection is described combinatorially: some coordinates vanish and the
// rest split into blocks whose coordinates agree up to sign. Chambers are
// counted with Zaslavsky's formula over the intersection poset.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hultman/element.hpp"
#include "hultman/group.hpp"
#include "hultman/hull.hpp"

namespace hultman {

struct Hyperplane {
  enum class Kind : std::uint8_t { Difference, Sum, Coordinate };
  Kind kind = Kind::Difference;
  int i = 1;
  int j = 0;  // unused for Coordinate

  static Hyperplane difference(int i, int j) { return {Kind::Difference, std::min(i, j), std::max(i, j)}; }
  static Hyperplane sum(int i, int j) { return {Kind::Sum, std::min(i, j), std::max(i, j)}; }
  static Hyperplane coordinate(int i) { return {Kind::Coordinate, i, 0}; }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

inline std::string to_string(const Hyperplane& h) {
  const std::string xi = "x" + std::to_string(h.i);
  switch (h.kind) {
    case Hyperplane::Kind::Difference: return xi + " - x" + std::to_string(h.j) + " = 0";
    case Hyperplane::Kind::Sum: return xi + " + x" + std::to_string(h.j) + " = 0";
    case Hyperplane::Kind::Coordinate: return xi + " = 0";
  }
  return "?";
}

/// Inv(w) = {t : wt < w}, in the reflection order of the context.
inline std::vector<Element> inversion_reflections(const Element& w, const GroupContext& ctx) {
  const int len = coxeter_length(w);
  std::vector<Element> out;
  for (const Element& t : ctx.reflections)
    if (coxeter_length(compose(w, t)) < len) out.push_back(t);
  return out;
}

inline std::vector<Element> inversion_reflections(const Element& w) {
  return inversion_reflections(w, GroupContext(w.family(), w.n()));
}

/// Fixed hyperplane of a reflection acting on R^n (type B through the signed window).
inline Hyperplane hyperplane_of(const Element& t) {
  if (t.family() == Family::A) {
    int moved[2];
    int count = 0;
    for (int i = 1; i <= t.degree(); ++i)
      if (t(i) != i) {
        if (count == 2) throw std::invalid_argument(to_string(t) + " is not a reflection");
        moved[count++] = i;
      }
    if (count != 2 || t(moved[0]) != moved[1]) throw std::invalid_argument(to_string(t) + " is not a reflection");
    return Hyperplane::difference(moved[0], moved[1]);
  }
  const auto sigma = signed_window(t);
  std::vector<int> moved;
  for (int k = 1; k <= t.n(); ++k)
    if (sigma[k - 1] != k) moved.push_back(k);
  if (moved.size() == 1 && sigma[moved[0] - 1] == -moved[0]) return Hyperplane::coordinate(moved[0]);
  if (moved.size() == 2) {
    const int a = moved[0], b = moved[1];
    if (sigma[a - 1] == b && sigma[b - 1] == a) return Hyperplane::difference(a, b);
    if (sigma[a - 1] == -b && sigma[b - 1] == -a) return Hyperplane::sum(a, b);
  }
  throw std::invalid_argument(to_string(t) + " is not a reflection");
}

inline std::vector<Hyperplane> inversion_arrangement(const Element& w, const GroupContext& ctx) {
  std::vector<Hyperplane> planes;
  for (const Element& t : inversion_reflections(w, ctx)) planes.push_back(hyperplane_of(t));
  return planes;
}

/// An intersection of arrangement hyperplanes, canonically encoded: each
/// coordinate is either zero, or equal to sign * x_rep where rep is the least
/// coordinate of its block (rep itself has sign +1).
class FlatPartition {
 public:
  static constexpr int kMaxDim = kMaxDegree;

  explicit FlatPartition(int dim = 0) : dim_(dim) {
    for (int k = 0; k < dim; ++k) {
      rep_[k] = static_cast<std::int8_t>(k);
      sign_[k] = 1;
    }
  }

  int ambient_dim() const { return dim_; }

  bool is_zero(int coord) const { return rep_[coord - 1] < 0; }
  int representative(int coord) const { return rep_[coord - 1] + 1; }
  int sign(int coord) const { return sign_[coord - 1]; }

  int dimension() const {
    int d = 0;
    for (int k = 0; k < dim_; ++k) d += rep_[k] == k;
    return d;
  }
  int codimension() const { return dim_ - dimension(); }

  bool contains_in(const Hyperplane& h) const {
    const int a = h.i - 1;
    switch (h.kind) {
      case Hyperplane::Kind::Coordinate: return rep_[a] < 0;
      case Hyperplane::Kind::Difference:
      case Hyperplane::Kind::Sum: {
        const int b = h.j - 1;
        if (rep_[a] < 0 || rep_[b] < 0) return rep_[a] < 0 && rep_[b] < 0;
        if (rep_[a] != rep_[b]) return false;
        const int rel = h.kind == Hyperplane::Kind::Difference ? 1 : -1;
        return sign_[a] == rel * sign_[b];
      }
    }
    return false;
  }

  FlatPartition meet(const Hyperplane& h) const {
    Solver s(*this);
    switch (h.kind) {
      case Hyperplane::Kind::Coordinate: s.set_zero(h.i - 1); break;
      case Hyperplane::Kind::Difference: s.relate(h.i - 1, h.j - 1, 1); break;
      case Hyperplane::Kind::Sum: s.relate(h.i - 1, h.j - 1, -1); break;
    }
    return s.finish();
  }

  FlatPartition meet(const FlatPartition& other) const {
    Solver s(*this);
    for (int k = 0; k < dim_; ++k) {
      if (other.rep_[k] < 0)
        s.set_zero(k);
      else if (other.rep_[k] != k)
        s.relate(k, other.rep_[k], other.sign_[k]);
    }
    return s.finish();
  }

  std::uint64_t key() const {
    std::uint64_t h = 0;
    for (int k = 0; k < dim_; ++k) h = h * 37 + static_cast<std::uint64_t>((rep_[k] + 1) * 2 + (sign_[k] > 0));
    return h;
  }

  friend bool operator==(const FlatPartition& a, const FlatPartition& b) {
    if (a.dim_ != b.dim_) return false;
    for (int k = 0; k < a.dim_; ++k)
      if (a.rep_[k] != b.rep_[k] || a.sign_[k] != b.sign_[k]) return false;
    return true;
  }

 private:
  // Union-find with parity: x_k = parity[k] * x_parent[k]; a zeroed root
  // forces its whole block to zero.
  struct Solver {
    int dim;
    std::array<int, kMaxDim> parent{};
    std::array<int, kMaxDim> parity{};
    std::array<bool, kMaxDim> zero{};

    explicit Solver(const FlatPartition& f) : dim(f.dim_) {
      for (int k = 0; k < dim; ++k) {
        if (f.rep_[k] < 0) {
          parent[k] = k;
          parity[k] = 1;
          zero[k] = true;
        } else {
          parent[k] = f.rep_[k];
          parity[k] = f.sign_[k];
          zero[k] = false;
        }
      }
    }

    std::pair<int, int> find(int k) {
      int sign = 1;
      int r = k;
      while (parent[r] != r) {
        sign *= parity[r];
        r = parent[r];
      }
      return {r, sign};
    }

    void set_zero(int k) { zero[find(k).first] = true; }

    // x_a = rel * x_b
    void relate(int a, int b, int rel) {
      auto [ra, sa] = find(a);
      auto [rb, sb] = find(b);
      if (ra == rb) {
        if (sa != rel * sb) zero[ra] = true;  // x = -x
        return;
      }
      // x_a = sa x_ra, x_b = sb x_rb, so x_ra = sa * rel * sb * x_rb.
      parent[ra] = rb;
      parity[ra] = sa * rel * sb;
      zero[rb] = zero[rb] || zero[ra];
    }

    FlatPartition finish() {
      FlatPartition out(dim);
      std::array<int, kMaxDim> first{};
      std::array<int, kMaxDim> first_sign{};
      first.fill(-1);
      for (int k = 0; k < dim; ++k) {
        auto [r, s] = find(k);
        if (zero[r]) {
          out.rep_[k] = -1;
          out.sign_[k] = 1;
          continue;
        }
        if (first[r] < 0) {
          first[r] = k;
          first_sign[r] = s;
        }
        out.rep_[k] = static_cast<std::int8_t>(first[r]);
        out.sign_[k] = static_cast<std::int8_t>(s * first_sign[r]);
      }
      return out;
    }
  };

  int dim_ = 0;
  std::array<std::int8_t, kMaxDim> rep_{};
  std::array<std::int8_t, kMaxDim> sign_{};
};

/// Intersection poset of a central arrangement with Möbius values from the
/// ambient space.
struct IntersectionPoset {
  int ambient_dim = 0;
  std::vector<FlatPartition> flats;     // flats[0] is the ambient space
  std::vector<std::uint64_t> contains;  // hyperplanes containing each flat, as a bitmask
  std::vector<long long> mobius;

  /// χ(t) = Σ μ(0̂,x) t^{dim x}; coefficient k multiplies t^k.
  std::vector<long long> characteristic_polynomial() const {
    std::vector<long long> coeffs(ambient_dim + 1, 0);
    for (std::size_t i = 0; i < flats.size(); ++i) coeffs[flats[i].dimension()] += mobius[i];
    return coeffs;
  }

  /// Σ |μ(0̂, x)|.
  unsigned long long region_count() const {
    unsigned long long total = 0;
    for (long long m : mobius) total += static_cast<unsigned long long>(std::llabs(m));
    return total;
  }
};

inline constexpr std::size_t kDefaultFlatBudget = 200'000;

inline IntersectionPoset intersection_poset(const std::vector<Hyperplane>& planes, int n,
                                            std::size_t max_flats = kDefaultFlatBudget) {
  if (planes.size() > 64) throw std::invalid_argument("at most 64 hyperplanes are supported");
  IntersectionPoset poset;
  poset.ambient_dim = n;
  std::unordered_map<std::uint64_t, std::vector<int>> seen;
  auto add = [&](const FlatPartition& f) {
    auto& bucket = seen[f.key()];
    for (int idx : bucket)
      if (poset.flats[idx] == f) return;
    if (poset.flats.size() >= max_flats)
      throw BudgetExceeded("intersection poset exceeded " + std::to_string(max_flats) + " flats");
    bucket.push_back(static_cast<int>(poset.flats.size()));
    poset.flats.push_back(f);
  };
  add(FlatPartition(n));
  for (const Hyperplane& h : planes) {
    const std::size_t before = poset.flats.size();
    for (std::size_t i = 0; i < before; ++i) add(poset.flats[i].meet(h));
  }

  const std::size_t size = poset.flats.size();
  poset.contains.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t h = 0; h < planes.size(); ++h)
      if (poset.flats[i].contains_in(planes[h])) poset.contains[i] |= std::uint64_t{1} << h;

  // Process by codimension; y < x exactly when contains[y] is a proper subset of contains[x].
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return poset.flats[a].codimension() < poset.flats[b].codimension(); });
  poset.mobius.assign(size, 0);
  for (std::size_t oi = 0; oi < size; ++oi) {
    const int x = order[oi];
    if (oi == 0) {
      poset.mobius[x] = 1;
      continue;
    }
    long long sum = 0;
    const std::uint64_t mx = poset.contains[x];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const int y = order[oj];
      if (poset.flats[y].codimension() >= poset.flats[x].codimension()) break;
      const std::uint64_t my = poset.contains[y];
      if ((my & mx) == my) sum += poset.mobius[y];
    }
    poset.mobius[x] = -sum;
  }
  return poset;
}

/// c(w): number of chambers of the inversion arrangement of w in R^n.
inline unsigned long long chamber_count(const Element& w, const GroupContext& ctx,
                                        std::size_t max_flats = kDefaultFlatBudget) {
  const int dim = w.family() == Family::A ? w.degree() : w.n();
  return intersection_poset(inversion_arrangement(w, ctx), dim, max_flats).region_count();
}

inline unsigned long long chamber_count(const Element& w) { return chamber_count(w, GroupContext(w.family(), w.n())); }

}  // namespace hultman
