#pragma once

// Finite-field point counts as an independent route to chamber counts.
// Not used by classification; the tests compare it against chamber_count.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hultman/arrangements.hpp"

namespace hultman {

/// Points of F_q^n lying on none of the hyperplanes.
inline std::uint64_t complement_points(const std::vector<Hyperplane>& planes, int n, int q) {
  // Coordinates are assigned in order; a hyperplane is checked as soon as its
  // last coordinate is set.
  std::vector<std::vector<Hyperplane>> closing(n + 1);
  for (const Hyperplane& h : planes) closing[h.kind == Hyperplane::Kind::Coordinate ? h.i : h.j].push_back(h);
  std::vector<int> x(n + 1);
  auto rec = [&](auto& self, int k) -> std::uint64_t {
    if (k > n) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v < q; ++v) {
      x[k] = v;
      bool ok = true;
      for (const Hyperplane& h : closing[k]) {
        switch (h.kind) {
          case Hyperplane::Kind::Coordinate: ok = x[h.i] != 0; break;
          case Hyperplane::Kind::Difference: ok = x[h.i] != x[h.j]; break;
          case Hyperplane::Kind::Sum: ok = (x[h.i] + x[h.j]) % q != 0; break;
        }
        if (!ok) break;
      }
      if (ok) total += self(self, k + 1);
    }
    return total;
  };
  return rec(rec, 1);
}

/// The first `count` odd primes greater than `above`.
inline std::vector<int> primes_above(int above, int count) {
  std::vector<int> out;
  for (int c = std::max(3, above + 1); static_cast<int>(out.size()) < count; ++c) {
    bool prime = c % 2 != 0;
    for (int d = 3; prime && d * d <= c; d += 2) prime = c % d != 0;
    if (prime) out.push_back(c);
  }
  return out;
}

/// Chamber count via χ(q) = #complement(F_q^n): interpolate χ from the first
/// n+1 primes, confirm it on the rest, return (-1)^n χ(-1).
inline unsigned long long chamber_count_ff(const Element& w, const std::vector<int>& primes) {
  using boost::multiprecision::cpp_rational;
  const int n = w.family() == Family::A ? w.degree() : w.n();
  if (static_cast<int>(primes.size()) < n + 1)
    throw std::invalid_argument("need at least " + std::to_string(n + 1) + " primes");
  for (int p : primes)
    if (p % 2 == 0 || p <= 2 * n) throw std::invalid_argument("primes must be odd and exceed 2n");

  const auto planes = inversion_arrangement(w, GroupContext(w.family(), w.n()));
  std::vector<cpp_rational> xs, ys;
  for (int p : primes) {
    xs.emplace_back(p);
    ys.emplace_back(complement_points(planes, n, p));
  }
  auto lagrange = [&](const cpp_rational& t) {
    cpp_rational total = 0;
    for (int i = 0; i <= n; ++i) {
      cpp_rational term = ys[i];
      for (int j = 0; j <= n; ++j)
        if (j != i) term *= (t - xs[j]) / (xs[i] - xs[j]);
      total += term;
    }
    return total;
  };
  for (std::size_t i = n + 1; i < primes.size(); ++i)
    if (lagrange(xs[i]) != ys[i])
      throw std::runtime_error("point counts are not polynomial in q (prime " + std::to_string(primes[i]) + ")");
  cpp_rational at_minus_one = lagrange(cpp_rational(-1));
  if (n % 2) at_minus_one = -at_minus_one;
  if (boost::multiprecision::denominator(at_minus_one) != 1 || at_minus_one < 0)
    throw std::runtime_error("interpolated region count is not a nonnegative integer");
  return static_cast<unsigned long long>(boost::multiprecision::numerator(at_minus_one));
}

inline unsigned long long chamber_count_ff(const Element& w) {
  const int n = w.family() == Family::A ? w.degree() : w.n();
  return chamber_count_ff(w, primes_above(2 * n, n + 2));
}

}  // namespace hultman
