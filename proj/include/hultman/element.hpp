#pragma once

// Group elements of S_n and of B_n embedded in S_{2n}.
//
// Windows are 1-indexed one-line notation. Type B elements are always stored
// in the centrally symmetric embedded form w(i) + w(2n+1-i) = 2n+1; the
// signed-permutation view is derived on demand.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hultman {

inline constexpr int kMaxDegree = 16;

enum class Family : std::uint8_t { A, B };

inline constexpr std::string_view family_name(Family f) { return f == Family::A ? "A" : "B"; }

inline Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

/// Ambient permutation degree N of the group indexed by n.
inline constexpr int ambient_degree(Family f, int n) { return f == Family::A ? n : 2 * n; }

class Element {
 public:
  Element() = default;

  static Element identity(Family family, int n) {
    check_shape(family, n);
    Element e;
    e.family_ = family;
    e.n_ = static_cast<std::uint8_t>(n);
    e.degree_ = static_cast<std::uint8_t>(ambient_degree(family, n));
    for (int i = 0; i < e.degree_; ++i) e.w_[i] = static_cast<std::uint8_t>(i + 1);
    return e;
  }

  /// Builds from a full one-line window (length N). Throws std::invalid_argument
  /// when the window is not a bijection or breaks type-B symmetry.
  static Element from_window(std::span<const int> window, Family family, int n) {
    check_shape(family, n);
    const int degree = ambient_degree(family, n);
    if (static_cast<int>(window.size()) != degree)
      throw std::invalid_argument("window length " + std::to_string(window.size()) +
                                  " does not match degree " + std::to_string(degree));
    Element e;
    e.family_ = family;
    e.n_ = static_cast<std::uint8_t>(n);
    e.degree_ = static_cast<std::uint8_t>(degree);
    std::uint32_t seen = 0;
    for (int i = 0; i < degree; ++i) {
      const int v = window[i];
      if (v < 1 || v > degree || (seen >> v & 1u))
        throw std::invalid_argument("window is not a permutation of 1.." + std::to_string(degree));
      seen |= 1u << v;
      e.w_[i] = static_cast<std::uint8_t>(v);
    }
    if (family == Family::B) {
      for (int i = 1; i <= n; ++i)
        if (e(i) + e(degree + 1 - i) != degree + 1)
          throw std::invalid_argument("window is not centrally symmetric (type B membership fails at position " +
                                      std::to_string(i) + ")");
    }
    return e;
  }

  static Element from_window(std::initializer_list<int> window, Family family, int n) {
    return from_window(std::span<const int>(window.begin(), window.size()), family, n);
  }

  Family family() const { return family_; }
  int n() const { return n_; }
  int degree() const { return degree_; }

  int operator()(int i) const { return w_[i - 1]; }

  std::vector<int> window() const { return {w_.begin(), w_.begin() + degree_}; }

  std::span<const std::uint8_t> raw() const { return {w_.data(), static_cast<std::size_t>(degree_)}; }

  Element inverse() const {
    Element r = *this;
    for (int i = 0; i < degree_; ++i) r.w_[w_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < degree_; ++i)
      if (w_[i] != i + 1) return false;
    return true;
  }

  /// 4 bits per entry; unique among elements of one degree.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < degree_; ++i) k |= static_cast<std::uint64_t>(w_[i] - 1) << (4 * i);
    return k;
  }

  /// Same window, reinterpreted in the given group. Validates membership.
  Element as(Family family, int n) const { return from_window(window(), family, n); }

  /// Swaps the values in positions i and j; this is right multiplication by (i j).
  Element swapped(int i, int j) const {
    Element r = *this;
    std::swap(r.w_[i - 1], r.w_[j - 1]);
    return r;
  }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  friend Element compose(const Element& u, const Element& v);

  static void check_shape(Family family, int n) {
    if (n < 1 || ambient_degree(family, n) > kMaxDegree)
      throw std::invalid_argument("unsupported group " + std::string(family_name(family)) + "_" + std::to_string(n));
  }

  // Member order gives lexicographic window order within a group.
  Family family_ = Family::A;
  std::uint8_t degree_ = 0;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> w_{};
};

/// (u∘v)(i) = u(v(i)). The type-B flag survives only when both inputs are type B.
inline Element compose(const Element& u, const Element& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(u.degree()) + " vs " +
                                std::to_string(v.degree()) + ")");
  Element r = v;
  if (u.family() == Family::B && v.family() == Family::B) {
    r.family_ = Family::B;
    r.n_ = v.n_;
  } else {
    r.family_ = Family::A;
    r.n_ = v.degree_;
  }
  for (int i = 0; i < v.degree_; ++i) r.w_[i] = u.w_[v.w_[i] - 1];
  return r;
}

// ---------------------------------------------------------------------------
// Text format: digits 1-9 then a=10, b=11, ...; or comma-separated integers.

inline char entry_char(int v) {
  if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
  if (v >= 10 && v <= 35) return static_cast<char>('a' + (v - 10));
  throw std::invalid_argument("entry out of printable range: " + std::to_string(v));
}

inline std::string to_string(const Element& e) {
  std::string s;
  for (int i = 1; i <= e.degree(); ++i) s.push_back(entry_char(e(i)));
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_string(e); }

namespace detail {

inline std::vector<int> parse_compact(std::string_view text) {
  std::vector<int> out;
  for (char c : text) {
    if (c >= '1' && c <= '9')
      out.push_back(c - '0');
    else if (c >= 'a' && c <= 'z')
      out.push_back(10 + (c - 'a'));
    else
      throw std::invalid_argument(std::string("invalid character '") + c + "' in element");
  }
  return out;
}

inline std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string token(text.substr(pos, next - pos));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) throw std::invalid_argument("empty entry in comma-separated element");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("non-numeric entry '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("non-numeric entry '" + token + "'");
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Signed-window view of B_n.
//
// Coordinate k of R^n corresponds to position n+k; value n+j encodes +j and
// value n+1-j encodes -j. With this convention s_0 = (n n+1) flips the sign
// of coordinate 1 and s_i swaps coordinates i and i+1.

using SignedWindow = std::vector<int>;

inline SignedWindow signed_window(const Element& w) {
  if (w.family() != Family::B) throw std::invalid_argument("signed_window: element is not type B");
  const int n = w.n();
  SignedWindow sigma(n);
  for (int k = 1; k <= n; ++k) {
    const int v = w(n + k);
    sigma[k - 1] = v > n ? v - n : -(n + 1 - v);
  }
  return sigma;
}

inline Element embed(std::span<const int> sigma, int n) {
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("signed window length " + std::to_string(sigma.size()) + " != " + std::to_string(n));
  std::vector<int> window(2 * n);
  for (int k = 1; k <= n; ++k) {
    const int s = sigma[k - 1];
    if (s == 0 || s < -n || s > n) throw std::invalid_argument("signed window entry out of range");
    const int value = s > 0 ? n + s : n + 1 + s;
    window[n + k - 1] = value;
    window[n - k] = 2 * n + 1 - value;
  }
  return Element::from_window(window, Family::B, n);
}

inline bool is_type_b_member(std::span<const int> window, int n) {
  if (static_cast<int>(window.size()) != 2 * n) return false;
  for (int i = 1; i <= n; ++i)
    if (window[i - 1] + window[2 * n - i] != 2 * n + 1) return false;
  return true;
}

/// Parses "426153", "3517294a68", or a comma list. For type B a comma list of
/// length n is read as a signed window; length 2n as the embedded window.
inline Element parse_element(std::string_view text, Family family, int n) {
  const int degree = ambient_degree(family, n);
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    values = detail::parse_list(text);
    if (family == Family::B && static_cast<int>(values.size()) == n) return embed(values, n);
  } else {
    values = detail::parse_compact(text);
  }
  if (static_cast<int>(values.size()) != degree)
    throw std::invalid_argument("element '" + std::string(text) + "' has length " + std::to_string(values.size()) +
                                ", expected " + std::to_string(degree));
  return Element::from_window(values, family, n);
}

// ---------------------------------------------------------------------------
// Lengths.

inline int inversion_count(const Element& w) {
  int inv = 0;
  const int N = w.degree();
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) inv += w(i) > w(j);
  return inv;
}

/// Calls f(i, j, k, l) for every reflection of B_n as a pair of position swaps
/// (i j)(k l); a sign flip is reported with k == l == 0.
template <class F>
void for_each_type_b_reflection(int n, F&& f) {
  const int N = 2 * n;
  for (int i = 1; i <= n; ++i) f(i, N + 1 - i, 0, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= N - i; ++j) f(i, j, N + 1 - j, N + 1 - i);
}

/// Coxeter length in the element's own group. Type B counts the reflections t
/// with wt < w; comparability of w and wt makes that an S_{2n} length test.
inline int coxeter_length(const Element& w) {
  if (w.family() == Family::A) return inversion_count(w);
  const int base = inversion_count(w);
  int count = 0;
  for_each_type_b_reflection(w.n(), [&](int i, int j, int k, int l) {
    Element wt = w.swapped(i, j);
    if (k != 0) wt = wt.swapped(k, l);
    count += inversion_count(wt) < base;
  });
  return count;
}

/// Right descents: generators s with l(ws) < l(w). Type A index i means
/// s_i = (i i+1); type B index 0 is s_0 and i >= 1 is s_i.
inline std::vector<int> right_descents(const Element& w) {
  std::vector<int> out;
  if (w.family() == Family::A) {
    for (int i = 1; i < w.degree(); ++i)
      if (w(i) > w(i + 1)) out.push_back(i);
    return out;
  }
  const int n = w.n();
  if (w(n) > w(n + 1)) out.push_back(0);
  // s_i swaps positions (n-i, n-i+1) and (n+i, n+i+1); the two swaps agree in sign.
  for (int i = 1; i < n; ++i)
    if (w(n + i) > w(n + i + 1)) out.push_back(i);
  return out;
}

inline Element generator(Family family, int n, int index) {
  Element id = Element::identity(family, n);
  if (family == Family::A) {
    if (index < 1 || index >= n) throw std::invalid_argument("no generator s_" + std::to_string(index));
    return id.swapped(index, index + 1);
  }
  if (index == 0) return id.swapped(n, n + 1);
  if (index < 1 || index >= n) throw std::invalid_argument("no generator s_" + std::to_string(index));
  return id.swapped(n - index, n - index + 1).swapped(n + index, n + index + 1);
}

inline Element multiply_generator(const Element& w, int index) {
  return compose(w, generator(w.family(), w.n(), index));
}

inline Element longest_element(Family family, int n) {
  const int N = ambient_degree(family, n);
  std::vector<int> window(N);
  for (int i = 0; i < N; ++i) window[i] = N - i;
  return Element::from_window(window, family, n);
}

// ---------------------------------------------------------------------------
// Cycle structure and absolute length.

using Cycle = std::vector<int>;

/// Cycles of the underlying permutation, each starting at its least entry,
/// listed by least entry. Fixed points are 1-cycles.
inline std::vector<Cycle> cycles(const Element& w) {
  std::vector<Cycle> out;
  std::uint32_t seen = 0;
  for (int i = 1; i <= w.degree(); ++i) {
    if (seen >> i & 1u) continue;
    Cycle c;
    for (int j = i; !(seen >> j & 1u); j = w(j)) {
      seen |= 1u << j;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

struct CycleUnit {
  Cycle cycle;
  Cycle mirror;  // empty for an odd unit (the cycle is its own mirror)
  bool odd = false;
  bool trivial = false;  // pair of fixed points {i, 2n+1-i}
};

struct CyclePairing {
  std::vector<CycleUnit> units;

  int even_count() const {
    return static_cast<int>(std::count_if(units.begin(), units.end(), [](const CycleUnit& u) { return !u.odd; }));
  }
  int odd_count() const { return static_cast<int>(units.size()) - even_count(); }
};

inline CyclePairing cycle_pairing(const Element& w) {
  if (w.family() != Family::B) throw std::invalid_argument("cycle_pairing: element is not type B");
  const int N = w.degree();
  auto cs = cycles(w);
  std::vector<int> cycle_of(N + 1);
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (int x : cs[c]) cycle_of[x] = static_cast<int>(c);

  CyclePairing pairing;
  std::vector<bool> used(cs.size(), false);
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (used[c]) continue;
    const int m = cycle_of[N + 1 - cs[c].front()];
    used[c] = true;
    CycleUnit unit;
    unit.cycle = cs[c];
    if (m == static_cast<int>(c)) {
      unit.odd = true;
    } else {
      used[m] = true;
      unit.mirror = cs[m];
      unit.trivial = cs[c].size() == 1;
    }
    pairing.units.push_back(std::move(unit));
  }
  return pairing;
}

/// Reflection length: N - cyc(w) in S_N, n - ecyc(w) in B_n.
inline int absolute_length(const Element& w) {
  if (w.family() == Family::A) return w.degree() - static_cast<int>(cycles(w).size());
  return w.n() - cycle_pairing(w).even_count();
}

}  // namespace hultman
