#pragma once

// Five-way classification, exhaustive equivalence runs, the minimal pattern
// search and the witness table.
//
// Each condition is computed on its own code path:
//   1. chambers  - intersection poset of Inv(w) against a tableau scan for s(w)
//   2. distance  - reverse BFS in the Bruhat graph against the cycle formula
//   3. inclusions - ranks on E(w)
//   4. hull      - backtracking over permutations inside H(w)
//   5. patterns  - BP containment of the listed patterns

#include <array>
#include <bitset>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hultman/arrangements.hpp"
#include "hultman/bruhat.hpp"
#include "hultman/coessential.hpp"
#include "hultman/element.hpp"
#include "hultman/group.hpp"
#include "hultman/hull.hpp"
#include "hultman/parallel.hpp"
#include "hultman/patterns.hpp"
#include "hultman/rank.hpp"

namespace hultman {

enum class Condition : int { Chambers = 1, Distance = 2, Inclusions = 3, Hull = 4, Patterns = 5 };

inline constexpr std::array<Condition, 5> kAllConditions{Condition::Chambers, Condition::Distance,
                                                         Condition::Inclusions, Condition::Hull, Condition::Patterns};

/// JSON field name of each condition.
inline std::string_view condition_key(Condition c) {
  switch (c) {
    case Condition::Chambers: return "chambers";
    case Condition::Distance: return "distance";
    case Condition::Inclusions: return "pseudo_inclusions";
    case Condition::Hull: return "relaxed_hull";
    case Condition::Patterns: return "bp_avoidance";
  }
  return "?";
}

class ConditionSet {
 public:
  ConditionSet() = default;
  ConditionSet(std::initializer_list<Condition> cs) {
    for (Condition c : cs) insert(c);
  }
  static ConditionSet all() { return {Condition::Chambers, Condition::Distance, Condition::Inclusions, Condition::Hull, Condition::Patterns}; }

  /// Parses "1,2,5".
  static ConditionSet parse(std::string_view text) {
    ConditionSet s;
    for (int v : detail::parse_list(text)) {
      if (v < 1 || v > 5) throw std::invalid_argument("condition numbers are 1..5");
      s.insert(static_cast<Condition>(v));
    }
    return s;
  }

  void insert(Condition c) { bits_.set(static_cast<int>(c)); }
  void erase(Condition c) { bits_.reset(static_cast<int>(c)); }
  bool has(Condition c) const { return bits_.test(static_cast<int>(c)); }
  bool empty() const { return bits_.none(); }

 private:
  std::bitset<6> bits_;
};

struct ConditionOutcome {
  std::optional<bool> value;
  std::string error;  // set when the condition was requested but could not be decided
};

struct ClassificationReport {
  Element element;
  std::array<ConditionOutcome, 5> conditions;
  std::optional<unsigned long long> chambers;
  std::optional<std::size_t> interval;
  std::vector<DistanceWitness> witnesses;  // least-length failing u, when not Hultman
  std::vector<CoessBox> coessential;
  std::vector<CoessBox> violations;
  std::optional<Element> hull_counterexample;
  std::optional<PatternMatch> matched_pattern;
  double seconds = 0.0;

  const ConditionOutcome& outcome(Condition c) const { return conditions[static_cast<int>(c) - 1]; }
  ConditionOutcome& outcome(Condition c) { return conditions[static_cast<int>(c) - 1]; }

  /// All decided conditions agree.
  bool consistent() const {
    std::optional<bool> seen;
    for (const auto& o : conditions) {
      if (!o.value) continue;
      if (seen && *seen != *o.value) return false;
      seen = o.value;
    }
    return true;
  }
};

struct ClassifyOptions {
  ConditionSet conditions = ConditionSet::all();
  std::uint64_t hull_budget = kDefaultHullBudget;
  std::size_t flat_budget = kDefaultFlatBudget;
  std::size_t graph_bound = kDefaultGraphBound;
};

/// Shared read-only state for classifying many elements of one group.
class Classifier {
 public:
  Classifier(Family family, int n, ClassifyOptions options = {}) : ctx_(family, n), options_(options) {
    if (options_.conditions.has(Condition::Chambers)) {
      group_ = enumerate_group(ctx_);
      grids_.reserve(group_.size());
      for (const Element& u : group_) grids_.emplace_back(u);
    }
    if (options_.conditions.has(Condition::Distance)) {
      try {
        graph_ = std::make_unique<BruhatGraph>(ctx_, options_.graph_bound);
      } catch (const std::length_error& e) {
        graph_error_ = e.what();
      }
    }
  }

  const GroupContext& context() const { return ctx_; }
  const ClassifyOptions& options() const { return options_; }
  const BruhatGraph* graph() const { return graph_.get(); }

  ClassificationReport classify(const Element& w) const { return classify(w, options_.conditions); }

  ClassificationReport classify(const Element& w, ConditionSet which) const {
    if (!ctx_.contains(w)) throw std::invalid_argument("element " + to_string(w) + " is not in " + ctx_.label());
    const auto start = std::chrono::steady_clock::now();
    ClassificationReport report;
    report.element = w;
    const bool type_b = ctx_.family == Family::B;

    if (which.has(Condition::Chambers)) {
      auto& out = report.outcome(Condition::Chambers);
      try {
        const RankGrid gw(w);
        std::size_t s = 0;
        for (const RankGrid& g : grids_) s += g.dominated_by(gw);
        report.interval = s;
        report.chambers = chamber_count(w, ctx_, options_.flat_budget);
        out.value = *report.chambers == s;
      } catch (const BudgetExceeded& e) {
        out.error = e.what();
      }
    }

    if (which.has(Condition::Distance)) {
      auto& out = report.outcome(Condition::Distance);
      if (graph_) {
        const auto result = is_hultman(w, *graph_);
        out.value = result.hultman;
        if (result.witness) report.witnesses.push_back(*result.witness);
      } else {
        out.error = graph_error_;
      }
    }

    if (which.has(Condition::Inclusions)) {
      report.coessential = coessential_set(w);
      report.violations = inclusion_violations(w, report.coessential);
      report.outcome(Condition::Inclusions).value = report.violations.empty();
    }

    if (which.has(Condition::Hull)) {
      auto& out = report.outcome(Condition::Hull);
      try {
        const auto r = type_b ? satisfies_relaxed_right_hull(w, options_.hull_budget)
                              : satisfies_right_hull(w, options_.hull_budget);
        out.value = r.holds;
        report.hull_counterexample = r.counterexample;
      } catch (const BudgetExceeded& e) {
        out.error = e.what();
      }
    }

    if (which.has(Condition::Patterns)) {
      report.matched_pattern = first_listed_pattern(w);
      report.outcome(Condition::Patterns).value = !report.matched_pattern.has_value();
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

 private:
  GroupContext ctx_;
  ClassifyOptions options_;
  std::vector<Element> group_;
  std::vector<RankGrid> grids_;
  std::unique_ptr<BruhatGraph> graph_;
  std::string graph_error_;
};

inline ClassificationReport classify(const Element& w, const ClassifyOptions& options = {}) {
  return Classifier(w.family(), w.n(), options).classify(w);
}

// ---------------------------------------------------------------------------
// Exhaustive verification.

struct VerifyOptions {
  ClassifyOptions classify;
  /// When set, condition 4 runs on this many randomly chosen elements only.
  std::optional<std::size_t> hull_sample;
  std::uint64_t seed = 20240611;
  unsigned threads = 0;
};

struct VerifySummary {
  std::string group;
  std::size_t total = 0;
  std::array<std::size_t, 5> decided{};   // elements with the condition computed
  std::array<std::size_t, 5> satisfied{};  // ... and true
  std::vector<ClassificationReport> reports;  // in group order
  std::vector<std::size_t> disagreements;     // indices into reports

  bool agreement() const { return disagreements.empty(); }
  std::size_t hultman_count() const { return satisfied[static_cast<int>(Condition::Distance) - 1]; }
};

inline VerifySummary verify_equivalence(Family family, int n, const VerifyOptions& options = {}) {
  const Classifier classifier(family, n, options.classify);
  const auto group = enumerate_group(family, n);
  VerifySummary summary;
  summary.group = classifier.context().label();
  summary.total = group.size();

  std::vector<bool> hull_chosen(group.size(), true);
  if (options.hull_sample && *options.hull_sample < group.size()) {
    std::vector<std::size_t> order(group.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(options.seed);
    std::shuffle(order.begin(), order.end(), rng);
    hull_chosen.assign(group.size(), false);
    for (std::size_t k = 0; k < *options.hull_sample; ++k) hull_chosen[order[k]] = true;
  }

  summary.reports.resize(group.size());
  parallel_for(
      group.size(),
      [&](std::size_t i) {
        ConditionSet which = options.classify.conditions;
        if (!hull_chosen[i]) which.erase(Condition::Hull);
        summary.reports[i] = classifier.classify(group[i], which);
      },
      options.threads);

  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto& r = summary.reports[i];
    for (Condition c : kAllConditions) {
      const auto& o = r.outcome(c);
      if (!o.value) continue;
      ++summary.decided[static_cast<int>(c) - 1];
      summary.satisfied[static_cast<int>(c) - 1] += *o.value;
    }
    if (!r.consistent()) summary.disagreements.push_back(i);
  }
  return summary;
}

// ---------------------------------------------------------------------------
// Minimal non-(pseudo-)inclusion elements under BP containment.

/// Coxeter rank of the group holding a pattern.
inline int coxeter_rank(const PatternSpec& p) { return p.family() == Family::A ? p.n() - 1 : p.n(); }

/// Elements of S_2..S_{max_a} and B_1..B_{max_b} that are not defined by
/// (pseudo-)inclusions and BP contain no such element of smaller rank.
/// Ordered by rank, type A first, then by window.
inline std::vector<PatternSpec> find_minimal_non_hultman(int max_a, int max_b) {
  std::vector<PatternSpec> minimal;
  const int top = std::max(max_a - 1, max_b);
  for (int rank = 1; rank <= top; ++rank) {
    std::vector<PatternSpec> found;
    auto scan = [&](Family family, int n) {
      for (const Element& w : enumerate_group(family, n)) {
        const bool ok = family == Family::A ? is_defined_by_inclusions(w) : is_defined_by_pseudo_inclusions(w);
        if (ok) continue;
        bool contains_smaller = false;
        for (const PatternSpec& p : minimal) {
          if (family == Family::A && p.family() == Family::B) continue;
          if (bp_contains(w, p).contains) {
            contains_smaller = true;
            break;
          }
        }
        if (!contains_smaller) found.push_back(PatternSpec{w});
      }
    };
    if (rank + 1 >= 2 && rank + 1 <= max_a) scan(Family::A, rank + 1);
    if (rank <= max_b) scan(Family::B, rank);
    minimal.insert(minimal.end(), found.begin(), found.end());
  }
  return minimal;
}

// ---------------------------------------------------------------------------
// Witness table.

/// One row of the published table of minimal non-Hultman elements.
struct ReferenceRow {
  Family family;
  int n;
  std::string w;
  std::string u;
  int directed;
  int undirected;
};

inline const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {Family::A, 4, "4231", "2143", 4, 2},
      {Family::A, 5, "35142", "12435", 5, 3},
      {Family::A, 5, "42513", "13245", 5, 3},
      {Family::A, 6, "351624", "423156", 6, 4},
      {Family::A, 6, "351624", "126543", 6, 4},
      {Family::B, 3, "426153", "132546", 4, 2},
      {Family::B, 3, "536142", "142536", 4, 2},
      {Family::B, 3, "563412", "124356", 4, 2},
      {Family::B, 3, "462513", "135246", 4, 2},
      {Family::B, 3, "635241", "153426", 4, 2},
      {Family::B, 3, "635241", "241635", 4, 2},
      {Family::B, 3, "642531", "315264", 4, 2},
      {Family::B, 3, "642531", "153426", 4, 2},
      {Family::B, 3, "645231", "154326", 4, 2},
      {Family::B, 3, "645231", "351624", 4, 2},
      {Family::B, 3, "623451", "132546", 4, 2},
      {Family::B, 3, "624351", "135246", 4, 2},
      {Family::B, 3, "624351", "142536", 4, 2},
      {Family::B, 3, "653421", "214365", 4, 2},
      {Family::B, 4, "35172846", "12436578", 5, 3},
      {Family::B, 4, "46172835", "12536478", 5, 3},
      {Family::B, 4, "57163824", "14627358", 5, 3},
      {Family::B, 4, "57163824", "12654378", 5, 3},
      {Family::B, 4, "47163825", "13527468", 5, 3},
      {Family::B, 4, "47163825", "12645378", 5, 3},
      {Family::B, 4, "52618374", "14236758", 5, 3},
      {Family::B, 4, "52618374", "13254768", 5, 3},
      {Family::B, 4, "47618325", "13254768", 5, 3},
      {Family::B, 4, "42681375", "13427568", 5, 3},
      {Family::B, 4, "42681375", "13254768", 5, 3},
      {Family::B, 4, "42618375", "13245768", 5, 3},
      {Family::B, 4, "37154826", "12536478", 5, 3},
      {Family::B, 4, "37154826", "12463578", 5, 3},
      {Family::B, 4, "37145826", "12436578", 5, 3},
      {Family::B, 4, "37581426", "14627358", 5, 3},
      {Family::B, 4, "37581426", "12654378", 5, 3},
      {Family::B, 4, "37518426", "12645378", 5, 3},
      {Family::B, 4, "37518426", "14263758", 5, 3},
      {Family::B, 4, "35718246", "12463578", 5, 3},
      {Family::B, 4, "46718235", "12354678", 5, 3},
      {Family::B, 5, "3617294a58", "124365879a", 6, 4},
      {Family::B, 5, "3617294a58", "125347869a", 6, 4},
      {Family::B, 5, "3517924a68", "124365879a", 6, 4},
      {Family::B, 5, "3517924a68", "124538679a", 6, 4},
      {Family::B, 5, "3517294a68", "124356879a", 6, 4},
  };
  return rows;
}

enum class RowStatus {
  Match,               // (u, ℓ_D, ℓ_T) recomputed exactly
  ParityInconsistent,  // the row's distances cannot both have the parity of ℓ(w) - ℓ(u)
  NotBelow,            // parity-consistent, but u is not below w
  Mismatch,            // u <= w and parity-consistent, yet the distances differ
};

inline std::string_view row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::ParityInconsistent: return "parity-inconsistent";
    case RowStatus::NotBelow: return "not-below";
    case RowStatus::Mismatch: return "mismatch";
  }
  return "?";
}

struct RowCheck {
  ReferenceRow row;
  RowStatus status = RowStatus::Mismatch;
  bool u_below_w = false;
  std::optional<int> directed;  // recomputed for the row's u when u <= w
  std::optional<int> undirected;
  std::optional<CoessBox> separating_box;  // a box with r_u(p,q) > r_w(p,q) when u is not below w
};

struct PatternWitnesses {
  PatternSpec pattern;
  unsigned long long chambers = 0;
  std::size_t interval = 0;
  std::vector<DistanceWitness> failures;  // every u <= w with ℓ_D > ℓ_T
  std::vector<DistanceWitness> unlisted;  // failures with no row in the reference table

  bool non_hultman_by_chambers() const { return chambers < interval; }
};

struct WitnessTable {
  std::vector<PatternWitnesses> patterns;
  std::vector<RowCheck> rows;

  std::size_t count(RowStatus s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const RowCheck& r) { return r.status == s; }));
  }
};

inline WitnessTable witness_table() {
  WitnessTable table;
  std::vector<std::unique_ptr<BruhatGraph>> graphs;
  auto graph_for = [&](Family f, int n) -> const BruhatGraph& {
    for (const auto& g : graphs)
      if (g->context().family == f && g->context().n == n) return *g;
    graphs.push_back(std::make_unique<BruhatGraph>(GroupContext(f, n)));
    return *graphs.back();
  };

  for (const PatternSpec& p : hultman_patterns()) {
    const BruhatGraph& g = graph_for(p.family(), p.n());
    PatternWitnesses pw;
    pw.pattern = p;
    pw.chambers = chamber_count(p.element, g.context());
    pw.interval = interval_size(p.element, g.elements());
    pw.failures = distance_failures(p.element, g);
    table.patterns.push_back(std::move(pw));
  }

  for (const ReferenceRow& row : reference_rows()) {
    const BruhatGraph& g = graph_for(row.family, row.n);
    const Element w = parse_element(row.w, row.family, row.n);
    const Element u = parse_element(row.u, row.family, row.n);
    RowCheck check;
    check.row = row;
    const int gap = coxeter_length(w) - coxeter_length(u);
    const bool parity_ok = (row.directed - gap) % 2 == 0 && (row.undirected - gap) % 2 == 0;
    const int d = g.distances_to(g.index_of(w))[g.index_of(u)];
    check.u_below_w = d != kInfinity;
    if (check.u_below_w) {
      check.directed = d;
      check.undirected = undirected_distance(u, w);
    } else {
      const RankGrid gu(u), gw(w);
      for (int p = 1; p <= w.degree() && !check.separating_box; ++p)
        for (int q = 1; q <= w.degree(); ++q)
          if (gu(p, q) > gw(p, q)) {
            check.separating_box = CoessBox{p, q, gu(p, q)};
            break;
          }
    }
    if (!parity_ok)
      check.status = RowStatus::ParityInconsistent;
    else if (!check.u_below_w)
      check.status = RowStatus::NotBelow;
    else if (check.directed == row.directed && check.undirected == row.undirected)
      check.status = RowStatus::Match;
    else
      check.status = RowStatus::Mismatch;
    table.rows.push_back(check);
  }

  for (PatternWitnesses& pw : table.patterns) {
    const std::string w = to_string(pw.pattern.element);
    for (const DistanceWitness& f : pw.failures) {
      const std::string u = to_string(f.u);
      const bool listed = std::any_of(reference_rows().begin(), reference_rows().end(), [&](const ReferenceRow& r) {
        return r.family == pw.pattern.family() && r.w == w && r.u == u;
      });
      if (!listed) pw.unlisted.push_back(f);
    }
  }
  return table;
}

}  // namespace hultman
