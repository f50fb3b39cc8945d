// Command line front end: classify, verify, minimal-patterns, witnesses,
// chambers, patterns.
//
// Exit codes: 0 all conditions agree, 1 an equivalence violation was found,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hultman/basic.hpp"
#include "hultman/hultman.hpp"
#include "hultman/report.hpp"

using namespace hultman;

namespace {

constexpr int kAgree = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct GroupArgs {
  std::string family = "B";
  int rank = 3;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "A or B")->check(CLI::IsMember({"A", "B", "a", "b"}));
    cmd->add_option("--rank", rank, "n (S_n or B_n)")->check(CLI::Range(1, 8));
  }
  Family parsed() const { return parse_family(family); }
};

std::string join_boxes(const std::vector<CoessBox>& boxes) { return boxes_text(boxes); }

int run_classify(const GroupArgs& g, const std::string& text, const std::string& conditions, bool explain, bool json,
                 std::uint64_t hull_budget) {
  const Family f = g.parsed();
  const Element w = parse_element(text, f, g.rank);
  ClassifyOptions opt;
  opt.conditions = ConditionSet::parse(conditions);
  opt.hull_budget = hull_budget;
  const auto r = Classifier(f, g.rank, opt).classify(w);

  if (json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    print_report_header(std::cout);
    print_report_row(std::cout, r);
  }
  if (explain && !json) {
    const auto boxes = r.coessential.empty() ? coessential_set(w) : r.coessential;
    std::cout << "E(w)        " << join_boxes(boxes) << '\n';
    if (f == Family::B) std::cout << "E'(w)       " << join_boxes(reduced_coessential(w)) << '\n';
    std::cout << "violations  " << join_boxes(inclusion_violations(w, boxes)) << '\n';
    if (r.hull_counterexample) std::cout << "hull        " << to_string(*r.hull_counterexample) << " in H(w) but not below w\n";
    for (const auto& x : r.witnesses)
      std::cout << "witness     u=" << to_string(x.u) << " lD=" << x.directed << " lT=" << x.undirected << '\n';
    if (r.matched_pattern)
      std::cout << "pattern     " << r.matched_pattern->pattern.label() << " at " << to_string(r.matched_pattern->embedding)
                << '\n';
    for (Condition c : kAllConditions)
      if (!r.outcome(c).error.empty()) std::cout << condition_key(c) << ": " << r.outcome(c).error << '\n';
  }
  return r.consistent() ? kAgree : kViolation;
}

int run_verify(const GroupArgs& g, std::optional<std::size_t> sample_hull, const std::string& json_out,
               const std::string& conditions, std::uint64_t hull_budget, unsigned threads, bool list) {
  VerifyOptions opt;
  opt.classify.conditions = ConditionSet::parse(conditions);
  opt.classify.hull_budget = hull_budget;
  opt.hull_sample = sample_hull;
  opt.threads = threads;
  const auto s = verify_equivalence(g.parsed(), g.rank, opt);

  if (list) {
    print_report_header(std::cout);
    for (const auto& r : s.reports) print_report_row(std::cout, r);
  }
  std::cout << s.group << ": " << s.total << " elements\n";
  for (Condition c : kAllConditions) {
    const int i = static_cast<int>(c) - 1;
    std::cout << "  " << std::left << std::setw(18) << condition_key(c) << s.satisfied[i] << " hold of " << s.decided[i]
              << " decided\n";
  }
  std::cout << "  disagreements     " << s.disagreements.size() << '\n';
  for (std::size_t i : s.disagreements) print_report_row(std::cout, s.reports[i]);

  if (!json_out.empty()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : s.reports) out.push_back(to_json(r));
    std::ofstream file(json_out);
    if (!file) throw std::runtime_error("cannot write " + json_out);
    file << out.dump(1) << '\n';
  }
  return s.agreement() ? kAgree : kViolation;
}

int run_minimal(int max_a, int max_b) {
  const auto found = find_minimal_non_hultman(max_a, max_b);
  std::vector<PatternSpec> expected;
  for (const auto& p : hultman_patterns())
    if ((p.family() == Family::A && p.n() <= max_a) || (p.family() == Family::B && p.n() <= max_b)) expected.push_back(p);
  for (const auto& p : found) {
    const bool listed = std::find(expected.begin(), expected.end(), p) != expected.end();
    std::cout << p.label() << (listed ? "" : "  (not in the list)") << '\n';
  }
  std::size_t missing = 0;
  for (const auto& p : expected)
    if (std::find(found.begin(), found.end(), p) == found.end()) {
      std::cout << "missing " << p.label() << '\n';
      ++missing;
    }
  std::cout << found.size() << " minimal elements, " << expected.size() << " listed within these ranks\n";
  return missing == 0 && found.size() == expected.size() ? kAgree : kViolation;
}

int run_witnesses() {
  const auto table = witness_table();
  bool all_non_hultman = true;
  for (const auto& p : table.patterns) {
    all_non_hultman = all_non_hultman && p.non_hultman_by_chambers() && !p.failures.empty();
    std::cout << std::left << std::setw(20) << p.pattern.label() << " c=" << p.chambers << " s=" << p.interval << '\n';
    for (const auto& f : p.failures)
      std::cout << "    u=" << to_string(f.u) << " lD=" << f.directed << " lT=" << f.undirected << '\n';
  }
  std::cout << "\nreference rows\n";
  for (const auto& r : table.rows) {
    std::cout << "  " << (r.row.family == Family::A ? "S_" : "B_") << r.row.n << ' ' << r.row.w << ' ' << r.row.u << ' '
              << r.row.directed << ' ' << r.row.undirected << "  " << row_status_name(r.status);
    if (r.status != RowStatus::Match) {
      if (r.directed) std::cout << "  recomputed lD=" << *r.directed << " lT=" << *r.undirected;
      if (r.separating_box)
        std::cout << "  u not below w: r_u(" << r.separating_box->p << "," << r.separating_box->q
                  << ")=" << r.separating_box->r;
    }
    std::cout << '\n';
  }
  for (const auto& p : table.patterns)
    for (const auto& f : p.unlisted)
      std::cout << "  unlisted " << p.pattern.label() << " u=" << to_string(f.u) << " lD=" << f.directed
                << " lT=" << f.undirected << '\n';
  std::cout << table.count(RowStatus::Match) << " match, " << table.count(RowStatus::ParityInconsistent)
            << " parity-inconsistent, " << table.count(RowStatus::NotBelow) << " not-below, "
            << table.count(RowStatus::Mismatch) << " mismatch\n";
  return all_non_hultman && table.count(RowStatus::Mismatch) == 0 ? kAgree : kViolation;
}

int run_chambers(const GroupArgs& g, const std::string& text) {
  const Family f = g.parsed();
  const Element w = parse_element(text, f, g.rank);
  const GroupContext ctx(f, g.rank);
  const auto planes = inversion_arrangement(w, ctx);
  const int dim = f == Family::A ? w.degree() : w.n();
  const auto poset = intersection_poset(planes, dim);
  std::cout << "|Inv(w)| = " << planes.size() << '\n';
  for (const auto& h : planes) std::cout << "  " << to_string(h) << '\n';
  const auto chi = poset.characteristic_polynomial();
  std::cout << "chi(t) coefficients, t^" << dim << " first:";
  for (int k = dim; k >= 0; --k) std::cout << ' ' << chi[k];
  std::cout << "\nflats = " << poset.flats.size() << "\nc(w) = " << poset.region_count() << '\n';
  return kAgree;
}

/// Rank implied by a window's length.
int rank_of(const std::string& text, Family f) {
  const auto window = text.find(',') != std::string::npos ? detail::parse_list(text) : detail::parse_compact(text);
  const int len = static_cast<int>(window.size());
  if (f == Family::B && len % 2) throw std::invalid_argument("a type B window has even length");
  return f == Family::B ? len / 2 : len;
}

int run_patterns(const std::string& host_text, const std::string& pattern_text, const std::string& pattern_family,
                 std::string host_family) {
  const Family pf = parse_family(pattern_family);
  if (host_family.empty()) host_family = pf == Family::B ? "B" : "A";
  const Family hf = parse_family(host_family);
  const Element host = parse_element(host_text, hf, rank_of(host_text, hf));
  const PatternSpec pattern{parse_element(pattern_text, pf, rank_of(pattern_text, pf))};
  const auto r = bp_contains(host, pattern);
  std::cout << to_string(host) << (r.contains ? " contains " : " avoids ") << pattern.label() << '\n';
  if (r.embedding) {
    std::cout << "embedding " << to_string(*r.embedding) << '\n';
    std::cout << "flattening " << to_string(flatten(host, *r.embedding)) << '\n';
  }
  return kAgree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hultman element classification in types A and B"};
  app.require_subcommand(1);

  GroupArgs classify_group, verify_group, chambers_group;
  std::string element, conditions = "1,2,3,4,5", json_out, verify_conditions = "1,2,3,4,5";
  bool explain = false, json = false, list = false;
  std::uint64_t hull_budget = kDefaultHullBudget;
  std::size_t sample_hull = 0;
  unsigned threads = 0;
  int max_a = 6, max_b = 5;
  std::string host, pattern, pattern_family = "A", host_family;

  auto* classify_cmd = app.add_subcommand("classify", "evaluate the five conditions for one element");
  classify_group.add_to(classify_cmd);
  classify_cmd->add_option("--element", element, "one-line window (a=10), or comma list")->required();
  classify_cmd->add_option("--conditions", conditions, "subset of 1,2,3,4,5");
  classify_cmd->add_flag("--explain", explain, "print E(w), E'(w), violations and witnesses");
  classify_cmd->add_flag("--json", json, "print the JSON report");
  classify_cmd->add_option("--hull-budget", hull_budget, "node budget for the hull search");

  auto* verify_cmd = app.add_subcommand("verify", "check agreement over a whole group");
  verify_group.add_to(verify_cmd);
  auto* sample_opt = verify_cmd->add_option("--sample-hull", sample_hull, "run the hull condition on N random elements");
  verify_cmd->add_option("--json", json_out, "write per-element reports to this file");
  verify_cmd->add_option("--conditions", verify_conditions, "subset of 1,2,3,4,5");
  verify_cmd->add_option("--hull-budget", hull_budget, "node budget for the hull search");
  verify_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  verify_cmd->add_flag("--list", list, "print a row per element");

  auto* minimal_cmd = app.add_subcommand("minimal-patterns", "search for BP-minimal non-(pseudo-)inclusion elements");
  minimal_cmd->add_option("--max-a", max_a, "largest S_n")->check(CLI::Range(2, 7));
  minimal_cmd->add_option("--max-b", max_b, "largest B_n")->check(CLI::Range(1, 6));

  auto* witnesses_cmd = app.add_subcommand("witnesses", "recompute the distance witnesses of the listed patterns");

  auto* chambers_cmd = app.add_subcommand("chambers", "inversion arrangement and its chamber count");
  chambers_group.add_to(chambers_cmd);
  chambers_cmd->add_option("--element", element, "one-line window")->required();

  auto* patterns_cmd = app.add_subcommand("patterns", "BP containment of one pattern");
  patterns_cmd->add_option("--host", host, "host window")->required();
  patterns_cmd->add_option("--pattern", pattern, "pattern window")->required();
  patterns_cmd->add_option("--family", pattern_family, "family of the pattern")->check(CLI::IsMember({"A", "B", "a", "b"}));
  patterns_cmd->add_option("--host-family", host_family, "family of the host (default: B for B patterns, else A)")
      ->check(CLI::IsMember({"A", "B", "a", "b"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) return run_classify(classify_group, element, conditions, explain, json, hull_budget);
    if (*verify_cmd)
      return run_verify(verify_group, *sample_opt ? std::optional(sample_hull) : std::nullopt, json_out,
                        verify_conditions, hull_budget, threads, list);
    if (*minimal_cmd) return run_minimal(max_a, max_b);
    if (*witnesses_cmd) return run_witnesses();
    if (*chambers_cmd) return run_chambers(chambers_group, element);
    if (*patterns_cmd) return run_patterns(host, pattern, pattern_family, host_family);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}
