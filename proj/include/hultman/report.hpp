#pragma once

// JSON and text rendering of classification reports.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hultman/classify.hpp"

namespace hultman {

inline nlohmann::json to_json(const ClassificationReport& r) {
  using nlohmann::json;
  json conditions = json::object();
  for (Condition c : kAllConditions) {
    const auto& o = r.outcome(c);
    conditions[std::string(condition_key(c))] = o.value ? json(*o.value) : json(nullptr);
  }
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"u", to_string(w.u)}, {"lD", w.directed}, {"lT", w.undirected}});
  json violations = json::array();
  for (const auto& b : r.violations) violations.push_back({{"p", b.p}, {"q", b.q}, {"r", b.r}});

  json out = {
      {"element", to_string(r.element)},
      {"family", std::string(family_name(r.element.family()))},
      {"rank", r.element.n()},
      {"conditions", conditions},
      {"c", r.chambers ? json(*r.chambers) : json(nullptr)},
      {"s", r.interval ? json(*r.interval) : json(nullptr)},
      {"witnesses", witnesses},
      {"violations", violations},
      {"matched_pattern", r.matched_pattern ? json(r.matched_pattern->pattern.label()) : json(nullptr)},
  };
  json errors = json::object();
  for (Condition c : kAllConditions)
    if (!r.outcome(c).error.empty()) errors[std::string(condition_key(c))] = r.outcome(c).error;
  if (!errors.empty()) out["errors"] = errors;
  return out;
}

inline std::string outcome_text(const ConditionOutcome& o) {
  if (o.value) return *o.value ? "yes" : "no";
  return o.error.empty() ? "-" : "budget";
}

inline std::string boxes_text(const std::vector<CoessBox>& boxes) {
  std::string s = "{";
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(boxes[i].p) + "," + std::to_string(boxes[i].q) + ";r=" + std::to_string(boxes[i].r) + ")";
  }
  return s + "}";
}

/// One line per element: window and the five condition values.
inline void print_report_row(std::ostream& os, const ClassificationReport& r) {
  os << std::left << std::setw(12) << to_string(r.element);
  for (Condition c : kAllConditions) os << ' ' << std::setw(8) << outcome_text(r.outcome(c));
  if (r.chambers && r.interval) os << "  c=" << *r.chambers << " s=" << *r.interval;
  os << (r.consistent() ? "" : "  DISAGREE") << '\n';
}

inline void print_report_header(std::ostream& os) {
  os << std::left << std::setw(12) << "element";
  for (const char* h : {"c=s", "dist", "incl", "hull", "avoid"}) os << ' ' << std::setw(8) << h;
  os << '\n';
}

}  // namespace hultman
