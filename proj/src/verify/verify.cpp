#include "verify/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>

namespace framekit::verify {

const std::vector<Criterion>& registry() {
  static const std::vector<Criterion> all = [] {
    std::vector<Criterion> out;
    add_basic_criteria(out);
    add_outer_criteria(out);
    add_geometry_criteria(out);
    std::sort(out.begin(), out.end(), [](const Criterion& a, const Criterion& b) { return a.number < b.number; });
    return out;
  }();
  return all;
}

namespace {

std::vector<Row> run_group(const Group& g) {
  try {
    std::vector<Row> rows = g.run();
    for (Row& r : rows)
      if (r.group.empty()) r.group = g.id;
    if (rows.empty()) return {Row{g.id, "no rows", false, 0.0, 0.0, 0.0, "group produced no checks"}};
    return rows;
  } catch (const std::exception& e) {
    return {Row{g.id, "exception", false, 0.0, 0.0, 0.0, e.what()}};
  }
}

CriterionResult run_groups(const Criterion& c, const std::vector<const Group*>& groups) {
  CriterionResult r{c.number, c.id, c.title, true, 0.0, {}};
  const auto start = std::chrono::steady_clock::now();
  for (const Group* g : groups) {
    for (Row& row : run_group(*g)) {
      r.pass = r.pass && row.pass;
      r.rows.push_back(std::move(row));
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

CriterionResult run(const Criterion& c) {
  std::vector<const Group*> groups;
  for (const Group& g : c.groups) groups.push_back(&g);
  return run_groups(c, groups);
}

std::vector<CriterionResult> run_selected(const std::string& only) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : registry()) {
    const bool whole = only.empty() || only == c.id || only == std::to_string(c.number);
    std::vector<const Group*> groups;
    for (const Group& g : c.groups)
      if (whole || g.id == only) groups.push_back(&g);
    if (!groups.empty()) out.push_back(run_groups(c, groups));
  }
  return out;
}

Row at_most(std::string group, std::string label, double measured, double bound, std::string note) {
  return Row{std::move(group), std::move(label), measured <= bound, measured, bound, 0.0, std::move(note)};
}

Row near(std::string group, std::string label, double measured, double expected, double tol, std::string note) {
  const bool ok = std::abs(measured - expected) <= tol;
  return Row{std::move(group), std::move(label), ok, measured, expected, tol, std::move(note)};
}

Row count_zero(std::string group, std::string label, long failures, long trials, std::string note) {
  if (note.empty()) note = std::to_string(failures) + " of " + std::to_string(trials) + " failed";
  return Row{std::move(group), std::move(label), failures == 0, static_cast<double>(failures), 0.0, 0.0,
             std::move(note)};
}

}  // namespace framekit::verify
