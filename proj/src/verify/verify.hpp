#pragma once

#include <functional>
#include <string>
#include <vector>

namespace framekit::verify {

struct Row {
  std::string group;
  std::string label;
  bool pass = false;
  double measured = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  std::string note;
};

struct Group {
  std::string id;
  std::function<std::vector<Row>()> run;
};

struct Criterion {
  int number = 0;
  std::string id;
  std::string title;
  std::vector<Group> groups;
};

/// Criteria 1..14, in order. Criterion 15 is the end-to-end CLI run and is
/// reported by run_all / the acceptance binary, not registered here.
const std::vector<Criterion>& registry();

struct CriterionResult {
  int number = 0;
  std::string id;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::vector<Row> rows;
};

/// Runs the groups of one criterion. An exception escaping a group becomes a
/// failing row carrying the message.
CriterionResult run(const Criterion& c);

/// Runs the groups whose id, criterion id or criterion number equals `only`
/// (everything when empty). Returns nothing when the selector matches nothing.
std::vector<CriterionResult> run_selected(const std::string& only);

// row helpers
Row at_most(std::string group, std::string label, double measured, double bound, std::string note = {});
Row near(std::string group, std::string label, double measured, double expected, double tol, std::string note = {});
Row count_zero(std::string group, std::string label, long failures, long trials, std::string note = {});

// registration, one per source file
void add_basic_criteria(std::vector<Criterion>& out);     // 1-5
void add_outer_criteria(std::vector<Criterion>& out);     // 6-9
void add_geometry_criteria(std::vector<Criterion>& out);  // 10-14

}  // namespace framekit::verify
