#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochkit/dgalg.hpp"

namespace hochkit {

/// Parses the AlgebraSpec text format:
///
///   # comment
///   field Q                     (or: field Fp 5)
///   basis 1:0 x:0 xi:-1         (label:degree, repeatable)
///   unit 1
///   x * x = 0
///   xi * x = -1/2*x + 3*y
///   d xi = x
///
/// Unlisted products are zero except those with the unit. The result is
/// validated. Syntax errors throw ParseError with line and column; axiom
/// failures throw InvalidAlgebra naming the axiom and its witness.
DgAlgebra parse_algebra(const std::string& text);
/// Inverse of parse_algebra up to formatting.
std::string serialize_algebra(const DgAlgebra& a);

/// A file path holding an AlgebraSpec, or a builtin() name over `field`.
DgAlgebra resolve_algebra(const std::string& name_or_path, Field field);

struct Check {
  std::string name;
  std::optional<std::vector<long>> expected;
  std::optional<std::vector<long>> actual;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string id;
  std::string command;
  /// Truncation parameters in effect (max degree, bar level, window, ...).
  std::vector<std::pair<std::string, long>> window;
  std::vector<Check> checks;
  double seconds = 0;
  /// Zero means no limit.
  double time_limit = 0;

  bool within_time() const { return time_limit <= 0 || seconds <= time_limit; }
  bool pass() const;
};

/// {"schema": "hochkit/1", "pass": ..., "reports": [...]}. Without
/// timings the output is byte-identical across runs.
std::string to_json(const std::vector<Report>& reports, bool timings = true);
std::string to_table(const std::vector<Report>& reports);

struct ScenarioOptions {
  std::string algebra = "dual_numbers";
  std::string a = "dual_numbers";
  std::string b = "dual_numbers";
  Field field;
  int max_degree = 4;
  int window = 6;
  int twist = 0;
  int d1 = 0;
  int d2 = 0;
  int matrix_size = 2;
  /// For suite: 0 runs every criterion.
  int criterion = 0;
};

std::vector<std::string> scenario_names();
/// Runs one subcommand. Bad options throw std::invalid_argument; library
/// failures inside a scenario (truncation, caps) become failed checks.
std::vector<Report> run_scenario(const std::string& command, const ScenarioOptions& options);

constexpr int kCriteria = 11;
/// Acceptance criterion 1..11 as a single report with its time limit.
Report run_criterion(int id);

/// Independent oracles used by the reports.
/// k[x]/(x^n) via its 2-periodic resolution: HH^m = HH_m, dims for m < count.
std::vector<long> periodic_resolution_oracle(int n, Field field, int count);
/// (h^0, h^1) of O(d) on P^1 by counting Laurent monomials.
std::pair<long, long> monomial_oracle(int d);

}  // namespace hochkit
