#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geomqm/linalg.hpp"
#include "geomqm/pullback.hpp"

namespace geomqm {

// Structured command output. Bodies are ordered key-value lists of
// pre-formatted strings, so every renderer is byte-deterministic for
// identical inputs.

enum class OutputFormat { Text, Csv, JsonLike };

OutputFormat parse_format(const std::string& name);

struct Report {
  std::string command;
  std::string input_digest;
  std::vector<std::pair<std::string, std::string>> body;
  std::vector<std::pair<std::string, std::string>> tolerances;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, long value);
  /// One row per key "<prefix>[r]", entries space-separated.
  void add_matrix(const std::string& prefix, const Eigen::MatrixXd& m);
  void add_tolerance(const std::string& key, double value);
};

std::string render(const Report& report, OutputFormat format);

/// Rows of a CSV table; the first row is the header. Cells are written
/// verbatim (no cell in this project needs quoting), LF endings.
std::string render_csv_table(const std::vector<std::vector<std::string>>& rows);

std::string werner_table_csv(const std::vector<WernerRow>& rows);

void add_report_blocks(Report& report, const SeparabilityReport& sep);

}  // namespace geomqm
