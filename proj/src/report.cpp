#include "geomqm/report.hpp"

#include <sstream>
#include <stdexcept>

#include "geomqm/io.hpp"

namespace geomqm {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") {
    return OutputFormat::Text;
  }
  if (name == "csv") {
    return OutputFormat::Csv;
  }
  if (name == "json-like") {
    return OutputFormat::JsonLike;
  }
  throw std::invalid_argument("unknown output format: " + name);
}

void Report::add(const std::string& key, const std::string& value) {
  body.emplace_back(key, value);
}

void Report::add(const std::string& key, double value) {
  body.emplace_back(key, format_double(value));
}

void Report::add(const std::string& key, long value) {
  body.emplace_back(key, std::to_string(value));
}

void Report::add_matrix(const std::string& prefix, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::string row;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) {
        row += ' ';
      }
      row += format_double(m(r, c));
    }
    body.emplace_back(prefix + "[" + std::to_string(r) + "]", row);
  }
}

void Report::add_tolerance(const std::string& key, double value) {
  tolerances.emplace_back(key, format_double(value));
}

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text:
      out << "command: " << report.command << "\n";
      out << "inputs: " << report.input_digest << "\n";
      for (const auto& [key, value] : report.body) {
        out << key << ": " << value << "\n";
      }
      for (const auto& [key, value] : report.tolerances) {
        out << "tol." << key << ": " << value << "\n";
      }
      break;
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"key", "value"});
      rows.push_back({"command", report.command});
      rows.push_back({"inputs", report.input_digest});
      for (const auto& [key, value] : report.body) {
        rows.push_back({key, value});
      }
      for (const auto& [key, value] : report.tolerances) {
        rows.push_back({"tol." + key, value});
      }
      out << render_csv_table(rows);
      break;
    }
    case OutputFormat::JsonLike:
      out << "{\n";
      out << "  \"command\": \"" << escape_json(report.command) << "\",\n";
      out << "  \"inputs\": \"" << escape_json(report.input_digest) << "\",\n";
      out << "  \"body\": {\n";
      for (size_t i = 0; i < report.body.size(); ++i) {
        out << "    \"" << escape_json(report.body[i].first) << "\": \""
            << escape_json(report.body[i].second) << "\""
            << (i + 1 < report.body.size() ? "," : "") << "\n";
      }
      out << "  },\n";
      out << "  \"tolerances\": {\n";
      for (size_t i = 0; i < report.tolerances.size(); ++i) {
        out << "    \"" << escape_json(report.tolerances[i].first) << "\": \""
            << escape_json(report.tolerances[i].second) << "\""
            << (i + 1 < report.tolerances.size() ? "," : "") << "\n";
      }
      out << "  }\n";
      out << "}\n";
      break;
  }
  return out.str();
}

std::string render_csv_table(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) {
        out << ',';
      }
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string werner_table_csv(const std::vector<WernerRow>& rows) {
  std::vector<std::vector<std::string>> table;
  table.push_back({"x", "statistic", "bound", "verdict"});
  for (const WernerRow& row : rows) {
    table.push_back({format_double(row.x), format_double(row.statistic),
                     format_double(row.bound), to_string(row.verdict)});
  }
  return render_csv_table(table);
}

void add_report_blocks(Report& report, const SeparabilityReport& sep) {
  report.add("verdict", to_string(sep.verdict));
  report.add("criterion", sep.criterion);
  report.add("statistic", sep.statistic);
  report.add("bound", sep.bound);
  report.add("sym_block_norm.a", sep.sym_blocks.a);
  report.add("sym_block_norm.b", sep.sym_blocks.b);
  report.add("sym_block_norm.ab", sep.sym_blocks.ab);
  report.add("antisym_block_norm.a", sep.antisym_blocks.a);
  report.add("antisym_block_norm.b", sep.antisym_blocks.b);
  report.add("antisym_block_norm.ab", sep.antisym_blocks.ab);
  if (sep.schmidt_rank) {
    report.add("schmidt_rank", static_cast<long>(*sep.schmidt_rank));
  }
}

}  // namespace geomqm
