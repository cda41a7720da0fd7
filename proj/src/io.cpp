#include "geomqm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace geomqm {

namespace {

std::string position_prefix(const std::string& origin, int line, int column) {
  if (line > 0) {
    return origin + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
  return origin;
}

// 1-based line/column of a byte offset, for syntax diagnostics.
std::pair<int, int> locate(const std::string& text, size_t byte) {
  int line = 1;
  int column = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const nlohmann::json& require_field(const nlohmann::json& root, const char* key,
                                    const std::string& origin) {
  auto it = root.find(key);
  if (it == root.end()) {
    throw ParseError(origin, 0, 0, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

}  // namespace

ParseError::ParseError(std::string origin, int line, int column, const std::string& what)
    : std::runtime_error(position_prefix(origin, line, column) + ": " + what),
      line_(line),
      column_(column) {}

StateFile parse_state_text(const std::string& text, const std::string& origin) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    // Strip nlohmann's bracketed prefix; the position is reported separately.
    if (auto pos = msg.find("] "); pos != std::string::npos) {
      msg = msg.substr(pos + 2);
    }
    throw ParseError(origin, line, column, msg);
  }
  if (!root.is_object()) {
    throw ParseError(origin, 1, 1, "top-level value must be an object");
  }

  StateFile out;
  const auto& version = require_field(root, "format_version", origin);
  if (!version.is_string() || version.get<std::string>() != "1") {
    throw ParseError(origin, 0, 0, "unsupported format_version (expected \"1\")");
  }
  out.format_version = "1";

  const auto& kind = require_field(root, "kind", origin);
  if (!kind.is_string()) {
    throw ParseError(origin, 0, 0, "field \"kind\" must be a string");
  }
  out.kind = kind.get<std::string>();
  if (out.kind != "pure" && out.kind != "density" && out.kind != "operator") {
    throw ParseError(origin, 0, 0,
                     "field \"kind\" must be \"pure\", \"density\", or \"operator\"");
  }

  if (auto it = root.find("dims"); it != root.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
        !(*it)[1].is_number_integer()) {
      throw ParseError(origin, 0, 0, "field \"dims\" must be a pair of integers");
    }
    long n_a = (*it)[0].get<long>();
    long n_b = (*it)[1].get<long>();
    if (n_a < 2 || n_b < 2) {
      throw ParseError(origin, 0, 0, "field \"dims\" entries must be at least 2");
    }
    out.dims = BipartiteDims(n_a, n_b);
  }

  const auto& data = require_field(root, "data", origin);
  if (!data.is_array() || data.empty()) {
    throw ParseError(origin, 0, 0, "field \"data\" must be a non-empty array");
  }
  out.data.reserve(data.size());
  for (const auto& entry : data) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw ParseError(origin, 0, 0, "data entries must be [re, im] number pairs");
    }
    out.data.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path, 0, 0, "cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str(), path);
}

std::string state_file_text(const StateFile& file) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format_version\": \"" << file.format_version << "\",\n";
  out << "  \"kind\": \"" << file.kind << "\",\n";
  if (file.dims) {
    out << "  \"dims\": [" << file.dims->n_a << ", " << file.dims->n_b << "],\n";
  }
  out << "  \"data\": [\n";
  for (size_t i = 0; i < file.data.size(); ++i) {
    out << "    [" << format_double(file.data[i].real()) << ", "
        << format_double(file.data[i].imag()) << "]"
        << (i + 1 < file.data.size() ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

void write_state_file(const std::string& path, const StateFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << state_file_text(file);
}

namespace {

std::vector<Complex> flatten(const Matrix& m) {
  std::vector<Complex> data;
  data.reserve(static_cast<size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back(m(i, j));
    }
  }
  return data;
}

Matrix unflatten_square(const std::vector<Complex>& data, const std::string& what) {
  auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(data.size()))));
  if (n < 1 || static_cast<size_t>(n) * static_cast<size_t>(n) != data.size()) {
    throw std::invalid_argument(what + ": data length is not a perfect square");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = data[static_cast<size_t>(i * n + j)];
    }
  }
  return m;
}

}  // namespace

StateFile make_pure_file(const PureState& psi, std::optional<BipartiteDims> dims) {
  StateFile file;
  file.format_version = "1";
  file.kind = "pure";
  file.dims = dims;
  file.data.assign(psi.amplitudes.data(), psi.amplitudes.data() + psi.dim());
  return file;
}

StateFile make_density_file(const DensityState& rho, std::optional<BipartiteDims> dims) {
  StateFile file;
  file.format_version = "1";
  file.kind = "density";
  file.dims = dims;
  file.data = flatten(rho.matrix());
  return file;
}

StateFile make_operator_file(const HermitianOperator& op) {
  StateFile file;
  file.format_version = "1";
  file.kind = "operator";
  file.data = flatten(op.matrix);
  return file;
}

PureState to_pure_state(const StateFile& file) {
  if (file.kind != "pure") {
    throw std::invalid_argument("state file: expected kind \"pure\", got \"" +
                                file.kind + "\"");
  }
  Vector z(static_cast<Eigen::Index>(file.data.size()));
  for (size_t i = 0; i < file.data.size(); ++i) {
    z(static_cast<Eigen::Index>(i)) = file.data[i];
  }
  return PureState(std::move(z));
}

DensityState to_density_state(const StateFile& file, double psd_tol, double trace_tol) {
  if (file.kind != "density") {
    throw std::invalid_argument("state file: expected kind \"density\", got \"" +
                                file.kind + "\"");
  }
  return DensityState(unflatten_square(file.data, "density file"), psd_tol, trace_tol);
}

HermitianOperator to_operator(const StateFile& file, double herm_tol) {
  if (file.kind != "operator") {
    throw std::invalid_argument("state file: expected kind \"operator\", got \"" +
                                file.kind + "\"");
  }
  return HermitianOperator(unflatten_square(file.data, "operator file"), herm_tol);
}

std::string format_double(double x) {
  if (x == 0.0) {
    x = 0.0;  // normalize -0
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.14e", x);
  return buf;
}

std::string fnv1a_digest(const std::string& bytes) {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= static_cast<uint64_t>(c);
    hash *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace geomqm
