#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geomqm/states.hpp"

namespace geomqm {

// State-file format, version "1": a JSON object with
//   format_version : "1"
//   kind           : "pure" | "density" | "operator"
//   dims           : [n_a, n_b]            (optional bipartite split)
//   data           : [[re, im], ...]        (row-major complex entries)
// A pure file carries a vector, density and operator files a square matrix.
// Numbers are written with 15 significant digits so emitted files and tables
// parse back to better than 1e-14 relative.

/// Structural failure while reading: unreadable file, bad syntax, or a schema
/// violation. Position is 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string origin, int line, int column, const std::string& what);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct StateFile {
  std::string format_version;
  std::string kind;
  std::optional<BipartiteDims> dims;
  std::vector<Complex> data;
};

/// `origin` names the source in diagnostics (a path, or "<input>").
StateFile parse_state_text(const std::string& text, const std::string& origin);
StateFile read_state_file(const std::string& path);
void write_state_file(const std::string& path, const StateFile& file);
std::string state_file_text(const StateFile& file);

StateFile make_pure_file(const PureState& psi,
                         std::optional<BipartiteDims> dims = std::nullopt);
StateFile make_density_file(const DensityState& rho,
                            std::optional<BipartiteDims> dims = std::nullopt);
StateFile make_operator_file(const HermitianOperator& op);

/// Validated conversions; throw std::invalid_argument when the kind does not
/// match or the payload fails the domain checks.
PureState to_pure_state(const StateFile& file);
DensityState to_density_state(const StateFile& file, double psd_tol = kPsdTol,
                              double trace_tol = kTraceTol);
HermitianOperator to_operator(const StateFile& file, double herm_tol = kHermiticityTol);

/// Fixed scientific rendering, 15 significant digits; -0 normalized to 0.
std::string format_double(double x);

/// FNV-1a 64-bit over raw bytes, rendered as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

}  // namespace geomqm
