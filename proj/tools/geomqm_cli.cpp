// Command-line front end: reads states and Hamiltonians from version-1 state
// files, runs the library analyses, and emits deterministic reports and CSV
// tables.
//
// Exit codes: 0 success, 2 parse/usage error, 3 validation error,
// 4 criterion inapplicable to the given input.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geomqm/dynamics.hpp"
#include "geomqm/gns.hpp"
#include "geomqm/io.hpp"
#include "geomqm/pullback.hpp"
#include "geomqm/report.hpp"
#include "geomqm/states.hpp"

namespace {

using namespace geomqm;

struct Inapplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "text";
  double zero_tol = kZeroBlockTol;
  double psd_tol = kPsdTol;
  double trace_tol = kTraceTol;
  double herm_tol = kHermiticityTol;
};

struct LoadedFile {
  StateFile file;
  std::string digest;
};

LoadedFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path, 0, 0, "cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  return LoadedFile{parse_state_text(bytes, path), fnv1a_digest(bytes)};
}

void echo_tolerances(Report& report, const GlobalOptions& g) {
  report.add_tolerance("zero_block", g.zero_tol);
  report.add_tolerance("psd", g.psd_tol);
  report.add_tolerance("trace", g.trace_tol);
  report.add_tolerance("hermiticity", g.herm_tol);
}

BipartiteDims resolve_dims(const StateFile& file, const std::vector<long>& flag,
                           const char* who) {
  if (flag.size() == 2) {
    return BipartiteDims(flag[0], flag[1]);
  }
  if (file.dims) {
    return *file.dims;
  }
  throw CLI::ValidationError(std::string(who) +
                             ": bipartite dims required (file \"dims\" or --dims)");
}

void emit(const Report& report, const GlobalOptions& g) {
  std::cout << render(report, parse_format(g.format));
}

// ---- tensors ----------------------------------------------------------

void run_tensors(const GlobalOptions& g, const std::string& path,
                 const std::string& rep_kind, const std::vector<long>& dims_flag) {
  LoadedFile in = load(path);
  if (in.file.kind != "pure" && in.file.kind != "density") {
    throw std::invalid_argument("tensors: input must be a pure or density state");
  }
  Report report;
  report.command = "tensors";
  report.input_digest = in.digest;
  report.add("kind", in.file.kind);
  report.add("rep", rep_kind);

  CoefficientMatrix coeffs{Eigen::MatrixXd(), Eigen::MatrixXd(), std::nullopt};
  auto compute = [&](const LieAlgebraRep& rep) {
    if (in.file.kind == "pure") {
      coeffs = pure_pullback(to_pure_state(in.file), rep);
    } else {
      coeffs = mixed_tensor(to_density_state(in.file, g.psd_tol, g.trace_tol), rep);
    }
  };

  if (rep_kind == "su") {
    Eigen::Index n = in.file.kind == "pure"
                         ? static_cast<Eigen::Index>(in.file.data.size())
                         : static_cast<Eigen::Index>(
                               std::llround(std::sqrt(double(in.file.data.size()))));
    compute(su_basis(n));
    report.add("n", static_cast<long>(n));
  } else {
    BipartiteDims dims = resolve_dims(in.file, dims_flag, "tensors");
    compute(local_product_rep(dims));
    report.add("dims", std::to_string(dims.n_a) + "x" + std::to_string(dims.n_b));
  }

  report.add_matrix("sym", coeffs.sym);
  report.add_matrix("antisym", coeffs.antisym);
  if (coeffs.partition) {
    CoefficientBlocks blocks = block_decompose(coeffs);
    report.add("sym_block_norm.a", blocks.sym.a.norm());
    report.add("sym_block_norm.b", blocks.sym.b.norm());
    report.add("sym_block_norm.ab", blocks.sym.ab.norm());
    report.add("antisym_block_norm.a", blocks.antisym.a.norm());
    report.add("antisym_block_norm.b", blocks.antisym.b.norm());
    report.add("antisym_block_norm.ab", blocks.antisym.ab.norm());
  }
  echo_tolerances(report, g);
  emit(report, g);
}

// ---- separability -----------------------------------------------------

void run_separability(const GlobalOptions& g, const std::string& path,
                      const std::vector<long>& dims_flag) {
  LoadedFile in = load(path);
  if (in.file.kind != "pure" && in.file.kind != "density") {
    throw std::invalid_argument("separability: input must be a pure or density state");
  }
  Report report;
  report.command = "separability";
  report.input_digest = in.digest;
  BipartiteDims dims = resolve_dims(in.file, dims_flag, "separability");
  report.add("kind", in.file.kind);
  report.add("dims", std::to_string(dims.n_a) + "x" + std::to_string(dims.n_b));

  SeparabilityReport sep;
  if (in.file.kind == "pure") {
    sep = separability_pure(to_pure_state(in.file), dims, g.zero_tol);
  } else {
    if (dims.n_a != dims.n_b) {
      throw Inapplicable(
          "separability: the mixed-state criterion needs a square bipartition");
    }
    sep = devicente_check(to_density_state(in.file, g.psd_tol, g.trace_tol), dims);
  }
  add_report_blocks(report, sep);
  echo_tolerances(report, g);
  emit(report, g);
}

// ---- werner-scan ------------------------------------------------------

void run_werner_scan(const GlobalOptions& g, double from, double to, long steps,
                     const std::string& out_path) {
  if (!(0.0 <= from && from <= to && to <= 1.0)) {
    throw CLI::ValidationError("werner-scan: need 0 <= from <= to <= 1");
  }
  if (steps < 1) {
    throw CLI::ValidationError("werner-scan: steps must be at least 1");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(steps));
  if (steps == 1) {
    grid.push_back(from);
  } else {
    for (long i = 0; i < steps; ++i) {
      grid.push_back(from + (to - from) * static_cast<double>(i) /
                                static_cast<double>(steps - 1));
    }
  }
  std::string csv = werner_table_csv(werner_scan(grid));
  if (out_path.empty()) {
    std::cout << csv;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + out_path);
  }
  out << csv;

  Report report;
  report.command = "werner-scan";
  std::string params = "from=" + format_double(from) + ";to=" + format_double(to) +
                       ";steps=" + std::to_string(steps);
  report.input_digest = fnv1a_digest(params);
  report.add("from", from);
  report.add("to", to);
  report.add("steps", steps);
  report.add("rows", steps);
  report.add("csv_digest", fnv1a_digest(csv));
  echo_tolerances(report, g);
  emit(report, g);
}

// ---- evolve -----------------------------------------------------------

std::vector<double> time_grid(double t_max, long points) {
  if (t_max == 0.0 || points == 1) {
    return {0.0};
  }
  std::vector<double> times;
  times.reserve(static_cast<size_t>(points));
  for (long i = 0; i < points; ++i) {
    times.push_back(t_max * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  return times;
}

void run_evolve(const GlobalOptions& g, const std::string& h_path,
                const std::string& psi_path, double t_max, double step,
                const std::string& mode, long points, double hbar,
                const std::string& out_path) {
  if (t_max < 0.0) {
    throw CLI::ValidationError("evolve: t-max must be nonnegative");
  }
  if (!(step > 0.0)) {
    throw CLI::ValidationError("evolve: step must be positive");
  }
  if (points < 1) {
    throw CLI::ValidationError("evolve: points must be at least 1");
  }
  LoadedFile h_in = load(h_path);
  LoadedFile psi_in = load(psi_path);
  HamiltonianSpec spec(to_operator(h_in.file, g.herm_tol), hbar);
  PureState psi0 = to_pure_state(psi_in.file);
  if (spec.h.dim() != psi0.dim()) {
    throw std::invalid_argument("evolve: Hamiltonian and state dimensions differ");
  }
  if (mode != "schrodinger" && psi0.dim() != 2) {
    throw Inapplicable("evolve: mode \"" + mode + "\" needs a 2-level system");
  }
  std::vector<double> times = time_grid(t_max, points);

  std::vector<std::vector<std::string>> rows;
  double max_deviation = 0.0;
  bool two_level = psi0.dim() == 2;

  std::vector<std::string> header{"t"};
  if (mode != "riccati") {
    for (Eigen::Index i = 0; i < psi0.dim(); ++i) {
      header.push_back("psi" + std::to_string(i) + "_re");
      header.push_back("psi" + std::to_string(i) + "_im");
    }
    if (two_level) {
      header.insert(header.end(), {"bx", "by", "bz"});
    }
  }
  if (mode != "schrodinger") {
    header.insert(header.end(), {"chart", "value_re", "value_im"});
    if (mode == "riccati") {
      header.insert(header.end(), {"bx", "by", "bz"});
    }
  }
  if (mode == "both") {
    header.push_back("deviation");
  }
  rows.push_back(header);

  StateTrajectory exact;
  RiccatiTrajectory projective;
  if (mode != "riccati") {
    exact = schrodinger_evolve(spec, psi0, times);
  }
  if (mode != "schrodinger") {
    projective = riccati_evolve(spec, project_to_chart(psi0), times, step);
  }

  for (size_t i = 0; i < times.size(); ++i) {
    std::vector<std::string> row{format_double(times[i])};
    if (mode != "riccati") {
      const PureState& st = exact.states[i];
      for (Eigen::Index c = 0; c < st.dim(); ++c) {
        row.push_back(format_double(st.amplitudes(c).real()));
        row.push_back(format_double(st.amplitudes(c).imag()));
      }
      if (two_level) {
        Eigen::Vector3d b = bloch_point(st);
        row.insert(row.end(),
                   {format_double(b.x()), format_double(b.y()), format_double(b.z())});
      }
    }
    if (mode != "schrodinger") {
      const RiccatiChart& pt = projective.points[i];
      row.push_back(pt.chart == Chart::Xi ? "xi" : "eta");
      row.push_back(format_double(pt.value.real()));
      row.push_back(format_double(pt.value.imag()));
      if (mode == "riccati") {
        Eigen::Vector3d b = bloch_point(pt);
        row.insert(row.end(),
                   {format_double(b.x()), format_double(b.y()), format_double(b.z())});
      }
    }
    if (mode == "both") {
      double dev = chordal_distance(projective.points[i], exact.states[i]);
      max_deviation = std::max(max_deviation, dev);
      row.push_back(format_double(dev));
    }
    rows.push_back(std::move(row));
  }

  std::string csv = render_csv_table(rows);
  if (out_path.empty()) {
    std::cout << csv;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + out_path);
  }
  out << csv;

  Report report;
  report.command = "evolve";
  report.input_digest = h_in.digest + "+" + psi_in.digest;
  report.add("mode", mode);
  report.add("t_max", t_max);
  report.add("step", step);
  report.add("hbar", hbar);
  report.add("rows", static_cast<long>(times.size()));
  if (mode == "both") {
    report.add("max_deviation", max_deviation);
  }
  report.add("csv_digest", fnv1a_digest(csv));
  echo_tolerances(report, g);
  emit(report, g);
}

// ---- gns --------------------------------------------------------------

void run_gns(const GlobalOptions& g, const std::string& path) {
  LoadedFile in = load(path);
  Report report;
  report.command = "gns";
  report.input_digest = in.digest;
  report.add("kind", in.file.kind);

  DensityState rho = [&] {
    if (in.file.kind == "pure") {
      return projector(to_pure_state(in.file));
    }
    if (in.file.kind == "density") {
      return to_density_state(in.file, g.psd_tol, g.trace_tol);
    }
    throw std::invalid_argument("gns: input must be a pure or density state");
  }();

  GnsResult gns = gns_construct(rho);
  EigResult eig = herm_eig(HermitianOperator(gns.gram));
  report.add("n", static_cast<long>(rho.dim()));
  report.add("ideal_dim", static_cast<long>(gns.ideal_dim));
  report.add("hilbert_dim", static_cast<long>(gns.hilbert_dim));
  report.add("gram_eig_min", eig.values(0));
  report.add("gram_eig_max", eig.values(eig.values.size() - 1));
  if (gns.hilbert_dim > 0) {
    report.add("gram_eig_smallest_nonnull", eig.values(gns.ideal_dim));
  }
  std::string basis;
  for (size_t i = 0; i < gns.quotient_basis.size(); ++i) {
    if (i > 0) {
      basis += ' ';
    }
    basis += std::to_string(gns.quotient_basis[i]);
  }
  report.add("quotient_basis", basis);
  report.add_tolerance("gns_ideal_rel", kGnsIdealRelTol);
  echo_tolerances(report, g);
  emit(report, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric quantum-mechanics toolkit"};
  app.require_subcommand(1);
  // Inherited by every subcommand so the global options below are accepted
  // in any position, including after the subcommand name.
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json-like"}))
      ->capture_default_str();
  app.add_option("--tol", g.zero_tol, "Relative zero-block tolerance")
      ->capture_default_str();
  app.add_option("--psd-tol", g.psd_tol, "Density-matrix positivity tolerance")
      ->capture_default_str();
  app.add_option("--trace-tol", g.trace_tol, "Density-matrix trace tolerance")
      ->capture_default_str();
  app.add_option("--herm-tol", g.herm_tol, "Hermiticity tolerance")
      ->capture_default_str();

  std::string state_path;
  std::string rep_kind = "local-product";
  std::vector<long> dims_flag;
  CLI::App* tensors = app.add_subcommand(
      "tensors", "Pull-back coefficient matrices of a state");
  tensors->add_option("state", state_path, "State file")->required();
  tensors->add_option("--rep", rep_kind, "Generator family")
      ->check(CLI::IsMember({"su", "local-product"}))
      ->capture_default_str();
  tensors->add_option("--dims", dims_flag, "Bipartite dims n_a n_b")->expected(2);
  tensors->callback([&] { run_tensors(g, state_path, rep_kind, dims_flag); });

  std::string sep_path;
  std::vector<long> sep_dims;
  CLI::App* separability =
      app.add_subcommand("separability", "Separability criteria for a state");
  separability->add_option("state", sep_path, "State file")->required();
  separability->add_option("--dims", sep_dims, "Bipartite dims n_a n_b")->expected(2);
  separability->callback([&] { run_separability(g, sep_path, sep_dims); });

  double from = 0.0;
  double to = 1.0;
  long steps = 0;
  std::string scan_out;
  CLI::App* scan = app.add_subcommand(
      "werner-scan", "Mixed-state criterion across the Werner family");
  scan->add_option("--from", from, "First mixing parameter")->capture_default_str();
  scan->add_option("--to", to, "Last mixing parameter")->capture_default_str();
  scan->add_option("--steps", steps, "Number of grid points")->required();
  scan->add_option("--out", scan_out, "CSV output path (default: stdout)");
  scan->callback([&] { run_werner_scan(g, from, to, steps, scan_out); });

  std::string h_path;
  std::string psi_path;
  double t_max = 0.0;
  double step = 1e-3;
  std::string mode = "both";
  long points = 101;
  double hbar = 1.0;
  std::string evolve_out;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Unitary and projectivized time evolution");
  evolve->add_option("hamiltonian", h_path, "Operator file")->required();
  evolve->add_option("state", psi_path, "Pure state file")->required();
  evolve->add_option("--t-max", t_max, "Time horizon")->required();
  evolve->add_option("--step", step, "Integrator step bound")->capture_default_str();
  evolve->add_option("--mode", mode, "Evolution mode")
      ->check(CLI::IsMember({"schrodinger", "riccati", "both"}))
      ->capture_default_str();
  evolve->add_option("--points", points, "Output rows")->capture_default_str();
  evolve->add_option("--hbar", hbar, "Planck constant")->capture_default_str();
  evolve->add_option("--out", evolve_out, "CSV output path (default: stdout)");
  evolve->callback([&] {
    run_evolve(g, h_path, psi_path, t_max, step, mode, points, hbar, evolve_out);
  });

  std::string gns_path;
  CLI::App* gns = app.add_subcommand(
      "gns", "Gram matrix and quotient dimensions of a state's representation");
  gns->add_option("state", gns_path, "State file")->required();
  gns->callback([&] { run_gns(g, gns_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Inapplicable& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
