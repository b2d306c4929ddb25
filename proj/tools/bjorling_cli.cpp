#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bjorling/corpus.hpp"
#include "bjorling/problem_io.hpp"

namespace fs = std::filesystem;
using namespace bjorling;

namespace {

enum Exit { kOk = 0, kUsage = 1, kRejected = 2, kResidual = 3 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CharacteristicData:
    case ErrorCode::CausalMismatch:
      return kRejected;
    case ErrorCode::Usage:
    case ErrorCode::Parse:
    case ErrorCode::Io:
    case ErrorCode::InvalidProblem:
    case ErrorCode::UnsupportedRecipe:
      return kUsage;
    default:
      return kResidual;
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::Io, "cannot create directory " + dir.string());
}

struct SolveArgs {
  std::string problem;
  std::optional<int> order;
  std::optional<double> tol;
  std::string mesh;
  std::string out = ".";
};

int cmd_solve(const SolveArgs& a) {
  ProblemSpec spec = load_problem(a.problem, a.order);
  if (a.tol) {
    spec.problem.tol.residual = *a.tol;
    spec.problem.tol.reference = *a.tol;
  }
  std::optional<MeshFormat> mesh_format;
  if (!a.mesh.empty()) mesh_format = parse_mesh_format(a.mesh);

  const SolveOutcome outcome = run_problem(spec);

  const fs::path out(a.out);
  ensure_dir(out);
  const std::string stem = fs::path(a.problem).stem().string();
  const Json report = report_json(spec, outcome);
  const Json solution = solution_json(spec, outcome);
  write_file_atomic(out / (stem + ".solution.json"), solution.dump(1) + "\n");
  write_file_atomic(out / (stem + ".report.json"), report.dump(2) + "\n");
  if (mesh_format) {
    const Mesh mesh = build_mesh(parse_solution(solution), *mesh_format);
    const char* ext = *mesh_format == MeshFormat::Obj ? ".obj" : ".csv";
    write_file_atomic(out / (stem + ext), mesh.text);
    if (mesh.clipped > 0) std::cerr << "warning: clipped " << mesh.clipped << " vertices outside the chart\n";
  }

  for (const auto& [key, value] : report.items()) {
    if (value.is_number_float() && (key.find("residual") != std::string::npos || key == "reference_deviation")) {
      std::cout << key << " = " << value.get<double>() << '\n';
    }
  }
  if (!outcome.passed()) {
    for (const auto& f : outcome.failures) std::cerr << "residual failure: " << f << '\n';
    return kResidual;
  }
  std::cout << "ok: " << stem << '\n';
  return kOk;
}

int cmd_examples(const std::string& name, const std::string& out_dir) {
  if (name.empty()) {
    for (const auto& e : corpus()) std::cout << e.id << "  " << e.description << '\n';
    return kOk;
  }
  const CorpusEntry* e = find_example(name);
  if (e == nullptr) {
    std::cerr << "unknown example '" << name << "'; available:\n";
    for (const auto& c : corpus()) std::cerr << "  " << c.id << '\n';
    return kUsage;
  }
  const fs::path out(out_dir);
  ensure_dir(out);
  const fs::path file = out / (e->id + ".json");
  write_file_atomic(file, e->problem.dump(2) + "\n");
  std::cout << file.string() << '\n';
  return kOk;
}

int cmd_export_mesh(const std::string& solution, const std::string& format, const std::string& out) {
  const MeshFormat f = parse_mesh_format(format);
  const Mesh mesh = build_mesh(load_solution(solution), f);
  write_file_atomic(out, mesh.text);
  if (mesh.clipped > 0) std::cerr << "warning: clipped " << mesh.clipped << " vertices outside the chart\n";
  std::cout << mesh.vertices << " vertices";
  if (f == MeshFormat::Obj) std::cout << ", " << mesh.faces << " faces";
  std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal surfaces in Lorentzian 3D Lie groups from Bjorling data"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "solve a problem file and write solution, report and mesh");
  s->add_option("file", solve.problem, "problem file (JSON)")->required();
  s->add_option("--order", solve.order, "truncation order N");
  s->add_option("--tol", solve.tol, "grid residual tolerance");
  s->add_option("--mesh", solve.mesh, "also write a mesh")->check(CLI::IsMember({"obj", "csv"}));
  s->add_option("--out", solve.out, "output directory");

  std::string example_name, example_out = ".";
  auto* ex = app.add_subcommand("examples", "list the built-in examples or write one as a problem file");
  ex->add_option("name", example_name, "example id");
  ex->add_option("--out", example_out, "output directory");

  std::string mesh_solution, mesh_format, mesh_out;
  auto* em = app.add_subcommand("export-mesh", "sample a stored solution on its grid");
  em->add_option("solution", mesh_solution, "solution file")->required();
  em->add_option("--format", mesh_format, "obj or csv")->required()->check(CLI::IsMember({"obj", "csv"}));
  em->add_option("--out", mesh_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*ex) return cmd_examples(example_name, example_out);
    return cmd_export_mesh(mesh_solution, mesh_format, mesh_out);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
