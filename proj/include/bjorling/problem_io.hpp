#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bjorling/expr.hpp"
#include "bjorling/solver.hpp"

namespace bjorling {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// A problem file turned into solver input, plus the optional checks it
/// carries: a closed-form reference surface in (u, v) and an implicit
/// relation in (x1, x2, x3) that the surface must satisfy.
struct ProblemSpec {
  BjorlingProblem problem;
  ExprScope scope;
  std::optional<Triple<Expr>> reference;
  std::optional<Expr> relation;
};

/// Keys: group, mode, params, center, order, beta, V, grid, tolerances,
/// series, reference, relation, and C / A for generic groups. Unknown keys
/// are rejected. order_override replaces the file's order (series jets are
/// generated for the final order). Throws Error(Parse) for malformed
/// content; problem invariants are checked later by validate().
ProblemSpec parse_problem(const Json& doc, std::optional<int> order_override = {});
/// Reads and parses; Error(Io) if the file cannot be read.
ProblemSpec load_problem(const std::filesystem::path& path, std::optional<int> order_override = {});

struct SolveOutcome {
  std::optional<BjorlingSolution> solution;  ///< built-in groups
  std::optional<FrameSolution> frame;        ///< generic groups (no reconstruction)
  std::optional<double> reference_deviation;
  std::optional<double> relation_residual;
  /// One "name = value exceeds tolerance" line per failing residual.
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Solves, runs every check and compares the residuals with the tolerances.
/// Problem-level errors (causal, characteristic, invalid data) propagate.
SolveOutcome run_problem(const ProblemSpec& spec);

/// Flat key-value report with a schema_version key.
Json report_json(const ProblemSpec& spec, const SolveOutcome& outcome);

/// Coefficient dump of psi and f, together with what mesh export needs.
Json solution_json(const ProblemSpec& spec, const SolveOutcome& outcome);

struct StoredSolution {
  GroupModel group = GroupModel::heisenberg();
  ProblemKind kind = ProblemKind::TimelikeCurveOnTimelikeSurface;
  Grid grid;
  Triple<KSeries> psi;
  std::optional<Triple<BiSeries>> f;
};

StoredSolution parse_solution(const Json& doc);
StoredSolution load_solution(const std::filesystem::path& path);

enum class MeshFormat { Obj, Csv };
MeshFormat parse_mesh_format(std::string_view name);

struct Mesh {
  std::string text;
  int vertices = 0;
  int faces = 0;
  int clipped = 0;  ///< grid points dropped by the chart guard
};

/// Samples f on the grid, row-major with u outer. OBJ: "v x1 x2 x3" lines and
/// 1-based quads, faces touching a clipped vertex dropped. CSV: header
/// "u,v,x1,x2,x3,residual", where residual is the pointwise conformality
/// defect. Error(Usage) if the solution has no surface.
Mesh build_mesh(const StoredSolution& solution, MeshFormat format);

/// Writes through a temporary file in the same directory and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

Json read_json_file(const std::filesystem::path& path);

}  // namespace bjorling
