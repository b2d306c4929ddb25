#include "bjorling/corpus.hpp"

namespace bjorling {

namespace {

CorpusEntry entry(std::string id, std::string description, const char* problem) {
  Json doc = Json::parse(problem);
  doc["description"] = description;
  return {std::move(id), std::move(description), std::move(doc)};
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> v;
  v.push_back(entry("heisenberg_vertical_plane", "Heisenberg group, timelike vertical plane y = c (timelike curve)",
                    R"json({
  "group": "heisenberg",
  "mode": "timelike",
  "params": {"c": 1},
  "center": 0,
  "order": 12,
  "beta": ["cosh(u)", "c", "-(c/2)*cosh(u) + sinh(u)"],
  "V": ["0", "1", "0"],
  "grid": {"u_min": -1, "u_max": 1, "v_min": -0.5, "v_max": 0.5, "nu": 21, "nv": 11},
  "reference": ["exp(v)*cosh(u)", "c", "exp(v)*(-(c/2)*cosh(u) + sinh(u))"]
})json"));

  // rho solves rho'^2 + rho^2 = (rho^2/2 - c)^2.
  v.push_back(entry("helicoid", "Heisenberg group, timelike helicoid (rho from its ODE)", R"json({
  "group": "heisenberg",
  "mode": "spacelike-curve",
  "params": {"c": -1, "b": 0.5, "rho0": 1},
  "center": 0,
  "order": 12,
  "series": {"rho": {"ode": "sqrt((y^2/2 - c)^2 - y^2)", "y0": "rho0"}},
  "beta": ["rho(u)", "0", "b"],
  "V": ["0",
        "(rho(u)^2/2 - c) / sqrt((rho(u)^2/2 - c)^2 - rho(u)^2)",
        "-rho(u) / sqrt((rho(u)^2/2 - c)^2 - rho(u)^2)"],
  "grid": {"u_min": -0.3, "u_max": 0.3, "v_min": -0.5, "v_max": 0.5, "nu": 13, "nv": 21},
  "tolerances": {"reference": 1e-7},
  "reference": ["rho(u)*cos(v)", "rho(u)*sin(v)", "c*v + b"]
})json"));

  // Q solves 4 c Q = sqrt(Q'^2 + c^2); Q1 = Q'(0).
  v.push_back(entry("saddle", "Heisenberg group, saddle-type surface on the graph z = xy/2", R"json({
  "group": "heisenberg",
  "mode": "timelike",
  "params": {"c": 1, "Q0": 0.5, "Q1": "sqrt(16*c^2*Q0^2 - c^2)"},
  "center": 0,
  "order": 12,
  "series": {"Q": {"ode": "sqrt(16*c^2*y^2 - c^2)", "y0": "Q0"}},
  "beta": ["4*c*u", "-4*Q0", "-8*c*u*Q0"],
  "V": ["-4*c*Q0/Q1", "0", "c/Q1"],
  "grid": {"u_min": -0.5, "u_max": 0.5, "v_min": -0.2, "v_max": 0.2, "nu": 11, "nv": 11},
  "reference": ["4*c*u", "-4*Q(v)", "-8*c*u*Q(v)"],
  "relation": "x3 - x1*x2/2"
})json"));

  v.push_back(entry("desitter_plane", "de Sitter space, timelike vertical plane y = c (spacelike curve)", R"json({
  "group": "desitter",
  "mode": "spacelike-curve",
  "params": {"c": 1},
  "center": 0,
  "order": 12,
  "beta": ["sinh(u)", "c", "cosh(u)"],
  "V": ["0", "1", "0"],
  "grid": {"u_min": -1, "u_max": 1, "v_min": -0.5, "v_max": 0.5, "nu": 21, "nv": 11},
  "reference": ["exp(-v)*sinh(u)", "c", "exp(-v)*cosh(u)"]
})json"));

  v.push_back(entry("desitter_diagonal", "de Sitter space, timelike plane through the diagonal x = y", R"json({
  "group": "desitter",
  "mode": "spacelike-curve",
  "center": 0,
  "order": 12,
  "beta": ["sinh(u)/sqrt(2)", "sinh(u)/sqrt(2)", "cosh(u)"],
  "V": ["-1/sqrt(2)", "1/sqrt(2)", "0"],
  "grid": {"u_min": -1, "u_max": 1, "v_min": -0.5, "v_max": 0.5, "nu": 21, "nv": 11},
  "reference": ["exp(-v)*sinh(u)/sqrt(2)", "exp(-v)*sinh(u)/sqrt(2)", "exp(-v)*cosh(u)"]
})json"));

  v.push_back(entry("h2xr_plane", "H2 x R, spacelike horizontal plane z = c", R"json({
  "group": "h2xr",
  "mode": "spacelike-surface",
  "params": {"c": 1},
  "center": "pi/2",
  "order": 12,
  "beta": ["cos(u)", "sin(u)", "c"],
  "V": ["0", "0", "1"],
  "grid": {"u_min": "pi/4", "u_max": "3*pi/4", "v_min": -0.5, "v_max": 0.5, "nu": 21, "nv": 11},
  "reference": ["exp(v)*cos(u)", "exp(v)*sin(u)", "c"]
})json"));
  return v;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry* find_example(std::string_view id) {
  for (const auto& e : corpus())
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace bjorling
