#pragma once

// Shared fixtures and helpers for the unit and acceptance suites.

#include "polylat/closure.hpp"
#include "polylat/enumerate.hpp"
#include "polylat/facetree.hpp"
#include "polylat/om.hpp"
#include "polylat/oracle.hpp"
#include "polylat/variants.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace fixtures {

inline constexpr const char* triangle = "3 3\n0 1\n1 2\n0 2\n";
inline constexpr const char* square = "4 4\n0 1\n1 2\n2 3\n0 3\n";
inline constexpr const char* segment = "2 2\n0\n1\n";
inline constexpr const char* pentagon = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
// Triangular prism: bottom triangle 0 1 2, top triangle 3 4 5, matching
// vertical edges i to i+3.
inline constexpr const char* prism =
    "5 6\n0 1 2\n3 4 5\n0 1 3 4\n1 2 4 5\n0 2 3 5\n";
// Square base 0 1 2 3 (cycle order), apex 4.
inline constexpr const char* square_pyramid =
    "5 5\n0 1 2 3\n0 1 4\n1 2 4\n2 3 4\n0 3 4\n";
// Vertices: top pentagon 0-4, upper ring 5-9, lower ring 10-14, bottom
// pentagon 15-19. The two rings alternate around the middle band.
inline constexpr const char* dodecahedron =
    "12 20\n"
    "0 1 2 3 4\n"
    "0 1 5 6 10\n"
    "1 2 6 7 11\n"
    "2 3 7 8 12\n"
    "3 4 8 9 13\n"
    "0 4 5 9 14\n"
    "6 10 11 15 16\n"
    "7 11 12 16 17\n"
    "8 12 13 17 18\n"
    "9 13 14 18 19\n"
    "5 10 14 15 19\n"
    "15 16 17 18 19\n";

// Passes validation but its closed sets form a non-graded lattice, so the
// builders must reject it mid-run.
inline constexpr const char* nongraded =
    "6 5\n0 1 2\n0 1 3\n0 2 3\n1 4\n2 4\n3 4\n";

// Cocircuits of three collinear points.
inline const std::vector<polylat::om::SignVector> collinear3 = {"0++", "0--", "-0+",
                                                                "+0-", "--0", "++0"};
// Four points in generic position on a circle, rank 2.
inline const std::vector<polylat::om::SignVector> rank2_uniform4 = {
    "0+++", "0---", "-0++", "+0--", "--0+", "++0-", "---0", "+++0"};
// Affine point configuration of the unit square with vertices in the cycle
// order 0 1 2 3 (matching the square incidence fixture).
inline const std::vector<polylat::om::SignVector> square_config = {
    "00++", "00--", "+00+", "-00-", "++00", "--00",
    "0++0", "0--0", "0+0-", "0-0+", "-0+0", "+0-0"};

}  // namespace fixtures

namespace testutil {

using namespace polylat;

inline std::string canonical(const HasseDiagram& dg) { return to_text(dg); }

// Restriction of a diagram to dimensions <= k, for cross-checking the
// truncated builder.
inline HasseDiagram restrict_to_dim(const HasseDiagram& dg, int k) {
  HasseDiagram out;
  out.num_vertices = dg.num_vertices;
  out.num_facets = dg.num_facets;
  std::vector<int> remap(dg.nodes.size(), -1);
  for (std::size_t i = 0; i < dg.nodes.size(); ++i) {
    if (dg.nodes[i].dim <= k)
      remap[i] = out.add_node(dg.nodes[i].dim, dg.nodes[i].vertices);
  }
  for (auto [child, parent] : dg.arcs)
    if (remap[child] >= 0 && remap[parent] >= 0)
      out.arcs.emplace_back(remap[child], remap[parent]);
  if (dg.root >= 0) out.root = remap[dg.root];
  if (dg.top >= 0) out.top = remap[dg.top];
  return out;
}

// Faces of a diagram as a sorted (dim, vertex set) list.
inline std::vector<std::pair<int, VertexSet>> face_list(const HasseDiagram& dg) {
  std::vector<std::pair<int, VertexSet>> out;
  for (const DiagramNode& node : dg.nodes) out.emplace_back(node.dim, node.vertices);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<int, VertexSet>> dfs_face_list(const IncidenceStructure& inc,
                                                            DfsStats* stats = nullptr,
                                                            bool restrict_candidates = true) {
  std::vector<std::pair<int, VertexSet>> out;
  DfsStats s = enumerate_faces_dfs(
      inc, [&](const VertexSet& face, int dim) { out.emplace_back(dim, face); },
      {.restrict_candidates = restrict_candidates});
  if (stats) *stats = s;
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest generating subset under the order the greedy construction
// realizes: among subsets whose elements each strictly grow the closure of
// their predecessors, take the lexicographically smallest one that generates
// the face. Dense closures only, so this stays independent of the module
// under test.
inline VertexSet brute_lex_min_generator(const IncidenceStructure& inc, const VertexSet& face) {
  VertexSet best;
  bool have = false;
  const std::size_t k = face.size();
  for (std::uint32_t pick = 1; pick < (1u << k); ++pick) {
    VertexSet subset;
    for (std::size_t i = 0; i < k; ++i)
      if (pick & (1u << i)) subset.push_back(face[i]);
    bool progressive = true;
    for (std::size_t used = 0; used < subset.size() && progressive; ++used) {
      const VertexSet prefix(subset.begin(), subset.begin() + used);
      const VertexSet closed = oracle::brute_force_closure(inc, prefix);
      if (std::binary_search(closed.begin(), closed.end(), subset[used])) progressive = false;
    }
    if (!progressive) continue;
    if (oracle::brute_force_closure(inc, subset) != face) continue;
    if (!have || subset < best) {
      best = subset;
      have = true;
    }
  }
  return best;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Runs a full shell command with stdout/stderr captured. The command may
// reference cli_path() and shell pipes.
inline CliResult run_shell(const std::string& command, const std::string& stdin_text = "") {
  namespace fs = std::filesystem;
  static int counter = 0;
  const fs::path dir = fs::path("cli_tmp_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path in = dir / ("in" + std::to_string(counter));
  const fs::path out = dir / ("out" + std::to_string(counter));
  const fs::path err = dir / ("err" + std::to_string(counter));
  ++counter;
  std::ofstream(in, std::ios::binary) << stdin_text;
  // Subshell so the redirections cover the whole command, pipelines included.
  const std::string full = "( " + command + " ) < " + in.string() + " > " + out.string() +
                           " 2> " + err.string();
  const int status = std::system(full.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

inline std::string cli_path() { return POLYLAT_CLI_PATH; }

inline CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  return run_shell("'" + cli_path() + "' " + args, stdin_text);
}

inline std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path("cli_tmp_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace testutil
