// Acceptance suite: one end-to-end check per criterion, one PASS/FAIL line
// each. Exits nonzero if any criterion fails.

#include "common.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

using namespace polylat;

namespace {

struct Instance {
  std::string name;
  IncidenceStructure inc;
};

std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (int d = 1; d <= 3; ++d) {
    out.push_back({"simplex-" + std::to_string(d), oracle::gen_simplex(d)});
    out.push_back({"cube-" + std::to_string(d), oracle::gen_cube(d)});
    out.push_back({"cross-" + std::to_string(d), oracle::gen_cross(d)});
  }
  for (int d = 2; d <= 7; ++d)
    for (int n = d + 1; n <= 8; ++n)
      out.push_back({"cyclic-" + std::to_string(d) + "-" + std::to_string(n),
                     oracle::gen_cyclic(d, n)});
  out.push_back({"pentagon", parse_incidence(fixtures::pentagon)});
  out.push_back({"segment", parse_incidence(fixtures::segment)});
  out.push_back({"prism", parse_incidence(fixtures::prism)});
  out.push_back({"square-pyramid", parse_incidence(fixtures::square_pyramid)});
  out.push_back({"dodecahedron", parse_incidence(fixtures::dodecahedron)});
  return out;
}

bool uniform_column_degree(const IncidenceStructure& inc, int degree) {
  for (const FacetSet& col : inc.vertex_facets)
    if (static_cast<int>(col.size()) != degree) return false;
  return true;
}

bool uniform_row_degree(const IncidenceStructure& inc, int degree) {
  for (const VertexSet& row : inc.facet_vertices)
    if (static_cast<int>(row.size()) != degree) return false;
  return true;
}

// -------- criteria --------

bool oracle_equivalence(std::string& detail) {
  for (const Instance& inst : corpus()) {
    const HasseDiagram built = build_face_lattice(inst.inc);
    const HasseDiagram reference =
        oracle::brute_force_hasse(oracle::brute_force_faces(inst.inc));
    if (to_text(built) != to_text(reference)) {
      detail = inst.name + ": built lattice differs from brute force";
      return false;
    }
  }
  detail = std::to_string(corpus().size()) + " instances match the brute-force lattice";
  return true;
}

bool known_counts(std::string& detail) {
  for (int d = 1; d <= 6; ++d) {
    const std::size_t expected = static_cast<std::size_t>(std::llround(std::pow(3, d))) + 1;
    const std::size_t got = build_face_lattice(oracle::gen_cube(d)).nodes.size();
    if (got != expected) {
      detail = "cube-" + std::to_string(d) + ": " + std::to_string(got) + " faces, expected " +
               std::to_string(expected);
      return false;
    }
  }
  for (int d = 1; d <= 10; ++d) {
    const std::size_t expected = std::size_t{1} << (d + 1);
    const std::size_t got = build_face_lattice(oracle::gen_simplex(d)).nodes.size();
    if (got != expected) {
      detail = "simplex-" + std::to_string(d) + ": " + std::to_string(got) +
               " faces, expected " + std::to_string(expected);
      return false;
    }
  }
  if (oracle::gen_cyclic(4, 8).num_facets != 20) {
    detail = "cyclic(4,8) facet count is not 20";
    return false;
  }
  detail = "cube 3^d+1 (d<=6), simplex 2^(d+1) (d<=10), cyclic(4,8) has 20 facets";
  return true;
}

bool variant_agreement(std::string& detail) {
  for (const Instance& inst : corpus()) {
    const HasseDiagram full = build_face_lattice(inst.inc);
    const std::string full_text = to_text(full);
    const int d = full.dim();

    if (uniform_column_degree(inst.inc, d)) {
      if (to_text(build_simple_lattice(inst.inc, d)) != full_text) {
        detail = inst.name + ": simple fast path differs";
        return false;
      }
    }
    if (uniform_row_degree(inst.inc, d)) {
      if (to_text(build_simplicial_lattice(inst.inc, d)) != full_text) {
        detail = inst.name + ": simplicial fast path differs";
        return false;
      }
    }
    if (testutil::dfs_face_list(inst.inc) != testutil::face_list(full)) {
      detail = inst.name + ": depth-first face stream differs";
      return false;
    }
    const HasseDiagram primal = build_face_lattice(inst.inc, {.auto_dualize = false});
    for (int k = 0; k <= d; ++k) {
      if (to_text(build_k_skeleton(inst.inc, k)) !=
          to_text(testutil::restrict_to_dim(primal, k))) {
        detail = inst.name + ": " + std::to_string(k) + "-skeleton differs from restriction";
        return false;
      }
    }
  }
  detail = "simple, simplicial, depth-first, and k-skeleton outputs all agree";
  return true;
}

bool closure_and_canonical(std::string& detail) {
  std::size_t canonical_checked = 0;
  for (const Instance& inst : corpus()) {
    const auto faces = oracle::brute_force_faces(inst.inc);
    const HasseDiagram reference = oracle::brute_force_hasse(faces);
    for (const DiagramNode& node : reference.nodes) {
      const VertexSet& face = node.vertices;
      const VertexSet closed = closure(inst.inc, face);
      if (!std::includes(closed.begin(), closed.end(), face.begin(), face.end()) ||
          closure(inst.inc, closed) != closed || closed != face) {
        detail = inst.name + ": closure laws fail on a face";
        return false;
      }
      if (face.empty()) continue;
      const VertexSet spanning = canonical_spanning_set(inst.inc, face);
      if (closure(inst.inc, spanning) != face) {
        detail = inst.name + ": closure does not invert the canonical spanning set";
        return false;
      }
      if (static_cast<int>(spanning.size()) > node.dim + 1) {
        detail = inst.name + ": canonical spanning set larger than dim+1";
        return false;
      }
      if (face.size() <= 8) {
        if (spanning != testutil::brute_lex_min_generator(inst.inc, face)) {
          detail = inst.name + ": canonical spanning set is not the smallest generator";
          return false;
        }
        ++canonical_checked;
      }
    }
  }

  std::mt19937 rng(1234);
  const auto instances = corpus();
  for (int trial = 0; trial < 1000; ++trial) {
    const IncidenceStructure& inc = instances[trial % instances.size()].inc;
    const std::uint32_t big_mask = rng() & ((1u << inc.num_vertices) - 1);
    const std::uint32_t small_mask = big_mask & rng();
    VertexSet big, small;
    for (int v = 0; v < inc.num_vertices; ++v) {
      if (big_mask & (1u << v)) big.push_back(v);
      if (small_mask & (1u << v)) small.push_back(v);
    }
    const VertexSet cl_small = closure(inc, small);
    const VertexSet cl_big = closure(inc, big);
    if (!std::includes(cl_big.begin(), cl_big.end(), cl_small.begin(), cl_small.end())) {
      detail = "monotonicity fails on a random pair";
      return false;
    }
  }
  detail = "closure laws hold; " + std::to_string(canonical_checked) +
           " canonical spanning sets brute-force verified";
  return true;
}

bool structural_bounds(std::string& detail) {
  for (const Instance& inst : corpus()) {
    BuildStats stats;
    const HasseDiagram dg = build_face_lattice(inst.inc, {}, &stats);
    const std::size_t bound =
        static_cast<std::size_t>(std::min(inst.inc.num_vertices, inst.inc.num_facets)) *
        dg.nodes.size();
    if (dg.arcs.size() > bound) {
      detail = inst.name + ": arc count exceeds min(n,m) * faces";
      return false;
    }
    if (stats.face_tree_depth > dg.dim() + 1) {
      detail = inst.name + ": face tree deeper than dim+1";
      return false;
    }
    DfsStats dfs;
    testutil::dfs_face_list(inst.inc, &dfs);
    if (dfs.max_stack_depth >
        static_cast<std::size_t>(inst.inc.num_vertices) * (dg.dim() + 1)) {
      detail = inst.name + ": stack depth exceeds n*(d+1)";
      return false;
    }
  }
  for (int d = 4; d <= 6; ++d) {
    BuildStats stats;
    const HasseDiagram dg = build_face_lattice(oracle::gen_cube(d), {}, &stats);
    if (stats.face_tree_depth > d + 1 ||
        dg.arcs.size() > static_cast<std::size_t>(2 * d) * dg.nodes.size()) {
      detail = "cube-" + std::to_string(d) + ": structural bound violated";
      return false;
    }
  }
  detail = "arc count, face tree depth, and stack depth bounds hold everywhere";
  return true;
}

bool scaling(std::string& detail) {
  // Wall time per face must not outgrow min(n,m)*alpha. One constant is
  // fitted across dimensions (least squares in log space); every dimension's
  // implied constant has to sit within a factor of 4 of the fit. A smoke
  // check, not a proof: the bound itself is loose on cubes, so the implied
  // constants drift down slowly with d.
  std::vector<double> constants;
  std::ostringstream table;
  for (int d = 6; d <= 10; ++d) {
    const IncidenceStructure inc = oracle::gen_cube(d);
    const auto start = std::chrono::steady_clock::now();
    std::size_t faces = 0;
    int runs = 0;
    do {
      faces = build_face_lattice(inc).nodes.size();
      ++runs;
    } while (std::chrono::steady_clock::now() - start < std::chrono::milliseconds(200) &&
             runs < 50);
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count() /
                           runs;
    const double per_face = seconds / static_cast<double>(faces);
    const double unit = static_cast<double>(std::min(inc.num_vertices, inc.num_facets)) *
                        static_cast<double>(inc.incidence_count);
    constants.push_back(per_face / unit);
    table << " d=" << d << " c=" << std::scientific << std::setprecision(2)
          << constants.back();
  }
  double log_sum = 0.0;
  for (double c : constants) log_sum += std::log(c);
  const double fitted = std::exp(log_sum / static_cast<double>(constants.size()));
  double worst = 1.0;
  for (double c : constants) worst = std::max(worst, std::max(c / fitted, fitted / c));
  detail = "worst deviation from the fitted constant " + std::to_string(worst) +
           "x (limit 4x):" + table.str();
  return worst <= 4.0;
}

bool oriented_matroids(std::string& detail) {
  const om::CovectorLattice collinear = om::build_covector_lattice(fixtures::collinear3);
  if (collinear.labels.size() != 14 || collinear.tope_count != 6) {
    detail = "three collinear points: expected 14 nodes and 6 topes";
    return false;
  }
  const om::CovectorLattice rank2 = om::build_covector_lattice(fixtures::rank2_uniform4);
  if (rank2.labels.size() != 18) {
    detail = "rank-2 uniform on 4 elements: expected 18 nodes";
    return false;
  }

  struct Fixture {
    const char* name;
    std::vector<om::SignVector> cocircuits;
    int ground;
  };
  const std::vector<Fixture> fixture_list = {
      {"collinear3", fixtures::collinear3, 3},
      {"single", {"+", "-"}, 1},
      {"rank2-uniform4", fixtures::rank2_uniform4, 4},
      {"square-config", fixtures::square_config, 4},
  };
  for (const auto& fx : fixture_list) {
    if (om::to_text(om::build_covector_lattice(fx.cocircuits, fx.ground)) !=
        om::to_text(oracle::brute_force_covector_hasse(fx.cocircuits, fx.ground))) {
      detail = std::string(fx.name) + ": built lattice differs from brute force";
      return false;
    }
  }

  for (int k = 1; k <= 4; ++k) {
    std::vector<om::SignVector> all;
    const char chars[3] = {'+', '-', '0'};
    const int total = static_cast<int>(std::pow(3, k));
    for (int code = 0; code < total; ++code) {
      om::SignVector v;
      for (int c = code, i = 0; i < k; ++i, c /= 3) v.push_back(chars[c % 3]);
      all.push_back(v);
    }
    for (const auto& u : all) {
      if (om::compose(u, u) != u) {
        detail = "composition is not idempotent";
        return false;
      }
      for (const auto& v : all) {
        if (om::separation_set(u, v).empty() && !om::conforms(u, om::compose(u, v))) {
          detail = "v is not below v o w on a conformal pair";
          return false;
        }
        for (const auto& w : all) {
          if (om::compose(om::compose(u, v), w) != om::compose(u, om::compose(v, w))) {
            detail = "composition is not associative";
            return false;
          }
        }
      }
    }
  }
  detail = "node counts, oracle equivalence, and composition laws all hold";
  return true;
}

bool determinism(std::string& detail) {
  for (const Instance& inst : corpus()) {
    if (to_text(build_face_lattice(inst.inc)) != to_text(build_face_lattice(inst.inc))) {
      detail = inst.name + ": two library runs differ";
      return false;
    }
  }
  const std::string cli = testutil::cli_path();
  const auto direct_input =
      testutil::write_temp("cube3_acc.inc", serialize_incidence(oracle::gen_cube(3)));
  const auto direct = testutil::run_cli("build " + direct_input.string());
  const auto piped = testutil::run_shell("'" + cli + "' gen cube 3 | '" + cli + "' build -");
  if (direct.exit_code != 0 || piped.exit_code != 0 || direct.out != piped.out) {
    detail = "gen | build pipeline differs from building the file directly";
    return false;
  }
  const auto again = testutil::run_shell("'" + cli + "' gen cube 3 | '" + cli + "' build -");
  if (again.out != piped.out) {
    detail = "repeated pipeline runs differ";
    return false;
  }
  detail = "library and CLI pipelines are byte-identical across runs";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence on the exhaustive corpus", oracle_equivalence},
      {2, "known face and facet counts", known_counts},
      {3, "variant agreement", variant_agreement},
      {4, "closure laws and canonical spanning sets", closure_and_canonical},
      {5, "structural bounds", structural_bounds},
      {6, "scaling of time per face", scaling},
      {7, "oriented matroid lattices", oriented_matroids},
      {8, "deterministic output", determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.number << ": "
              << criterion.name << " -- " << detail << '\n';
    if (!ok) ++failures;
  }
  return failures;
}
