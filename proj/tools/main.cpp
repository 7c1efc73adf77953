// polylat command line: build face lattices from incidence files, build
// covector lattices from cocircuit files, and generate standard instances.
//
// Exit codes: 0 success, 1 bad input (parse or validation failure, bad
// parameters), 2 contract violation detected mid-run (non-polytopal input).

#include "CLI11.hpp"
#include "json.hpp"
#include "polylat/enumerate.hpp"
#include "polylat/om.hpp"
#include "polylat/oracle.hpp"
#include "polylat/variants.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace polylat;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
}

LabelKind label_kind(const std::string& name) {
  if (name == "facets") return LabelKind::facets;
  if (name == "dim") return LabelKind::dim;
  return LabelKind::vertices;
}

struct BuildArgs {
  std::string input;
  std::string labels = "vertices";
  std::string format = "text";
  std::string out_path;
  int k_skeleton = -1;
  bool simple = false;
  bool simplicial = false;
  bool faces_only = false;
  bool no_dualize = false;
  bool no_restrict = false;
};

int run_build(const BuildArgs& args) {
  const IncidenceStructure inc = parse_incidence(read_input(args.input));
  const auto issues = validate(inc);
  if (!issues.empty()) {
    for (const Diagnostic& d : issues) std::cerr << "validation: " << d.message << '\n';
    return 1;
  }

  if (args.faces_only) {
    const DfsOptions opts{.restrict_candidates = !args.no_restrict};
    std::ostringstream body;
    std::size_t visited = 0;
    if (args.format == "json") {
      nlohmann::ordered_json faces = nlohmann::ordered_json::array();
      enumerate_faces_dfs(
          inc,
          [&](const VertexSet& face, int dim) {
            faces.push_back({{"dim", dim}, {"v", face}});
            ++visited;
          },
          opts);
      nlohmann::ordered_json doc;
      doc["face_count"] = visited;
      doc["faces"] = std::move(faces);
      body << doc.dump() << '\n';
    } else {
      enumerate_faces_dfs(
          inc,
          [&](const VertexSet& face, int dim) {
            body << dim;
            for (int v : face) body << ' ' << v;
            body << '\n';
            ++visited;
          },
          opts);
    }
    write_output(args.out_path, body.str());
    std::cerr << "n=" << inc.num_vertices << " m=" << inc.num_facets
              << " alpha=" << inc.incidence_count << " phi=" << visited << '\n';
    return 0;
  }

  HasseDiagram dg;
  if (args.simple) {
    dg = build_simple_lattice(inc, static_cast<int>(inc.vertex_facets[0].size()));
  } else if (args.simplicial) {
    dg = build_simplicial_lattice(inc, static_cast<int>(inc.facet_vertices[0].size()));
  } else if (args.k_skeleton >= 0) {
    dg = build_k_skeleton(inc, args.k_skeleton, !args.no_restrict);
  } else {
    dg = build_face_lattice(inc, {.restrict_candidates = !args.no_restrict,
                                  .auto_dualize = !args.no_dualize});
  }

  const LabelKind labels = label_kind(args.labels);
  std::string text = args.format == "json" ? to_json(dg, labels, &inc) + "\n"
                                           : to_text(dg, labels, &inc);
  write_output(args.out_path, text);
  std::cerr << "n=" << inc.num_vertices << " m=" << inc.num_facets
            << " alpha=" << inc.incidence_count << " phi=" << dg.nodes.size()
            << " arcs=" << dg.arcs.size() << '\n';
  return 0;
}

int run_om(const std::string& input, const std::string& format, const std::string& out_path) {
  const om::CocircuitFile file = om::parse_cocircuits(read_input(input));
  const om::CovectorLattice lat = om::build_covector_lattice(file.cocircuits, file.ground_size);
  if (lat.negation_completed)
    std::cerr << "warning: cocircuits were not closed under negation; "
                 "missing negatives were added\n";
  write_output(out_path, format == "json" ? om::to_json(lat) + "\n" : om::to_text(lat));
  std::cerr << "n=" << lat.cocircuits.size() << " k=" << lat.ground_size
            << " phi=" << lat.labels.size() << " arcs=" << lat.arcs.size() << '\n';
  return 0;
}

int run_gen(const std::string& kind, int d, int n, const std::string& out_path) {
  IncidenceStructure inc;
  if (kind == "simplex") {
    inc = oracle::gen_simplex(d);
  } else if (kind == "cube") {
    inc = oracle::gen_cube(d);
  } else if (kind == "cross") {
    inc = oracle::gen_cross(d);
  } else if (kind == "cyclic") {
    if (n < 0) throw std::invalid_argument("gen cyclic needs both d and n");
    inc = oracle::gen_cyclic(d, n);
  } else {
    throw std::invalid_argument("unknown instance kind '" + kind + "'");
  }
  write_output(out_path, serialize_incidence(inc));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"face lattice construction from vertex-facet incidences"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "construct the Hasse diagram of a face lattice");
  build->add_option("input", build_args.input, "incidence file, or - for stdin")->required();
  build->add_option("--labels", build_args.labels, "node labels in the output")
      ->check(CLI::IsMember({"vertices", "facets", "dim"}));
  auto* kskel = build->add_option("--k-skeleton", build_args.k_skeleton,
                                  "only faces of dimension at most K")
                    ->check(CLI::NonNegativeNumber);
  auto* simple = build->add_flag("--simple", build_args.simple,
                                 "fast path for simple polytopes");
  auto* simplicial = build->add_flag("--simplicial", build_args.simplicial,
                                     "fast path for simplicial polytopes");
  auto* faces_only = build->add_flag("--faces-only", build_args.faces_only,
                                     "stream faces depth-first instead of building the diagram");
  build->add_flag("--no-dualize", build_args.no_dualize,
                  "never run on the transpose, even when m < n");
  build->add_flag("--no-restrict", build_args.no_restrict,
                  "scan all vertices outside a face when generating candidates");
  build->add_option("--format", build_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  build->add_option("--out", build_args.out_path, "write output to a file instead of stdout");
  simple->excludes(simplicial, kskel, faces_only);
  simplicial->excludes(kskel, faces_only);
  faces_only->excludes(kskel);

  std::string om_input, om_format = "text", om_out;
  CLI::App* om_cmd = app.add_subcommand("om", "covector lattice of an oriented matroid");
  om_cmd->add_option("input", om_input, "cocircuit file, or - for stdin")->required();
  om_cmd->add_option("--format", om_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  om_cmd->add_option("--out", om_out, "write output to a file instead of stdout");

  std::string gen_kind;
  int gen_d = 0, gen_n = -1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a standard incidence file");
  gen->add_option("kind", gen_kind, "simplex, cube, cross, or cyclic")->required();
  gen->add_option("d", gen_d, "dimension")->required();
  gen->add_option("n", gen_n, "vertex count (cyclic only)");
  gen->add_option("--out", gen_out, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }

  try {
    if (build->parsed()) return run_build(build_args);
    if (om_cmd->parsed()) return run_om(om_input, om_format, om_out);
    return run_gen(gen_kind, gen_d, gen_n, gen_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const LatticeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
