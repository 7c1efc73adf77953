#include "polylat/enumerate.hpp"

#include "polylat/closure.hpp"
#include "polylat/facetree.hpp"

#include <climits>
#include <deque>

namespace polylat {

std::vector<std::pair<int, VertexSet>> candidates(const IncidenceStructure& inc,
                                                  std::span<const int> face,
                                                  bool restrict_candidates) {
  const FacetSet common = facets_of(inc, face);
  const Bitset in_face = make_bitset(inc.num_vertices, face);

  std::vector<int> scan;
  if (restrict_candidates) {
    Bitset reachable(inc.num_vertices);
    for (int f : common) reachable |= inc.facet_vertex_bits[f];
    reachable -= in_face;
    scan = bitset_to_list(reachable);
    if (scan.empty() && static_cast<int>(face.size()) < inc.num_vertices) {
      // No vertex outside the face shares a facet with it, so no proper face
      // lies above it: the face is a facet and its only cover is the whole
      // polytope. One scanned vertex suffices to generate that cover.
      for (int v = 0; v < inc.num_vertices; ++v) {
        if (!in_face.test(v)) {
          scan.push_back(v);
          break;
        }
      }
    }
  } else {
    scan.reserve(inc.num_vertices - face.size());
    for (int v = 0; v < inc.num_vertices; ++v)
      if (!in_face.test(v)) scan.push_back(v);
  }

  std::vector<std::pair<int, VertexSet>> out;
  out.reserve(scan.size());
  for (int v : scan) {
    // Facets(face + v) = Facets(face) ∩ Facets({v}), one list intersection.
    FacetSet with_v = intersect_sorted(common, inc.vertex_facets[v]);
    out.emplace_back(v, vertices_of(inc, with_v));
  }
  return out;
}

std::vector<VertexSet> minimal_faces(int num_vertices,
                                     const std::vector<std::pair<int, VertexSet>>& cands) {
  enum class Label : unsigned char { none, candidate, minimal };
  std::vector<Label> label(static_cast<std::size_t>(num_vertices), Label::none);
  for (const auto& [v, with_v] : cands) label[v] = Label::candidate;

  for (const auto& [v, with_v] : cands) {
    bool drop = false;
    // Vertices of the face itself never carry a label, so they cannot
    // trigger a removal here.
    for (int w : with_v) {
      if (w == v) continue;
      if (label[w] != Label::none) {
        drop = true;
        break;
      }
    }
    label[v] = drop ? Label::none : Label::minimal;
  }

  std::vector<VertexSet> out;
  for (const auto& [v, with_v] : cands)
    if (label[v] == Label::minimal) out.push_back(with_v);
  return out;
}

namespace detail {

HasseDiagram bottom_up(const IncidenceStructure& inc, bool restrict_candidates,
                       int max_enqueue_dim, bool require_top, BuildStats* stats) {
  HasseDiagram dg;
  dg.num_vertices = inc.num_vertices;
  dg.num_facets = inc.num_facets;

  FaceTree tree;
  dg.root = tree.locate_or_create_keyed({}, [&] { return dg.add_node(-1, {}); }).first;

  struct Pending {
    int node;
    Bitset verts;
  };
  std::deque<Pending> queue;
  queue.push_back({dg.root, Bitset(inc.num_vertices)});

  while (!queue.empty()) {
    const Pending entry = std::move(queue.front());
    queue.pop_front();
    const VertexSet face = bitset_to_list(entry.verts);
    const int face_dim = dg.nodes[entry.node].dim;

    for (VertexSet& cover : minimal_faces(inc.num_vertices,
                                          candidates(inc, face, restrict_candidates))) {
      auto [cover_node, created] =
          tree.locate_or_create(inc, cover, [&] { return dg.add_node(face_dim + 1, cover); });
      if (dg.nodes[cover_node].dim != face_dim + 1)
        throw LatticeError("not a polytope: a face was reached as a cover at ranks " +
                           std::to_string(dg.nodes[cover_node].dim) + " and " +
                           std::to_string(face_dim + 1));
      dg.arcs.emplace_back(entry.node, cover_node);
      if (created) {
        if (static_cast<int>(cover.size()) == inc.num_vertices) dg.top = cover_node;
        if (face_dim + 1 < max_enqueue_dim)
          queue.push_back({cover_node, make_bitset(inc.num_vertices, cover)});
      }
    }
  }

  if (require_top && dg.top < 0)
    throw LatticeError("not a polytope: the run never reached the full vertex set");
  if (stats) {
    stats->face_tree_depth = tree.depth();
    stats->face_tree_nodes = tree.node_count();
  }
  return dg;
}

}  // namespace detail

HasseDiagram build_face_lattice(const IncidenceStructure& inc, const BuildOptions& opts,
                                BuildStats* stats) {
  if (stats) *stats = {};
  if (opts.auto_dualize && inc.num_facets < inc.num_vertices) {
    const IncidenceStructure dual = dualize(inc);
    HasseDiagram dual_diagram =
        detail::bottom_up(dual, opts.restrict_candidates, INT_MAX, true, stats);
    if (stats) stats->dualized = true;
    return transpose_diagram(dual_diagram, inc);
  }
  return detail::bottom_up(inc, opts.restrict_candidates, INT_MAX, true, stats);
}

HasseDiagram transpose_diagram(const HasseDiagram& dual_diagram,
                               const IncidenceStructure& primal) {
  if (dual_diagram.top < 0)
    throw std::invalid_argument("transpose_diagram requires a complete diagram");
  const int d = dual_diagram.nodes[dual_diagram.top].dim;

  HasseDiagram out;
  out.num_vertices = primal.num_vertices;
  out.num_facets = primal.num_facets;
  out.nodes.reserve(dual_diagram.nodes.size());
  // A dual face's vertex set is a facet set of the original matrix; the
  // original face behind it is the set of vertices on all those facets.
  for (const DiagramNode& node : dual_diagram.nodes)
    out.add_node(d - 1 - node.dim, vertices_of(primal, node.vertices));
  out.arcs.reserve(dual_diagram.arcs.size());
  for (auto [child, parent] : dual_diagram.arcs) out.arcs.emplace_back(parent, child);
  out.root = dual_diagram.top;
  out.top = dual_diagram.root;
  return out;
}

}  // namespace polylat
