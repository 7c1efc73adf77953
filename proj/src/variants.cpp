#include "polylat/variants.hpp"

#include "polylat/closure.hpp"
#include "polylat/facetree.hpp"

#include <cassert>
#include <deque>
#include <numeric>

namespace polylat {

namespace {

std::size_t count_common(std::span<const int> a, std::span<const int> b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

std::vector<std::pair<int, int>> polytope_graph(const IncidenceStructure& inc, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  for (int v = 0; v < inc.num_vertices; ++v)
    if (static_cast<int>(inc.vertex_facets[v].size()) != dim)
      throw std::invalid_argument("not simple: vertex " + std::to_string(v) + " lies on " +
                                  std::to_string(inc.vertex_facets[v].size()) +
                                  " facets, expected " + std::to_string(dim));
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < inc.num_vertices; ++v)
    for (int w = v + 1; w < inc.num_vertices; ++w)
      if (count_common(inc.vertex_facets[v], inc.vertex_facets[w]) ==
          static_cast<std::size_t>(dim - 1))
        edges.emplace_back(v, w);
  return edges;
}

HasseDiagram build_simple_lattice(const IncidenceStructure& inc, int dim, BuildStats* stats) {
  if (stats) *stats = {};
  std::vector<std::vector<int>> adjacent(inc.num_vertices);
  for (auto [v, w] : polytope_graph(inc, dim)) {
    adjacent[v].push_back(w);
    adjacent[w].push_back(v);
  }

  HasseDiagram dg;
  dg.num_vertices = inc.num_vertices;
  dg.num_facets = inc.num_facets;
  FaceTree tree;
  dg.root = tree.locate_or_create_keyed({}, [&] { return dg.add_node(-1, {}); }).first;

  struct Pending {
    int node;
    FacetSet facets;
  };
  std::deque<Pending> queue;
  for (int v = 0; v < inc.num_vertices; ++v) {
    const VertexSet single{v};
    const int node =
        tree.locate_or_create(inc, single, [&] { return dg.add_node(0, single); }).first;
    dg.arcs.emplace_back(dg.root, node);
    queue.push_back({node, inc.vertex_facets[v]});
  }

  while (!queue.empty()) {
    const Pending entry = std::move(queue.front());
    queue.pop_front();
    const VertexSet face = vertices_of(inc, entry.facets);
    const Bitset in_face = make_bitset(inc.num_vertices, face);
    const int face_dim = dg.nodes[entry.node].dim;

    for (int v : adjacent[face.front()]) {
      if (in_face.test(v)) continue;
      FacetSet cover_facets = intersect_sorted(entry.facets, inc.vertex_facets[v]);
      const VertexSet cover = vertices_of(inc, cover_facets);
      auto [cover_node, created] =
          tree.locate_or_create(inc, cover, [&] { return dg.add_node(face_dim + 1, cover); });
      if (dg.nodes[cover_node].dim != face_dim + 1)
        throw LatticeError("not a simple polytope: a face was reached at ranks " +
                           std::to_string(dg.nodes[cover_node].dim) + " and " +
                           std::to_string(face_dim + 1));
      dg.arcs.emplace_back(entry.node, cover_node);
      if (created) {
        if (static_cast<int>(cover.size()) == inc.num_vertices) dg.top = cover_node;
        queue.push_back({cover_node, std::move(cover_facets)});
      }
    }
  }

  if (dg.top < 0)
    throw LatticeError("not a simple polytope: the run never reached the full vertex set");
  if (stats) {
    stats->face_tree_depth = tree.depth();
    stats->face_tree_nodes = tree.node_count();
  }
  return dg;
}

HasseDiagram build_simplicial_lattice(const IncidenceStructure& inc, int dim,
                                      BuildStats* stats) {
  for (int f = 0; f < inc.num_facets; ++f)
    if (static_cast<int>(inc.facet_vertices[f].size()) != dim)
      throw std::invalid_argument("not simplicial: facet " + std::to_string(f) + " has " +
                                  std::to_string(inc.facet_vertices[f].size()) +
                                  " vertices, expected " + std::to_string(dim));
  const IncidenceStructure dual = dualize(inc);
  HasseDiagram dual_diagram = build_simple_lattice(dual, dim, stats);
  if (stats) stats->dualized = true;
  return transpose_diagram(dual_diagram, inc);
}

HasseDiagram build_k_skeleton(const IncidenceStructure& inc, int k, bool restrict_candidates) {
  if (k < 0) throw std::invalid_argument("skeleton dimension must be nonnegative");
  return detail::bottom_up(inc, restrict_candidates, k, false, nullptr);
}

std::pair<VertexSet, VertexSet> canonical_facet(const IncidenceStructure& inc,
                                                std::span<const int> face) {
  assert(!face.empty());
  assert(closure(inc, face) == VertexSet(face.begin(), face.end()));
  const FacetSet target = facets_of(inc, face);

  VertexSet keep;
  FacetSet running(static_cast<std::size_t>(inc.num_facets));
  std::iota(running.begin(), running.end(), 0);
  for (int g : face) {
    FacetSet next = intersect_sorted(running, inc.vertex_facets[g]);
    // The closure grows exactly when the intersection shrinks, and closes to
    // the whole face exactly when the intersection reaches Facets(face).
    if (next.size() < running.size() && next.size() != target.size()) {
      keep.push_back(g);
      running.swap(next);
    }
  }
  return {std::move(keep), vertices_of(inc, running)};
}

DfsStats enumerate_faces_dfs(const IncidenceStructure& inc, const FaceVisitor& visit,
                             const DfsOptions& opts) {
  DfsStats stats;
  std::vector<std::pair<VertexSet, int>> stack;
  stack.emplace_back(VertexSet{}, -1);
  stats.max_stack_depth = 1;

  while (!stack.empty()) {
    auto [face, dim] = std::move(stack.back());
    stack.pop_back();
    visit(face, dim);
    ++stats.faces_visited;

    std::vector<VertexSet> covers =
        minimal_faces(inc.num_vertices, candidates(inc, face, opts.restrict_candidates));
    // Reversed push order so branches pop in increasing candidate order.
    for (auto it = covers.rbegin(); it != covers.rend(); ++it) {
      auto [spanning, parent_facet] = canonical_facet(inc, *it);
      if (parent_facet == face) stack.emplace_back(std::move(*it), dim + 1);
    }
    stats.max_stack_depth = std::max(stats.max_stack_depth, stack.size());
  }
  return stats;
}

}  // namespace polylat
