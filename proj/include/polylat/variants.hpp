#pragma once

// Specialized builders: the simple/simplicial fast path, k-skeleton
// truncation, and a low-memory depth-first enumerator that streams faces
// without storing the diagram.

#include "polylat/enumerate.hpp"

#include <functional>

namespace polylat {

// Edges of a simple d-polytope: pairs of vertices lying on exactly d-1 common
// facets. Every vertex must lie on exactly d facets; anything else throws
// std::invalid_argument.
std::vector<std::pair<int, int>> polytope_graph(const IncidenceStructure& inc, int dim);

// Same diagram as build_face_lattice, but without minimal-set selection: for
// a face, every neighbour (in the polytope graph) of its smallest vertex that
// lies outside the face closes to a cover, and every cover arises that way.
// The queue keeps faces by their facet sets, which are the smaller side for
// simple polytopes.
HasseDiagram build_simple_lattice(const IncidenceStructure& inc, int dim,
                                  BuildStats* stats = nullptr);

// Dual fast path for simplicial polytopes: transpose, run the simple builder,
// map the result back.
HasseDiagram build_simplicial_lattice(const IncidenceStructure& inc, int dim,
                                      BuildStats* stats = nullptr);

// Faces of dimension at most k with all cover arcs among them. Runs in the
// given orientation (no transposition; truncation is not self-dual). k-faces
// are created but never expanded.
HasseDiagram build_k_skeleton(const IncidenceStructure& inc, int k,
                              bool restrict_candidates = true);

// The lexicographically smallest subset of a closed nonempty face that spans
// one of its facets, together with that facet. Built like the canonical
// spanning set except that vertices whose addition would close to the whole
// face are rejected. For a single vertex the result is the empty face.
std::pair<VertexSet, VertexSet> canonical_facet(const IncidenceStructure& inc,
                                                std::span<const int> face);

struct DfsOptions {
  bool restrict_candidates = true;
};

struct DfsStats {
  std::size_t faces_visited = 0;
  std::size_t max_stack_depth = 0;  // bounded by n * (dim + 1)
};

using FaceVisitor = std::function<void(const VertexSet& face, int dim)>;

// Visits every face exactly once (including the empty face and the whole
// polytope) with its dimension, keeping only a stack of pending faces: a
// cover G found while expanding H is pushed iff H is G's canonical facet, so
// no face tree and no arcs are needed.
DfsStats enumerate_faces_dfs(const IncidenceStructure& inc, const FaceVisitor& visit,
                             const DfsOptions& opts = {});

}  // namespace polylat
