#pragma once

// Bottom-up construction of the Hasse diagram from vertex-facet incidences:
// candidate covers, minimal-face selection, and the breadth-first queue loop.

#include "polylat/diagram.hpp"
#include "polylat/incidence.hpp"

namespace polylat {

struct BuildOptions {
  // Only scan candidate vertices that share a facet with the current face.
  // The output is unchanged on polytopal input; this just skips work.
  bool restrict_candidates = true;
  // Run on the transpose when m < n and map the result back, so the returned
  // diagram is always in the original orientation.
  bool auto_dualize = true;
};

struct BuildStats {
  bool dualized = false;
  int face_tree_depth = 0;         // bounded by dim + 1
  std::size_t face_tree_nodes = 0; // bounded by the number of faces
};

// All pairs (v, cl(face + v)) for scanned vertices v outside the face. With
// restrict_candidates, v ranges over the vertices of facets containing the
// face; every cover of the face still shows up because each of its vertices
// lies on such a facet.
std::vector<std::pair<int, VertexSet>> candidates(const IncidenceStructure& inc,
                                                  std::span<const int> face,
                                                  bool restrict_candidates = true);

// Inclusion-minimal sets of the candidate collection, each exactly once, in
// candidate order of the surviving representative. Every vertex starts as a
// candidate; picking v, any other labelled vertex inside cl(face + v) proves
// v non-minimal (its own candidate set is contained in v's), otherwise v is
// minimal. Duplicates die because the first representative scanned sees the
// other one still labelled.
std::vector<VertexSet> minimal_faces(int num_vertices,
                                     const std::vector<std::pair<int, VertexSet>>& cands);

// The full Hasse diagram from the empty face to the whole polytope. Output is
// deterministic: FIFO queue, vertices scanned in increasing order, canonical
// serialization. Throws LatticeError when the input betrays itself as
// non-polytopal mid-run (a cover reached at two different ranks, or a full
// run that never reaches the top face).
HasseDiagram build_face_lattice(const IncidenceStructure& inc, const BuildOptions& opts = {},
                                BuildStats* stats = nullptr);

// Reorient a diagram built on the transpose back to the given incidences:
// arcs reverse, dimensions flip, and every node label maps through
// Vertices(.) of the original matrix.
HasseDiagram transpose_diagram(const HasseDiagram& dual_diagram,
                               const IncidenceStructure& primal);

namespace detail {

// Shared queue loop. Faces of dimension max_enqueue_dim are still created
// (with their in-arcs) but never expanded, which truncates the diagram right
// above that dimension. require_top demands that the run reach the full
// vertex set.
HasseDiagram bottom_up(const IncidenceStructure& inc, bool restrict_candidates,
                       int max_enqueue_dim, bool require_top, BuildStats* stats);

}  // namespace detail

}  // namespace polylat
