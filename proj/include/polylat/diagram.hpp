#pragma once

// Hasse diagrams of face lattices and their canonical text and JSON forms.

#include "polylat/incidence.hpp"
#include "polylat/types.hpp"

namespace polylat {

struct DiagramNode {
  int dim = 0;
  VertexSet vertices;  // always stored; facet labels derive at output time
};

struct HasseDiagram {
  int num_vertices = 0;  // of the underlying incidence structure
  int num_facets = 0;
  std::vector<DiagramNode> nodes;
  // (child, parent): child is the smaller face, dim(parent) = dim(child) + 1.
  std::vector<std::pair<int, int>> arcs;
  int root = -1;  // the empty face
  int top = -1;   // the whole polytope; -1 in truncated diagrams

  int add_node(int dim, VertexSet vertices);
  int dim() const;  // largest dimension present
};

enum class LabelKind { vertices, facets, dim };

// Canonical form: node ids reassigned by (dimension, lexicographic vertex
// set), arcs sorted and deduplicated. Output is independent of construction
// order. Facet labels are computed from the incidences at output time, so
// LabelKind::facets requires inc.
std::string to_text(const HasseDiagram& dg, LabelKind labels = LabelKind::vertices,
                    const IncidenceStructure* inc = nullptr);
std::string to_json(const HasseDiagram& dg, LabelKind labels = LabelKind::vertices,
                    const IncidenceStructure* inc = nullptr);

// Face counts by dimension 0 .. dim-1 (the empty face and the top face are
// excluded by convention).
std::vector<std::size_t> f_vector(const HasseDiagram& dg);

}  // namespace polylat
