#pragma once

// Vertex-facet incidence matrices: text format, validation, transposition,
// and the two views (sorted sparse lists plus dense bit rows and columns)
// that all lattice builders work on.

#include "polylat/types.hpp"

#include <iosfwd>

namespace polylat {

struct IncidenceStructure {
  int num_facets = 0;    // m
  int num_vertices = 0;  // n
  std::vector<VertexSet> facet_vertices;  // per facet, strictly increasing
  std::vector<FacetSet> vertex_facets;    // per vertex, strictly increasing
  std::vector<Bitset> facet_vertex_bits;  // dense rows, width num_vertices
  std::vector<Bitset> vertex_facet_bits;  // dense columns, width num_facets
  std::size_t incidence_count = 0;        // number of ones in the matrix

  // Builds every view from facet rows. Rows may arrive unsorted; duplicate or
  // out-of-range indices throw std::invalid_argument. Inputs without at least
  // one facet and two vertices are rejected as degenerate.
  static IncidenceStructure from_rows(int num_vertices, std::vector<VertexSet> rows);
};

// Text format: lines starting with '#' and blank lines are skipped. The first
// data line is "m n"; each of the next m data lines lists the vertex indices
// of one facet in any order.
IncidenceStructure parse_incidence(std::istream& in);
IncidenceStructure parse_incidence(const std::string& text);

// Same format back out: header plus sorted facet lines, no comments.
std::string serialize_incidence(const IncidenceStructure& inc);

// Transpose: facets and vertices swap roles, incidence count is preserved.
IncidenceStructure dualize(const IncidenceStructure& inc);

enum class ValidationCode {
  atom_not_closed,   // cl({v}) != {v}
  duplicate_facet,   // two facets with identical vertex sets
  full_facet,        // a facet containing every vertex
  empty_not_closed,  // some vertex lies on all facets, so cl({}) != {}
};

struct Diagnostic {
  ValidationCode code;
  int index;       // offending vertex or facet
  int other = -1;  // the earlier facet for duplicate_facet
  std::string message;
};

// Necessary conditions for polytopality. Advisory only: an empty report does
// not certify that the matrix describes a polytope.
std::vector<Diagnostic> validate(const IncidenceStructure& inc);

}  // namespace polylat
