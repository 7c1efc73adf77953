#pragma once

// The closure operator cl(S) = Vertices(Facets(S)) over the sorted sparse
// views. Each call touches a number of list elements linear in the number of
// incidences; an instrumentation counter lets tests check that bound.

#include "polylat/incidence.hpp"

namespace polylat {

// Strictly increasing intersection of two strictly increasing lists, in time
// proportional to the sum of their lengths.
std::vector<int> intersect_sorted(std::span<const int> a, std::span<const int> b);

// Facets containing every vertex of S. Facets({}) is all of F.
FacetSet facets_of(const IncidenceStructure& inc, std::span<const int> verts);

// Vertices contained in every facet of T. Vertices({}) is all of V.
VertexSet vertices_of(const IncidenceStructure& inc, std::span<const int> facets);

// The vertex set of the smallest face containing S.
VertexSet closure(const IncidenceStructure& inc, std::span<const int> verts);

// List elements touched by the functions above since the last reset, per
// thread. Test-only instrumentation.
std::size_t closure_work_counter();
void reset_closure_work_counter();

}  // namespace polylat
