#include "polylat/facetree.hpp"

namespace polylat {

VertexSet canonical_spanning_set(const IncidenceStructure& inc, std::span<const int> face) {
  assert(!face.empty());
  assert(closure(inc, face) == VertexSet(face.begin(), face.end()));
  if (face.size() <= 2) return VertexSet(face.begin(), face.end());

  VertexSet keep{face[0], face[1]};
  FacetSet running = intersect_sorted(inc.vertex_facets[face[0]], inc.vertex_facets[face[1]]);
  for (std::size_t i = 2; i < face.size(); ++i) {
    FacetSet next = intersect_sorted(running, inc.vertex_facets[face[i]]);
    if (next.size() < running.size()) {
      keep.push_back(face[i]);
      running.swap(next);
    }
  }
  return keep;
}

}  // namespace polylat
