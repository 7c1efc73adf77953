#include "polylat/closure.hpp"
#include "polylat/incidence.hpp"

#include <map>

namespace polylat {

std::vector<Diagnostic> validate(const IncidenceStructure& inc) {
  std::vector<Diagnostic> out;

  for (int v = 0; v < inc.num_vertices; ++v) {
    if (static_cast<int>(inc.vertex_facets[v].size()) == inc.num_facets)
      out.push_back({ValidationCode::empty_not_closed, v, -1,
                     "vertex " + std::to_string(v) +
                         " lies on every facet, so the empty set is not closed"});
  }

  for (int v = 0; v < inc.num_vertices; ++v) {
    const VertexSet single{v};
    const VertexSet closed = closure(inc, single);
    if (closed != single)
      out.push_back({ValidationCode::atom_not_closed, v, -1,
                     "vertex " + std::to_string(v) + " is not a face: its closure has " +
                         std::to_string(closed.size()) + " vertices"});
  }

  std::map<VertexSet, int> seen;
  for (int f = 0; f < inc.num_facets; ++f) {
    auto [it, fresh] = seen.try_emplace(inc.facet_vertices[f], f);
    if (!fresh)
      out.push_back({ValidationCode::duplicate_facet, f, it->second,
                     "facet " + std::to_string(f) + " duplicates facet " +
                         std::to_string(it->second)});
    if (static_cast<int>(inc.facet_vertices[f].size()) == inc.num_vertices)
      out.push_back({ValidationCode::full_facet, f, -1,
                     "facet " + std::to_string(f) + " contains every vertex"});
  }

  return out;
}

}  // namespace polylat
