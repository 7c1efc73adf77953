#include "polylat/closure.hpp"

#include <algorithm>
#include <numeric>

namespace polylat {

namespace {

thread_local std::size_t work_counter = 0;

// Intersect lists[members[0]], lists[members[1]], ... starting from the
// shortest member; intersections only shrink from there.
std::vector<int> intersect_family(const std::vector<std::vector<int>>& lists,
                                  std::span<const int> members, int universe) {
  if (members.empty()) {
    work_counter += static_cast<std::size_t>(universe);
    std::vector<int> all(static_cast<std::size_t>(universe));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::size_t start = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (lists[members[i]].size() < lists[members[start]].size()) start = i;
  std::vector<int> acc = lists[members[start]];
  work_counter += acc.size();
  for (std::size_t i = 0; i < members.size() && !acc.empty(); ++i) {
    if (i == start) continue;
    acc = intersect_sorted(acc, lists[members[i]]);
  }
  return acc;
}

}  // namespace

std::size_t closure_work_counter() { return work_counter; }
void reset_closure_work_counter() { work_counter = 0; }

std::vector<int> intersect_sorted(std::span<const int> a, std::span<const int> b) {
  work_counter += a.size() + b.size();
  std::vector<int> out;
  out.reserve(std::min(a.size(), b.size()));
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      out.push_back(*ia);
      ++ia;
      ++ib;
    }
  }
  return out;
}

FacetSet facets_of(const IncidenceStructure& inc, std::span<const int> verts) {
  return intersect_family(inc.vertex_facets, verts, inc.num_facets);
}

VertexSet vertices_of(const IncidenceStructure& inc, std::span<const int> facets) {
  return intersect_family(inc.facet_vertices, facets, inc.num_vertices);
}

VertexSet closure(const IncidenceStructure& inc, std::span<const int> verts) {
  return vertices_of(inc, facets_of(inc, verts));
}

}  // namespace polylat
