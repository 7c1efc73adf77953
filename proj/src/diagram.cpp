#include "polylat/diagram.hpp"

#include "json.hpp"
#include "polylat/closure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polylat {

int HasseDiagram::add_node(int dim, VertexSet vertices) {
  nodes.push_back({dim, std::move(vertices)});
  return static_cast<int>(nodes.size()) - 1;
}

int HasseDiagram::dim() const {
  int d = -1;
  for (const DiagramNode& node : nodes) d = std::max(d, node.dim);
  return d;
}

namespace {

struct CanonicalForm {
  std::vector<int> order;                     // old ids in output order
  std::vector<int> rank;                      // old id -> new id
  std::vector<std::pair<int, int>> arcs;      // remapped, sorted, unique
};

CanonicalForm canonicalize(const HasseDiagram& dg) {
  CanonicalForm cf;
  cf.order.resize(dg.nodes.size());
  std::iota(cf.order.begin(), cf.order.end(), 0);
  std::sort(cf.order.begin(), cf.order.end(), [&](int a, int b) {
    if (dg.nodes[a].dim != dg.nodes[b].dim) return dg.nodes[a].dim < dg.nodes[b].dim;
    return dg.nodes[a].vertices < dg.nodes[b].vertices;
  });
  cf.rank.resize(cf.order.size());
  for (std::size_t i = 0; i < cf.order.size(); ++i) cf.rank[cf.order[i]] = static_cast<int>(i);
  cf.arcs.reserve(dg.arcs.size());
  for (auto [child, parent] : dg.arcs) cf.arcs.emplace_back(cf.rank[child], cf.rank[parent]);
  std::sort(cf.arcs.begin(), cf.arcs.end());
  cf.arcs.erase(std::unique(cf.arcs.begin(), cf.arcs.end()), cf.arcs.end());
  return cf;
}

}  // namespace

std::string to_text(const HasseDiagram& dg, LabelKind labels, const IncidenceStructure* inc) {
  if (labels == LabelKind::facets && inc == nullptr)
    throw std::invalid_argument("facet labels require the incidence structure");
  const CanonicalForm cf = canonicalize(dg);
  std::ostringstream out;
  out << "faces " << dg.nodes.size() << " arcs " << cf.arcs.size() << " dim " << dg.dim() << '\n';
  for (std::size_t i = 0; i < cf.order.size(); ++i) {
    const DiagramNode& node = dg.nodes[cf.order[i]];
    out << i << ' ' << node.dim;
    if (labels == LabelKind::vertices) {
      out << " v";
      for (int v : node.vertices) out << ' ' << v;
    } else if (labels == LabelKind::facets) {
      out << " f";
      for (int f : facets_of(*inc, node.vertices)) out << ' ' << f;
    }
    out << '\n';
  }
  for (auto [child, parent] : cf.arcs) out << child << ' ' << parent << '\n';
  return out.str();
}

std::string to_json(const HasseDiagram& dg, LabelKind labels, const IncidenceStructure* inc) {
  if (labels == LabelKind::facets && inc == nullptr)
    throw std::invalid_argument("facet labels require the incidence structure");
  const CanonicalForm cf = canonicalize(dg);
  nlohmann::ordered_json doc;
  doc["face_count"] = dg.nodes.size();
  doc["arc_count"] = cf.arcs.size();
  doc["dim"] = dg.dim();
  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cf.order.size(); ++i) {
    const DiagramNode& node = dg.nodes[cf.order[i]];
    nlohmann::ordered_json entry;
    entry["id"] = i;
    entry["dim"] = node.dim;
    if (labels == LabelKind::vertices)
      entry["v"] = node.vertices;
    else if (labels == LabelKind::facets)
      entry["f"] = facets_of(*inc, node.vertices);
    nodes.push_back(std::move(entry));
  }
  auto& arcs = doc["arcs"] = nlohmann::ordered_json::array();
  for (auto [child, parent] : cf.arcs) arcs.push_back({child, parent});
  return doc.dump();
}

std::vector<std::size_t> f_vector(const HasseDiagram& dg) {
  const int d = dg.dim();
  std::vector<std::size_t> counts(d > 0 ? static_cast<std::size_t>(d) : 0, 0);
  for (const DiagramNode& node : dg.nodes)
    if (node.dim >= 0 && node.dim < d) ++counts[node.dim];
  return counts;
}

}  // namespace polylat
