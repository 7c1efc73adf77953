#include "polylat/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace polylat::oracle {

namespace {

constexpr int kMaxDenseVertices = 20;

std::vector<std::uint32_t> row_masks(const IncidenceStructure& inc) {
  if (inc.num_vertices > kMaxDenseVertices)
    throw std::invalid_argument("brute force oracle limited to " +
                                std::to_string(kMaxDenseVertices) + " vertices");
  std::vector<std::uint32_t> rows(inc.facet_vertices.size(), 0);
  for (std::size_t f = 0; f < inc.facet_vertices.size(); ++f)
    for (int v : inc.facet_vertices[f]) rows[f] |= std::uint32_t{1} << v;
  return rows;
}

std::uint32_t mask_of(std::span<const int> verts) {
  std::uint32_t mask = 0;
  for (int v : verts) mask |= std::uint32_t{1} << v;
  return mask;
}

VertexSet mask_to_list(std::uint32_t mask) {
  VertexSet out;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

std::uint32_t dense_closure(const std::vector<std::uint32_t>& rows, std::uint32_t full,
                            std::uint32_t subset) {
  std::uint32_t verts = full;
  for (std::uint32_t row : rows)
    if ((row & subset) == subset) verts &= row;
  return verts;
}

}  // namespace

VertexSet brute_force_closure(const IncidenceStructure& inc, std::span<const int> verts) {
  const auto rows = row_masks(inc);
  const std::uint32_t full = (std::uint32_t{1} << inc.num_vertices) - 1;
  return mask_to_list(dense_closure(rows, full, mask_of(verts)));
}

std::vector<VertexSet> brute_force_faces(const IncidenceStructure& inc) {
  const auto rows = row_masks(inc);
  const std::uint32_t full = (std::uint32_t{1} << inc.num_vertices) - 1;
  std::vector<VertexSet> faces;
  for (std::uint32_t subset = 0;; ++subset) {
    if (dense_closure(rows, full, subset) == subset) faces.push_back(mask_to_list(subset));
    if (subset == full) break;
  }
  return faces;
}

HasseDiagram brute_force_hasse(const std::vector<VertexSet>& faces) {
  std::vector<std::uint32_t> masks(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) masks[i] = mask_of(faces[i]);

  std::vector<std::size_t> order(faces.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (faces[a].size() != faces[b].size()) return faces[a].size() < faces[b].size();
    return faces[a] < faces[b];
  });

  HasseDiagram dg;
  std::vector<int> node_of(faces.size(), -1);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t i = order[pos];
    // Longest chain below: one more than the deepest proper subset seen, and
    // -1 for the unique minimal face.
    int below = -2;
    for (std::size_t qos = 0; qos < pos; ++qos) {
      const std::size_t j = order[qos];
      if (masks[j] != masks[i] && (masks[j] & masks[i]) == masks[j])
        below = std::max(below, dg.nodes[node_of[j]].dim);
    }
    node_of[i] = dg.add_node(below == -2 ? -1 : below + 1, faces[i]);
    if (faces[i].empty()) dg.root = node_of[i];
  }
  int max_dim = -1;
  for (std::size_t i = 0; i < faces.size(); ++i)
    max_dim = std::max(max_dim, dg.nodes[node_of[i]].dim);
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (dg.nodes[node_of[i]].dim == max_dim) dg.top = node_of[i];

  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (masks[i] == masks[j] || (masks[i] & masks[j]) != masks[i]) continue;
      bool covered = true;
      for (std::size_t h = 0; h < faces.size() && covered; ++h) {
        if (h == i || h == j) continue;
        if ((masks[i] & masks[h]) == masks[i] && (masks[h] & masks[j]) == masks[h] &&
            masks[h] != masks[i] && masks[h] != masks[j])
          covered = false;
      }
      if (covered) dg.arcs.emplace_back(node_of[i], node_of[j]);
    }
  }
  return dg;
}

IncidenceStructure gen_simplex(int d) {
  if (d < 1) throw std::invalid_argument("simplex dimension must be positive");
  const int n = d + 1;
  std::vector<VertexSet> rows(n);
  for (int f = 0; f < n; ++f)
    for (int v = 0; v < n; ++v)
      if (v != f) rows[f].push_back(v);
  return IncidenceStructure::from_rows(n, std::move(rows));
}

IncidenceStructure gen_cube(int d) {
  if (d < 1) throw std::invalid_argument("cube dimension must be positive");
  if (d > 20) throw std::invalid_argument("cube dimension too large");
  const int n = 1 << d;
  std::vector<VertexSet> rows(2 * static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int v = 0; v < n; ++v) rows[2 * i + ((v >> i) & 1)].push_back(v);
  return IncidenceStructure::from_rows(n, std::move(rows));
}

IncidenceStructure gen_cross(int d) { return dualize(gen_cube(d)); }

IncidenceStructure gen_cyclic(int d, int n) {
  if (d < 2) throw std::invalid_argument("cyclic polytope needs d >= 2");
  if (n <= d) throw std::invalid_argument("cyclic polytope needs n > d");
  if (n > 30) throw std::invalid_argument("cyclic polytope generator limited to n <= 30");

  auto gale_even = [n](const VertexSet& subset) {
    // Maximal runs of consecutive members not touching either end must have
    // even length.
    std::size_t i = 0;
    while (i < subset.size()) {
      std::size_t j = i;
      while (j + 1 < subset.size() && subset[j + 1] == subset[j] + 1) ++j;
      const bool interior = subset[i] > 0 && subset[j] < n - 1;
      if (interior && (j - i + 1) % 2 != 0) return false;
      i = j + 1;
    }
    return true;
  };

  std::vector<VertexSet> rows;
  VertexSet subset(static_cast<std::size_t>(d));
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (gale_even(subset)) rows.push_back(subset);
    // next d-combination of {0..n-1} in lexicographic order
    int pos = d - 1;
    while (pos >= 0 && subset[pos] == n - d + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int q = pos + 1; q < d; ++q) subset[q] = subset[q - 1] + 1;
  }
  return IncidenceStructure::from_rows(n, std::move(rows));
}

namespace {

// Local sign-vector arithmetic, kept separate from the om module on purpose.
bool sv_separated(const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] == '+' && b[i] == '-') || (a[i] == '-' && b[i] == '+')) return true;
  return false;
}

std::string sv_compose(const std::string& a, const std::string& b) {
  std::string out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (out[i] == '0') out[i] = b[i];
  return out;
}

bool sv_below(const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != '0' && a[i] != b[i]) return false;
  return true;
}

}  // namespace

std::vector<om::SignVector> brute_force_covectors(std::span<const om::SignVector> cocircuits,
                                                  int ground_size) {
  std::set<std::string> closed;
  closed.insert(std::string(static_cast<std::size_t>(ground_size), '0'));
  for (const auto& c : cocircuits) {
    if (static_cast<int>(c.size()) != ground_size)
      throw std::invalid_argument("cocircuit length mismatch");
    closed.insert(c);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::string> snapshot(closed.begin(), closed.end());
    for (const auto& u : snapshot)
      for (const auto& v : snapshot)
        if (!sv_separated(u, v) && closed.insert(sv_compose(u, v)).second) grew = true;
  }
  return {closed.begin(), closed.end()};
}

om::CovectorLattice brute_force_covector_hasse(std::span<const om::SignVector> cocircuits,
                                               int ground_size) {
  const auto covectors = brute_force_covectors(cocircuits, ground_size);

  om::CovectorLattice lat;
  lat.ground_size = ground_size;
  lat.cocircuits.assign(cocircuits.begin(), cocircuits.end());

  const std::size_t count = covectors.size();
  // Ranks by longest chain from the zero vector, processing by support size.
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto support = [&](std::size_t i) {
    return covectors[i].size() - static_cast<std::size_t>(
                                     std::count(covectors[i].begin(), covectors[i].end(), '0'));
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return support(a) < support(b); });

  std::vector<int> dim(count, -1);
  for (std::size_t pos = 0; pos < count; ++pos) {
    const std::size_t i = order[pos];
    int best = -2;
    for (std::size_t qos = 0; qos < pos; ++qos) {
      const std::size_t j = order[qos];
      if (covectors[j] != covectors[i] && sv_below(covectors[j], covectors[i]))
        best = std::max(best, dim[j]);
    }
    dim[i] = (best == -2) ? -1 : best + 1;
  }

  for (std::size_t i = 0; i < count; ++i) {
    lat.labels.push_back(covectors[i]);
    lat.dims.push_back(dim[i]);
    if (support(i) == 0) lat.root = static_cast<int>(i);
  }

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !sv_below(covectors[i], covectors[j]) || covectors[i] == covectors[j])
        continue;
      bool covered = true;
      for (std::size_t h = 0; h < count && covered; ++h) {
        if (h == i || h == j) continue;
        if (sv_below(covectors[i], covectors[h]) && sv_below(covectors[h], covectors[j]) &&
            covectors[h] != covectors[i] && covectors[h] != covectors[j])
          covered = false;
      }
      if (covered) lat.arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }

  const int top_dim = *std::max_element(lat.dims.begin(), lat.dims.end()) + 1;
  lat.labels.push_back({});
  lat.dims.push_back(top_dim);
  lat.top = static_cast<int>(lat.labels.size()) - 1;
  std::vector<char> has_up(count, 0);
  for (auto [child, parent] : lat.arcs) has_up[child] = 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (!has_up[i]) {
      lat.arcs.emplace_back(static_cast<int>(i), lat.top);
      ++lat.tope_count;
    }
  }
  return lat;
}

}  // namespace polylat::oracle
