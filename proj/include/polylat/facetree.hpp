#pragma once

// The face tree: a trie whose arcs carry vertex labels that strictly increase
// along every root-to-leaf path. A face maps to the tree path spelled by its
// canonical spanning set, so locating or creating the node for a face costs
// one pass over the incidence lists. Tree nodes that exist but have not been
// tied to a lattice node yet hold -1; the faces they stand for turn up later
// in the run.

#include "polylat/closure.hpp"
#include "polylat/incidence.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace polylat {

// Smallest generating subset of a closed nonempty face: scan the face in
// increasing order and keep exactly the vertices that strictly grow the
// closure of what was kept so far. Keeping the running intersection
// Facets({s1}) ∩ ... ∩ Facets({si}) makes one pass suffice: the closure grows
// exactly when the intersection shrinks. The result has at most dim+1
// elements and its closure is the face itself.
VertexSet canonical_spanning_set(const IncidenceStructure& inc, std::span<const int> face);

class FaceTree {
 public:
  struct Node {
    int lattice_node = -1;                      // -1 until the face is seen
    std::vector<std::pair<int, int>> children;  // (arc label, node index), sorted by label
  };

  FaceTree() : nodes_(1) {}

  // Walks the key from the root, creating missing arcs and nodes; fresh
  // intermediate nodes keep lattice_node == -1. If the terminal node has no
  // lattice node yet, make_node() is invoked and the result stored. Returns
  // the lattice node and whether it was created by this call.
  template <class MakeNode>
  std::pair<int, bool> locate_or_create_keyed(std::span<const int> key, MakeNode&& make_node) {
    int cur = 0;
    for (int label : key) cur = child(cur, label);
    max_depth_ = std::max(max_depth_, static_cast<int>(key.size()));
    if (nodes_[cur].lattice_node < 0) {
      nodes_[cur].lattice_node = make_node();
      return {nodes_[cur].lattice_node, true};
    }
    return {nodes_[cur].lattice_node, false};
  }

  // Keying for polytope faces. The empty face is the root itself.
  template <class MakeNode>
  std::pair<int, bool> locate_or_create(const IncidenceStructure& inc, std::span<const int> face,
                                        MakeNode&& make_node) {
    if (face.empty())
      return locate_or_create_keyed({}, std::forward<MakeNode>(make_node));
    const VertexSet key = canonical_spanning_set(inc, face);
    return locate_or_create_keyed(key, std::forward<MakeNode>(make_node));
  }

  std::size_t node_count() const { return nodes_.size(); }
  int depth() const { return max_depth_; }
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  int child(int parent, int label) {
    std::size_t pos;
    {
      const auto& kids = nodes_[parent].children;
      auto it = std::lower_bound(
          kids.begin(), kids.end(), label,
          [](const std::pair<int, int>& kv, int l) { return kv.first < l; });
      if (it != kids.end() && it->first == label) return it->second;
      pos = static_cast<std::size_t>(it - kids.begin());
    }
    nodes_.emplace_back();  // may reallocate; insert position was taken first
    const int idx = static_cast<int>(nodes_.size()) - 1;
    auto& kids = nodes_[parent].children;
    kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(pos), {label, idx});
    return idx;
  }

  std::vector<Node> nodes_;
  int max_depth_ = 0;
};

}  // namespace polylat
