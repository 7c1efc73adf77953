#pragma once

#include <boost/dynamic_bitset.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polylat {

// Faces are handled as strictly increasing index lists; the bit view is used
// where membership tests, unions and queue storage dominate.
using VertexSet = std::vector<int>;
using FacetSet = std::vector<int>;
using Bitset = boost::dynamic_bitset<>;

// Malformed input text (incidence or cocircuit files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input cannot be the incidences of a polytope: a generated cover skipped
// a rank, or a full run never reached the top face.
struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Bitset make_bitset(std::size_t universe, std::span<const int> members) {
  Bitset bits(universe);
  for (int x : members) bits.set(static_cast<std::size_t>(x));
  return bits;
}

inline std::vector<int> bitset_to_list(const Bitset& bits) {
  std::vector<int> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace polylat
