#pragma once

// Big face lattices of oriented matroids built from cocircuit lists. Sign
// vectors are strings over '+', '-', '0'; the conformal order and the
// composition rule replace subset order and closure, and the trie is keyed by
// indices into the fixed cocircuit ordering instead of vertex numbers.

#include "polylat/types.hpp"

#include <iosfwd>
#include <optional>

namespace polylat::om {

using SignVector = std::string;

// Indices where one vector is '+' and the other '-'.
std::vector<int> separation_set(const SignVector& v, const SignVector& w);

// Componentwise first-nonzero rule.
SignVector compose(const SignVector& v, const SignVector& w);

// Conformal order: below[i] is zero or agrees with above[i] everywhere.
bool conforms(const SignVector& below, const SignVector& above);

// The composition when the separation set is empty, otherwise the artificial
// top element (nullopt).
std::optional<SignVector> join_covectors(const SignVector& v, const SignVector& w);

// Key of a covector in the cocircuit-indexed trie: scan the cocircuits below
// it in input order, compose them, and keep the indices where the running
// join changes. Throws std::invalid_argument when the joins never reach the
// vector (it is not a covector of the given cocircuits).
std::vector<int> canonical_index_set(std::span<const SignVector> cocircuits,
                                     const SignVector& covector);

struct CovectorLattice {
  int ground_size = 0;  // k
  // Cocircuits as used, in input order; missing negations are appended.
  std::vector<SignVector> cocircuits;
  bool negation_completed = false;

  std::vector<SignVector> labels;  // per node; the top node has no sign vector
  std::vector<int> dims;           // zero vector -1, cocircuits 0, top last
  std::vector<std::pair<int, int>> arcs;  // (child, parent)
  int root = -1;
  int top = -1;
  std::size_t tope_count = 0;
};

// Hasse diagram of all covectors under the conformal order, from the zero
// vector up to the adjoined top element. Cover candidates of a covector are
// its joins with the cocircuits not below it; the minimal ones are found by
// pairwise comparison. Maximal covectors (the topes) are attached to the top
// element in a final pass. ground_size may be omitted when at least one
// cocircuit is given.
CovectorLattice build_covector_lattice(std::vector<SignVector> cocircuits,
                                       int ground_size = -1);

struct CocircuitFile {
  int ground_size = 0;
  std::vector<SignVector> cocircuits;
};

// Text format: first data line "n k", then n lines of k characters from
// "+-0". Comment and blank lines are skipped as in the incidence format.
CocircuitFile parse_cocircuits(std::istream& in);
CocircuitFile parse_cocircuits(const std::string& text);

// Canonical forms, mirroring the polytope diagram output with sign-string
// labels ("s <signs>" per node, "top" for the top element).
std::string to_text(const CovectorLattice& lat);
std::string to_json(const CovectorLattice& lat);

}  // namespace polylat::om
