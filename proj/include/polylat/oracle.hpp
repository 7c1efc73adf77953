#pragma once

// Brute-force reference implementations and small instance generators used to
// cross-check the optimized builders. Everything here recomputes from the raw
// facet rows with dense bit masks, or from first principles for sign vectors,
// and deliberately shares no code with the closure, enumeration, and oriented
// matroid modules it validates.

#include "polylat/diagram.hpp"
#include "polylat/incidence.hpp"
#include "polylat/om.hpp"

namespace polylat::oracle {

// Vertices(Facets(S)) evaluated directly on dense row masks. n <= 20.
VertexSet brute_force_closure(const IncidenceStructure& inc, std::span<const int> verts);

// All S with Vertices(Facets(S)) == S, by enumerating every subset. n <= 20.
std::vector<VertexSet> brute_force_faces(const IncidenceStructure& inc);

// Cover relations by pairwise inclusion scans; dimensions by longest chain
// from the unique minimal face.
HasseDiagram brute_force_hasse(const std::vector<VertexSet>& faces);

// d-simplex: facet i omits exactly vertex i.
IncidenceStructure gen_simplex(int d);
// d-cube: vertices are the bit patterns 0..2^d-1, facets the coordinate
// half-spaces (for each coordinate, the bit-0 side then the bit-1 side).
IncidenceStructure gen_cube(int d);
// d-cross-polytope: transpose of the d-cube.
IncidenceStructure gen_cross(int d);
// Cyclic polytope C(d, n): a d-subset of the n ordered vertices is a facet
// iff every maximal run of members strictly between two non-members has even
// length (Gale evenness).
IncidenceStructure gen_cyclic(int d, int n);

// Conformal-join closure of {zero} plus the given cocircuits, sorted.
std::vector<om::SignVector> brute_force_covectors(std::span<const om::SignVector> cocircuits,
                                                  int ground_size);

// Full big face lattice over the join closure by pairwise comparisons.
om::CovectorLattice brute_force_covector_hasse(std::span<const om::SignVector> cocircuits,
                                               int ground_size);

}  // namespace polylat::oracle
