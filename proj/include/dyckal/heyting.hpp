#pragma once

#include <vector>

#include "dyckal/dyck.hpp"

// Heyting structure of the Dyck lattice: relative pseudocomplement via
// crossing sets, pseudocomplement via the pyramid construction, the double
// negation closure, and the regular elements (compositions of n).
namespace dyckal {

// Abscissas where two paths cross, in increasing order.  Always contains 0
// and 2n, has even cardinality, and between consecutive entries the first
// path is weakly below (even gap index) or weakly above (odd gap index)
// the second; touch points are not crossings.
struct CrossingSet {
  std::vector<int> abscissas;
  bool operator==(const CrossingSet&) const = default;
};

// Composition of n: ordered positive parts summing to n.  Regular paths are
// sequences of pyramids; parts are the pyramid heights left to right.
struct Composition {
  std::vector<int> parts;
  int total() const;
  bool operator==(const Composition&) const = default;
};

CrossingSet crossing_set(const DyckPath& p, const DyckPath& q);

// Largest z with meet(p, z) <= q.  Built segmentwise along crossing_set(p,q):
// even gaps get the steepest staircase u^a d^b between the endpoints, odd
// gaps copy q.
DyckPath rel_pseudocomplement(const DyckPath& p, const DyckPath& q);

// ~p = rel_pseudocomplement(p, bottom), computed directly: every maximal run
// of consecutive hills — and every return squeezed between two non-hill
// factors — widens by one step on each side (clamped to [0,2n]) and becomes
// a pyramid; everything else becomes hills.
DyckPath pseudocomplement(const DyckPath& p);

// ~~p: every factor becomes the pyramid of the same span.
DyckPath closure(const DyckPath& p);

// p is regular iff ~~p = p, i.e. every factor is a pyramid.
bool is_regular(const DyckPath& p);

// Pyramid heights of a regular path, left to right.
Composition regular_to_composition(const DyckPath& p);
DyckPath composition_to_regular(const Composition& c);

// True iff `coarser` merges exactly two adjacent parts of `finer` (a cover
// in the refinement order on regular elements, finer below).
bool refinement_covers(const Composition& finer, const Composition& coarser);

}  // namespace dyckal
