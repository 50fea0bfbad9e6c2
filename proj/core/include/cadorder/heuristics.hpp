// Human-made ordering heuristics: Brown's degree criteria and sotd (sum of
// total degrees over all projection levels), plus a seeded random baseline.
// Both heuristics return the full set of tied best orderings.

#pragma once

#include <cstdint>

#include "cadorder/ordering.hpp"
#include "cadorder/problem.hpp"
#include "cadorder/projection.hpp"

namespace cadorder {

// Orderings consistent with repeatedly eliminating a variable minimal under
// the lexicographic triple (overall degree, max total degree of containing
// terms, number of containing terms).  Absent variables score (0,0,0).
OrderingSet brown(const Problem& problem);

// Sum over every polynomial at every projection level (input included) of
// the total degrees of its monomials.
long sotd_value(const Problem& problem, OrderingId ordering);

// Argmin set of sotd_value over the 6 orderings.
OrderingSet sotd(const Problem& problem);

// Uniform over the 6 orderings, deterministic in (problem id, seed).
OrderingId random_choice(const Problem& problem, uint64_t seed);

}  // namespace cadorder
