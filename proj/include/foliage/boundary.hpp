#pragma once

#include "foliage/braid.hpp"
#include "foliage/disc.hpp"

namespace foliage {

// Eliminates the N strands fixed by rho(ew); result lives in B_{P-N}.
BoundaryWord boundary_braid(const BraidWord& ew, int P, int N);
BoundaryWord boundary_braid(const SaddleCode& c);

// delta_expand followed by free_reduce
BraidWord reduced_boundary(const BoundaryWord& bw);

}  // namespace foliage
