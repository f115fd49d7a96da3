#pragma once

#include "sln/bigint.hpp"

namespace sln {

// D_k = sum_{j=0}^{k} (-1)^j k!/j!, the number of fixed-point-free
// permutations of k symbols. D_0 = 1 (the empty permutation has no fixed
// point, and the recurrence below forces it).
Int derangement_incl_excl(unsigned k);

// D_0 = 1, D_1 = 0, D_{k+1} = k (D_k + D_{k-1}).
Int derangement_recurrence(unsigned k);

}  // namespace sln
