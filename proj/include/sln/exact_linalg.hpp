#pragma once

#include <vector>

#include "sln/bigint.hpp"

namespace sln {

// Rank over the rationals, computed by clearing each row's denominators and
// running fraction-free (Bareiss) elimination over the integers. Bit-exact,
// deterministic pivoting (first nonzero row per column).
int rank_exact(std::vector<std::vector<Rat>> rows);

int rank_exact_int(std::vector<std::vector<Int>> rows);

}  // namespace sln
