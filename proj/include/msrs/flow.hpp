#pragma once

#include "msrs/rat.hpp"

#include <cstdint>
#include <vector>

namespace msrs {

// Fractional placement of placeholder jobs: frac[c][l] in [0,1], per-class sums n[c],
// per-layer sums at most k[l].
struct FractionalPlacement {
    std::vector<std::vector<Rat>> frac;
    std::vector<std::int64_t> k;
    std::vector<std::int64_t> n;
};

struct IntegralPlacement {
    std::vector<std::vector<int>> x;  // 0/1, same shape as frac
    std::int64_t value = 0;
};

// Integral max flow in the source -> class (n_c) -> layer (gamma in {0,1}) -> sink (k_l) network,
// gamma = 1 exactly where the fractional placement is positive.
// Throws ContractError if the input is not a feasible flow of value sum n_c.
IntegralPlacement integralize_small_placement(const FractionalPlacement& in);

}  // namespace msrs
