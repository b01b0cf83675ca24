#pragma once

#include <cstdint>
#include <vector>

#include "pricing/model.hpp"

namespace pricing {

// Brute-force maximization of the exact expected revenue over all integer
// price vectors in X_i [min V_i, max V_i]. For integer-valued instances this
// box contains a global optimum, so the result is the true maximum.
// Enumeration is row-major ascending; ties resolve to the lexicographically
// smallest maximizer. Throws NonIntegerValues / GridTooLarge.
SolveResult grid_solve(const PricingInstance& inst, std::uint64_t budget = 10000000);

// Brute-force maximization over the Cartesian product of explicit per-item
// candidate price sets. Only as optimal as the candidate sets are.
SolveResult restricted_solve(const PricingInstance& inst,
                             const std::vector<std::vector<Rational>>& candidates,
                             std::uint64_t budget = 10000000);

}  // namespace pricing
