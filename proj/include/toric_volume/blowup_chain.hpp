#pragma once

// Factorization of W -> X into weighted blow-ups, one per inserted ray.

#include "toric_volume/lattice_fan.hpp"
#include "toric_volume/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace toric {

/// Cyclic quotient singularity 1/r(1, a), 0 <= a < r. r = 1 is a smooth point.
struct CyclicQuotientType {
    Integer r;
    Integer a;

    bool smooth() const { return r == 1; }
};

/// pi_m : W_m -> W_{m-1}, the weighted blow-up at the torus-fixed point of
/// Cone(u_{m-1}, u_{n+1}) that inserts the ray u_m.
struct FactorizationStep {
    std::size_t index = 0;
    CyclicQuotientType singularity;
    Integer c; ///< gcd(p_{m-1}, p_m)
    /// (1/p_{m-1}) * (p_m/c, (p_{m-1} q_m - p_m q_{m-1})/c)
    std::pair<Rational, Rational> weights;
    /// (p_m/c, (p_{m-1} q_m - p_m q_{m-1})/c)
    std::pair<Integer, Integer> normalized_weights;
    /// mult Cone(u_{m-1}, u_m) = p_{m-1} q_m - p_m q_{m-1}
    Integer multiplicity;
};

std::vector<FactorizationStep> factorize(const WeightSequence& ws);

/// [mult(sigma_1), ..., mult(sigma_{n+1})] of the final fan.
std::vector<Integer> chain_multiplicities(const WeightSequence& ws);

} // namespace toric
