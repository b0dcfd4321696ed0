#pragma once

// Volume defect f_n and the volume of the contracted pair, by closed formula
// and, independently, by expanding (K_W + B̄_W)^2 over the intersection matrix.

#include "toric_volume/germ.hpp"
#include "toric_volume/lattice_fan.hpp"
#include "toric_volume/rational.hpp"
#include "toric_volume/snp.hpp"

#include <cstddef>

namespace toric {

struct VolumeReport {
    Rational f_value;
    Rational vol_z; ///< vol_x - f_value
    Rational vol_x;
    std::size_t n = 0;
    WeightSequence weights;
};

/// Thrown by volume_z / volume_via_intersection for non-admissible tuples.
class NotAdmissibleError : public PreconditionError {
public:
    explicit NotAdmissibleError(SnpVerdict verdict);
    const SnpVerdict& verdict() const { return verdict_; }

private:
    SnpVerdict verdict_;
};

/// f_n(p_1, q_1, ..., p_n, q_n); f_0 = 0 for the empty sequence.
Rational f_value(const WeightSequence& ws, const GermParams& germ);

/// A(m) = (p_{n-1} - p_n)^2 / (p_{n-1} p_n) * 1 / (p_{n-1} m - p_n q_{n-1}),
/// the amount by which f_n with q_n replaced by m exceeds f_{n-1} of the prefix.
/// Requires n >= 2 and m >= q_n.
Rational tail_increment(const WeightSequence& ws, const Integer& m);

/// vol(Z, K_Z + B_Z) = vol_x - f_n. Refuses non-admissible tuples.
VolumeReport volume_z(const WeightSequence& ws, const GermParams& germ);

/// vol_x + (a_0 C_0 + C_1 + ... + C_n)^2 via the intersection matrix.
Rational volume_via_intersection(const WeightSequence& ws, const GermParams& germ);

/// (K_W + B̄_W) . C_k for 0 <= k <= n+1; does not require admissibility.
Rational nef_pairing(const WeightSequence& ws, const GermParams& germ, std::size_t k);

/// d(d-1)(d+1)/2 * v: volume after taking the product with a general
/// hypersurface of degree d+1 in P^{d-1}. Requires d >= 3, v > 0.
Rational lift_to_dimension(int d, const Rational& v);

} // namespace toric
