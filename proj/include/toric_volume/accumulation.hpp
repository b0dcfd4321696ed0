#pragma once

// Finite certificates that 0 is an n-fold iterated accumulation point of the
// set of volume defects. Level k fixes an admissible prefix of length k-1 and
// lets q_k = m run over all m >= m_start coprime to p_k; the values f_k then
// decrease strictly to f_{k-1}(prefix) with an explicit increment, and that
// limit is itself a member of the level k-1 family.

#include "toric_volume/germ.hpp"
#include "toric_volume/lattice_fan.hpp"
#include "toric_volume/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

struct CertificateLevel {
    std::size_t level = 0;
    WeightSequence limit_weights; ///< length level-1
    Rational limit_value;         ///< f_{level-1}(limit_weights); 0 at level 1
    Integer varying_p;            ///< p_level
    Integer m_start;              ///< q_threshold(limit_weights, varying_p)
    Integer m_coprime_to;         ///< equals varying_p

    /// Level >= 2: f(m) - limit_value = increment_coeff / (increment_a * m + increment_b).
    Rational increment_coeff;
    Integer increment_a;
    Integer increment_b;

    /// Level 1: f_1(p_1, m) = 1/(p_1 m) - 1/((p_1 - m B_1^2) m), with B_1^2 recorded here.
    Rational base_b1_sq;

    /// Admissible m values, in increasing order: the first `count` integers
    /// >= m_start coprime to m_coprime_to.
    std::vector<Integer> sample_ms(std::size_t count) const;
    /// limit_weights + (varying_p, m).
    WeightSequence family_tuple(const Integer& m) const;
    /// Closed-form value of f(m) - limit_value.
    Rational increment(const Integer& m) const;
};

struct AccumulationCertificate {
    GermParams germ;
    /// levels[0] is the top level n, levels.back() is level 1.
    std::vector<CertificateLevel> levels;

    std::size_t level() const { return levels.empty() ? 0 : levels.front().level; }
    const CertificateLevel& top() const { return levels.front(); }
    /// The level-(k-1) certificate this family accumulates to, if k >= 2.
    std::optional<AccumulationCertificate> child() const;
};

/// Nested certificate for p = (l+n-1, ..., l) with canonical (smallest
/// admissible) choices at the lower levels.
AccumulationCertificate build_chain(std::size_t n, const GermParams& germ);

/// Checks the first `samples` members of every level: admissibility, strict
/// decrease, exact agreement with the stored increment and limit, and the
/// link between each limit and the level below. Returns false on any mismatch;
/// throws ValidationError when the certificate is structurally malformed.
bool verify_certificate(const AccumulationCertificate& cert, std::size_t samples);

/// First `count` f-values of the top-level family, or vol_x minus each.
std::vector<Rational> sample_values(
    const AccumulationCertificate& cert, std::size_t count, bool as_volumes, const GermParams& germ);

} // namespace toric
