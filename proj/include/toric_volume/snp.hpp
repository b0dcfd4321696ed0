#pragma once

// Admissible parameter tuples: (p_1, q_1, ..., p_n, q_n) satisfying the
// monotonic, slope, nef and primitive conditions relative to a germ.

#include "toric_volume/germ.hpp"
#include "toric_volume/lattice_fan.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

enum class SnpCondition { Monotonic, Slope, Nef1, Nef2, Primitive };

struct SnpFailure {
    SnpCondition condition;
    std::size_t k = 0; ///< index the condition refers to (1-based)
    std::string detail;

    /// "MONOTONIC", "SLOPE", "NEF1(k=2)", "NEF2(k=1)", "PRIMITIVE(k=3)".
    std::string tag() const;
    /// "SNP: <tag> violated: <detail>"
    std::string diagnostic() const;
};

struct SnpVerdict {
    bool member = false;
    std::vector<SnpFailure> failures;

    bool has(SnpCondition c) const;
};

/// Evaluates every condition (no short-circuit). Entries must be >= 1;
/// non-primitive pairs and broken slopes are reported as failures.
SnpVerdict check_membership(std::span<const LatticeVector> pairs, const GermParams& germ);
SnpVerdict check_membership(const WeightSequence& ws, const GermParams& germ);

/// Smallest q* such that every q_n >= q* satisfies the slope and nef2
/// inequalities that involve index n, for the tuple prefix + (p_n, q_n).
/// An empty prefix gives the threshold for n = 1.
Integer q_threshold(const WeightSequence& prefix, const Integer& p_n, const GermParams& germ);

/// Appends (p_next, q). With no explicit q, the least q >= q_threshold
/// coprime to p_next is used.
WeightSequence extend(const WeightSequence& prefix, const Integer& p_next, const GermParams& germ,
    const std::optional<Integer>& explicit_q = std::nullopt);

/// A member of length n with p_k = p1 - k + 1 and q_1 = 1, extended with the
/// smallest admissible q at each step. p1 defaults to l + n - 1.
WeightSequence seed(std::size_t n, const GermParams& germ, const std::optional<Integer>& p1 = std::nullopt);

/// Replaces q_n by m >= q_n with gcd(p_n, m) = 1.
WeightSequence raise_tail(const WeightSequence& ws, const Integer& m, const GermParams& germ);

/// Drops the last pair of a member with n >= 2.
WeightSequence truncate(const WeightSequence& ws, const GermParams& germ);

/// Throws PreconditionError("... not admissible: <tags>") unless ws is a member.
void require_member(const WeightSequence& ws, const GermParams& germ, const char* context);

} // namespace toric
