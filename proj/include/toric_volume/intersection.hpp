#pragma once

// Intersection numbers of the torus-invariant curves C_0, ..., C_{n+1} on the
// toric surface W given by a WeightSequence. C_0 and C_{n+1} are the strict
// transforms of B_1 and B_2; only C_0^2 can be recovered, and only from germ data.

#include "toric_volume/germ.hpp"
#include "toric_volume/lattice_fan.hpp"
#include "toric_volume/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

class IntersectionMatrix {
public:
    /// All entries undefined; indices run over 0..n+1.
    explicit IntersectionMatrix(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return n_ + 2; }

    bool defined(std::size_t i, std::size_t j) const;
    /// Throws DomainError if the entry is undefined or out of range.
    const Rational& at(std::size_t i, std::size_t j) const;
    const std::optional<Rational>& entry(std::size_t i, std::size_t j) const;

    /// Copy with (i,j) and (j,i) set to `value`.
    IntersectionMatrix with_entry(std::size_t i, std::size_t j, Rational value) const;

    /// B_1^2 of the germ used to fill (0,0), when one was supplied.
    const std::optional<Rational>& b1_sq() const { return b1_sq_; }

private:
    friend IntersectionMatrix intersection_matrix(const WeightSequence&, const std::optional<GermParams>&);

    void set(std::size_t i, std::size_t j, Rational value);
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t n_;
    std::vector<std::optional<Rational>> entries_;
    std::optional<Rational> b1_sq_;
};

/// C_{k-1} . C_k = 1 / mult(sigma_k), 1 <= k <= n+1.
Rational adjacent_intersection(const WeightSequence& ws, std::size_t k);

/// C_k^2 for 1 <= k <= n, from the interior formula evaluated with the
/// sentinel rays at the ends.
Rational self_intersection(const WeightSequence& ws, std::size_t k);

/// Full pairing table; (0,0) = B_1^2 - p_1/q_1 when a germ is given,
/// (n+1,n+1) always undefined. Requires n >= 1.
IntersectionMatrix intersection_matrix(const WeightSequence& ws, const std::optional<GermParams>& germ = std::nullopt);

/// Checks, for every 1 <= k <= n, sum_j (C_k . C_j) u_j = 0 over all rays,
/// plus symmetry, vanishing for |i-j| >= 2 and, when C_0^2 is present,
/// B_1^2 = C_0^2 + p_1 C_0.C_1.
bool verify_linear_relations(const IntersectionMatrix& m, const WeightSequence& ws);

/// Coefficients (1, p_1, ..., p_n, 0) of pi^* B_1 on C_0, ..., C_{n+1}.
std::vector<Integer> pullback_b1(const WeightSequence& ws);

} // namespace toric
