#pragma once

// Rank-2 lattice combinatorics: primitive vectors, cone multiplicities and the
// fan obtained by inserting rays u_1..u_n into the first quadrant.

#include "toric_volume/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace toric {

/// p*e1 + q*e2.
struct LatticeVector {
    Integer p;
    Integer q;

    friend bool operator==(const LatticeVector& a, const LatticeVector& b)
    {
        return a.p == b.p && a.q == b.q;
    }
};

/// det[a b] = a.p*b.q - b.p*a.q.
Integer cross(const LatticeVector& a, const LatticeVector& b);

/// True iff gcd(|p|, |q|) == 1. Throws DomainError for the zero vector.
bool is_primitive(const LatticeVector& v);

/// Slope comparison q_a/p_a < q_b/p_b for vectors in the closed first quadrant,
/// with (1,0) having slope 0 and (0,1) slope +inf. Done by cross-multiplication.
bool slope_less(const LatticeVector& a, const LatticeVector& b);

/// Ordered rays u_1..u_n with implicit sentinels u_0 = (1,0), u_{n+1} = (0,1).
///
/// Invariants (checked on construction): p_k >= 1, q_k >= 1, gcd(p_k, q_k) = 1,
/// and strictly increasing slopes q_k/p_k. An empty sequence (n = 0) is the
/// unsubdivided quadrant.
class WeightSequence {
public:
    WeightSequence() = default;

    /// Throws ValidationError naming the first failed condition and its index.
    explicit WeightSequence(std::vector<LatticeVector> pairs);

    /// Returns the first violated invariant as a message, or an empty string.
    static std::string first_violation(std::span<const LatticeVector> pairs);

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    /// u_k for 0 <= k <= n+1 (sentinels included). Throws DomainError otherwise.
    LatticeVector ray(std::size_t k) const;
    /// Shorthands for ray(k).p and ray(k).q.
    Integer p(std::size_t k) const { return ray(k).p; }
    Integer q(std::size_t k) const { return ray(k).q; }

    const std::vector<LatticeVector>& pairs() const { return pairs_; }

    /// Drops the last pair. Throws DomainError when empty.
    WeightSequence truncated() const;
    /// Appends (p, q); re-validates.
    WeightSequence appended(LatticeVector v) const;
    /// Replaces q_n; re-validates. Throws DomainError when empty.
    WeightSequence with_last_q(const Integer& q) const;

    friend bool operator==(const WeightSequence& a, const WeightSequence& b)
    {
        return a.pairs_ == b.pairs_;
    }

private:
    std::vector<LatticeVector> pairs_;
};

/// Cone(gen1, gen2) with linearly independent generators.
class Cone2D {
public:
    /// Throws DomainError when the generators are linearly dependent.
    Cone2D(LatticeVector gen1, LatticeVector gen2);

    const LatticeVector& gen1() const { return gen1_; }
    const LatticeVector& gen2() const { return gen2_; }

private:
    LatticeVector gen1_;
    LatticeVector gen2_;
};

/// Index of Z*gen1 + Z*gen2 in Z^2, i.e. p1*q2 - p2*q1 for generators in the
/// first quadrant ordered by slope. Throws DomainError for non-primitive
/// generators, generators outside the quadrant, or wrong orientation.
Integer cone_multiplicity(const Cone2D& cone);

/// Maximal cones sigma_k = Cone(u_{k-1}, u_k), k = 1..n+1.
std::vector<Cone2D> build_fan(const WeightSequence& ws);

} // namespace toric
