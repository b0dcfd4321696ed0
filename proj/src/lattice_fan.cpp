#include "toric_volume/lattice_fan.hpp"

#include "toric_volume/errors.hpp"

#include <utility>

namespace toric {

Integer cross(const LatticeVector& a, const LatticeVector& b)
{
    return a.p * b.q - b.p * a.q;
}

bool is_primitive(const LatticeVector& v)
{
    if (v.p == 0 && v.q == 0)
        throw DomainError("is_primitive: zero vector");
    return gcd(v.p, v.q) == 1;
}

bool slope_less(const LatticeVector& a, const LatticeVector& b)
{
    return a.q * b.p < b.q * a.p;
}

WeightSequence::WeightSequence(std::vector<LatticeVector> pairs)
    : pairs_(std::move(pairs))
{
    if (auto msg = first_violation(pairs_); !msg.empty())
        throw ValidationError(msg);
}

std::string WeightSequence::first_violation(std::span<const LatticeVector> pairs)
{
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& v = pairs[i];
        const std::string k = std::to_string(i + 1);
        if (v.p < 1 || v.q < 1)
            return "POSITIVE violated at k=" + k + ": (p" + k + ", q" + k + ") = (" + to_string(v.p) + ", "
                + to_string(v.q) + ") must have both entries >= 1";
        if (gcd(v.p, v.q) != 1)
            return "PRIMITIVE violated at k=" + k + ": gcd(" + to_string(v.p) + ", " + to_string(v.q)
                + ") = " + to_string(gcd(v.p, v.q));
        if (i > 0 && !slope_less(pairs[i - 1], v))
            return "SLOPE violated at k=" + k + ": q" + k + "/p" + k + " = " + to_string(v.q) + "/" + to_string(v.p)
                + " is not greater than q" + std::to_string(i) + "/p" + std::to_string(i) + " = "
                + to_string(pairs[i - 1].q) + "/" + to_string(pairs[i - 1].p);
    }
    return {};
}

LatticeVector WeightSequence::ray(std::size_t k) const
{
    if (k == 0)
        return {1, 0};
    if (k == pairs_.size() + 1)
        return {0, 1};
    if (k > pairs_.size() + 1)
        throw DomainError("ray index " + std::to_string(k) + " out of range 0.." + std::to_string(pairs_.size() + 1));
    return pairs_[k - 1];
}

WeightSequence WeightSequence::truncated() const
{
    if (pairs_.empty())
        throw DomainError("cannot truncate an empty weight sequence");
    return WeightSequence(std::vector<LatticeVector>(pairs_.begin(), pairs_.end() - 1));
}

WeightSequence WeightSequence::appended(LatticeVector v) const
{
    auto pairs = pairs_;
    pairs.push_back(std::move(v));
    return WeightSequence(std::move(pairs));
}

WeightSequence WeightSequence::with_last_q(const Integer& q) const
{
    if (pairs_.empty())
        throw DomainError("cannot replace q_n of an empty weight sequence");
    auto pairs = pairs_;
    pairs.back().q = q;
    return WeightSequence(std::move(pairs));
}

Cone2D::Cone2D(LatticeVector gen1, LatticeVector gen2)
    : gen1_(std::move(gen1))
    , gen2_(std::move(gen2))
{
    if (cross(gen1_, gen2_) == 0)
        throw DomainError("degenerate cone: generators are linearly dependent");
}

Integer cone_multiplicity(const Cone2D& cone)
{
    const auto& a = cone.gen1();
    const auto& b = cone.gen2();
    if (!is_primitive(a) || !is_primitive(b))
        throw DomainError("cone_multiplicity: generators must be primitive");
    if (a.p < 0 || a.q < 0 || b.p < 0 || b.q < 0)
        throw DomainError("cone_multiplicity: generators must lie in the first quadrant");
    Integer det = cross(a, b);
    if (det <= 0)
        throw DomainError("cone_multiplicity: generators not ordered by increasing slope (determinant "
            + to_string(det) + ")");
    return det;
}

std::vector<Cone2D> build_fan(const WeightSequence& ws)
{
    std::vector<Cone2D> cones;
    cones.reserve(ws.size() + 1);
    for (std::size_t k = 1; k <= ws.size() + 1; ++k)
        cones.emplace_back(ws.ray(k - 1), ws.ray(k));
    return cones;
}

} // namespace toric
