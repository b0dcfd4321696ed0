#include "toric_volume/volume.hpp"

#include "toric_volume/errors.hpp"
#include "toric_volume/intersection.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toric {

namespace {

std::string describe(const SnpVerdict& v)
{
    std::string out = "tuple not admissible:";
    for (const auto& f : v.failures)
        out += " " + f.tag();
    return out;
}

// D = a_0 C_0 + C_1 + ... + C_n as coefficients on C_0..C_{n+1}.
std::vector<Rational> defect_divisor(const WeightSequence& ws, const Rational& a0)
{
    std::vector<Rational> d(ws.size() + 2, Rational(1));
    d.front() = a0;
    d.back() = 0;
    return d;
}

} // namespace

NotAdmissibleError::NotAdmissibleError(SnpVerdict verdict)
    : PreconditionError(describe(verdict))
    , verdict_(std::move(verdict))
{
}

Rational f_value(const WeightSequence& ws, const GermParams& germ)
{
    const std::size_t n = ws.size();
    if (n == 0)
        return 0;

    auto d = [&](std::size_t i, std::size_t j) { return Rational(cross(ws.ray(i), ws.ray(j))); };
    auto p = [&](std::size_t k) { return Rational(ws.p(k)); };
    auto q = [&](std::size_t k) { return Rational(ws.q(k)); };

    const Rational a0_term = compute_a0(germ, ws.p(1), ws.q(1)) / q(1);
    if (n == 1)
        return 1 / (p(1) * q(1)) - a0_term;

    Rational f = (q(2) / q(1) - 1) / d(1, 2) + (p(n - 1) / p(n) - 1) / d(n - 1, n);
    for (std::size_t k = 2; k + 1 <= n; ++k)
        f += (d(k - 1, k + 1) - d(k - 1, k) - d(k, k + 1)) / (d(k - 1, k) * d(k, k + 1));
    f -= a0_term;
    return f;
}

Rational tail_increment(const WeightSequence& ws, const Integer& m)
{
    const std::size_t n = ws.size();
    if (n < 2)
        throw DomainError("tail_increment: need n >= 2");
    if (m < ws.q(n))
        throw PreconditionError("tail_increment: m = " + to_string(m) + " < q_n = " + to_string(ws.q(n)));
    const Integer& p_prev = ws.pairs()[n - 2].p;
    const Integer& q_prev = ws.pairs()[n - 2].q;
    const Integer& p_last = ws.pairs()[n - 1].p;
    Integer gap = p_prev - p_last;
    Integer linear = p_prev * m - p_last * q_prev;
    if (linear <= 0)
        throw PreconditionError("tail_increment: p_{n-1} m - p_n q_{n-1} must be positive");
    return make_rational(gap * gap, p_prev * p_last * linear);
}

VolumeReport volume_z(const WeightSequence& ws, const GermParams& germ)
{
    if (ws.empty())
        throw PreconditionError("volume_z: need n >= 1");
    auto verdict = check_membership(ws, germ);
    if (!verdict.member)
        throw NotAdmissibleError(std::move(verdict));
    VolumeReport report;
    report.f_value = f_value(ws, germ);
    report.vol_x = germ.vol_x;
    report.vol_z = germ.vol_x - report.f_value;
    report.n = ws.size();
    report.weights = ws;
    return report;
}

Rational volume_via_intersection(const WeightSequence& ws, const GermParams& germ)
{
    if (ws.empty())
        throw PreconditionError("volume_via_intersection: need n >= 1");
    auto verdict = check_membership(ws, germ);
    if (!verdict.member)
        throw NotAdmissibleError(std::move(verdict));

    const auto m = intersection_matrix(ws, germ);
    const auto d = defect_divisor(ws, compute_a0(germ, ws.p(1), ws.q(1)));
    // (pi^*(K_X+B) - D)^2 = vol_x + D^2, since pi^*(K_X+B) is orthogonal to the
    // exceptional curves and pi^*(K_X+B) . C_0 = (K_X+B) . B_1 = 0.
    Rational d_sq = 0;
    for (std::size_t i = 0; i <= ws.size(); ++i)
        for (std::size_t j = 0; j <= ws.size(); ++j)
            d_sq += d[i] * d[j] * m.at(i, j);
    return germ.vol_x + d_sq;
}

Rational nef_pairing(const WeightSequence& ws, const GermParams& germ, std::size_t k)
{
    const std::size_t n = ws.size();
    if (n == 0)
        throw DomainError("nef_pairing: need n >= 1");
    if (k > n + 1)
        throw DomainError("nef_pairing: k = " + std::to_string(k) + " outside 0.." + std::to_string(n + 1));

    const auto m = intersection_matrix(ws, germ);
    const auto d = defect_divisor(ws, compute_a0(germ, ws.p(1), ws.q(1)));
    Rational pairing = k == n + 1 ? germ.kb_dot_b2 : Rational(0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (i + 1 < k || i > k + 1)
            continue;
        pairing -= d[i] * m.at(i, k);
    }
    return pairing;
}

Rational lift_to_dimension(int d, const Rational& v)
{
    if (d == 2)
        throw DomainError("lift_to_dimension: d = 2 is the surface case itself (identity)");
    if (d < 3)
        throw DomainError("lift_to_dimension: d must be >= 3");
    if (v <= 0)
        throw PreconditionError("lift_to_dimension: v must be positive");
    Integer factor = Integer(d) * (d - 1) * (d + 1) / 2;
    return Rational(factor) * v;
}

} // namespace toric
