#include "toric_volume/snp.hpp"

#include "toric_volume/errors.hpp"

#include <algorithm>

namespace toric {

namespace {

std::string idx(std::size_t k)
{
    return std::to_string(k);
}

const char* name(SnpCondition c)
{
    switch (c) {
    case SnpCondition::Monotonic:
        return "MONOTONIC";
    case SnpCondition::Slope:
        return "SLOPE";
    case SnpCondition::Nef1:
        return "NEF1";
    case SnpCondition::Nef2:
        return "NEF2";
    case SnpCondition::Primitive:
        return "PRIMITIVE";
    }
    return "?";
}

// 1-based access with sentinels u_0 = (1,0), u_{n+1} = (0,1).
struct Rays {
    std::span<const LatticeVector> pairs;

    LatticeVector operator()(std::size_t k) const
    {
        if (k == 0)
            return {1, 0};
        if (k == pairs.size() + 1)
            return {0, 1};
        return pairs[k - 1];
    }
    Integer d(std::size_t i, std::size_t j) const { return cross((*this)(i), (*this)(j)); }
};

std::string join_tags(const SnpVerdict& v)
{
    std::string out;
    for (const auto& f : v.failures) {
        if (!out.empty())
            out += ", ";
        out += f.tag();
    }
    return out;
}

} // namespace

std::string SnpFailure::tag() const
{
    if (condition == SnpCondition::Monotonic || condition == SnpCondition::Slope)
        return name(condition);
    return std::string(name(condition)) + "(k=" + idx(k) + ")";
}

std::string SnpFailure::diagnostic() const
{
    return "SNP: " + tag() + " violated: " + detail;
}

bool SnpVerdict::has(SnpCondition c) const
{
    return std::any_of(failures.begin(), failures.end(), [c](const SnpFailure& f) { return f.condition == c; });
}

SnpVerdict check_membership(std::span<const LatticeVector> pairs, const GermParams& germ)
{
    const std::size_t n = pairs.size();
    if (n == 0)
        throw PreconditionError("check_membership: need n >= 1");
    for (const auto& v : pairs)
        if (v.p < 1 || v.q < 1)
            throw PreconditionError("check_membership: entries must be positive integers");

    const Rays u{pairs};
    SnpVerdict verdict;
    auto fail = [&](SnpCondition c, std::size_t k, std::string detail) {
        verdict.failures.push_back({c, k, std::move(detail)});
    };

    for (std::size_t k = 2; k <= n; ++k)
        if (u(k - 1).p <= u(k).p)
            fail(SnpCondition::Monotonic, k,
                "p" + idx(k - 1) + " = " + to_string(u(k - 1).p) + " <= p" + idx(k) + " = " + to_string(u(k).p));

    for (std::size_t k = 2; k <= n; ++k)
        if (!slope_less(u(k - 1), u(k)))
            fail(SnpCondition::Slope, k,
                "q" + idx(k) + "/p" + idx(k) + " = " + to_string(u(k).q) + "/" + to_string(u(k).p)
                    + " <= q" + idx(k - 1) + "/p" + idx(k - 1) + " = " + to_string(u(k - 1).q) + "/"
                    + to_string(u(k - 1).p));

    for (std::size_t k = 1; k <= n; ++k)
        if (u(k).p < germ.l)
            fail(SnpCondition::Nef1, k, "p" + idx(k) + " = " + to_string(u(k).p) + " < l = " + to_string(germ.l));

    const Rational a0 = compute_a0(germ, u(1).p, u(1).q);
    auto nef2 = [&](std::size_t k, const Rational& value, const std::string& expr) {
        if (value < 0)
            fail(SnpCondition::Nef2, k, expr + " = " + to_string(value) + " < 0");
    };
    if (n == 1) {
        nef2(1, 1 - a0 * u(1).p, "1-a0*p1");
    } else {
        nef2(1, Rational(u(2).q - u(1).q) - a0 * u.d(1, 2), "q2-q1-a0(p1q2-p2q1)");
        for (std::size_t k = 2; k <= n - 1; ++k)
            nef2(k, Rational(u.d(k - 1, k + 1) - u.d(k - 1, k) - u.d(k, k + 1)),
                "(p" + idx(k - 1) + "q" + idx(k + 1) + "-p" + idx(k + 1) + "q" + idx(k - 1) + ")-(p" + idx(k - 1)
                    + "q" + idx(k) + "-p" + idx(k) + "q" + idx(k - 1) + ")-(p" + idx(k) + "q" + idx(k + 1) + "-p"
                    + idx(k + 1) + "q" + idx(k) + ")");
        nef2(n, Rational(u(n - 1).p - u(n).p), "p" + idx(n - 1) + "-p" + idx(n));
    }

    for (std::size_t k = 1; k <= n; ++k)
        if (gcd(u(k).p, u(k).q) != 1)
            fail(SnpCondition::Primitive, k,
                "gcd(p" + idx(k) + ", q" + idx(k) + ") = " + to_string(gcd(u(k).p, u(k).q)) + " != 1");

    verdict.member = verdict.failures.empty();
    return verdict;
}

SnpVerdict check_membership(const WeightSequence& ws, const GermParams& germ)
{
    return check_membership(std::span<const LatticeVector>(ws.pairs()), germ);
}

void require_member(const WeightSequence& ws, const GermParams& germ, const char* context)
{
    if (ws.empty())
        throw PreconditionError(std::string(context) + ": empty tuple is not admissible");
    auto v = check_membership(ws, germ);
    if (!v.member)
        throw PreconditionError(std::string(context) + ": tuple not admissible: " + join_tags(v));
}

Integer q_threshold(const WeightSequence& prefix, const Integer& p_n, const GermParams& germ)
{
    const std::size_t n = prefix.size() + 1;
    if (p_n < germ.l)
        throw PreconditionError("q_threshold: p_n = " + to_string(p_n) + " < l = " + to_string(germ.l));
    if (n == 1) {
        // slope: q_1 > 0. nef2: 1 - a0 p_1 = -q_1 B_1^2 / (p_1 - q_1 B_1^2) >= 0, i.e. q_1 * (-B_1^2) >= 0.
        Integer nef_bound = ceil(Rational(0) / (-germ.b1_sq));
        return std::max(Integer(1), nef_bound);
    }
    require_member(prefix, germ, "q_threshold");
    const Integer& p_prev = prefix.pairs().back().p;
    const Integer& q_prev = prefix.pairs().back().q;
    if (!(p_prev > p_n))
        throw PreconditionError("q_threshold: need p_{n-1} = " + to_string(p_prev) + " > p_n = " + to_string(p_n));

    // Strict slope q_n/p_n > q_{n-1}/p_{n-1}.
    Integer slope_bound = floor(make_rational(p_n * q_prev, p_prev)) + 1;

    Integer nef_bound;
    if (n == 2) {
        const Integer& p1 = p_prev;
        const Integer& q1 = q_prev;
        Rational a0 = compute_a0(germ, p1, q1);
        Rational denom = 1 - a0 * p1;
        if (denom == 0)
            throw DomainError("q_threshold: degenerate threshold, 1 - a0*p1 = 0");
        nef_bound = ceil((q1 - a0 * p_n * q1) / denom);
    } else {
        const auto u2 = prefix.ray(n - 2);
        const auto u1 = prefix.ray(n - 1);
        Integer num = cross(u2, u1) + p_n * (u2.q - u1.q);
        nef_bound = ceil(make_rational(num, u2.p - u1.p));
    }
    return std::max({slope_bound, nef_bound, Integer(1)});
}

WeightSequence extend(const WeightSequence& prefix, const Integer& p_next, const GermParams& germ,
    const std::optional<Integer>& explicit_q)
{
    if (!prefix.empty()) {
        require_member(prefix, germ, "extend");
        if (!(prefix.pairs().back().p > p_next))
            throw PreconditionError("extend: need p_{n-1} > p_next");
    }
    if (p_next < germ.l)
        throw PreconditionError("extend: p_next = " + to_string(p_next) + " < l = " + to_string(germ.l));

    Integer threshold = q_threshold(prefix, p_next, germ);
    Integer q;
    if (explicit_q) {
        q = *explicit_q;
        if (q < threshold)
            throw PreconditionError("extend: q = " + to_string(q) + " is below the threshold " + to_string(threshold));
        if (gcd(p_next, q) != 1)
            throw PreconditionError("extend: gcd(" + to_string(p_next) + ", " + to_string(q) + ") != 1");
    } else {
        q = next_coprime(threshold, p_next);
    }
    WeightSequence out = prefix.appended({p_next, q});
    require_member(out, germ, "extend");
    return out;
}

WeightSequence seed(std::size_t n, const GermParams& germ, const std::optional<Integer>& p1)
{
    if (n < 1)
        throw PreconditionError("seed: n must be >= 1");
    const Integer min_p1 = germ.l + static_cast<unsigned long>(n - 1);
    const Integer first = p1.value_or(min_p1);
    if (first < min_p1)
        throw PreconditionError("seed: p1 = " + to_string(first) + " < l + n - 1 = " + to_string(min_p1));

    WeightSequence ws = extend(WeightSequence{}, first, germ, Integer(1));
    for (std::size_t k = 2; k <= n; ++k)
        ws = extend(ws, first - static_cast<unsigned long>(k - 1), germ);
    return ws;
}

WeightSequence raise_tail(const WeightSequence& ws, const Integer& m, const GermParams& germ)
{
    require_member(ws, germ, "raise_tail");
    const auto& last = ws.pairs().back();
    if (m < last.q)
        throw PreconditionError("raise_tail: m = " + to_string(m) + " < q_n = " + to_string(last.q));
    if (gcd(last.p, m) != 1)
        throw PreconditionError("raise_tail: gcd(" + to_string(last.p) + ", " + to_string(m) + ") != 1");
    WeightSequence out = ws.with_last_q(m);
    require_member(out, germ, "raise_tail");
    return out;
}

WeightSequence truncate(const WeightSequence& ws, const GermParams& germ)
{
    if (ws.size() < 2)
        throw DomainError("truncate: need n >= 2");
    require_member(ws, germ, "truncate");
    WeightSequence out = ws.truncated();
    require_member(out, germ, "truncate");
    return out;
}

} // namespace toric
