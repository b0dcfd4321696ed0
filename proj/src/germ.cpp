#include "toric_volume/germ.hpp"

#include <utility>

namespace toric {

namespace {

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (const auto& s : items) {
        if (!out.empty())
            out += "; ";
        out += s;
    }
    return out;
}

} // namespace

GermValidationError::GermValidationError(std::vector<std::string> violations)
    : ValidationError("invalid germ: " + join(violations))
    , violations_(std::move(violations))
{
}

std::vector<std::string> germ_violations(const RawGermParams& raw)
{
    std::vector<std::string> out;
    if (raw.b1_sq >= 0)
        out.push_back("b1_sq < 0 fails (b1_sq = " + to_string(raw.b1_sq) + ")");
    if (raw.l < 1)
        out.push_back("l >= 1 fails (l = " + to_string(raw.l) + ")");
    if (raw.vol_x <= 0)
        out.push_back("vol_x > 0 fails (vol_x = " + to_string(raw.vol_x) + ")");
    if (raw.l >= 1) {
        Rational bound(1, raw.l);
        bound.canonicalize();
        if (raw.kb_dot_b2 < bound)
            out.push_back("kb_dot_b2 >= 1/l fails (" + to_string(raw.kb_dot_b2) + " < " + to_string(bound) + ")");
    }
    return out;
}

GermParams validate_germ(const RawGermParams& raw)
{
    auto violations = germ_violations(raw);
    if (!violations.empty())
        throw GermValidationError(std::move(violations));
    return GermParams{raw.b1_sq, raw.l, raw.vol_x, raw.kb_dot_b2, raw.label};
}

Rational compute_a0(const GermParams& germ, const Integer& p1, const Integer& q1)
{
    if (p1 < 1 || q1 < 1)
        throw PreconditionError("compute_a0: p1, q1 must be >= 1");
    Rational denom = Rational(p1) - Rational(q1) * germ.b1_sq;
    Rational a0 = 1 / denom;
    a0.canonicalize();
    if (!(a0 > 0 && a0 * p1 < 1))
        throw PreconditionError("compute_a0: 0 < a0 < 1/p1 fails; is b1_sq negative?");
    return a0;
}

Rational log_discrepancy(const Integer& p, const Integer& q, const Integer& l)
{
    if (p < 0 || q < 0 || (p == 0 && q == 0))
        throw PreconditionError("log_discrepancy: need p, q >= 0, not both zero");
    if (l < 1)
        throw PreconditionError("log_discrepancy: l must be >= 1");
    return make_rational(p + q, l);
}

} // namespace toric
