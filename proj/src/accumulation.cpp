#include "toric_volume/accumulation.hpp"

#include "toric_volume/errors.hpp"
#include "toric_volume/snp.hpp"
#include "toric_volume/volume.hpp"

#include <string>

namespace toric {

std::vector<Integer> CertificateLevel::sample_ms(std::size_t count) const
{
    std::vector<Integer> ms;
    ms.reserve(count);
    Integer m = m_start;
    while (ms.size() < count) {
        m = next_coprime(m, m_coprime_to);
        ms.push_back(m);
        ++m;
    }
    return ms;
}

WeightSequence CertificateLevel::family_tuple(const Integer& m) const
{
    return limit_weights.appended({varying_p, m});
}

Rational CertificateLevel::increment(const Integer& m) const
{
    if (level == 1) {
        Rational p1(varying_p);
        return 1 / (p1 * m) - 1 / ((p1 - m * base_b1_sq) * m);
    }
    return increment_coeff / Rational(increment_a * m + increment_b);
}

std::optional<AccumulationCertificate> AccumulationCertificate::child() const
{
    if (levels.size() < 2)
        return std::nullopt;
    return AccumulationCertificate{germ, std::vector<CertificateLevel>(levels.begin() + 1, levels.end())};
}

AccumulationCertificate build_chain(std::size_t n, const GermParams& germ)
{
    if (n < 1)
        throw PreconditionError("build_chain: n must be >= 1");

    const WeightSequence canonical = seed(n, germ, germ.l + static_cast<unsigned long>(n - 1));

    AccumulationCertificate cert{germ, {}};
    WeightSequence prefix;
    std::vector<CertificateLevel> bottom_up;
    for (std::size_t k = 1; k <= n; ++k) {
        CertificateLevel lvl;
        lvl.level = k;
        lvl.limit_weights = prefix;
        lvl.limit_value = f_value(prefix, germ);
        lvl.varying_p = canonical.p(k);
        lvl.m_coprime_to = lvl.varying_p;
        lvl.m_start = q_threshold(prefix, lvl.varying_p, germ);
        if (k == 1) {
            lvl.base_b1_sq = germ.b1_sq;
        } else {
            const Integer& p_prev = prefix.pairs().back().p;
            const Integer& q_prev = prefix.pairs().back().q;
            Integer gap = p_prev - lvl.varying_p;
            lvl.increment_coeff = make_rational(gap * gap, p_prev * lvl.varying_p);
            lvl.increment_a = p_prev;
            lvl.increment_b = -lvl.varying_p * q_prev;
        }
        bottom_up.push_back(std::move(lvl));
        prefix = prefix.appended(canonical.ray(k));
    }
    cert.levels.assign(bottom_up.rbegin(), bottom_up.rend());
    return cert;
}

namespace {

void check_shape(const AccumulationCertificate& cert)
{
    if (cert.levels.empty())
        throw ValidationError("certificate has no levels");
    const std::size_t top = cert.levels.front().level;
    for (std::size_t i = 0; i < cert.levels.size(); ++i) {
        const auto& lvl = cert.levels[i];
        const std::string where = "certificate level " + std::to_string(lvl.level) + ": ";
        if (lvl.level != top - i)
            throw ValidationError(where + "levels must decrease by exactly one");
        if (lvl.limit_weights.size() + 1 != lvl.level)
            throw ValidationError(where + "limit_weights must have length level-1");
        if (lvl.m_coprime_to != lvl.varying_p)
            throw ValidationError(where + "m_coprime_to must equal varying_p");
        if (lvl.m_start < 1)
            throw ValidationError(where + "m_start must be positive");
    }
    if (cert.levels.back().level != 1)
        throw ValidationError("certificate must bottom out at level 1");
}

bool verify_level(const CertificateLevel& lvl, const CertificateLevel* below, const GermParams& germ,
    std::size_t samples)
{
    if (lvl.varying_p < germ.l)
        return false;
    if (lvl.level == 1) {
        if (lvl.limit_value != 0 || lvl.base_b1_sq != germ.b1_sq)
            return false;
    } else {
        // Symbolic part: positive increments and the stored closed form.
        if (!(lvl.increment_coeff > 0) || !(lvl.increment_a * lvl.m_start + lvl.increment_b > 0))
            return false;
        const Integer& p_prev = lvl.limit_weights.pairs().back().p;
        const Integer& q_prev = lvl.limit_weights.pairs().back().q;
        if (!(p_prev > lvl.varying_p))
            return false;
        Integer gap = p_prev - lvl.varying_p;
        if (lvl.increment_coeff != make_rational(gap * gap, p_prev * lvl.varying_p)
            || lvl.increment_a != p_prev || lvl.increment_b != -lvl.varying_p * q_prev)
            return false;
        if (!check_membership(lvl.limit_weights, germ).member)
            return false;
        if (lvl.limit_value != f_value(lvl.limit_weights, germ))
            return false;
    }

    // Every m >= m_start coprime to p keeps the tuple admissible.
    if (lvl.m_start < q_threshold(lvl.limit_weights, lvl.varying_p, germ))
        return false;

    // The limit point belongs to the family one level down.
    if (below) {
        if (lvl.limit_weights.truncated() != below->limit_weights)
            return false;
        const auto& tail = lvl.limit_weights.pairs().back();
        if (tail.p != below->varying_p || tail.q < below->m_start || gcd(tail.q, below->m_coprime_to) != 1)
            return false;
    }

    std::optional<Rational> previous;
    for (const auto& m : lvl.sample_ms(samples)) {
        const WeightSequence tuple = lvl.family_tuple(m);
        if (!check_membership(tuple, germ).member)
            return false;
        const Rational f = f_value(tuple, germ);
        if (previous && !(f < *previous))
            return false;
        if (f - lvl.limit_value != lvl.increment(m))
            return false;
        if (lvl.level >= 2 && lvl.increment(m) != tail_increment(tuple, m))
            return false;
        if (!(f > lvl.limit_value))
            return false;
        previous = f;
    }
    return true;
}

} // namespace

bool verify_certificate(const AccumulationCertificate& cert, std::size_t samples)
{
    if (samples < 2)
        throw PreconditionError("verify_certificate: samples must be >= 2");
    check_shape(cert);
    for (std::size_t i = 0; i < cert.levels.size(); ++i) {
        const CertificateLevel* below = i + 1 < cert.levels.size() ? &cert.levels[i + 1] : nullptr;
        if (!verify_level(cert.levels[i], below, cert.germ, samples))
            return false;
    }
    return true;
}

std::vector<Rational> sample_values(
    const AccumulationCertificate& cert, std::size_t count, bool as_volumes, const GermParams& germ)
{
    if (count < 1)
        throw PreconditionError("sample_values: count must be >= 1");
    if (cert.levels.empty())
        throw ValidationError("certificate has no levels");
    const auto& top = cert.top();
    std::vector<Rational> values;
    values.reserve(count);
    for (const auto& m : top.sample_ms(count)) {
        Rational f = f_value(top.family_tuple(m), germ);
        values.push_back(as_volumes ? Rational(germ.vol_x - f) : f);
    }
    return values;
}

} // namespace toric
