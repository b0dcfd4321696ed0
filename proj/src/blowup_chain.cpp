#include "toric_volume/blowup_chain.hpp"

namespace toric {

std::vector<FactorizationStep> factorize(const WeightSequence& ws)
{
    std::vector<FactorizationStep> steps;
    steps.reserve(ws.size());
    for (std::size_t m = 1; m <= ws.size(); ++m) {
        const auto prev = ws.ray(m - 1);
        const auto cur = ws.ray(m);

        FactorizationStep step;
        step.index = m;
        step.singularity.r = prev.p;
        Integer a;
        mpz_fdiv_r(a.get_mpz_t(), Integer(-prev.q).get_mpz_t(), prev.p.get_mpz_t());
        step.singularity.a = a;

        step.c = gcd(prev.p, cur.p);
        step.multiplicity = cross(prev, cur);
        step.normalized_weights = {cur.p / step.c, step.multiplicity / step.c};
        step.weights = {make_rational(step.normalized_weights.first, prev.p),
            make_rational(step.normalized_weights.second, prev.p)};
        steps.push_back(std::move(step));
    }
    return steps;
}

std::vector<Integer> chain_multiplicities(const WeightSequence& ws)
{
    std::vector<Integer> out;
    for (const auto& cone : build_fan(ws))
        out.push_back(cone_multiplicity(cone));
    return out;
}

} // namespace toric
