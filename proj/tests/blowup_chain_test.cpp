#include "test_support.hpp"

#include "toric_volume/blowup_chain.hpp"

#include <doctest.h>

using namespace toric;
using namespace toric::testing;

TEST_CASE("factorization of (3,1),(2,3)")
{
    auto steps = factorize(WS({{3, 1}, {2, 3}}));
    REQUIRE(steps.size() == 2);

    CHECK(steps[0].index == 1);
    CHECK(steps[0].singularity.smooth());
    CHECK(steps[0].singularity.a == 0);
    CHECK(steps[0].c == 1);
    CHECK(steps[0].weights.first == 3);
    CHECK(steps[0].weights.second == 1);
    CHECK(steps[0].multiplicity == 1);

    CHECK(steps[1].index == 2);
    CHECK(steps[1].singularity.r == 3);
    CHECK(steps[1].singularity.a == 2);
    CHECK(steps[1].c == 1);
    CHECK(steps[1].weights.first == Q(2, 3));
    CHECK(steps[1].weights.second == Q(7, 3));
    CHECK(steps[1].normalized_weights.first == 2);
    CHECK(steps[1].normalized_weights.second == 7);
    CHECK(steps[1].multiplicity == 7);

    auto mults = chain_multiplicities(WS({{3, 1}, {2, 3}}));
    CHECK(mults == std::vector<Integer>{1, 7, 2});
}

TEST_CASE("common factor of consecutive p")
{
    // p = 4, 2: c = 2, d = 4*3 - 2*1 = 10
    auto steps = factorize(WS({{4, 1}, {2, 3}}));
    REQUIRE(steps.size() == 2);
    CHECK(steps[1].singularity.r == 4);
    CHECK(steps[1].singularity.a == 3);
    CHECK(steps[1].c == 2);
    CHECK(steps[1].normalized_weights == std::make_pair(Integer(1), Integer(5)));
    CHECK(steps[1].weights.first == Q(1, 4));
    CHECK(steps[1].weights.second == Q(5, 4));
}

TEST_CASE("empty sequence has no steps")
{
    CHECK(factorize(WeightSequence{}).empty());
    CHECK(chain_multiplicities(WeightSequence{}) == std::vector<Integer>{1});
}

TEST_CASE("factorization invariants on random sequences")
{
    std::mt19937_64 rng(0xb10);
    for (int trial = 0; trial < 300; ++trial) {
        auto ws = random_weight_sequence(rng, 6, 40);
        const std::size_t n = ws.size();
        auto steps = factorize(ws);
        auto mults = chain_multiplicities(ws);
        REQUIRE(steps.size() == n);
        REQUIRE(mults.size() == n + 1);
        CHECK(steps[0].singularity.smooth());
        CHECK(mults.back() == ws.p(n));
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = steps[i];
            const std::size_t m = i + 1;
            auto prev = ws.ray(m - 1);
            auto cur = ws.ray(m);
            CHECK(s.index == m);
            CHECK(s.singularity.r == prev.p);
            CHECK(s.singularity.a >= 0);
            CHECK(s.singularity.a < s.singularity.r);
            // (1,0) = (1/p) u_{m-1} - (q/p) e_2, so the second weight is -q mod p
            Integer residue = s.singularity.a + prev.q;
            CHECK(residue % prev.p == 0);
            CHECK(s.c * s.normalized_weights.first == cur.p);
            CHECK(s.c * s.normalized_weights.second == s.multiplicity);
            CHECK(s.multiplicity == prev.p * cur.q - cur.p * prev.q);
            CHECK(s.multiplicity == mults[i]);
            CHECK(s.weights.first * Rational(prev.p) == Rational(s.normalized_weights.first));
            CHECK(s.weights.second * Rational(prev.p) == Rational(s.normalized_weights.second));
            CHECK(gcd(s.normalized_weights.first, s.normalized_weights.second) == 1);
            CHECK(prev.p % s.weights.first.get_den() == 0);
            CHECK(prev.p % s.weights.second.get_den() == 0);
        }
    }
}
