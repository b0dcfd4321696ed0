#include "test_support.hpp"

#include "toric_volume/accumulation.hpp"
#include "toric_volume/errors.hpp"
#include "toric_volume/volume.hpp"

#include <doctest.h>

using namespace toric;
using namespace toric::testing;

TEST_CASE("level 1 chain over the reference germ")
{
    const auto g = reference_germ();
    auto cert = build_chain(1, g);
    REQUIRE(cert.levels.size() == 1);
    const auto& top = cert.top();
    CHECK(top.level == 1);
    CHECK(top.limit_weights.empty());
    CHECK(top.limit_value == 0);
    CHECK(top.varying_p == 2);
    CHECK(top.m_coprime_to == 2);
    CHECK(top.base_b1_sq == -1);
    CHECK(top.sample_ms(3) == std::vector<Integer>{1, 3, 5});
    CHECK(sample_values(cert, 3, false, g) == std::vector<Rational>{Q(1, 6), Q(1, 10), Q(1, 14)});
    CHECK(sample_values(cert, 3, true, g) == std::vector<Rational>{Q(5, 6), Q(9, 10), Q(13, 14)});
    CHECK(top.increment(3) == Q(1, 10));
    CHECK_FALSE(cert.child().has_value());
    CHECK(verify_certificate(cert, 10));
}

TEST_CASE("level 2 chain over the reference germ")
{
    const auto g = reference_germ();
    auto cert = build_chain(2, g);
    REQUIRE(cert.levels.size() == 2);
    const auto& top = cert.top();
    CHECK(top.level == 2);
    CHECK(top.limit_weights == WS({{3, 1}}));
    CHECK(top.limit_value == Q(1, 12));
    CHECK(top.varying_p == 2);
    CHECK(top.m_start == 2);
    CHECK(top.increment_coeff == Q(1, 6));
    CHECK(top.increment_a == 3);
    CHECK(top.increment_b == -2);
    CHECK(top.sample_ms(3) == std::vector<Integer>{3, 5, 7});
    CHECK(top.family_tuple(3) == WS({{3, 1}, {2, 3}}));
    CHECK(top.increment(3) == Q(1, 42));
    CHECK(top.increment(5) == Q(1, 78));
    CHECK(sample_values(cert, 3, false, g) == std::vector<Rational>{Q(3, 28), Q(5, 52), Q(7, 76)});

    auto child = cert.child();
    REQUIRE(child.has_value());
    CHECK(child->level() == 1);
    CHECK(child->top().varying_p == 3);
    CHECK(verify_certificate(cert, 8));
}

TEST_CASE("chains verify for several lengths and germs")
{
    const std::vector<GermParams> germs{
        reference_germ(),
        validate_germ({Q(-3, 2), Integer(3), Q(7), Q(1, 2), ""}),
        validate_germ({Q(-1, 3), Integer(1), Q(1), Q(1), ""}),
    };
    for (const auto& g : germs) {
        for (std::size_t n = 1; n <= 5; ++n) {
            auto cert = build_chain(n, g);
            CHECK(cert.level() == n);
            CHECK(cert.levels.size() == n);
            CHECK(verify_certificate(cert, 6));
            // p = (l+n-1, ..., l); levels[i] is level n-i
            for (std::size_t i = 0; i < n; ++i)
                CHECK(cert.levels[i].varying_p == g.l + Integer(i));
            auto values = sample_values(cert, 6, false, g);
            for (std::size_t i = 1; i < values.size(); ++i)
                CHECK(values[i] < values[i - 1]);
            for (const auto& v : values)
                CHECK(v > cert.top().limit_value);
            auto vols = sample_values(cert, 6, true, g);
            for (std::size_t i = 0; i < vols.size(); ++i)
                CHECK(vols[i] == g.vol_x - values[i]);
        }
    }
}

TEST_CASE("increment matches f minus limit far out")
{
    const auto g = reference_germ();
    auto cert = build_chain(4, g);
    const auto& top = cert.top();
    for (long m = 1000; m < 1040; ++m) {
        if (gcd(Integer(m), top.varying_p) != 1)
            continue;
        Rational f = f_value(top.family_tuple(m), g);
        CHECK(f - top.limit_value == top.increment(m));
        CHECK(f - top.limit_value < Q(1, m));
    }
}

TEST_CASE("mutated certificates are rejected")
{
    const auto g = reference_germ();
    const auto good = build_chain(3, g);
    REQUIRE(verify_certificate(good, 5));

    auto shifted = good;
    shifted.levels[0].limit_value += Q(1, 1000000);
    CHECK_FALSE(verify_certificate(shifted, 5));

    auto shifted_child = good;
    shifted_child.levels[1].limit_value += Q(1, 1000000);
    CHECK_FALSE(verify_certificate(shifted_child, 5));

    auto coeff = good;
    coeff.levels[0].increment_coeff *= 2;
    CHECK_FALSE(verify_certificate(coeff, 5));

    auto early = good;
    early.levels[0].m_start = 1;
    CHECK_FALSE(verify_certificate(early, 5));

    auto base = good;
    base.levels.back().base_b1_sq = Q(-2);
    CHECK_FALSE(verify_certificate(base, 5));
}

TEST_CASE("malformed certificates throw")
{
    const auto g = reference_germ();
    AccumulationCertificate empty{g, {}};
    CHECK_THROWS_AS(verify_certificate(empty, 5), ValidationError);
    CHECK_THROWS_AS(sample_values(empty, 3, false, g), ValidationError);

    auto cert = build_chain(2, g);
    auto truncated = cert;
    truncated.levels.pop_back();
    CHECK_THROWS_AS(verify_certificate(truncated, 5), ValidationError);

    auto wrong_len = cert;
    wrong_len.levels[0].limit_weights = WeightSequence{};
    CHECK_THROWS_AS(verify_certificate(wrong_len, 5), ValidationError);

    auto wrong_mod = cert;
    wrong_mod.levels[0].m_coprime_to = 7;
    CHECK_THROWS_AS(verify_certificate(wrong_mod, 5), ValidationError);

    CHECK_THROWS_AS(verify_certificate(cert, 1), PreconditionError);
    CHECK_THROWS_AS(build_chain(0, g), PreconditionError);
}
