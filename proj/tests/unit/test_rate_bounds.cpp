#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pbec/errors.hpp"
#include "pbec/error_model.hpp"
#include "pbec/rate_bounds.hpp"

using namespace pbec;

namespace {

// binary entropy written out in base 2, used as an independent reference
double h2(double x)
{
    if (x <= 0 || x >= 1) return 0;
    return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

double F2(double T) { return h2(std::min(T, 0.5)); }

AdmissibilityProfile random_profile(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0, 1);
    double c[3] = {u(rng), u(rng), u(rng)};
    std::sort(c, c + 3);
    double e[2] = {u(rng), u(rng)};
    std::sort(e, e + 2);
    return {e[0], e[1], c[0], c[1], c[2]};
}

} // namespace

TEST_SUITE("rate_bounds")
{
    TEST_CASE("entropy and F")
    {
        CHECK(entropy_q(2, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(entropy_q(2, 0.1) == doctest::Approx(0.46900).epsilon(1e-5));
        CHECK(std::abs(entropy_q(2, 0.1) - 0.4689955935892812) < 1e-12);
        CHECK(f_q(2, 0.75) == doctest::Approx(1.0));
        CHECK(entropy_q(3, 0) == 0);
        CHECK(entropy_q(3, 1) == doctest::Approx(std::log(2.0) / std::log(3.0)));
        // F_q saturates at (q-1)/q with value 1
        for (std::uint32_t q : {2u, 3u, 4u, 7u, 16u}) CHECK(f_q(q, (q - 1.0) / q) == doctest::Approx(1.0));
        for (double x = 0; x <= 1.0; x += 0.01) CHECK(std::abs(entropy_q(2, x) - h2(x)) < 1e-12);
        CHECK_THROWS_AS(entropy_q(2, -0.1), ParameterError);
        CHECK_THROWS_AS(f_q(2, 1.5), ParameterError);
    }

    TEST_CASE("spec examples")
    {
        CHECK(rate_pbe_hamming(hamming_shape(2, 0.3, 0)) == doctest::Approx(1.0));
        CHECK(std::abs(rate_pbe_hamming(hamming_shape(2, 0.25, 0.4)) - 0.67549) < 1e-4);
        CHECK(std::abs(rate_pbe_hamming(hamming_shape(2, 0.25, 1.0)) - 0.18872) < 1e-4);
        CHECK(std::abs(rate_pbe_gv(hamming_shape(2, 0.1, 0.2)) - 0.81) < 0.005);
        CHECK(rate_pbe_gv(hamming_shape(2, 0.3, 0)) == doctest::Approx(1.0));
        CHECK(std::abs(rate_pbe_gv(hamming_shape(2, 0.25, 0.5)) - 0.18872) < 1e-4);
        CHECK(std::abs(rate_hpbe_closed(2, 0.2, 1.0 / 12).r_gv - 0.880) < 0.001);
        CHECK(std::abs(rate_hpbe_closed(2, 0.25, 0.3).r_gv - 0.51323) < 1e-4);
        CHECK(std::abs(rate_classical(2, 1.0 / 60).hamming - 0.878) < 0.001);
        CHECK(rate_classical(2, 0).hamming == 1);
        CHECK(rate_classical(2, 0).gv == 1);
        CHECK(rate_classical(2, 0.25).gv == doctest::Approx(0.0));
        const ChannelShape s = hamming_shape(2, 0.1, 0.2);
        CHECK(std::abs(rate_2lvl(s) - 0.71) < 0.005);
        CHECK(std::abs(rate_3lvl(s) - 0.76) < 0.005);
        CHECK(std::abs(rate_3lvl(hamming_shape(2, 0.25, 0.5)) - 0.09436) < 1e-4);
    }

    TEST_CASE("formulas against independent binary evaluation")
    {
        for (int i = 0; i <= 40; ++i)
            for (int j = 0; j <= 40; ++j) {
                const double T = i / 40.0, W = j / 40.0;
                const RatePoint p = rate_point_hamming(2, T, W);
                CHECK(std::abs(p.r_h - (1 - W * F2(T))) < 1e-12);
                const double gv = 2 * W <= 1 ? 1 - 2 * W * F2(T) : 1 - 2 * (1 - W) * F2(T) - (2 * W - 1) * F2(2 * T);
                CHECK(std::abs(p.r_gv - gv) < 1e-12);
                CHECK(std::abs(p.r_2lvl - (1 - std::min(1.0, 2 * W) * F2(2 * T))) < 1e-12);
                CHECK(std::abs(p.r_3lvl - (1 - W * F2(2 * T) - std::min(W, 1 - W) * F2(T))) < 1e-12);
                CHECK(std::abs(p.r_classical_h - (1 - F2(W * T))) < 1e-12);
                CHECK(std::abs(p.r_classical_gv - (1 - F2(2 * W * T))) < 1e-12);
            }
    }

    TEST_CASE("formula-path equivalence for the Hamming family")
    {
        for (std::uint32_t q : {2u, 3u, 5u}) {
            for (int i = 0; i < 50; ++i)
                for (int j = 0; j < 50; ++j) {
                    const double T = i / 49.0, W = j / 49.0;
                    const ChannelShape s = hamming_shape(q, T, W);
                    const HpbeRates c = rate_hpbe_closed(q, T, W);
                    CHECK(std::abs(c.r_h - rate_pbe_hamming(s)) < 1e-12);
                    CHECK(std::abs(c.r_gv - rate_pbe_gv(s)) < 1e-12);
                    CHECK(std::abs(rate_2lvl_hamming(q, T, W) - rate_2lvl(s)) < 1e-12);
                    CHECK(std::abs(rate_3lvl_hamming(q, T, W) - rate_3lvl(s)) < 1e-12);
                }
        }
    }

    TEST_CASE("ordering of the four rates for monotone profiles")
    {
        std::mt19937_64 rng(12);
        for (int it = 0; it < 5000; ++it) {
            const AdmissibilityProfile p = random_profile(rng);
            const double W = double(rng() % 1001) / 1000;
            const ChannelShape s{2, W, p};
            // sphere packing uses c1, c2 which need not relate to cij for random data,
            // so compare it only where the construction is tied to it
            CHECK(rate_2lvl(s) <= rate_3lvl(s) + 1e-12);
            CHECK(rate_3lvl(s) <= rate_pbe_gv(s) + 1e-12);
        }
        for (int i = 0; i <= 60; ++i)
            for (int j = 0; j <= 60; ++j) {
                const RatePoint r = rate_point_hamming(2, i / 60.0, j / 60.0);
                CHECK(r.r_2lvl <= r.r_3lvl + 1e-12);
                CHECK(r.r_3lvl <= r.r_gv + 1e-12);
                CHECK(r.r_gv <= r.r_h + 1e-12);
            }
    }

    TEST_CASE("comparison identities")
    {
        std::mt19937_64 rng(13);
        for (int it = 0; it < 5000; ++it) {
            const ChannelShape s{2, double(rng() % 1001) / 1000, random_profile(rng)};
            const ComparisonReport r = comparison_identities(s);
            CHECK(r.identity_residual() <= 1e-12);
            CHECK(r.case_table_residual() <= 1e-12);
        }
        const ChannelShape ex = hamming_shape(2, 0.1, 0.2);
        const ComparisonReport r = comparison_identities(ex, 0.1);
        CHECK(std::abs(r.gap_gv_over_3 - 0.2 * (F2(0.2) - F2(0.1))) < 1e-12);
        CHECK(r.gap_gv_over_3 == doctest::Approx(0.0506).epsilon(1e-3));
        REQUIRE(r.slack_h_vs_classical.has_value());
        CHECK(*r.slack_h_vs_classical >= -1e-12);
        CHECK(*r.slack_gv_vs_classical >= -1e-12);

        const ComparisonReport z = comparison_identities(hamming_shape(2, 0.3, 0));
        CHECK(std::abs(z.gain_3_over_2) < 1e-15);
        CHECK(std::abs(z.gap_gv_over_3) < 1e-15);

        // Remark-1 profile: non-standard case gives (c12 - c11) W
        const double l = std::log(31.0);
        const AdmissibilityProfile rp{std::log(3.0) / l, std::log(5.0) / l, std::log(7.0) / l, std::log(9.0) / l, std::log(13.0) / l};
        const ChannelShape rs{31, 0.3, rp};
        CHECK(gv_branch(rs) == GvBranch::Otherwise);
        CHECK(std::abs((rate_pbe_gv(rs) - rate_3lvl(rs)) - (rp.c12 - rp.c11) * 0.3) < 1e-12);
    }

    TEST_CASE("seam continuity at 2W = 1")
    {
        for (std::uint32_t q : {2u, 3u}) {
            for (int i = 0; i <= 50; ++i) {
                const double T = i / 50.0;
                const ChannelShape lo = hamming_shape(q, T, 0.5), hi = hamming_shape(q, T, std::nextafter(0.5, 1.0));
                CHECK(std::abs(rate_pbe_gv(lo) - rate_pbe_gv(hi)) < 1e-12);
                CHECK(std::abs(rate_3lvl(lo) - rate_3lvl(hi)) < 1e-12);
                CHECK(std::abs(rate_2lvl(lo) - rate_2lvl(hi)) < 1e-12);
                CHECK(gv_branch(lo) == GvBranch::LowBurst);
                CHECK(gv_branch(hi) == GvBranch::HighBurst);
            }
        }
    }

    TEST_CASE("rates clamp into [0,1]")
    {
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j <= 20; ++j) {
                const RatePoint p = rate_point_hamming(2, i / 20.0, j / 20.0);
                for (double r : {p.r_classical_gv, p.r_classical_h, p.r_gv, p.r_h, p.r_2lvl, p.r_3lvl}) {
                    CHECK(clamp_rate(r) >= 0);
                    CHECK(clamp_rate(r) <= 1);
                }
            }
        CHECK(clamp_rate(-0.3) == 0);
        CHECK(clamp_rate(0.4) == 0.4);
    }

    TEST_CASE("shape validation")
    {
        CHECK_THROWS_AS(hamming_shape(2, 0.2, 1.5), ParameterError);
        CHECK_THROWS_AS(ChannelShape({2, 0.2, AdmissibilityProfile{0, 0, 0.5, 0.2, 0.6}}).validate(), ParameterError);
    }
}
