#include "pbec/rate_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "pbec/error_model.hpp"
#include "pbec/errors.hpp"

namespace pbec {

namespace {

void check_unit(double x, const char* what)
{
    if (!(x >= 0.0 && x <= 1.0)) throw ParameterError(std::string(what) + " must lie in [0,1]");
}

void check_q(std::uint32_t q)
{
    if (q < 2) throw ParameterError("q must be at least 2");
}

} // namespace

double entropy_q(std::uint32_t q, double x)
{
    check_q(q);
    check_unit(x, "entropy argument");
    const double lq = std::log(static_cast<double>(q));
    double h = x * std::log(static_cast<double>(q - 1));
    if (x > 0) h -= x * std::log(x);
    if (x < 1) h -= (1 - x) * std::log1p(-x);
    return h / lq;
}

double f_q(std::uint32_t q, double T)
{
    check_q(q);
    check_unit(T, "T");
    const double sat = static_cast<double>(q - 1) / q;
    return T >= sat ? 1.0 : entropy_q(q, T);
}

void ChannelShape::validate() const
{
    check_q(q);
    check_unit(W, "W");
    profile.validate();
}

ChannelShape hamming_shape(std::uint32_t q, double T, double W)
{
    ChannelShape s{q, W, profile_hamming(q, T)};
    s.validate();
    return s;
}

double rate_pbe_hamming(const ChannelShape& s)
{
    s.validate();
    return 1 - (1 - s.W) * s.profile.c1 - s.W * s.profile.c2;
}

GvBranch gv_branch(const ChannelShape& s)
{
    if (!s.profile.standard_case()) return GvBranch::Otherwise;
    return 2 * s.W <= 1 ? GvBranch::LowBurst : GvBranch::HighBurst;
}

double gv_alpha(const ChannelShape& s)
{
    s.validate();
    const auto& p = s.profile;
    const double W = s.W;
    switch (gv_branch(s)) {
    case GvBranch::LowBurst: return (1 - 2 * W) * p.c11 + 2 * W * p.c12;
    case GvBranch::HighBurst: return 2 * (1 - W) * p.c12 + (2 * W - 1) * p.c22;
    case GvBranch::Otherwise: return (1 - W) * p.c11 + W * p.c22;
    }
    return 0;
}

double rate_pbe_gv(const ChannelShape& s) { return 1 - gv_alpha(s); }

HpbeRates rate_hpbe_closed(std::uint32_t q, double T, double W)
{
    check_unit(W, "W");
    const double f = f_q(q, T);
    const double r_gv = 2 * W <= 1 ? 1 - 2 * W * f : 1 - 2 * (1 - W) * f - (2 * W - 1) * f_q(q, std::min(1.0, 2 * T));
    return {1 - W * f, r_gv};
}

ClassicalRates rate_classical(std::uint32_t q, double fraction)
{
    check_unit(fraction, "fraction");
    return {1 - f_q(q, fraction), 1 - f_q(q, std::min(1.0, 2 * fraction))};
}

double rate_2lvl(const ChannelShape& s)
{
    s.validate();
    const auto& p = s.profile;
    return 1 - p.c22 + (p.c22 - p.c11) * std::max(1 - 2 * s.W, 0.0);
}

double rate_3lvl(const ChannelShape& s)
{
    s.validate();
    const auto& p = s.profile;
    const double W = s.W;
    if (2 * W <= 1) return 1 - W * (p.c12 + p.c22) - p.c11 * (1 - 2 * W);
    return 1 - p.c12 * (1 - W) - p.c22 * W;
}

double rate_2lvl_hamming(std::uint32_t q, double T, double W)
{
    check_unit(W, "W");
    return 1 - std::min(1.0, 2 * W) * f_q(q, std::min(1.0, 2 * T));
}

double rate_3lvl_hamming(std::uint32_t q, double T, double W)
{
    check_unit(W, "W");
    return 1 - W * f_q(q, std::min(1.0, 2 * T)) - std::min(W, 1 - W) * f_q(q, T);
}

RatePoint rate_point_hamming(std::uint32_t q, double T, double W)
{
    const ChannelShape s = hamming_shape(q, T, W);
    const ClassicalRates c = rate_classical(q, W * T);
    return {c.hamming, c.gv, rate_pbe_hamming(s), rate_pbe_gv(s), rate_2lvl(s), rate_3lvl(s)};
}

double ComparisonReport::identity_residual() const { return std::abs(gain_3_over_2 - gain_3_over_2_predicted); }
double ComparisonReport::case_table_residual() const { return std::abs(gap_gv_over_3 - gap_gv_over_3_predicted); }

ComparisonReport comparison_identities(const ChannelShape& s, std::optional<double> hamming_T)
{
    s.validate();
    const auto& p = s.profile;
    const double mw = std::min(s.W, 1 - s.W);
    ComparisonReport r{};
    r.r_h = rate_pbe_hamming(s);
    r.r_gv = rate_pbe_gv(s);
    r.r_2lvl = rate_2lvl(s);
    r.r_3lvl = rate_3lvl(s);
    r.gain_3_over_2 = r.r_3lvl - r.r_2lvl;
    r.gain_3_over_2_predicted = mw * (p.c22 - p.c12);
    r.gap_gv_over_3 = r.r_gv - r.r_3lvl;
    r.gap_gv_over_3_predicted = p.standard_case() ? mw * (p.c22 - p.c12) : mw * (p.c12 - p.c11);
    if (hamming_T) {
        const ClassicalRates c = rate_classical(s.q, s.W * *hamming_T);
        r.slack_h_vs_classical = r.r_h - c.hamming;
        r.slack_gv_vs_classical = r.r_gv - c.gv;
    }
    return r;
}

} // namespace pbec
