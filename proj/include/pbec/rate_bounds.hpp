#pragma once

#include <cstdint>
#include <optional>

#include "pbec/profile.hpp"

namespace pbec {

/// q-ary entropy H_q(x) for x in [0,1]; H_q(0) = 0, H_q(1) = log_q(q-1).
double entropy_q(std::uint32_t q, double x);
/// Ball-volume exponent F_q(T) = H_q(min(T, (q-1)/q)).
double f_q(std::uint32_t q, double T);

/// Burst fraction W = w/m together with the error-set profile.
struct ChannelShape {
    std::uint32_t q = 2;
    double W = 0;
    AdmissibilityProfile profile;

    void validate() const;
};

ChannelShape hamming_shape(std::uint32_t q, double T, double W);

/// Sphere-packing bound for PBE channels: 1 - (1-W) c1 - W c2.
double rate_pbe_hamming(const ChannelShape& s);

enum class GvBranch { LowBurst, HighBurst, Otherwise };
GvBranch gv_branch(const ChannelShape& s);
/// Exponent alpha of the PBE GV bound; the rate is 1 - alpha.
double gv_alpha(const ChannelShape& s);
double rate_pbe_gv(const ChannelShape& s);

struct HpbeRates {
    double r_h;
    double r_gv;
};
/// Closed forms of the two PBE bounds for E1 = {0}, E2 = ball(T n).
HpbeRates rate_hpbe_closed(std::uint32_t q, double T, double W);

struct ClassicalRates {
    double hamming;
    double gv;
};
/// Classical bounds for correcting a fraction of symbol errors: 1 - F(f), 1 - F(2f).
ClassicalRates rate_classical(std::uint32_t q, double fraction);

/// Rates of the two- and three-level GCC recipes for a general profile.
double rate_2lvl(const ChannelShape& s);
double rate_3lvl(const ChannelShape& s);
/// Hamming-profile closed forms of the same two rates.
double rate_2lvl_hamming(std::uint32_t q, double T, double W);
double rate_3lvl_hamming(std::uint32_t q, double T, double W);

/// All curves at one (T, W) point of the Hamming family. Raw values, not clamped.
struct RatePoint {
    double r_classical_h;
    double r_classical_gv;
    double r_h;
    double r_gv;
    double r_2lvl;
    double r_3lvl;
};
RatePoint rate_point_hamming(std::uint32_t q, double T, double W);

/// Reporting clamp max(r, 0).
inline double clamp_rate(double r) { return r < 0 ? 0 : r; }

/// Both sides of the rate comparisons at one shape.
struct ComparisonReport {
    double r_h, r_gv, r_2lvl, r_3lvl;
    // R_3lvl - R_2lvl against min(W,1-W)(c22-c12)
    double gain_3_over_2;
    double gain_3_over_2_predicted;
    // R_GV - R_3lvl against the case table
    double gap_gv_over_3;
    double gap_gv_over_3_predicted;
    // R_H - (1 - F(WT)) and R_GV - (1 - F(2WT)); only for Hamming shapes
    std::optional<double> slack_h_vs_classical;
    std::optional<double> slack_gv_vs_classical;

    double identity_residual() const;
    double case_table_residual() const;
};
/// `hamming_T`, when given, enables the classical comparison for E1 = {0}, E2 = ball(T n).
ComparisonReport comparison_identities(const ChannelShape& s, std::optional<double> hamming_T = std::nullopt);

} // namespace pbec
