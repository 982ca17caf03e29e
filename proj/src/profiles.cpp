#include <algorithm>
#include <cmath>

#include "pbec/error_model.hpp"
#include "pbec/errors.hpp"
#include "pbec/rate_bounds.hpp"

namespace pbec {

void AdmissibilityProfile::validate() const
{
    constexpr double eps = 1e-12;
    for (double c : {c1, c2, c11, c12, c22}) {
        if (!(c >= -eps && c <= 1 + eps)) throw ParameterError("profile: exponents must lie in [0,1]");
    }
    if (c1 > c2 + eps) throw ParameterError("profile: c1 > c2");
    if (c11 > c12 + eps || c12 > c22 + eps) throw ParameterError("profile: c11 <= c12 <= c22 violated");
}

AdmissibilityProfile profile_hamming(std::uint32_t q, double T)
{
    return profile_hamming2(q, 0.0, T);
}

AdmissibilityProfile profile_hamming2(std::uint32_t q, double T1, double T2)
{
    if (!(T1 >= 0 && T1 <= T2 && T2 <= 1)) throw ParameterError("profile_hamming2: need 0 <= T1 <= T2 <= 1");
    auto F = [q](double x) { return f_q(q, std::min(1.0, x)); };
    AdmissibilityProfile p{F(T1), F(T2), F(2 * T1), F(T1 + T2), F(2 * T2)};
    p.validate();
    return p;
}

AdmissibilityProfile profile_maxnorm(std::uint32_t q, std::uint32_t a, std::uint32_t b)
{
    if (!is_prime(q)) throw ParameterError("profile_maxnorm: q must be prime");
    if (a > b) throw ParameterError("profile_maxnorm: need a <= b");
    if (2ull * b + 1 > q) throw ParameterError("profile_maxnorm: box exceeds the field");
    const double lq = std::log(static_cast<double>(q));
    auto lg = [&](std::uint64_t v) { return std::log(static_cast<double>(std::min<std::uint64_t>(q, v))) / lq; };
    AdmissibilityProfile p{lg(2ull * a + 1), lg(2ull * b + 1), lg(4ull * a + 1), lg(2ull * a + 2ull * b + 1), lg(4ull * b + 1)};
    p.validate();
    return p;
}

AdmissibilityProfile profile_subspace(double S, double T)
{
    if (!(S >= 0 && S <= T && T <= 1)) throw ParameterError("profile_subspace: need 0 <= S <= T <= 1");
    return {S, T, S, T, T};
}

AdmissibilityProfile profile_empirical(const ErrorSet& e1, const ErrorSet& e2, std::uint64_t budget)
{
    if (e1.length() == 0) throw ParameterError("profile_empirical: length must be positive");
    const double n = static_cast<double>(e1.length());
    AdmissibilityProfile p{
        e1.log_size() / n,
        e2.log_size() / n,
        difference_set_symbolic(e1, e1, budget).log_size() / n,
        difference_set_symbolic(e1, e2, budget).log_size() / n,
        difference_set_symbolic(e2, e2, budget).log_size() / n,
    };
    p.validate();
    return p;
}

} // namespace pbec
