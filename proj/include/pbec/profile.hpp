#pragma once

namespace pbec {

/// Growth exponents of an admissible error-set family: |E_j| ~ q^{c_j n} and
/// |Delta(E_i, E_j)| ~ q^{c_ij n}. c21 equals c12 and is not stored.
struct AdmissibilityProfile {
    double c1 = 0;
    double c2 = 0;
    double c11 = 0;
    double c12 = 0;
    double c22 = 0;

    /// Throws ParameterError unless every exponent is in [0,1], c1 <= c2 and
    /// c11 <= c12 <= c22 (up to 1e-12).
    void validate() const;

    /// c11 + c22 <= 2 c12: the first two branches of the GV exponent apply.
    bool standard_case() const noexcept { return c11 + c22 <= 2 * c12 + 1e-15; }
};

} // namespace pbec
