#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbec/error_model.hpp"
#include "pbec/linear_code.hpp"

namespace pbec {

/**
 * Generalized concatenated code description.
 *
 * Level j pairs the quotient B_j / B_{j+1} of the inner chain with an outer
 * code A_j of length m over the degree-(k_j - k_{j+1}) extension of the inner
 * field; the last level pairs B_s itself with A_s over the degree-k_s
 * extension.
 */
struct GccSpec {
    CodeChain inner;
    std::vector<LinearCode> outer;

    std::size_t levels() const noexcept { return inner.levels(); }
    std::size_t n() const { return inner.codes.front().n(); }
    std::size_t m() const { return outer.front().n(); }
    /// Throws ParameterError on a degree or length mismatch or a zero outer code.
    void validate() const;
    /// sum_j K_j (k_j - k_{j+1}) + K_s k_s
    std::size_t expected_dimension() const;
};

/// A GCC as an explicit linear code on n x m arrays flattened column-major.
class GccCode {
public:
    GccCode(GccSpec spec, LinearCode flat);

    const GccSpec& spec() const noexcept { return spec_; }
    const LinearCode& code() const noexcept { return flat_; }
    std::size_t n() const { return spec_.n(); }
    std::size_t m() const { return spec_.m(); }
    std::size_t dimension() const noexcept { return flat_.k(); }
    double rate() const { return double(dimension()) / double(n() * m()); }

    bool contains(const FqMatrix& x) const;
    /// Basis arrays (n x m), one per generator row of code().
    std::vector<FqMatrix> generator_arrays() const;

private:
    GccSpec spec_;
    LinearCode flat_;
};

/// Spans, level by level, the arrays whose column i is ext_to_base(a_i * beta) Q_j
/// for every generator a of A_j and every polynomial basis element beta.
GccCode gcc_build(GccSpec spec);

/// The three sufficient per-level conditions; None if no condition holds.
enum class Condition { None = 0, BurstPair = 1, BurstSingle = 2, AllColumns = 3 };

struct LevelVerdict {
    std::size_t level = 0;
    std::size_t inner_dim = 0;
    std::size_t gap = 0;
    std::size_t outer_dim = 0;
    std::size_t outer_distance = 0;
    Condition condition = Condition::None;
    std::string detail;
};

struct PbecCertificate {
    std::vector<LevelVerdict> levels;

    bool valid() const;
    std::string report() const;
};

/// Per level, in order: (D_j > 2w and B_j meets Delta(E1,E1) only in 0),
/// (D_j > w and B_j meets Delta(E1,E2) only in 0), (B_j meets Delta(E2,E2) only in 0).
PbecCertificate certify_property1(const GccCode& code, const ErrorSet& e1, const ErrorSet& e2, std::size_t w,
                                  std::uint64_t budget = kDefaultBudget);

/// The same table for E1 = {0}, E2 = ball(t), with intersections replaced by
/// inner distances: D_j > 2w, or D_j > w and d_j > t, or d_j > min(2t, n).
PbecCertificate certify_hamming(const GccCode& code, std::size_t t, std::size_t w,
                                std::uint64_t budget = kDistanceBudget);

struct ConstructionOptions {
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
};

struct ConstructionResult {
    GccCode code;
    PbecCertificate certificate;
    /// Dimensions of the greedy chain before truncation, one per recipe level.
    std::vector<std::size_t> searched_dims;
    /// Dimensions after choosing the best feasible prefixes.
    std::vector<std::size_t> chosen_dims;
};

/// Two levels: B_1 avoids Delta(E1,E1), B_2 inside B_1 avoids Delta(E2,E2);
/// A_1 is Reed-Solomon of dimension max(m-2w, 0), A_2 the full space.
ConstructionResult construct_2level(const PbeChannel& ch, const ConstructionOptions& options = {});

/// Three levels with B_2 avoiding Delta(E1,E2) and A_2 Reed-Solomon of dimension m-w.
/// Falls back to the 2-level code (empty middle level) when that is larger.
ConstructionResult construct_3level(const PbeChannel& ch, const ConstructionOptions& options = {});

/// Smallest r with q^r >= m: the least dimension gap that admits a length-m RS code.
std::size_t min_rs_degree(std::uint32_t q, std::size_t m);
/// Largest r with q^r <= 2^16.
std::size_t max_extension_degree(std::uint32_t q);

} // namespace pbec
