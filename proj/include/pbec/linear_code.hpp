#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbec/error_model.hpp"
#include "pbec/finite_field.hpp"
#include "pbec/fq_matrix.hpp"

namespace pbec {

inline constexpr std::uint64_t kDistanceBudget = std::uint64_t{1} << 24;

/**
 * Linear [n, k] code over GF(q), stored by its RREF generator matrix G and a
 * parity-check matrix H with G H^T = 0. Two codes are equal iff their fields,
 * lengths and RREF generators coincide.
 */
class LinearCode {
public:
    /// Span of `rows`; zero and dependent rows are dropped.
    static LinearCode from_generators(Field field, std::size_t n, const std::vector<std::vector<Elem>>& rows);
    static LinearCode from_matrix(const FqMatrix& rows);
    static LinearCode zero(Field field, std::size_t n);
    static LinearCode full(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return generator_.cols(); }
    std::size_t k() const noexcept { return generator_.rows(); }
    const FqMatrix& generator() const noexcept { return generator_; }
    const FqMatrix& parity_check() const noexcept { return parity_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// H x^T = 0.
    bool contains(std::span<const Elem> x) const;
    /// Message (length k) times G.
    std::vector<Elem> encode(std::span<const Elem> message) const;
    bool is_subcode_of(const LinearCode& other) const;

    /// Visits all q^k codewords once, 0 first. Throws BudgetExceeded if q^k > budget.
    bool for_each_codeword(const VectorVisitor& visit, std::uint64_t budget = kDefaultBudget) const;
    std::vector<std::vector<Elem>> codewords(std::uint64_t budget = kDefaultBudget) const;
    /// log_q of the number of codewords, i.e. k; as a double for budget checks.
    double log2_size() const;

    friend bool operator==(const LinearCode& a, const LinearCode& b)
    {
        return a.field_ == b.field_ && a.generator_ == b.generator_;
    }

private:
    LinearCode(Field field, FqMatrix g, FqMatrix h, std::vector<std::size_t> pivots);

    Field field_;
    FqMatrix generator_;
    FqMatrix parity_;
    std::vector<std::size_t> pivots_;
};

LinearCode dual(const LinearCode& c);

/**
 * Minimum Hamming distance; n+1 for the zero code.
 *
 * Enumerates q^k messages when q^k <= budget. Otherwise the code is
 * recognised as MDS (d = n-k+1) when every k-subset of generator columns is
 * independent and there are at most `budget` such subsets; anything else
 * throws BudgetExceeded.
 */
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDistanceBudget);

/// True iff C and S share only the zero vector. Enumerates whichever of C and
/// S is smaller; throws BudgetExceeded if both exceed the budget.
bool intersects_only_zero(const LinearCode& c, const ErrorSet& s, std::uint64_t budget = kDefaultBudget);

/// Nested inner codes B_1 > B_2 > ... > B_s with quotient representatives.
struct CodeChain {
    std::vector<LinearCode> codes;
    /// quotient_reps[j] holds k_j - k_{j+1} rows that extend B_{j+1} to B_j.
    std::vector<FqMatrix> quotient_reps;

    std::size_t levels() const noexcept { return codes.size(); }
    /// k_j - k_{j+1}, or k_s on the last level.
    std::size_t gap(std::size_t j) const;
};

/// Representatives are the rows of G_j (in RREF order) that raise the rank of
/// G_{j+1} when appended one at a time.
CodeChain chain_make(std::vector<LinearCode> codes);

/// Reed-Solomon [m, K, m-K+1] code over `field`: RREF of the Vandermonde matrix
/// evaluated on the first m elements in integer order. K = 0 gives the zero code.
LinearCode rs_code(const Field& field, std::size_t m, std::size_t K);

struct GvSearchOptions {
    /// Minimum acceptable dimension; SearchExhausted is thrown below it.
    std::size_t target_k = 0;
    std::uint64_t seed = 0;
    /// Keep extending past target_k until the candidate pool is exhausted.
    bool maximize = true;
    /// Search inside this code instead of GF(q)^n.
    std::optional<LinearCode> ambient;
    /// Consecutive rejected random candidates before giving up (sampling mode only).
    std::size_t max_failures = 200;
    std::uint64_t budget = kDefaultBudget;
};

/**
 * Greedy seeded search for a linear code C with C and `forbidden` meeting only
 * in 0. A candidate v is accepted iff span(C, v) still avoids the forbidden set.
 * Candidates are all ambient messages in a seeded shuffled order when there
 * are at most 2^16 of them, random ambient codewords otherwise.
 */
LinearCode gv_search(const ErrorSet& forbidden, const GvSearchOptions& options);
LinearCode gv_search(Field field, std::size_t n, const ErrorSet& forbidden, std::size_t target_k, std::uint64_t seed);

// --- text format ------------------------------------------------------------

struct CodeFile {
    LinearCode code;
    /// Present for array codes: rows n and columns m of the flattened arrays.
    std::optional<std::pair<std::size_t, std::size_t>> shape;
};

/// `q n k`, optionally `shape n m`, then k rows of n integers.
void write_code(std::ostream& os, const LinearCode& c,
                std::optional<std::pair<std::size_t, std::size_t>> shape = std::nullopt);
CodeFile read_code(std::istream& is);
/// Default field of order q (prime power).
Field field_of_order(std::uint32_t q);

} // namespace pbec
