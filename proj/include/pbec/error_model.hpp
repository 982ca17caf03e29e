#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pbec/finite_field.hpp"
#include "pbec/fq_matrix.hpp"
#include "pbec/profile.hpp"

namespace pbec {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Visitor over vectors of a stream. Return false to stop early.
using VectorVisitor = std::function<bool(std::span<const Elem>)>;

/**
 * Enumerable, membership-testable subset of GF(q)^n.
 *
 * Four families are supported: Hamming balls around zero, max-norm boxes
 * {-a..a}^n (prime fields only, integers embedded mod p), linear subspaces
 * and explicit lists. Explicit lists are kept deduplicated and sorted by
 * canonical index (lexicographic, first coordinate most significant).
 */
class ErrorSet {
public:
    enum class Kind { HammingBall, MaxNormBox, Subspace, Explicit };

    static ErrorSet hamming_ball(Field field, std::size_t n, std::size_t t);
    static ErrorSet max_norm_box(Field field, std::size_t n, std::uint32_t a);
    /// Span of the rows of `basis`, which must have full row rank.
    static ErrorSet subspace(const FqMatrix& basis);
    static ErrorSet explicit_set(Field field, std::size_t n, std::vector<std::vector<Elem>> elements);
    /// {0}
    static ErrorSet zero(Field field, std::size_t n);

    Kind kind() const noexcept { return kind_; }
    const Field& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }

    std::size_t radius() const;               // HammingBall
    std::uint32_t half_width() const;         // MaxNormBox
    const FqMatrix& basis() const;            // Subspace (RREF)
    const std::vector<std::vector<Elem>>& elements() const;  // Explicit

    bool contains(std::span<const Elem> v) const;
    /// Exact cardinality; throws ParameterError if it does not fit in 64 bits.
    std::uint64_t size() const;
    /// log_q of the cardinality, valid even when size() would overflow.
    double log_size() const;

    /// Visits every element exactly once. Throws BudgetExceeded if size() > budget.
    /// Returns false iff the visitor stopped early.
    bool for_each(const VectorVisitor& visit, std::uint64_t budget = kDefaultBudget) const;
    std::vector<std::vector<Elem>> enumerate(std::uint64_t budget = kDefaultBudget) const;

    std::string describe() const;

private:
    ErrorSet(Kind kind, Field field, std::size_t n);

    Kind kind_;
    Field field_;
    std::size_t n_;
    std::size_t t_ = 0;
    std::uint32_t a_ = 0;
    std::shared_ptr<const FqMatrix> basis_;
    std::shared_ptr<const FqMatrix> parity_;
    std::shared_ptr<const std::vector<std::vector<Elem>>> elements_;
    std::shared_ptr<const class VectorSet> lookup_;
};

/// Delta(A, B) = {a - b}, materialized as an explicit set.
ErrorSet difference_set(const ErrorSet& a, const ErrorSet& b, std::uint64_t budget = kDefaultBudget);

/// Delta(A, B) kept in closed form where one exists (two Hamming balls give the
/// ball of radius min(t_a + t_b, n); two nested subspaces give the larger one);
/// otherwise the explicit difference set.
ErrorSet difference_set_symbolic(const ErrorSet& a, const ErrorSet& b, std::uint64_t budget = kDefaultBudget);

/// A subset-of-B check; structural for matching families, by enumeration of A otherwise.
bool is_subset(const ErrorSet& a, const ErrorSet& b, std::uint64_t budget = kDefaultBudget);

/**
 * Phased burst channel PBC(n, m, E1, E2, w) on n x m arrays.
 *
 * An array is a phased burst error iff every column lies in E2 and at most w
 * columns lie outside E1.
 */
class PbeChannel {
public:
    PbeChannel(std::size_t m, ErrorSet e1, ErrorSet e2, std::size_t w, std::uint64_t budget = kDefaultBudget);

    /// Hamming PBEs: E1 = {0}, E2 = ball of radius t.
    static PbeChannel hamming(Field field, std::size_t n, std::size_t m, std::size_t t, std::size_t w);

    const Field& field() const noexcept { return e1_.field(); }
    std::size_t n() const noexcept { return e1_.length(); }
    std::size_t m() const noexcept { return m_; }
    std::size_t w() const noexcept { return w_; }
    const ErrorSet& e1() const noexcept { return e1_; }
    const ErrorSet& e2() const noexcept { return e2_; }

private:
    ErrorSet e1_;
    ErrorSet e2_;
    std::size_t m_;
    std::size_t w_;
};

/// Arrays are passed to and from the channel flattened column-major: column c
/// occupies entries [c*n, (c+1)*n).
std::vector<Elem> flatten_columns(const FqMatrix& x);
FqMatrix unflatten_columns(const Field& field, std::size_t n, std::size_t m, std::span<const Elem> flat);

bool pbe_contains(const PbeChannel& ch, const FqMatrix& x);
bool pbe_contains_flat(const PbeChannel& ch, std::span<const Elem> flat);

/// sum_j C(m,j) |E2 \ E1|^j |E1|^(m-j), j = 0..w. Throws ParameterError on overflow.
std::uint64_t pbe_count(const PbeChannel& ch);

/// Streams every PBE exactly once, flattened column-major. The stream is
/// partitioned by the exact set of bad positions: bad columns range over
/// E2 \ E1, good columns over E1. Throws BudgetExceeded if pbe_count > budget.
bool pbe_enumerate(const PbeChannel& ch, const VectorVisitor& visit, std::uint64_t budget = kDefaultBudget);

// --- admissibility profiles -------------------------------------------------

/// E1 = {0}, E2 = ball of radius T n: (0, F(T), 0, F(T), F(2T)).
AdmissibilityProfile profile_hamming(std::uint32_t q, double T);
/// E1 = ball(T1 n) within E2 = ball(T2 n): (F(T1), F(T2), F(2T1), F(T1+T2), F(2T2)).
AdmissibilityProfile profile_hamming2(std::uint32_t q, double T1, double T2);
/// E1 = {-a..a}^n within E2 = {-b..b}^n over a prime field.
AdmissibilityProfile profile_maxnorm(std::uint32_t q, std::uint32_t a, std::uint32_t b);
/// Nested subspaces of dimensions S n <= T n: (S, T, S, T, T).
AdmissibilityProfile profile_subspace(double S, double T);
/// Finite-n exponents log_q|set| / n of E1, E2 and their three difference sets.
AdmissibilityProfile profile_empirical(const ErrorSet& e1, const ErrorSet& e2, std::uint64_t budget = kDefaultBudget);

} // namespace pbec
