#include "pbec/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "pbec/errors.hpp"
#include "pbec/vector_set.hpp"

namespace pbec {

namespace {

// Visits every vector of the row space of g (rows independent), 0 first.
bool enumerate_span(const FieldSpec& f, const FqMatrix& g, const VectorVisitor& visit)
{
    const std::size_t k = g.rows();
    std::vector<Elem> v(g.cols(), 0);
    std::vector<Elem> coeff(k, 0);
    while (true) {
        if (!visit(v)) return false;
        std::size_t i = 0;
        while (i < k && coeff[i] == f.order() - 1) {
            axpy(f, v, f.neg(coeff[i]), g.row(i));
            coeff[i++] = 0;
        }
        if (i == k) return true;
        axpy(f, v, f.sub(coeff[i] + 1, coeff[i]), g.row(i));
        ++coeff[i];
    }
}

std::vector<std::uint64_t> pack_rows(const FqMatrix& g)
{
    std::vector<std::uint64_t> rows(g.rows(), 0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (g.at(r, c)) rows[r] |= std::uint64_t{1} << c;
        }
    }
    return rows;
}

bool binary_packable(const LinearCode& c) { return c.field()->order() == 2 && c.n() <= 64; }

bool within(double log2_size, std::uint64_t budget) { return log2_size <= std::log2(static_cast<double>(budget)) + 1e-9; }

} // namespace

LinearCode::LinearCode(Field field, FqMatrix g, FqMatrix h, std::vector<std::size_t> pivots)
    : field_(std::move(field)), generator_(std::move(g)), parity_(std::move(h)), pivots_(std::move(pivots))
{
}

LinearCode LinearCode::from_matrix(const FqMatrix& rows)
{
    RowEchelon e = rref(rows);
    FqMatrix g(rows.field(), 0, rows.cols());
    for (std::size_t i = 0; i < e.rank; ++i) g.append_row(e.reduced.row(i));
    FqMatrix h = kernel(g);
    return LinearCode(rows.field(), std::move(g), std::move(h), std::move(e.pivots));
}

LinearCode LinearCode::from_generators(Field field, std::size_t n, const std::vector<std::vector<Elem>>& rows)
{
    return from_matrix(FqMatrix::from_rows(std::move(field), n, rows));
}

LinearCode LinearCode::zero(Field field, std::size_t n) { return from_matrix(FqMatrix(std::move(field), 0, n)); }

LinearCode LinearCode::full(Field field, std::size_t n) { return from_matrix(FqMatrix::identity(std::move(field), n)); }

bool LinearCode::contains(std::span<const Elem> x) const
{
    if (x.size() != n()) throw ParameterError("contains: vector length mismatch");
    const FieldSpec& f = *field_;
    for (std::size_t r = 0; r < parity_.rows(); ++r) {
        Elem acc = 0;
        const auto row = parity_.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] && x[c]) acc = f.add(acc, f.mul(row[c], x[c]));
        }
        if (acc) return false;
    }
    return true;
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const
{
    if (message.size() != k()) throw ParameterError("encode: message length mismatch");
    std::vector<Elem> out(n(), 0);
    vec_mat_acc(generator_, message, out);
    return out;
}

bool LinearCode::is_subcode_of(const LinearCode& other) const
{
    if (field_ != other.field_ || n() != other.n()) return false;
    for (std::size_t r = 0; r < k(); ++r) {
        if (!other.contains(generator_.row(r))) return false;
    }
    return true;
}

double LinearCode::log2_size() const { return static_cast<double>(k()) * std::log2(static_cast<double>(field_->order())); }

bool LinearCode::for_each_codeword(const VectorVisitor& visit, std::uint64_t budget) const
{
    if (!within(log2_size(), budget)) throw BudgetExceeded("codeword enumeration exceeds budget");
    return enumerate_span(*field_, generator_, visit);
}

std::vector<std::vector<Elem>> LinearCode::codewords(std::uint64_t budget) const
{
    std::vector<std::vector<Elem>> out;
    for_each_codeword([&](std::span<const Elem> v) {
        out.emplace_back(v.begin(), v.end());
        return true;
    }, budget);
    return out;
}

LinearCode dual(const LinearCode& c) { return LinearCode::from_matrix(c.parity_check()); }

std::size_t min_distance(const LinearCode& c, std::uint64_t budget)
{
    const std::size_t n = c.n(), k = c.k();
    if (k == 0) return n + 1;
    if (within(c.log2_size(), budget)) {
        std::size_t best = n;
        if (binary_packable(c)) {
            const auto rows = pack_rows(c.generator());
            std::uint64_t word = 0;
            for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
                word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
                best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(word)));
                if (best == 1) break;
            }
            return best;
        }
        bool first = true;
        enumerate_span(*c.field(), c.generator(), [&](std::span<const Elem> v) {
            if (first) {
                first = false;
                return true;
            }
            best = std::min(best, hamming_weight(v));
            return best > 1;
        });
        return best;
    }
    // MDS certificate: every k columns independent.
    double log2_subsets = (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
    if (!within(log2_subsets, budget)) throw BudgetExceeded("min_distance: neither enumeration nor MDS check fits the budget");
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    FqMatrix sub(c.field(), k, k);
    while (true) {
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t j = 0; j < k; ++j) sub.at(r, j) = c.generator().at(r, cols[j]);
        }
        if (rank(sub) < k) throw BudgetExceeded("min_distance: code is not MDS and too large to enumerate");
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return n - k + 1;
}

namespace {

// C meets ball(a + b) only in 0 iff the syndromes of ball(a) are distinct and
// no syndrome of ball(b) matches one of a different ball(a) vector.
bool ball_avoidance_split(const LinearCode& c, std::size_t a, std::size_t b, std::uint64_t budget)
{
    const FqMatrix& h = c.parity_check();
    const std::size_t r = h.rows();
    std::unordered_map<std::uint64_t, std::uint64_t> small;
    std::unordered_map<std::string, std::vector<Elem>> large;
    const bool packed = packs_into_u64(c.field()->order(), r) && packs_into_u64(c.field()->order(), c.n());
    std::vector<Elem> syn(r);
    auto key = [&](std::span<const Elem> v) {
        std::string s(v.size() * 2, '\0');
        for (std::size_t i = 0; i < v.size(); ++i) {
            s[2 * i] = char(v[i] & 0xff);
            s[2 * i + 1] = char(v[i] >> 8);
        }
        return s;
    };
    const std::uint32_t q = c.field()->order();
    bool ok = ErrorSet::hamming_ball(c.field(), c.n(), a).for_each([&](std::span<const Elem> e) {
        mat_vec(h, e, syn);
        if (packed) return small.emplace(canonical_index(syn, q), canonical_index(e, q)).second;
        return large.emplace(key(syn), std::vector<Elem>(e.begin(), e.end())).second;
    }, budget);
    if (!ok) return false;
    return ErrorSet::hamming_ball(c.field(), c.n(), b).for_each([&](std::span<const Elem> e) {
        mat_vec(h, e, syn);
        if (packed) {
            auto it = small.find(canonical_index(syn, q));
            return it == small.end() || it->second == canonical_index(e, q);
        }
        auto it = large.find(key(syn));
        return it == large.end() || std::equal(it->second.begin(), it->second.end(), e.begin());
    }, budget);
}

} // namespace

bool intersects_only_zero(const LinearCode& c, const ErrorSet& s, std::uint64_t budget)
{
    if (c.field() != s.field() || c.n() != s.length()) throw ParameterError("intersects_only_zero: shape mismatch");
    if (c.k() == 0) return true;
    const double log2q = std::log2(static_cast<double>(c.field()->order()));
    const double cost_s = s.log_size() * log2q;
    const double cost_c = c.log2_size();
    double cost_split = std::numeric_limits<double>::infinity();
    if (s.kind() == ErrorSet::Kind::HammingBall && s.radius() >= 2) {
        const std::size_t t = s.radius();
        const double la = ErrorSet::hamming_ball(c.field(), c.n(), (t + 1) / 2).log_size() * log2q;
        // hash-table work costs a few enumeration steps
        cost_split = la + 2.0;
    }
    if (!within(std::min({cost_s, cost_c, cost_split}), budget)) {
        throw BudgetExceeded("intersects_only_zero: every strategy exceeds the budget");
    }
    if (cost_split < std::min(cost_s, cost_c)) {
        return ball_avoidance_split(c, (s.radius() + 1) / 2, s.radius() / 2, budget);
    }
    if (cost_c <= cost_s) {
        if (binary_packable(c) && s.kind() == ErrorSet::Kind::HammingBall) {
            const auto rows = pack_rows(c.generator());
            std::uint64_t word = 0;
            for (std::uint64_t i = 1; i < (std::uint64_t{1} << c.k()); ++i) {
                word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
                if (static_cast<std::size_t>(std::popcount(word)) <= s.radius()) return false;
            }
            return true;
        }
        bool first = true;
        return c.for_each_codeword([&](std::span<const Elem> v) {
            if (first) {
                first = false;
                return true;
            }
            return !s.contains(v);
        }, budget);
    }
    return s.for_each([&](std::span<const Elem> v) { return hamming_weight(v) == 0 || !c.contains(v); }, budget);
}

std::size_t CodeChain::gap(std::size_t j) const
{
    if (j + 1 == codes.size()) return codes[j].k();
    return codes[j].k() - codes[j + 1].k();
}

CodeChain chain_make(std::vector<LinearCode> codes)
{
    if (codes.empty()) throw ParameterError("chain_make: empty chain");
    if (codes.back().k() == 0) throw ParameterError("chain_make: the last code must have positive dimension");
    CodeChain chain;
    for (std::size_t j = 0; j + 1 < codes.size(); ++j) {
        const LinearCode& big = codes[j];
        const LinearCode& small = codes[j + 1];
        if (big.field() != small.field() || big.n() != small.n()) throw ParameterError("chain_make: codes differ in field or length");
        if (small.k() >= big.k()) throw ParameterError("chain_make: dimensions must strictly descend");
        if (!small.is_subcode_of(big)) throw ParameterError("chain_make: not a subcode chain");
        FqMatrix acc = small.generator();
        FqMatrix reps(big.field(), 0, big.n());
        std::size_t r = small.k();
        for (std::size_t i = 0; i < big.k() && r < big.k(); ++i) {
            FqMatrix trial = acc;
            trial.append_row(big.generator().row(i));
            if (rank(trial) > r) {
                acc = std::move(trial);
                reps.append_row(big.generator().row(i));
                ++r;
            }
        }
        chain.quotient_reps.push_back(std::move(reps));
    }
    chain.codes = std::move(codes);
    return chain;
}

LinearCode rs_code(const Field& field, std::size_t m, std::size_t K)
{
    if (m > field->order()) throw ParameterError("rs_code: length exceeds the number of field elements");
    if (K > m) throw ParameterError("rs_code: dimension exceeds length");
    FqMatrix v(field, K, m);
    for (std::size_t i = 0; i < m; ++i) {
        Elem p = 1;
        for (std::size_t r = 0; r < K; ++r) {
            v.at(r, i) = p;
            p = field->mul(p, static_cast<Elem>(i));
        }
    }
    return LinearCode::from_matrix(v);
}

} // namespace pbec
