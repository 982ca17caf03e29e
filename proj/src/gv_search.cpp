#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "pbec/errors.hpp"
#include "pbec/linear_code.hpp"
#include "pbec/vector_set.hpp"

namespace pbec {

namespace {

constexpr double kCandidatesPerStep = 16;
constexpr double kMaxTable = double(1u << 26);
constexpr std::uint64_t kFullPoolLimit = std::uint64_t{1} << 16;

// Candidate vectors drawn from the ambient code.
class CandidateSource {
public:
    CandidateSource(const LinearCode& ambient, std::uint64_t seed) : amb_(ambient), rng_(seed)
    {
        const double log2_pool = amb_.log2_size();
        if (log2_pool <= std::log2(double(kFullPoolLimit)) + 1e-9) {
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < amb_.k(); ++i) total *= amb_.field()->order();
            pool_.reserve(total);
            for (std::uint64_t i = 1; i < total; ++i) pool_.push_back(i);
            // Fisher-Yates with modulo reduction for a portable, seed-stable order
            for (std::size_t i = pool_.size(); i > 1; --i) {
                std::swap(pool_[i - 1], pool_[rng_() % i]);
            }
            full_ = true;
        }
    }

    bool exhaustive() const { return full_; }

    // Returns false once an exhaustive pool is used up.
    bool next(std::vector<Elem>& v)
    {
        const std::uint32_t q = amb_.field()->order();
        std::vector<Elem> msg(amb_.k(), 0);
        if (full_) {
            if (pos_ == pool_.size()) return false;
            std::uint64_t idx = pool_[pos_++];
            for (std::size_t i = 0; i < msg.size(); ++i) {
                msg[i] = static_cast<Elem>(idx % q);
                idx /= q;
            }
        } else {
            do {
                for (auto& x : msg) x = static_cast<Elem>(rng_() % q);
            } while (std::all_of(msg.begin(), msg.end(), [](Elem x) { return x == 0; }));
        }
        v = amb_.encode(msg);
        return true;
    }

private:
    const LinearCode& amb_;
    std::mt19937_64 rng_;
    std::vector<std::uint64_t> pool_;
    std::size_t pos_ = 0;
    bool full_ = false;
};

std::uint64_t pack(std::span<const Elem> v)
{
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) w |= std::uint64_t{1} << i;
    }
    return w;
}

enum class Strategy { Coset, Table };

struct Plan {
    Strategy strategy;
    std::size_t a = 0;  // table radius (balls) ; unused otherwise
    double cost;
};

/**
 * Validity oracle for one greedy search. Holds the current basis and, for the
 * chosen strategy, either all codewords of span(basis) or a table of
 * syndromes of forbidden vectors.
 */
class Checker {
public:
    Checker(const ErrorSet& forbidden, std::uint64_t budget)
        : f_(forbidden), field_(*forbidden.field()), n_(forbidden.length()), budget_(budget),
          binary_(field_.order() == 2 && n_ <= 64), ball_(forbidden.kind() == ErrorSet::Kind::HammingBall),
          scalar_closed_(ball_ || forbidden.kind() == ErrorSet::Kind::Subspace)
    {
    }

    std::size_t k() const { return basis_.size(); }
    const std::vector<std::vector<Elem>>& basis() const { return basis_; }

    void accept(const std::vector<Elem>& v)
    {
        basis_.push_back(v);
        stale_ = true;
    }

    bool valid(const std::vector<Elem>& v)
    {
        if (stale_) rebuild();
        return plan_.strategy == Strategy::Coset ? valid_coset(v) : valid_table(v);
    }

private:
    double log2_ball(std::size_t r) const
    {
        return ErrorSet::hamming_ball(f_.field(), n_, std::min(r, n_)).log_size() * std::log2(double(field_.order()));
    }

    Plan choose() const
    {
        const double q = field_.order();
        const double nk = double(n_ - k() + 1);
        const double lambdas = scalar_closed_ ? 1 : q - 1;
        Plan best{Strategy::Coset, 0, std::numeric_limits<double>::infinity()};
        const double log2_code = double(k()) * std::log2(q);
        if (log2_code <= std::log2(kMaxTable)) {
            const double unit = (binary_ && ball_) ? 1 : double(n_);
            best.cost = kCandidatesPerStep * lambdas * std::exp2(log2_code) * unit;
        }
        const double unit = binary_ ? 1 : double(n_);
        if (ball_) {
            const std::size_t T = f_.radius();
            for (std::size_t a = (T + 1) / 2; a <= T; ++a) {
                const double la = log2_ball(a), lb = log2_ball(T - a);
                if (la > std::log2(kMaxTable)) continue;
                const double cost = std::exp2(la) * nk * unit + kCandidatesPerStep * std::exp2(lb) * (binary_ ? 1 : nk);
                if (cost < best.cost) best = {Strategy::Table, a, cost};
            }
        } else {
            const double lf = f_.log_size() * std::log2(q);
            if (lf <= std::log2(kMaxTable)) {
                const double cost = std::exp2(lf) * nk * unit + kCandidatesPerStep * lambdas * nk;
                if (cost < best.cost) best = {Strategy::Table, 0, cost};
            }
        }
        if (!std::isfinite(best.cost)) throw BudgetExceeded("gv_search: no validity check fits in memory");
        return best;
    }

    void rebuild()
    {
        plan_ = choose();
        stale_ = false;
        codewords_.clear();
        packed_words_.clear();
        table_small_.clear();
        table_.reset();
        probes_.clear();
        packed_probes_.clear();
        const FqMatrix g = FqMatrix::from_rows(f_.field(), n_, basis_);
        if (plan_.strategy == Strategy::Coset) {
            if (binary_) {
                const auto rows = [&] {
                    std::vector<std::uint64_t> r;
                    for (const auto& b : basis_) r.push_back(pack(b));
                    return r;
                }();
                packed_words_.reserve(std::size_t{1} << rows.size());
                packed_words_.push_back(0);
                for (std::uint64_t r : rows) {
                    const std::size_t cur = packed_words_.size();
                    for (std::size_t i = 0; i < cur; ++i) packed_words_.push_back(packed_words_[i] ^ r);
                }
            } else {
                LinearCode::from_matrix(g).for_each_codeword([&](std::span<const Elem> c) {
                    codewords_.insert(codewords_.end(), c.begin(), c.end());
                    return true;
                }, std::numeric_limits<std::uint64_t>::max());
            }
            return;
        }
        parity_ = kernel(g);
        packed_parity_.clear();
        if (binary_) {
            for (std::size_t r = 0; r < parity_.rows(); ++r) packed_parity_.push_back(pack(parity_.row(r)));
        }
        table_ = std::make_unique<VectorSet>(field_.order(), parity_.rows());
        std::vector<Elem> syn(parity_.rows());
        auto add_table = [&](std::span<const Elem> e) {
            if (binary_) {
                table_small_.insert(syndrome(pack(e)));
            } else {
                mat_vec(parity_, e, syn);
                table_->insert(syn);
            }
            return true;
        };
        if (ball_) {
            ErrorSet::hamming_ball(f_.field(), n_, plan_.a).for_each(add_table, std::numeric_limits<std::uint64_t>::max());
            ErrorSet::hamming_ball(f_.field(), n_, f_.radius() - plan_.a).for_each([&](std::span<const Elem> e) {
                if (binary_) {
                    packed_probes_.push_back(syndrome(pack(e)));
                } else {
                    mat_vec(parity_, e, syn);
                    probes_.push_back(syn);
                }
                return true;
            }, std::numeric_limits<std::uint64_t>::max());
        } else {
            f_.for_each([&](std::span<const Elem> e) { return hamming_weight(e) == 0 || add_table(e); }, budget_);
        }
    }

    std::uint64_t syndrome(std::uint64_t v) const
    {
        std::uint64_t s = 0;
        for (std::size_t r = 0; r < packed_parity_.size(); ++r) {
            s |= std::uint64_t(std::popcount(packed_parity_[r] & v) & 1) << r;
        }
        return s;
    }

    bool valid_coset(const std::vector<Elem>& v)
    {
        if (binary_) {
            const std::uint64_t pv = pack(v);
            if (ball_) {
                const int t = static_cast<int>(f_.radius());
                for (std::uint64_t c : packed_words_) {
                    if (std::popcount(pv ^ c) <= t) return false;
                }
                return true;
            }
        }
        const std::size_t count = binary_ ? packed_words_.size() : codewords_.size() / n_;
        std::vector<Elem> x(n_);
        for (Elem lambda = 1; lambda < field_.order(); ++lambda) {
            for (std::size_t i = 0; i < count; ++i) {
                for (std::size_t j = 0; j < n_; ++j) {
                    const Elem c = binary_ ? Elem((packed_words_[i] >> j) & 1) : codewords_[i * n_ + j];
                    x[j] = field_.add(field_.mul(lambda, v[j]), c);
                }
                if (f_.contains(x)) return false;
            }
            if (scalar_closed_) break;
        }
        return true;
    }

    bool valid_table(const std::vector<Elem>& v)
    {
        if (binary_) {
            const std::uint64_t sv = syndrome(pack(v));
            if (sv == 0) return false;
            if (ball_) {
                for (std::uint64_t e : packed_probes_) {
                    if (table_small_.count(sv ^ e)) return false;
                }
                return true;
            }
            return table_small_.count(sv) == 0;
        }
        std::vector<Elem> sv(parity_.rows());
        mat_vec(parity_, v, sv);
        if (hamming_weight(sv) == 0) return false;
        std::vector<Elem> x(sv.size());
        if (ball_) {
            for (const auto& e : probes_) {
                for (std::size_t i = 0; i < x.size(); ++i) x[i] = field_.sub(sv[i], e[i]);
                if (table_->contains(x)) return false;
            }
            return true;
        }
        for (Elem lambda = 1; lambda < field_.order(); ++lambda) {
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = field_.mul(lambda, sv[i]);
            if (table_->contains(x)) return false;
        }
        return true;
    }

    const ErrorSet& f_;
    const FieldSpec& field_;
    std::size_t n_;
    std::uint64_t budget_;
    bool binary_;
    bool ball_;
    bool scalar_closed_;

    std::vector<std::vector<Elem>> basis_;
    bool stale_ = true;
    Plan plan_{Strategy::Coset, 0, 0};

    std::vector<Elem> codewords_;
    std::vector<std::uint64_t> packed_words_;
    FqMatrix parity_{f_.field(), 0, 0};
    std::vector<std::uint64_t> packed_parity_;
    std::unordered_set<std::uint64_t> table_small_;
    std::unique_ptr<VectorSet> table_;
    std::vector<std::vector<Elem>> probes_;
    std::vector<std::uint64_t> packed_probes_;
};

} // namespace

LinearCode gv_search(const ErrorSet& forbidden, const GvSearchOptions& o)
{
    const Field& field = forbidden.field();
    const std::size_t n = forbidden.length();
    const LinearCode ambient = o.ambient ? *o.ambient : LinearCode::full(field, n);
    if (ambient.field() != field || ambient.n() != n) throw ParameterError("gv_search: ambient code does not match the forbidden set");
    if (o.target_k > ambient.k()) throw SearchExhausted("gv_search: target dimension exceeds the ambient dimension");

    try {
        if (intersects_only_zero(ambient, forbidden, o.budget)) return ambient;
    } catch (const BudgetExceeded&) {
    }

    Checker checker(forbidden, o.budget);
    CandidateSource source(ambient, o.seed);
    std::vector<Elem> v;
    std::size_t failures = 0;
    while (checker.k() < ambient.k()) {
        if (!o.maximize && checker.k() >= o.target_k) break;
        if (!source.exhaustive() && failures >= o.max_failures) break;
        if (!source.next(v)) break;
        if (checker.valid(v)) {
            checker.accept(v);
            failures = 0;
        } else {
            ++failures;
        }
    }
    if (checker.k() < o.target_k) {
        throw SearchExhausted("gv_search: reached dimension " + std::to_string(checker.k()) + " below target " +
                              std::to_string(o.target_k));
    }
    return LinearCode::from_generators(field, n, checker.basis());
}

LinearCode gv_search(Field field, std::size_t n, const ErrorSet& forbidden, std::size_t target_k, std::uint64_t seed)
{
    if (forbidden.field() != field || forbidden.length() != n) throw ParameterError("gv_search: forbidden set does not match (field, n)");
    GvSearchOptions o;
    o.target_k = target_k;
    o.seed = seed;
    return gv_search(forbidden, o);
}

} // namespace pbec
