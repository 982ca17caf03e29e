#include "pbec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>

#include "pbec/errors.hpp"
#include "pbec/vector_set.hpp"

namespace pbec {

namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 14;

void check_shape(const LinearCode& c, const PbeChannel& ch)
{
    if (c.field() != ch.field()) throw ParameterError("oracle: code and channel over different fields");
    if (c.n() != ch.n() * ch.m()) throw ParameterError("oracle: code length is not n*m");
}

std::vector<std::vector<Elem>> pbe_list(const PbeChannel& ch, std::uint64_t budget)
{
    std::vector<std::vector<Elem>> out;
    pbe_enumerate(ch, [&](std::span<const Elem> x) {
        out.emplace_back(x.begin(), x.end());
        return true;
    }, budget);
    return out;
}

VectorSet delta_set(const PbeChannel& ch, const OracleBudget& b, const std::vector<std::vector<Elem>>& pbes)
{
    const std::uint64_t e = pbes.size();
    if (e != 0 && e > b.max_pairs / e) throw BudgetExceeded("oracle: PBE pair count exceeds budget");
    const FieldSpec& f = *ch.field();
    const std::size_t len = ch.n() * ch.m();
    VectorSet delta(f.order(), len);
    std::vector<Elem> d(len);
    for (const auto& x : pbes) {
        for (const auto& y : pbes) {
            for (std::size_t i = 0; i < len; ++i) d[i] = f.sub(x[i], y[i]);
            delta.insert(d);
        }
    }
    return delta;
}

using u128 = unsigned __int128;

u128 sat_mul(u128 a, u128 b)
{
    const u128 cap = u128(std::numeric_limits<std::uint64_t>::max()) + 1;
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap;
    return std::min(a * b, cap);
}

// Bitset over clique-search vertices.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool any() const
    {
        return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
    }
    std::size_t first() const
    {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
        }
        return std::numeric_limits<std::size_t>::max();
    }
    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
};

Bits operator&(const Bits& a, const Bits& b)
{
    Bits r = a;
    for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] &= b.w[i];
    return r;
}

class CliqueSearch {
public:
    CliqueSearch(std::vector<Bits> adj, std::size_t target, std::uint64_t node_cap)
        : adj_(std::move(adj)), target_(target), node_cap_(node_cap)
    {
    }

    // orbits: vertex classes under automorphisms fixing the implicit vertex 0,
    // listed in branching order. Only one representative per class is tried at
    // the root; the class is then dropped from the candidate set.
    std::vector<std::size_t> run(std::vector<std::size_t> initial, const std::vector<std::vector<std::size_t>>& orbits)
    {
        best_ = std::move(initial);
        if (best_.size() >= target_) return best_;
        Bits alive(adj_.size());
        for (std::size_t i = 0; i < adj_.size(); ++i) alive.set(i);
        std::vector<std::size_t> clique;
        for (const auto& orbit : orbits) {
            const std::size_t r = orbit.front();
            clique.push_back(r);
            const Bits p = alive & adj_[r];
            if (!p.any()) {
                if (clique.size() > best_.size()) best_ = clique;
            } else {
                expand(p, clique);
            }
            clique.pop_back();
            if (done_ || best_.size() >= target_) break;
            for (std::size_t v : orbit) alive.reset(v);
        }
        return best_;
    }

private:
    void expand(Bits p, std::vector<std::size_t>& clique)
    {
        if (done_) return;
        if (++nodes_ > node_cap_) throw BudgetExceeded("max_code_search: branch-and-bound node budget exceeded");
        // greedy sequential coloring gives an upper bound per vertex
        std::vector<std::size_t> order, color;
        Bits u = p;
        std::size_t c = 0;
        while (u.any()) {
            ++c;
            Bits q = u;
            while (q.any()) {
                const std::size_t v = q.first();
                q.reset(v);
                u.reset(v);
                for (std::size_t i = 0; i < q.w.size(); ++i) q.w[i] &= ~adj_[v].w[i];
                order.push_back(v);
                color.push_back(c);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (clique.size() + color[i] <= best_.size()) return;
            const std::size_t v = order[i];
            clique.push_back(v);
            Bits np = p & adj_[v];
            if (!np.any()) {
                if (clique.size() > best_.size()) {
                    best_ = clique;
                    if (best_.size() >= target_) done_ = true;
                }
            } else {
                expand(np, clique);
            }
            clique.pop_back();
            if (done_) return;
            p.reset(v);
        }
    }

    std::vector<Bits> adj_;
    std::size_t target_;
    std::uint64_t node_cap_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
    std::vector<std::size_t> best_;
};

// Linear maps fixing the PBE set: permuting columns, and permuting the
// coordinates inside each column by any permutation that fixes E1 and E2.
class ColumnSymmetry {
public:
    explicit ColumnSymmetry(const PbeChannel& ch) : n_(ch.n()), m_(ch.m())
    {
        auto symmetric = [](const ErrorSet& e) {
            return e.kind() == ErrorSet::Kind::HammingBall || e.kind() == ErrorSet::Kind::MaxNormBox;
        };
        sort_ = symmetric(ch.e1()) && symmetric(ch.e2());
        if (sort_ || n_ > 7) return;
        const auto l1 = ch.e1().enumerate(), l2 = ch.e2().enumerate();
        std::vector<std::size_t> pi(n_);
        std::iota(pi.begin(), pi.end(), std::size_t{0});
        std::vector<Elem> img(n_);
        auto fixes = [&](const ErrorSet& e, const std::vector<std::vector<Elem>>& list) {
            for (const auto& x : list) {
                for (std::size_t i = 0; i < n_; ++i) img[pi[i]] = x[i];
                if (!e.contains(img)) return false;
            }
            return true;
        };
        do {
            if (fixes(ch.e1(), l1) && fixes(ch.e2(), l2)) perms_.push_back(pi);
        } while (std::next_permutation(pi.begin(), pi.end()));
    }

    std::vector<Elem> canonical(const std::vector<Elem>& x) const
    {
        std::vector<std::vector<Elem>> cols(m_);
        for (std::size_t c = 0; c < m_; ++c) {
            std::vector<Elem> col(x.begin() + static_cast<std::ptrdiff_t>(c * n_), x.begin() + static_cast<std::ptrdiff_t>((c + 1) * n_));
            if (sort_) {
                std::sort(col.begin(), col.end());
            } else if (!perms_.empty()) {
                std::vector<Elem> best = col, img(n_);
                for (const auto& pi : perms_) {
                    for (std::size_t i = 0; i < n_; ++i) img[pi[i]] = col[i];
                    best = std::min(best, img);
                }
                col = std::move(best);
            }
            cols[c] = std::move(col);
        }
        std::sort(cols.begin(), cols.end());
        std::vector<Elem> out;
        out.reserve(x.size());
        for (const auto& col : cols) out.insert(out.end(), col.begin(), col.end());
        return out;
    }

private:
    std::size_t n_, m_;
    bool sort_ = false;
    std::vector<std::vector<std::size_t>> perms_;
};

} // namespace

bool is_pbecc_linear(const LinearCode& c, const PbeChannel& ch, const OracleBudget& budget)
{
    check_shape(c, ch);
    if (c.k() == 0) return true;
    const FqMatrix& h = c.parity_check();
    VectorSet seen(c.field()->order(), h.rows());
    std::vector<Elem> syn(h.rows());
    // X - Y is a codeword iff H X = H Y
    return pbe_enumerate(ch, [&](std::span<const Elem> x) {
        mat_vec(h, x, syn);
        return seen.insert(syn);
    }, budget.max_enumeration);
}

bool is_one_shot(const std::vector<std::vector<Elem>>& codewords, const PbeChannel& ch, const OracleBudget& budget)
{
    const std::size_t len = ch.n() * ch.m();
    for (const auto& x : codewords) {
        if (x.size() != len) throw ParameterError("is_one_shot: codeword length is not n*m");
    }
    const std::uint64_t cn = codewords.size();
    if (cn != 0 && cn > budget.max_pairs / cn) throw BudgetExceeded("is_one_shot: codeword pair count exceeds budget");
    const auto pbes = pbe_list(ch, budget.max_enumeration);
    const VectorSet delta = delta_set(ch, budget, pbes);
    const FieldSpec& f = *ch.field();
    std::vector<Elem> d(len);
    for (std::size_t i = 0; i < codewords.size(); ++i) {
        for (std::size_t j = i + 1; j < codewords.size(); ++j) {
            if (codewords[i] == codewords[j]) continue;
            for (std::size_t t = 0; t < len; ++t) d[t] = f.sub(codewords[i][t], codewords[j][t]);
            if (delta.contains(d)) return false;
        }
    }
    return true;
}

std::uint64_t delta_pbe_size(const PbeChannel& ch, const OracleBudget& budget)
{
    const auto pbes = pbe_list(ch, budget.max_enumeration);
    return delta_set(ch, budget, pbes).size();
}

std::uint64_t delta_pbe_upper_bound(const PbeChannel& ch, std::uint64_t budget)
{
    const u128 d11 = difference_set_symbolic(ch.e1(), ch.e1(), budget).size();
    const u128 d12 = difference_set_symbolic(ch.e1(), ch.e2(), budget).size();
    const u128 d22 = difference_set_symbolic(ch.e2(), ch.e2(), budget).size();
    const std::size_t m = ch.m(), w = ch.w();
    std::vector<u128> fact(m + 1, 1);
    for (std::size_t i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
    auto pw = [](u128 b, std::size_t e) {
        u128 r = 1;
        for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, b);
        return r;
    };
    u128 total = 0;
    for (std::size_t x = 0; x <= w; ++x) {
        for (std::size_t y = 0; y <= w; ++y) {
            const std::size_t zlo = x + y > m ? x + y - m : 0;
            for (std::size_t z = zlo; z <= std::min(x, y); ++z) {
                const u128 arrangements = fact[m] / (fact[z] * fact[x - z] * fact[y - z] * fact[m - x - y + z]);
                u128 term = sat_mul(arrangements, pw(d22, z));
                term = sat_mul(term, pw(d12, x + y - 2 * z));
                term = sat_mul(term, pw(d11, m - x - y + z));
                total += term;
            }
        }
    }
    if (total > std::numeric_limits<std::uint64_t>::max()) throw ParameterError("delta_pbe_upper_bound: overflows 64 bits");
    return static_cast<std::uint64_t>(total);
}

std::uint64_t pigeonhole_bound(const PbeChannel& ch)
{
    u128 space = 1;
    for (std::size_t i = 0; i < ch.n() * ch.m(); ++i) space = sat_mul(space, ch.field()->order());
    const u128 r = space / pbe_count(ch);
    return r > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                        : static_cast<std::uint64_t>(r);
}

MaxCodeResult max_code_search(const PbeChannel& ch, const OracleBudget& budget)
{
    const std::uint32_t q = ch.field()->order();
    const std::size_t len = ch.n() * ch.m();
    if (!packs_into_u64(q, len)) throw BudgetExceeded("max_code_search: ambient space exceeds budget");
    std::uint64_t N = 1;
    for (std::size_t i = 0; i < len; ++i) N *= q;
    if (N > budget.max_enumeration || N > kMaxVertices) throw BudgetExceeded("max_code_search: ambient space exceeds budget");

    const auto pbes = pbe_list(ch, budget.max_enumeration);
    const VectorSet delta = delta_set(ch, budget, pbes);
    const FieldSpec& f = *ch.field();
    std::vector<std::vector<Elem>> vec(N, std::vector<Elem>(len));
    std::vector<bool> in_delta(N);
    for (std::uint64_t i = 0; i < N; ++i) {
        from_canonical_index(i, q, vec[i]);
        in_delta[i] = delta.contains(vec[i]);
    }
    auto diff_index = [&](std::uint64_t a, std::uint64_t b) {
        if (q == 2) return a ^ b;
        std::uint64_t idx = 0;
        for (std::size_t t = 0; t < len; ++t) idx = idx * q + f.sub(vec[a][t], vec[b][t]);
        return idx;
    };

    // translation invariance: some optimal code contains 0, so search among
    // the vectors compatible with 0
    std::vector<std::uint64_t> cand;
    for (std::uint64_t i = 1; i < N; ++i) {
        if (!in_delta[i]) cand.push_back(i);
    }
    const std::size_t s = cand.size();
    std::vector<std::vector<bool>> compat(s, std::vector<bool>(s, false));
    std::vector<std::size_t> degree(s, 0);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
            if (!in_delta[diff_index(cand[i], cand[j])]) {
                compat[i][j] = compat[j][i] = true;
                ++degree[i];
                ++degree[j];
            }
        }
    }
    // degeneracy order: peel minimum-degree vertices, search the densest core first
    std::vector<std::size_t> order;
    {
        std::vector<std::size_t> deg = degree;
        std::vector<bool> removed(s, false);
        for (std::size_t step = 0; step < s; ++step) {
            std::size_t v = s;
            for (std::size_t i = 0; i < s; ++i) {
                if (!removed[i] && (v == s || deg[i] < deg[v])) v = i;
            }
            removed[v] = true;
            order.push_back(v);
            for (std::size_t i = 0; i < s; ++i) {
                if (!removed[i] && compat[v][i]) --deg[i];
            }
        }
        std::reverse(order.begin(), order.end());
    }
    std::vector<Bits> adj(s, Bits(s));
    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) {
            if (compat[order[a]][order[b]]) adj[a].set(b);
        }
    }
    std::vector<std::size_t> greedy;
    for (std::size_t a = 0; a < s; ++a) {
        if (std::all_of(greedy.begin(), greedy.end(), [&](std::size_t b) { return adj[a].test(b); })) greedy.push_back(a);
    }
    std::vector<std::vector<std::size_t>> orbits;
    {
        const ColumnSymmetry sym(ch);
        std::map<std::vector<Elem>, std::size_t> id;
        for (std::size_t a = 0; a < s; ++a) {
            const auto [it, fresh] = id.try_emplace(sym.canonical(vec[cand[order[a]]]), orbits.size());
            if (fresh) orbits.emplace_back();
            orbits[it->second].push_back(a);
        }
    }
    const std::uint64_t bound = pigeonhole_bound(ch);
    const std::size_t target = bound == 0 ? 0 : static_cast<std::size_t>(std::min<std::uint64_t>(bound - 1, s));
    CliqueSearch search(std::move(adj), target, budget.max_nodes);
    const auto clique = search.run(greedy, orbits);

    MaxCodeResult r;
    r.size = clique.size() + 1;
    r.witness.push_back(vec[0]);
    for (std::size_t a : clique) r.witness.push_back(vec[cand[order[a]]]);
    return r;
}

} // namespace pbec
