#include <algorithm>

#include "pbec/errors.hpp"
#include "pbec/gcc.hpp"

namespace pbec {

std::size_t min_rs_degree(std::uint32_t q, std::size_t m)
{
    std::size_t r = 1;
    std::uint64_t size = q;
    while (size < m) {
        size *= q;
        ++r;
    }
    return r;
}

std::size_t max_extension_degree(std::uint32_t q)
{
    std::size_t r = 0;
    std::uint64_t size = 1;
    while (size * q <= FieldSpec::kMaxOrder) {
        size *= q;
        ++r;
    }
    return r;
}

namespace {

struct Piece {
    std::size_t top;     // dimension of the inner code of this level
    std::size_t bottom;  // dimension of the next inner code
    std::size_t K;       // outer dimension
};

std::uint64_t level_seed(std::uint64_t seed, std::size_t j) { return seed + 0x9E3779B97F4A7C15ull * (j + 1); }

// Rows of the deepest code first, then representatives level by level upwards,
// so every prefix spans a subcode of the matching chain member.
std::vector<std::vector<Elem>> ordered_basis(const std::vector<LinearCode>& chain)
{
    const Field& f = chain.front().field();
    const std::size_t n = chain.front().n();
    std::vector<std::vector<Elem>> basis;
    FqMatrix acc(f, 0, n);
    for (std::size_t j = chain.size(); j-- > 0;) {
        for (std::size_t r = 0; r < chain[j].k(); ++r) {
            FqMatrix trial = acc;
            trial.append_row(chain[j].generator().row(r));
            if (rank(trial) > basis.size()) {
                acc = std::move(trial);
                const auto row = chain[j].generator().row(r);
                basis.emplace_back(row.begin(), row.end());
            }
        }
    }
    return basis;
}

// Best prefix dimensions k'_1 >= ... >= k'_s, k'_j <= k_j, maximizing
// sum K_j (k'_j - k'_{j+1}) subject to RS feasibility of every used level.
std::vector<std::size_t> choose_dims(const std::vector<std::size_t>& k, const std::vector<std::size_t>& K, std::size_t m,
                                     std::size_t r0, std::size_t rmax)
{
    const std::size_t s = k.size();
    std::vector<std::size_t> cur(s), best;
    std::size_t best_total = 0;
    auto feasible = [&](std::size_t j, std::size_t g) {
        return g == 0 || K[j] == 0 || K[j] == m || (g >= r0 && r0 <= rmax);
    };
    // enumerate from the deepest level upwards
    auto rec = [&](auto&& self, std::size_t j, std::size_t lower) -> void {
        // j counts down from s-1 to 0; k'_j ranges over [lower, k_j]
        for (std::size_t v = lower; v <= k[j]; ++v) {
            const std::size_t g = v - (j + 1 < s ? cur[j + 1] : 0);
            if (!feasible(j, g)) continue;
            cur[j] = v;
            if (j == 0) {
                std::size_t total = 0;
                for (std::size_t i = 0; i < s; ++i) total += K[i] * (cur[i] - (i + 1 < s ? cur[i + 1] : 0));
                if (best.empty() || total > best_total || (total == best_total && cur > best)) {
                    best = cur;
                    best_total = total;
                }
            } else {
                self(self, j - 1, v);
            }
        }
    };
    rec(rec, s - 1, 0);
    return best;
}

std::vector<Piece> split_levels(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& K, std::size_t m,
                                std::size_t r0, std::size_t rmax)
{
    std::vector<Piece> pieces;
    const std::size_t s = dims.size();
    for (std::size_t j = 0; j < s; ++j) {
        const std::size_t bottom = j + 1 < s ? dims[j + 1] : 0;
        const std::size_t g = dims[j] - bottom;
        if (g == 0 || K[j] == 0) continue;
        const std::size_t lo = K[j] == m ? 1 : r0;
        const std::size_t count = (g + rmax - 1) / rmax;
        const std::size_t base = g / count, extra = g % count;
        if (base < lo) throw ParameterError("construction: dimension gap cannot be split into RS-feasible levels");
        std::size_t top = dims[j];
        for (std::size_t p = 0; p < count; ++p) {
            const std::size_t size = base + (p < extra ? 1 : 0);
            pieces.push_back({top, top - size, K[j]});
            top -= size;
        }
    }
    return pieces;
}

ConstructionResult construct(const PbeChannel& ch, bool three, const ConstructionOptions& o)
{
    const Field& f = ch.field();
    const std::size_t n = ch.n(), m = ch.m(), w = ch.w();
    const std::uint32_t q = f->order();
    std::vector<ErrorSet> forbidden;
    forbidden.push_back(difference_set_symbolic(ch.e1(), ch.e1(), o.budget));
    if (three) forbidden.push_back(difference_set_symbolic(ch.e1(), ch.e2(), o.budget));
    forbidden.push_back(difference_set_symbolic(ch.e2(), ch.e2(), o.budget));
    std::vector<std::size_t> K{m >= 2 * w ? m - 2 * w : 0};
    if (three) K.push_back(m - w);
    K.push_back(m);

    std::vector<LinearCode> chain;
    for (std::size_t j = 0; j < forbidden.size(); ++j) {
        GvSearchOptions opt;
        opt.seed = level_seed(o.seed, j);
        opt.budget = o.budget;
        if (!chain.empty()) opt.ambient = chain.back();
        chain.push_back(gv_search(forbidden[j], opt));
    }
    std::vector<std::size_t> searched;
    for (const auto& c : chain) searched.push_back(c.k());

    const std::size_t r0 = min_rs_degree(q, m), rmax = max_extension_degree(q);
    const std::vector<std::size_t> dims = choose_dims(searched, K, m, r0, rmax);
    const std::vector<Piece> pieces = split_levels(dims, K, m, r0, rmax);
    if (pieces.empty()) throw ParameterError("construction: no code of positive dimension at these parameters");

    const auto basis = ordered_basis(chain);
    std::vector<LinearCode> inner;
    for (const auto& p : pieces) {
        inner.push_back(LinearCode::from_generators(f, n, {basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(p.top)}));
    }
    GccSpec spec;
    spec.inner = chain_make(std::move(inner));
    for (const auto& p : pieces) {
        const Field ext = FieldSpec::extension(f, static_cast<std::uint32_t>(p.top - p.bottom));
        spec.outer.push_back(p.K == m ? LinearCode::full(ext, m) : rs_code(ext, m, p.K));
    }
    GccCode code = gcc_build(std::move(spec));
    PbecCertificate cert = certify_property1(code, ch.e1(), ch.e2(), w, o.budget);
    return {std::move(code), std::move(cert), std::move(searched), dims};
}

} // namespace

ConstructionResult construct_2level(const PbeChannel& ch, const ConstructionOptions& options)
{
    return construct(ch, false, options);
}

// A 2-level code is a 3-level one with an empty middle level. Greedy search nests B3 inside
// B2 and can lose to the direct search for B3 in B1, so keep whichever is larger.
ConstructionResult construct_3level(const PbeChannel& ch, const ConstructionOptions& options)
{
    ConstructionResult three = construct(ch, true, options);
    if (!three.certificate.valid()) return three;
    try {
        ConstructionResult two = construct(ch, false, options);
        if (two.certificate.valid() && two.code.dimension() > three.code.dimension()) return two;
    } catch (const ParameterError&) {
    }
    return three;
}

} // namespace pbec
