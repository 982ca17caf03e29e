#include <algorithm>
#include <limits>
#include <numeric>

#include "pbec/error_model.hpp"
#include "pbec/errors.hpp"

namespace pbec {

PbeChannel::PbeChannel(std::size_t m, ErrorSet e1, ErrorSet e2, std::size_t w, std::uint64_t budget)
    : e1_(std::move(e1)), e2_(std::move(e2)), m_(m), w_(w)
{
    if (e1_.field() != e2_.field()) throw ParameterError("channel: E1 and E2 over different fields");
    if (e1_.length() != e2_.length()) throw ParameterError("channel: E1 and E2 of different lengths");
    if (m_ == 0) throw ParameterError("channel: m must be positive");
    if (w_ > m_) throw ParameterError("channel: w exceeds m");
    if (!e1_.contains(std::vector<Elem>(e1_.length(), 0))) throw ParameterError("channel: E1 must contain 0");
    if (!is_subset(e1_, e2_, budget)) throw ParameterError("channel: E1 is not a subset of E2");
}

PbeChannel PbeChannel::hamming(Field field, std::size_t n, std::size_t m, std::size_t t, std::size_t w)
{
    return PbeChannel(m, ErrorSet::zero(field, n), ErrorSet::hamming_ball(field, n, t), w);
}

std::vector<Elem> flatten_columns(const FqMatrix& x)
{
    std::vector<Elem> flat(x.rows() * x.cols());
    for (std::size_t c = 0; c < x.cols(); ++c) {
        for (std::size_t r = 0; r < x.rows(); ++r) flat[c * x.rows() + r] = x.at(r, c);
    }
    return flat;
}

FqMatrix unflatten_columns(const Field& field, std::size_t n, std::size_t m, std::span<const Elem> flat)
{
    if (flat.size() != n * m) throw ParameterError("unflatten: length is not n*m");
    FqMatrix x(field, n, m);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = 0; r < n; ++r) x.at(r, c) = flat[c * n + r];
    }
    return x;
}

bool pbe_contains_flat(const PbeChannel& ch, std::span<const Elem> flat)
{
    const std::size_t n = ch.n();
    if (flat.size() != n * ch.m()) throw ParameterError("pbe_contains: array shape mismatch");
    std::size_t bad = 0;
    for (std::size_t c = 0; c < ch.m(); ++c) {
        auto col = flat.subspan(c * n, n);
        if (!ch.e2().contains(col)) return false;
        if (!ch.e1().contains(col) && ++bad > ch.w()) return false;
    }
    return true;
}

bool pbe_contains(const PbeChannel& ch, const FqMatrix& x)
{
    if (x.rows() != ch.n() || x.cols() != ch.m()) throw ParameterError("pbe_contains: array shape mismatch");
    return pbe_contains_flat(ch, flatten_columns(x));
}

std::uint64_t pbe_count(const PbeChannel& ch)
{
    using u128 = unsigned __int128;
    const u128 cap = u128(std::numeric_limits<std::uint64_t>::max());
    const u128 good = ch.e1().size();
    const u128 bad = ch.e2().size() - ch.e1().size();
    auto mul = [&](u128 a, u128 b) {
        if (a != 0 && b > cap / a) throw ParameterError("pbe_count: overflows 64 bits");
        return a * b;
    };
    u128 total = 0;
    u128 binom = 1;
    for (std::size_t j = 0; j <= ch.w(); ++j) {
        if (j > 0) binom = mul(binom, ch.m() - j + 1) / j;
        u128 term = binom;
        for (std::size_t i = 0; i < j; ++i) term = mul(term, bad);
        for (std::size_t i = j; i < ch.m(); ++i) term = mul(term, good);
        total += term;
        if (total > cap) throw ParameterError("pbe_count: overflows 64 bits");
    }
    return static_cast<std::uint64_t>(total);
}

bool pbe_enumerate(const PbeChannel& ch, const VectorVisitor& visit, std::uint64_t budget)
{
    std::uint64_t count = 0;
    try {
        count = pbe_count(ch);
    } catch (const ParameterError&) {
        throw BudgetExceeded("pbe_enumerate: PBE count exceeds budget");
    }
    if (count > budget) throw BudgetExceeded("pbe_enumerate: PBE count exceeds budget");

    const std::size_t n = ch.n(), m = ch.m();
    const auto good = ch.e1().enumerate(budget);
    std::vector<std::vector<Elem>> bad;
    ch.e2().for_each([&](std::span<const Elem> v) {
        if (!ch.e1().contains(v)) bad.emplace_back(v.begin(), v.end());
        return true;
    }, budget);

    std::vector<Elem> flat(n * m);
    std::vector<std::size_t> idx(m);
    std::vector<const std::vector<std::vector<Elem>>*> lists(m);
    auto put = [&](std::size_t c) {
        const auto& v = (*lists[c])[idx[c]];
        std::copy(v.begin(), v.end(), flat.begin() + static_cast<std::ptrdiff_t>(c * n));
    };

    for (std::size_t j = 0; j <= ch.w(); ++j) {
        if (j > 0 && bad.empty()) break;
        std::vector<std::size_t> pos(j);
        std::iota(pos.begin(), pos.end(), 0);
        while (true) {
            std::fill(lists.begin(), lists.end(), &good);
            for (std::size_t p : pos) lists[p] = &bad;
            std::fill(idx.begin(), idx.end(), 0);
            for (std::size_t c = 0; c < m; ++c) put(c);
            while (true) {
                if (!visit(flat)) return false;
                std::size_t c = 0;
                while (c < m && idx[c] + 1 == lists[c]->size()) {
                    idx[c] = 0;
                    put(c);
                    ++c;
                }
                if (c == m) break;
                ++idx[c];
                put(c);
            }
            std::size_t i = j;
            while (i > 0 && pos[i - 1] == m - j + i - 1) --i;
            if (i == 0) break;
            ++pos[i - 1];
            for (std::size_t k = i; k < j; ++k) pos[k] = pos[k - 1] + 1;
        }
    }
    return true;
}

} // namespace pbec
