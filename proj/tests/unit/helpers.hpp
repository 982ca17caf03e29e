#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pbec/finite_field.hpp"
#include "pbec/fq_matrix.hpp"

namespace testutil {

inline std::vector<pbec::Elem> random_vector(std::mt19937_64& rng, std::uint32_t q, std::size_t n)
{
    std::vector<pbec::Elem> v(n);
    for (auto& x : v) x = static_cast<pbec::Elem>(rng() % q);
    return v;
}

inline pbec::FqMatrix random_matrix(std::mt19937_64& rng, const pbec::Field& f, std::size_t r, std::size_t c)
{
    pbec::FqMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<pbec::Elem>(rng() % f->order());
    return m;
}

// all vectors of GF(q)^n in lexicographic order
inline std::vector<std::vector<pbec::Elem>> all_vectors(std::uint32_t q, std::size_t n)
{
    std::vector<std::vector<pbec::Elem>> out;
    std::vector<pbec::Elem> v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++v[i] < q) break;
            v[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

inline std::size_t weight(const std::vector<pbec::Elem>& v)
{
    std::size_t w = 0;
    for (auto x : v) w += x != 0;
    return w;
}

} // namespace testutil
