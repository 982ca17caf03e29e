#include "pbec/vector_set.hpp"

#include <cmath>

namespace pbec {

bool packs_into_u64(std::uint32_t q, std::size_t length) noexcept
{
    return static_cast<double>(length) * std::log2(static_cast<double>(q)) < 63.5;
}

std::uint64_t canonical_index(std::span<const Elem> v, std::uint32_t q) noexcept
{
    std::uint64_t idx = 0;
    for (Elem x : v) idx = idx * q + x;
    return idx;
}

void from_canonical_index(std::uint64_t idx, std::uint32_t q, std::span<Elem> out) noexcept
{
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Elem>(idx % q);
        idx /= q;
    }
}

VectorSet::VectorSet(std::uint32_t q, std::size_t length)
    : q_(q), length_(length), packed_(packs_into_u64(q, length))
{
}

std::uint64_t VectorSet::pack(std::span<const Elem> v) const noexcept { return canonical_index(v, q_); }

std::string VectorSet::bytes(std::span<const Elem> v) const
{
    std::string s(v.size() * 2, '\0');
    for (std::size_t i = 0; i < v.size(); ++i) {
        s[2 * i] = static_cast<char>(v[i] & 0xff);
        s[2 * i + 1] = static_cast<char>((v[i] >> 8) & 0xff);
    }
    return s;
}

bool VectorSet::insert(std::span<const Elem> v)
{
    return packed_ ? small_.insert(pack(v)).second : large_.insert(bytes(v)).second;
}

bool VectorSet::contains(std::span<const Elem> v) const
{
    return packed_ ? small_.count(pack(v)) != 0 : large_.count(bytes(v)) != 0;
}

void VectorSet::reserve(std::size_t n)
{
    if (packed_) {
        small_.reserve(n);
    } else {
        large_.reserve(n);
    }
}

} // namespace pbec
