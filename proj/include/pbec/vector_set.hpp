#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "pbec/finite_field.hpp"

namespace pbec {

/// Hash set of fixed-length vectors over GF(q). Vectors that fit in 64 bits
/// as base-q integers are packed; longer ones fall back to byte strings.
class VectorSet {
public:
    VectorSet(std::uint32_t q, std::size_t length);

    bool insert(std::span<const Elem> v);
    bool contains(std::span<const Elem> v) const;
    std::size_t size() const noexcept { return packed_ ? small_.size() : large_.size(); }
    void reserve(std::size_t n);

private:
    std::uint64_t pack(std::span<const Elem> v) const noexcept;
    std::string bytes(std::span<const Elem> v) const;

    std::uint32_t q_;
    std::size_t length_;
    bool packed_;
    std::unordered_set<std::uint64_t> small_;
    std::unordered_set<std::string> large_;
};

/// True iff q^length < 2^64.
bool packs_into_u64(std::uint32_t q, std::size_t length) noexcept;

/// Canonical integer encoding with v[0] most significant, so numeric order is
/// lexicographic order. Requires packs_into_u64.
std::uint64_t canonical_index(std::span<const Elem> v, std::uint32_t q) noexcept;
void from_canonical_index(std::uint64_t idx, std::uint32_t q, std::span<Elem> out) noexcept;

} // namespace pbec
