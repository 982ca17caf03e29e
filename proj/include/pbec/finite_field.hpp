#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbec {

/// Field elements are polynomial residues encoded as integers in [0, q).
///
/// For a field built as a degree-r extension of a base field of order b, the
/// element sum_i c_i x^i (c_i in the base field) is stored as sum_i c_i b^i.
/// Since every base field is itself encoded the same way, the encoding is always
/// the base-p digit string of the coefficients over GF(p), so addition is
/// digit-wise modulo p regardless of the tower.
using Elem = std::uint32_t;

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/**
 * Immutable description of GF(q), q = p^e <= 2^16, with precomputed
 * log/antilog tables.
 *
 * Fields are interned: asking twice for the same (base, modulus) returns the
 * same object, so two Field handles denote the same field iff the pointers are
 * equal. All member functions are safe to call concurrently.
 */
class FieldSpec {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// GF(p) with modulus x.
    static Field prime(std::uint32_t p);

    /// GF(p^e) as an extension of GF(p). Without a modulus, the default is the
    /// first monic primitive polynomial of degree e in integer order of its
    /// low-to-high coefficient string.
    static Field make(std::uint32_t p, std::uint32_t e,
                      std::optional<std::vector<Elem>> modulus = std::nullopt);

    /// Degree-r extension of an arbitrary field. A degree-1 extension is the
    /// base field itself.
    static Field extension(const Field& base, std::uint32_t degree,
                           std::optional<std::vector<Elem>> modulus = std::nullopt);

    std::uint32_t characteristic() const noexcept { return p_; }
    /// Absolute degree e over GF(p).
    std::uint32_t degree() const noexcept { return e_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Field this one was built over; null for a prime field.
    const Field& base() const noexcept { return base_; }
    /// Degree over base(); 1 for a prime field.
    std::uint32_t relative_degree() const noexcept { return static_cast<std::uint32_t>(modulus_.size() - 1); }
    /// Monic modulus, coefficients low-to-high over base() (over GF(p) for a prime field).
    std::span<const Elem> modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return !base_; }

    Elem add(Elem a, Elem b) const noexcept
    {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept { return neg_table_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept
    {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const noexcept;

    /// A primitive element (multiplicative generator).
    Elem generator() const noexcept { return q_ == 2 ? 1 : exp_[1]; }
    /// The integer v reduced into the prime subfield.
    Elem from_integer(std::int64_t v) const noexcept;

    std::string describe() const;

private:
    struct Passkey {};

public:
    FieldSpec(Passkey, Field base, std::uint32_t p, std::vector<Elem> modulus);

private:
    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem slow_mul(Elem a, Elem b) const noexcept;
    bool build_tables_with(Elem g);

    Field base_;
    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_;
    std::vector<Elem> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
    std::vector<Elem> neg_table_;
    std::vector<std::uint16_t> add_table_;

    static Field intern(const Field& base, std::uint32_t p, std::vector<Elem> modulus);
};

/// True iff p is a prime number.
bool is_prime(std::uint32_t p) noexcept;

/// Irreducibility over `base` by trial division against every monic polynomial
/// of degree <= deg/2. Coefficients low-to-high; must be monic.
bool is_irreducible(const FieldSpec& base, std::span<const Elem> poly);

/// Value-semantic field element bound to its field. Mixing fields throws.
class FieldElement {
public:
    FieldElement(Field field, Elem repr);

    const Field& field() const noexcept { return field_; }
    Elem repr() const noexcept { return repr_; }
    bool is_zero() const noexcept { return repr_ == 0; }

    FieldElement inv() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    Field field_;
    Elem repr_;
};

/// Vector in GF(q)^n.
class FqVector {
public:
    FqVector(Field field, std::size_t n) : field_(std::move(field)), entries_(n, 0) {}
    FqVector(Field field, std::vector<Elem> entries);

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return entries_.size(); }
    Elem operator[](std::size_t i) const noexcept { return entries_[i]; }
    Elem& operator[](std::size_t i) noexcept { return entries_[i]; }
    std::span<const Elem> entries() const noexcept { return entries_; }
    std::span<Elem> entries() noexcept { return entries_; }

    std::size_t hamming_weight() const noexcept;
    bool is_zero() const noexcept { return hamming_weight() == 0; }

    friend bool operator==(const FqVector& a, const FqVector& b)
    {
        return a.field_ == b.field_ && a.entries_ == b.entries_;
    }

private:
    Field field_;
    std::vector<Elem> entries_;
};

std::size_t hamming_weight(std::span<const Elem> v) noexcept;

/// Coordinates of x in the polynomial basis {1, a, ..., a^(r-1)} of `ext`
/// over `base`. `ext` must be `base` itself (r = 1) or a direct extension of it.
void ext_to_base(const FieldSpec& ext, const FieldSpec& base, Elem x, std::span<Elem> out);
Elem base_to_ext(const FieldSpec& ext, const FieldSpec& base, std::span<const Elem> coords);
/// Degree of `ext` over `base`; throws if `ext` is not built directly over `base`.
std::uint32_t extension_degree(const Field& ext, const Field& base);

/// Expansion of an element of GF(q^r) over its base field, length r.
FqVector ext_to_base(const FieldElement& x);
/// Inverse of ext_to_base; `coords` must live in ext's base field.
FieldElement base_to_ext(const Field& ext, const FqVector& coords);

} // namespace pbec
