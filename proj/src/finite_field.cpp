#include "pbec/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "pbec/errors.hpp"

namespace pbec {

namespace {

using Poly = std::vector<Elem>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, over `f`.
Poly poly_mod(const FieldSpec& f, Poly a, std::span<const Elem> m)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const Elem lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

// Coefficient string of v in base b, length len.
Poly digits(std::uint64_t v, std::uint32_t b, std::size_t len)
{
    Poly out(len);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = static_cast<Elem>(v % b);
        v /= b;
    }
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

// Multiplicative order of x modulo the monic polynomial m over `base`,
// stopping early once it exceeds `limit`.
std::uint64_t order_of_x(const FieldSpec& base, std::span<const Elem> m, std::uint64_t limit)
{
    const std::size_t r = m.size() - 1;
    Poly cur(r, 0);
    if (r == 1) {
        cur[0] = base.neg(m[0]);
    } else {
        cur[1] = 1;
    }
    for (std::uint64_t i = 1; i <= limit; ++i) {
        bool one = cur[0] == 1;
        for (std::size_t j = 1; j < r && one; ++j) one = cur[j] == 0;
        if (one) return i;
        // cur *= x
        const Elem lead = cur[r - 1];
        for (std::size_t j = r - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (lead != 0) {
            for (std::size_t j = 0; j < r; ++j) cur[j] = base.sub(cur[j], base.mul(lead, m[j]));
        }
    }
    return limit + 1;
}

struct Registry {
    std::mutex mutex;
    std::map<std::uint32_t, Field> primes;
    std::map<std::pair<const FieldSpec*, Poly>, Field> extensions;
    std::map<std::pair<const FieldSpec*, std::uint32_t>, Field> defaults;
};

Registry& registry()
{
    static Registry r;
    return r;
}

} // namespace

bool is_prime(std::uint32_t p) noexcept
{
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

bool is_irreducible(const FieldSpec& base, std::span<const Elem> poly)
{
    if (poly.size() < 2 || poly.back() != 1) {
        throw ParameterError("is_irreducible: polynomial must be monic of degree >= 1");
    }
    const std::size_t d = poly.size() - 1;
    if (d == 1) return true;
    const std::uint32_t b = base.order();
    const Poly p(poly.begin(), poly.end());
    for (std::size_t k = 1; k <= d / 2; ++k) {
        const std::uint64_t count = ipow(b, static_cast<std::uint32_t>(k));
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g = digits(v, b, k);
            g.push_back(1);
            if (poly_mod(base, p, g).empty()) return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(Passkey, Field base, std::uint32_t p, std::vector<Elem> modulus)
    : base_(std::move(base)), p_(p), modulus_(std::move(modulus))
{
    if (!base_) {
        e_ = 1;
        q_ = p_;
    } else {
        e_ = base_->degree() * relative_degree();
        q_ = static_cast<std::uint32_t>(ipow(base_->order(), relative_degree()));
    }

    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        Elem out = 0, scale = 1, v = a;
        for (std::uint32_t i = 0; i < e_; ++i) {
            const Elem d = v % p_;
            v /= p_;
            out += ((p_ - d) % p_) * scale;
            scale *= p_;
        }
        neg_table_[a] = out;
    }
    if (p_ != 2 && q_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Elem a = 0; a < q_; ++a) {
            for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
        }
    }

    // Prefer x (repr = base order) so primitive moduli give the textbook tables.
    std::vector<Elem> tries;
    if (base_) tries.push_back(base_->order() % q_);
    for (Elem g = 1; g < q_; ++g) tries.push_back(g);
    for (Elem g : tries) {
        if (g != 0 && build_tables_with(g)) return;
    }
    throw ParameterError("field construction: no primitive element found (modulus reducible?)");
}

Elem FieldSpec::add_digits(Elem a, Elem b) const noexcept
{
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Elem FieldSpec::slow_mul(Elem a, Elem b) const noexcept
{
    if (!base_) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    const FieldSpec& f = *base_;
    const std::uint32_t r = relative_degree();
    const Poly pa = digits(a, f.order(), r);
    const Poly pb = digits(b, f.order(), r);
    Poly prod(2 * r - 1, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
        if (pa[i] == 0) continue;
        for (std::uint32_t j = 0; j < r; ++j) prod[i + j] = f.add(prod[i + j], f.mul(pa[i], pb[j]));
    }
    const Poly red = poly_mod(f, std::move(prod), modulus_);
    Elem out = 0, scale = 1;
    for (Elem c : red) {
        out += c * scale;
        scale *= f.order();
    }
    return out;
}

bool FieldSpec::build_tables_with(Elem g)
{
    const std::uint32_t n = q_ - 1;
    std::vector<Elem> exp(2 * static_cast<std::size_t>(n));
    std::vector<std::uint32_t> log(q_, 0);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (i > 0 && cur == 1) return false;
        exp[i] = cur;
        log[cur] = i;
        cur = slow_mul(cur, g);
    }
    if (cur != 1) return false;
    for (std::uint32_t i = 0; i < n; ++i) exp[n + i] = exp[i];
    exp_ = std::move(exp);
    log_ = std::move(log);
    return true;
}

Elem FieldSpec::inv(Elem a) const
{
    if (a == 0) throw ParameterError("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FieldSpec::pow(Elem a, std::uint64_t k) const noexcept
{
    if (k == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

Elem FieldSpec::from_integer(std::int64_t v) const noexcept
{
    const std::int64_t p = p_;
    return static_cast<Elem>(((v % p) + p) % p);
}

std::string FieldSpec::describe() const
{
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (base_) {
        os << " = GF(" << base_->order() << ")[x]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

Field FieldSpec::intern(const Field& base, std::uint32_t p, std::vector<Elem> modulus)
{
    Registry& reg = registry();
    {
        std::lock_guard lock(reg.mutex);
        if (!base) {
            if (auto it = reg.primes.find(p); it != reg.primes.end()) return it->second;
        } else if (auto it = reg.extensions.find({base.get(), modulus}); it != reg.extensions.end()) {
            return it->second;
        }
    }
    auto f = std::make_shared<const FieldSpec>(Passkey{}, base, p, modulus);
    std::lock_guard lock(reg.mutex);
    if (!base) return reg.primes.emplace(p, f).first->second;
    return reg.extensions.emplace(std::make_pair(base.get(), std::move(modulus)), f).first->second;
}

Field FieldSpec::prime(std::uint32_t p)
{
    if (!is_prime(p)) throw ParameterError("field: characteristic " + std::to_string(p) + " is not prime");
    if (p > kMaxOrder) throw ParameterError("field: order exceeds 2^16");
    return intern(nullptr, p, {0, 1});
}

Field FieldSpec::make(std::uint32_t p, std::uint32_t e, std::optional<std::vector<Elem>> modulus)
{
    if (e < 1) throw ParameterError("field: extension degree must be >= 1");
    Field gfp = prime(p);
    if (e == 1) {
        if (modulus && (modulus->size() != 2 || modulus->back() != 1 || (*modulus)[0] >= p)) {
            throw ParameterError("field: modulus must be monic of degree 1 over GF(p)");
        }
        return gfp;
    }
    return extension(gfp, e, std::move(modulus));
}

Field FieldSpec::extension(const Field& base, std::uint32_t degree, std::optional<std::vector<Elem>> modulus)
{
    if (!base) throw ParameterError("field: extension of a null field");
    if (degree < 1) throw ParameterError("field: extension degree must be >= 1");
    const std::uint32_t b = base->order();
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        q *= b;
        if (q > kMaxOrder) throw ParameterError("field: order exceeds 2^16");
    }
    if (modulus) {
        if (modulus->size() != degree + 1 || modulus->back() != 1) {
            throw ParameterError("field: modulus must be monic of the requested degree");
        }
        for (Elem c : *modulus) {
            if (c >= b) throw ParameterError("field: modulus coefficient outside the base field");
        }
        if (degree == 1) return base;
        if ((*modulus)[0] == 0 || !is_irreducible(*base, *modulus)) {
            throw ParameterError("field: modulus is reducible over the base field");
        }
        return intern(base, base->characteristic(), std::move(*modulus));
    }
    if (degree == 1) return base;

    Registry& reg = registry();
    {
        std::lock_guard lock(reg.mutex);
        if (auto it = reg.defaults.find({base.get(), degree}); it != reg.defaults.end()) return it->second;
    }
    const std::uint64_t count = ipow(b, degree);
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly m = digits(v, b, degree);
        if (m[0] == 0) continue;
        m.push_back(1);
        if (!is_irreducible(*base, m)) continue;
        if (order_of_x(*base, m, q - 1) != q - 1) continue;
        Field f = intern(base, base->characteristic(), std::move(m));
        std::lock_guard lock(reg.mutex);
        return reg.defaults.emplace(std::make_pair(base.get(), degree), f).first->second;
    }
    throw ParameterError("field: no primitive polynomial found");
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(Field field, Elem repr) : field_(std::move(field)), repr_(repr)
{
    if (!field_) throw ParameterError("field element: null field");
    if (repr_ >= field_->order()) throw ParameterError("field element: representative out of range");
}

namespace {
const Field& common(const FieldElement& a, const FieldElement& b)
{
    if (a.field() != b.field()) throw ParameterError("field element: field mismatch");
    return a.field();
}
} // namespace

FieldElement FieldElement::inv() const { return {field_, field_->inv(repr_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    const Field& f = common(a, b);
    return {f, f->add(a.repr_, b.repr_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    const Field& f = common(a, b);
    return {f, f->sub(a.repr_, b.repr_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    const Field& f = common(a, b);
    return {f, f->mul(a.repr_, b.repr_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    const Field& f = common(a, b);
    return {f, f->div(a.repr_, b.repr_)};
}
FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.repr_)}; }
bool operator==(const FieldElement& a, const FieldElement& b)
{
    return a.field_ == b.field_ && a.repr_ == b.repr_;
}

FqVector::FqVector(Field field, std::vector<Elem> entries) : field_(std::move(field)), entries_(std::move(entries))
{
    if (!field_) throw ParameterError("vector: null field");
    for (Elem x : entries_) {
        if (x >= field_->order()) throw ParameterError("vector: entry outside the field");
    }
}

std::size_t hamming_weight(std::span<const Elem> v) noexcept
{
    std::size_t w = 0;
    for (Elem x : v) w += x != 0;
    return w;
}

std::size_t FqVector::hamming_weight() const noexcept { return pbec::hamming_weight(entries_); }

std::uint32_t extension_degree(const Field& ext, const Field& base)
{
    if (ext == base) return 1;
    if (ext && ext->base() == base) return ext->relative_degree();
    throw ParameterError("extension field is not built over the given base field");
}

void ext_to_base(const FieldSpec& ext, const FieldSpec& base, Elem x, std::span<Elem> out)
{
    if (&ext == &base) {
        out[0] = x;
        return;
    }
    const std::uint32_t b = base.order();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = x % b;
        x /= b;
    }
}

Elem base_to_ext(const FieldSpec& ext, const FieldSpec& base, std::span<const Elem> coords)
{
    if (&ext == &base) return coords[0];
    Elem out = 0, scale = 1;
    for (Elem c : coords) {
        out += c * scale;
        scale *= base.order();
    }
    return out;
}

FqVector ext_to_base(const FieldElement& x)
{
    const Field& ext = x.field();
    if (ext->is_prime_field()) throw ParameterError("ext_to_base: prime field has no base field");
    FqVector out(ext->base(), ext->relative_degree());
    ext_to_base(*ext, *ext->base(), x.repr(), out.entries());
    return out;
}

FieldElement base_to_ext(const Field& ext, const FqVector& coords)
{
    if (ext->is_prime_field() || coords.field() != ext->base() || coords.size() != ext->relative_degree()) {
        throw ParameterError("base_to_ext: coordinates do not match the extension");
    }
    return {ext, base_to_ext(*ext, *ext->base(), coords.entries())};
}

} // namespace pbec
