#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pbec/error_model.hpp"
#include "pbec/errors.hpp"
#include "pbec/vector_set.hpp"

namespace pbec {

namespace {

constexpr unsigned __int128 kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked(unsigned __int128 v, const char* what)
{
    if (v > kU64Max) throw ParameterError(std::string(what) + ": cardinality overflows 64 bits");
    return static_cast<std::uint64_t>(v);
}

unsigned __int128 sat_mul(unsigned __int128 a, unsigned __int128 b)
{
    if (a == 0 || b == 0) return 0;
    if (a > (kU64Max + 1) * 4 / b) return (kU64Max + 1) * 4;  // saturate well above u64
    return a * b;
}

unsigned __int128 sat_pow(unsigned __int128 base, std::size_t e)
{
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, base);
    return r;
}

unsigned __int128 ball_size(std::uint32_t q, std::size_t n, std::size_t t)
{
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1;  // C(n, i)
    for (std::size_t i = 0; i <= t; ++i) {
        if (i > 0) binom = sat_mul(binom, n - i + 1) / i;
        total += sat_mul(binom, sat_pow(q - 1, i));
        if (total > kU64Max * 2) return total;
    }
    return total;
}

void check_budget(double log2_size, std::uint64_t budget, const char* what)
{
    if (log2_size > std::log2(static_cast<double>(budget)) + 1e-9) {
        throw BudgetExceeded(std::string(what) + ": enumeration exceeds budget");
    }
}

// Visits every length-n vector of Hamming weight exactly wt.
bool for_each_weight(const FieldSpec& f, std::size_t n, std::size_t wt, std::vector<Elem>& v,
                     const VectorVisitor& visit)
{
    std::vector<std::size_t> pos(wt);
    std::iota(pos.begin(), pos.end(), 0);
    const Elem q = f.order();
    while (true) {
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t p : pos) v[p] = 1;
        while (true) {
            if (!visit(v)) return false;
            std::size_t i = 0;
            while (i < wt && v[pos[i]] == q - 1) v[pos[i++]] = 1;
            if (i == wt) break;
            ++v[pos[i]];
        }
        // next combination
        std::size_t i = wt;
        while (i > 0 && pos[i - 1] == n - wt + i - 1) --i;
        if (i == 0) return true;
        ++pos[i - 1];
        for (std::size_t j = i; j < wt; ++j) pos[j] = pos[j - 1] + 1;
    }
}

} // namespace

ErrorSet::ErrorSet(Kind kind, Field field, std::size_t n) : kind_(kind), field_(std::move(field)), n_(n)
{
    if (!field_) throw ParameterError("error set: null field");
}

ErrorSet ErrorSet::hamming_ball(Field field, std::size_t n, std::size_t t)
{
    if (t > n) throw ParameterError("hamming ball: radius exceeds length");
    ErrorSet s(Kind::HammingBall, std::move(field), n);
    s.t_ = t;
    return s;
}

ErrorSet ErrorSet::max_norm_box(Field field, std::size_t n, std::uint32_t a)
{
    if (!field->is_prime_field()) throw ParameterError("max-norm box: prime field required");
    if (2ull * a + 1 > field->order()) throw ParameterError("max-norm box: 2a+1 exceeds p");
    ErrorSet s(Kind::MaxNormBox, std::move(field), n);
    s.a_ = a;
    return s;
}

ErrorSet ErrorSet::subspace(const FqMatrix& basis)
{
    RowEchelon e = rref(basis);
    if (e.rank != basis.rows()) throw ParameterError("subspace: basis rows are linearly dependent");
    ErrorSet s(Kind::Subspace, basis.field(), basis.cols());
    auto b = std::make_shared<FqMatrix>(basis.field(), 0, basis.cols());
    for (std::size_t i = 0; i < e.rank; ++i) b->append_row(e.reduced.row(i));
    s.parity_ = std::make_shared<const FqMatrix>(kernel(*b));
    s.basis_ = std::move(b);
    return s;
}

ErrorSet ErrorSet::explicit_set(Field field, std::size_t n, std::vector<std::vector<Elem>> elements)
{
    for (const auto& v : elements) {
        if (v.size() != n) throw ParameterError("explicit set: vector length mismatch");
        for (Elem x : v) {
            if (x >= field->order()) throw ParameterError("explicit set: entry outside the field");
        }
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    ErrorSet s(Kind::Explicit, field, n);
    auto lookup = std::make_shared<VectorSet>(field->order(), n);
    lookup->reserve(elements.size());
    for (const auto& v : elements) lookup->insert(v);
    s.lookup_ = std::move(lookup);
    s.elements_ = std::make_shared<const std::vector<std::vector<Elem>>>(std::move(elements));
    return s;
}

ErrorSet ErrorSet::zero(Field field, std::size_t n)
{
    return explicit_set(std::move(field), n, {std::vector<Elem>(n, 0)});
}

std::size_t ErrorSet::radius() const
{
    if (kind_ != Kind::HammingBall) throw ParameterError("radius: not a Hamming ball");
    return t_;
}

std::uint32_t ErrorSet::half_width() const
{
    if (kind_ != Kind::MaxNormBox) throw ParameterError("half_width: not a max-norm box");
    return a_;
}

const FqMatrix& ErrorSet::basis() const
{
    if (kind_ != Kind::Subspace) throw ParameterError("basis: not a subspace");
    return *basis_;
}

const std::vector<std::vector<Elem>>& ErrorSet::elements() const
{
    if (kind_ != Kind::Explicit) throw ParameterError("elements: not an explicit set");
    return *elements_;
}

bool ErrorSet::contains(std::span<const Elem> v) const
{
    if (v.size() != n_) throw ParameterError("contains: vector length mismatch");
    switch (kind_) {
    case Kind::HammingBall:
        return hamming_weight(v) <= t_;
    case Kind::MaxNormBox: {
        const Elem p = field_->order();
        return std::all_of(v.begin(), v.end(), [&](Elem x) { return x <= a_ || x >= p - a_; });
    }
    case Kind::Subspace: {
        std::vector<Elem> syn(parity_->rows());
        mat_vec(*parity_, v, syn);
        return std::all_of(syn.begin(), syn.end(), [](Elem x) { return x == 0; });
    }
    case Kind::Explicit:
        return lookup_->contains(v);
    }
    return false;
}

std::uint64_t ErrorSet::size() const
{
    switch (kind_) {
    case Kind::HammingBall:
        return checked(ball_size(field_->order(), n_, t_), "hamming ball");
    case Kind::MaxNormBox:
        return checked(sat_pow(2u * a_ + 1, n_), "max-norm box");
    case Kind::Subspace:
        return checked(sat_pow(field_->order(), basis_->rows()), "subspace");
    case Kind::Explicit:
        return elements_->size();
    }
    return 0;
}

double ErrorSet::log_size() const
{
    const long double lq = std::log(static_cast<long double>(field_->order()));
    switch (kind_) {
    case Kind::HammingBall: {
        // log-sum-exp over the shells
        std::vector<long double> terms;
        for (std::size_t i = 0; i <= t_; ++i) {
            terms.push_back(std::lgamma(static_cast<long double>(n_) + 1) - std::lgamma(static_cast<long double>(i) + 1) -
                            std::lgamma(static_cast<long double>(n_ - i) + 1) +
                            (i ? i * std::log(static_cast<long double>(field_->order() - 1)) : 0.0L));
        }
        const long double mx = *std::max_element(terms.begin(), terms.end());
        long double acc = 0;
        for (long double x : terms) acc += std::exp(x - mx);
        return static_cast<double>((mx + std::log(acc)) / lq);
    }
    case Kind::MaxNormBox:
        return static_cast<double>(n_ * std::log(2.0L * a_ + 1) / lq);
    case Kind::Subspace:
        return static_cast<double>(basis_->rows());
    case Kind::Explicit:
        return static_cast<double>(std::log(static_cast<long double>(elements_->size())) / lq);
    }
    return 0;
}

bool ErrorSet::for_each(const VectorVisitor& visit, std::uint64_t budget) const
{
    check_budget(log_size() * std::log2(static_cast<double>(field_->order())), budget, "error set");
    std::vector<Elem> v(n_, 0);
    switch (kind_) {
    case Kind::HammingBall:
        for (std::size_t wt = 0; wt <= t_; ++wt) {
            if (!for_each_weight(*field_, n_, wt, v, visit)) return false;
        }
        return true;
    case Kind::MaxNormBox: {
        std::vector<Elem> values{0};
        for (std::uint32_t i = 1; i <= a_; ++i) values.push_back(i);
        for (std::uint32_t i = a_; i >= 1; --i) values.push_back(field_->order() - i);
        std::vector<std::size_t> idx(n_, 0);
        while (true) {
            if (!visit(v)) return false;
            std::size_t i = 0;
            while (i < n_ && idx[i] + 1 == values.size()) {
                idx[i] = 0;
                v[i] = values[0];
                ++i;
            }
            if (i == n_) return true;
            v[i] = values[++idx[i]];
        }
    }
    case Kind::Subspace: {
        const FieldSpec& f = *field_;
        const std::size_t k = basis_->rows();
        std::vector<Elem> coeff(k, 0);
        while (true) {
            if (!visit(v)) return false;
            std::size_t i = 0;
            while (i < k && coeff[i] == f.order() - 1) {
                axpy(f, v, f.neg(coeff[i]), basis_->row(i));
                coeff[i++] = 0;
            }
            if (i == k) return true;
            axpy(f, v, f.sub(coeff[i] + 1, coeff[i]), basis_->row(i));
            ++coeff[i];
        }
    }
    case Kind::Explicit:
        for (const auto& e : *elements_) {
            if (!visit(e)) return false;
        }
        return true;
    }
    return true;
}

std::vector<std::vector<Elem>> ErrorSet::enumerate(std::uint64_t budget) const
{
    std::vector<std::vector<Elem>> out;
    for_each([&](std::span<const Elem> v) {
        out.emplace_back(v.begin(), v.end());
        return true;
    }, budget);
    return out;
}

std::string ErrorSet::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case Kind::HammingBall: os << "ball(n=" << n_ << ", t=" << t_ << ")"; break;
    case Kind::MaxNormBox: os << "box(n=" << n_ << ", a=" << a_ << ")"; break;
    case Kind::Subspace: os << "subspace(n=" << n_ << ", dim=" << basis_->rows() << ")"; break;
    case Kind::Explicit: os << "explicit(n=" << n_ << ", size=" << elements_->size() << ")"; break;
    }
    os << " over " << field_->describe();
    return os.str();
}

namespace {

void check_compatible(const ErrorSet& a, const ErrorSet& b)
{
    if (a.field() != b.field()) throw ParameterError("error sets over different fields");
    if (a.length() != b.length()) throw ParameterError("error sets of different lengths");
}

bool is_zero_set(const ErrorSet& s)
{
    return s.kind() == ErrorSet::Kind::HammingBall ? s.radius() == 0
         : s.kind() == ErrorSet::Kind::MaxNormBox  ? s.half_width() == 0
         : s.kind() == ErrorSet::Kind::Subspace    ? s.basis().rows() == 0
                                                   : s.elements().size() == 1 && hamming_weight(s.elements()[0]) == 0;
}

} // namespace

ErrorSet difference_set(const ErrorSet& a, const ErrorSet& b, std::uint64_t budget)
{
    check_compatible(a, b);
    const double log2q = std::log2(static_cast<double>(a.field()->order()));
    check_budget((a.log_size() + b.log_size()) * log2q, budget, "difference set");
    const FieldSpec& f = *a.field();
    const auto as = a.enumerate(budget);
    VectorSet seen(f.order(), a.length());
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> d(a.length());
    b.for_each([&](std::span<const Elem> y) {
        for (const auto& x : as) {
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = f.sub(x[i], y[i]);
            if (seen.insert(d)) out.push_back(d);
        }
        return true;
    }, budget);
    return ErrorSet::explicit_set(a.field(), a.length(), std::move(out));
}

ErrorSet difference_set_symbolic(const ErrorSet& a, const ErrorSet& b, std::uint64_t budget)
{
    check_compatible(a, b);
    using K = ErrorSet::Kind;
    const std::size_t n = a.length();
    if (a.kind() == K::HammingBall && b.kind() == K::HammingBall) {
        return ErrorSet::hamming_ball(a.field(), n, std::min(a.radius() + b.radius(), n));
    }
    if (a.kind() == K::MaxNormBox && b.kind() == K::MaxNormBox) {
        const std::uint32_t half = (a.field()->order() - 1) / 2;
        return ErrorSet::max_norm_box(a.field(), n, std::min(a.half_width() + b.half_width(), half));
    }
    if (a.kind() == K::Subspace && b.kind() == K::Subspace) {
        FqMatrix stacked = a.basis();
        for (std::size_t i = 0; i < b.basis().rows(); ++i) stacked.append_row(b.basis().row(i));
        return ErrorSet::subspace(row_basis(stacked));
    }
    // Delta({0}, X) = -X; every family except explicit sets is symmetric.
    const bool za = is_zero_set(a), zb = is_zero_set(b);
    if (za || zb) {
        const ErrorSet& other = za ? b : a;
        if (other.kind() != K::Explicit) return other;
        if (zb) return other;
        const FieldSpec& f = *a.field();
        auto elems = other.elements();
        for (auto& v : elems) {
            for (Elem& x : v) x = f.neg(x);
        }
        return ErrorSet::explicit_set(a.field(), n, std::move(elems));
    }
    return difference_set(a, b, budget);
}

bool is_subset(const ErrorSet& a, const ErrorSet& b, std::uint64_t budget)
{
    check_compatible(a, b);
    using K = ErrorSet::Kind;
    if (a.kind() == K::HammingBall && b.kind() == K::HammingBall) return a.radius() <= b.radius();
    if (a.kind() == K::MaxNormBox && b.kind() == K::MaxNormBox) return a.half_width() <= b.half_width();
    if (is_zero_set(a)) return b.contains(std::vector<Elem>(a.length(), 0));
    if (a.kind() == K::Subspace) {
        for (std::size_t i = 0; i < a.basis().rows(); ++i) {
            if (b.kind() == K::Subspace && !b.contains(a.basis().row(i))) return false;
        }
        if (b.kind() == K::Subspace) return true;
    }
    return a.for_each([&](std::span<const Elem> v) { return b.contains(v); }, budget);
}

} // namespace pbec
