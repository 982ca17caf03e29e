#include "pbec/gcc.hpp"

#include <sstream>

#include "pbec/errors.hpp"

namespace pbec {

void GccSpec::validate() const
{
    if (inner.codes.empty()) throw ParameterError("gcc: empty inner chain");
    if (outer.size() != inner.levels()) throw ParameterError("gcc: need one outer code per level");
    if (inner.quotient_reps.size() + 1 != inner.levels()) throw ParameterError("gcc: chain lacks quotient representatives");
    const Field& base = inner.codes.front().field();
    for (std::size_t j = 0; j < outer.size(); ++j) {
        if (outer[j].n() != outer.front().n()) throw ParameterError("gcc: outer codes differ in length");
        if (outer[j].k() == 0) throw ParameterError("gcc: zero-dimensional outer code");
        if (extension_degree(outer[j].field(), base) != inner.gap(j)) {
            throw ParameterError("gcc: outer field degree does not match the inner dimension gap");
        }
    }
}

std::size_t GccSpec::expected_dimension() const
{
    std::size_t d = 0;
    for (std::size_t j = 0; j < levels(); ++j) d += outer[j].k() * inner.gap(j);
    return d;
}

GccCode::GccCode(GccSpec spec, LinearCode flat) : spec_(std::move(spec)), flat_(std::move(flat)) {}

bool GccCode::contains(const FqMatrix& x) const
{
    if (x.rows() != n() || x.cols() != m()) throw ParameterError("gcc contains: array shape mismatch");
    return flat_.contains(flatten_columns(x));
}

std::vector<FqMatrix> GccCode::generator_arrays() const
{
    std::vector<FqMatrix> out;
    for (std::size_t r = 0; r < flat_.k(); ++r) out.push_back(unflatten_columns(flat_.field(), n(), m(), flat_.generator().row(r)));
    return out;
}

GccCode gcc_build(GccSpec spec)
{
    spec.validate();
    const Field& base = spec.inner.codes.front().field();
    const FieldSpec& bf = *base;
    const std::size_t n = spec.n(), m = spec.m();
    FqMatrix gens(base, 0, n * m);
    std::vector<Elem> flat(n * m);
    for (std::size_t j = 0; j < spec.levels(); ++j) {
        const FqMatrix& q = j + 1 < spec.levels() ? spec.inner.quotient_reps[j] : spec.inner.codes[j].generator();
        const LinearCode& a = spec.outer[j];
        const FieldSpec& ext = *a.field();
        const std::size_t r = spec.inner.gap(j);
        std::vector<Elem> coords(r);
        for (std::size_t g = 0; g < a.k(); ++g) {
            Elem beta = 1;
            for (std::size_t b = 0; b < r; ++b) {
                std::fill(flat.begin(), flat.end(), 0);
                for (std::size_t i = 0; i < m; ++i) {
                    const Elem y = ext.mul(a.generator().at(g, i), beta);
                    if (y == 0) continue;
                    ext_to_base(ext, bf, y, coords);
                    std::span<Elem> col(flat.data() + i * n, n);
                    for (std::size_t l = 0; l < r; ++l) axpy(bf, col, coords[l], q.row(l));
                }
                gens.append_row(flat);
                beta *= bf.order();  // next polynomial basis element
            }
        }
    }
    LinearCode code = LinearCode::from_matrix(gens);
    if (code.k() != spec.expected_dimension()) throw ParameterError("gcc: generators are not independent");
    return GccCode(std::move(spec), std::move(code));
}

bool PbecCertificate::valid() const
{
    for (const auto& l : levels) {
        if (l.condition == Condition::None) return false;
    }
    return true;
}

std::string PbecCertificate::report() const
{
    std::ostringstream os;
    for (const auto& l : levels) {
        os << "level " << l.level + 1 << ": inner dim " << l.inner_dim << ", gap " << l.gap << ", outer [" << l.outer_dim
           << ", D=" << l.outer_distance << "] -> ";
        if (l.condition == Condition::None) {
            os << "no condition holds";
        } else {
            os << "condition " << static_cast<int>(l.condition);
        }
        if (!l.detail.empty()) os << " (" << l.detail << ")";
        os << '\n';
    }
    os << (valid() ? "certificate: valid" : "certificate: invalid") << '\n';
    return os.str();
}

namespace {

LevelVerdict base_verdict(const GccCode& code, std::size_t j, std::uint64_t budget)
{
    LevelVerdict v;
    v.level = j;
    v.inner_dim = code.spec().inner.codes[j].k();
    v.gap = code.spec().inner.gap(j);
    v.outer_dim = code.spec().outer[j].k();
    v.outer_distance = min_distance(code.spec().outer[j], budget);
    return v;
}

} // namespace

PbecCertificate certify_property1(const GccCode& code, const ErrorSet& e1, const ErrorSet& e2, std::size_t w,
                                  std::uint64_t budget)
{
    const Field& base = code.code().field();
    if (e1.field() != base || e2.field() != base || e1.length() != code.n() || e2.length() != code.n()) {
        throw ParameterError("certify: error sets do not match the inner code");
    }
    const ErrorSet d11 = difference_set_symbolic(e1, e1, budget);
    const ErrorSet d12 = difference_set_symbolic(e1, e2, budget);
    const ErrorSet d22 = difference_set_symbolic(e2, e2, budget);
    PbecCertificate cert;
    for (std::size_t j = 0; j < code.spec().levels(); ++j) {
        LevelVerdict v = base_verdict(code, j, std::min(budget, kDistanceBudget));
        const LinearCode& b = code.spec().inner.codes[j];
        if (v.outer_distance > 2 * w && intersects_only_zero(b, d11, budget)) {
            v.condition = Condition::BurstPair;
            v.detail = "D > 2w, B meets D11 only in 0";
        } else if (v.outer_distance > w && intersects_only_zero(b, d12, budget)) {
            v.condition = Condition::BurstSingle;
            v.detail = "D > w, B meets D12 only in 0";
        } else if (intersects_only_zero(b, d22, budget)) {
            v.condition = Condition::AllColumns;
            v.detail = "B meets D22 only in 0";
        }
        cert.levels.push_back(std::move(v));
    }
    return cert;
}

PbecCertificate certify_hamming(const GccCode& code, std::size_t t, std::size_t w, std::uint64_t budget)
{
    PbecCertificate cert;
    const std::size_t n = code.n();
    const Field& f = code.code().field();
    // d_j > r is decided as "B_j meets ball(r) only in 0", which avoids a full
    // weight enumeration for high-dimensional inner codes.
    auto distance_exceeds = [&](const LinearCode& b, std::size_t r) {
        if (r >= n) return false;
        return intersects_only_zero(b, ErrorSet::hamming_ball(f, n, r), std::max(budget, kDefaultBudget));
    };
    for (std::size_t j = 0; j < code.spec().levels(); ++j) {
        LevelVerdict v = base_verdict(code, j, budget);
        const LinearCode& b = code.spec().inner.codes[j];
        if (v.outer_distance > 2 * w) {
            v.condition = Condition::BurstPair;
            v.detail = "D > 2w";
        } else if (v.outer_distance > w && distance_exceeds(b, t)) {
            v.condition = Condition::BurstSingle;
            v.detail = "D > w, d > t";
        } else if (distance_exceeds(b, std::min(2 * t, n))) {
            v.condition = Condition::AllColumns;
            v.detail = "d > 2t";
        }
        cert.levels.push_back(std::move(v));
    }
    return cert;
}

} // namespace pbec
