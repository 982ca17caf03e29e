#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pbec/errors.hpp"
#include "pbec/finite_field.hpp"
#include "pbec/fq_matrix.hpp"
#include "pbec/linear_code.hpp"

using namespace pbec;

namespace {

// schoolbook product of base-p digit strings reduced by the modulus
Elem naive_mul(const FieldSpec& f, Elem a, Elem b)
{
    const std::uint32_t p = f.characteristic(), e = f.degree();
    std::vector<std::int64_t> da(e), db(e), prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i, a /= p, b /= p) {
        da[i] = a % p;
        db[i] = b % p;
    }
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto mod = f.modulus();
    for (std::size_t d = 2 * e - 1; d >= e; --d) {
        const std::int64_t c = prod[d];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= e; ++i) {
            prod[d - e + i] = ((prod[d - e + i] - c * std::int64_t(mod[i])) % p + p) % p;
        }
    }
    Elem out = 0;
    for (std::uint32_t i = e; i-- > 0;) out = out * p + static_cast<Elem>(prod[i]);
    return out;
}

} // namespace

TEST_SUITE("finite_field")
{
    TEST_CASE("field_make defaults and errors")
    {
        const Field f2 = FieldSpec::prime(2);
        CHECK(f2->order() == 2);
        const Field f4 = FieldSpec::make(2, 2);
        CHECK(f4->order() == 4);
        const std::vector<Elem> want{1, 1, 1};
        CHECK(std::vector<Elem>(f4->modulus().begin(), f4->modulus().end()) == want);
        CHECK(FieldSpec::make(2, 2) == f4);
        CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<Elem>{1, 0, 1}), ParameterError);
        CHECK_THROWS_AS(FieldSpec::prime(6), ParameterError);
        CHECK_THROWS_AS(FieldSpec::make(2, 17), ParameterError);
        CHECK_THROWS_AS(FieldSpec::make(3, 11), ParameterError);
    }

    TEST_CASE("irreducibility against exhaustive factor search")
    {
        const Field f2 = FieldSpec::prime(2);
        // x^2+1 = (x+1)^2, x^3+x+1 irreducible, x^4+x^2+1 = (x^2+x+1)^2
        CHECK_FALSE(is_irreducible(*f2, std::vector<Elem>{1, 0, 1}));
        CHECK(is_irreducible(*f2, std::vector<Elem>{1, 1, 0, 1}));
        CHECK_FALSE(is_irreducible(*f2, std::vector<Elem>{1, 0, 1, 0, 1}));
        const Field f3 = FieldSpec::prime(3);
        CHECK(is_irreducible(*f3, std::vector<Elem>{1, 0, 1}));   // x^2+1 has no root mod 3
        CHECK_FALSE(is_irreducible(*f3, std::vector<Elem>{2, 0, 1}));  // x^2-1
    }

    TEST_CASE("spec arithmetic examples")
    {
        const Field f4 = FieldSpec::make(2, 2);
        CHECK(f4->mul(2, 2) == 3);
        const Field f5 = FieldSpec::prime(5);
        CHECK(f5->inv(3) == 2);
        CHECK(f5->mul(3, f5->inv(3)) == 1);
        for (Elem a = 0; a < 4; ++a) CHECK(f4->mul(a, 1) == a);
        CHECK_THROWS(f5->inv(0));
        const FieldElement x(f4, 2);
        CHECK((x * x).repr() == 3);
        CHECK((x * x.inv()).repr() == 1);
        CHECK_THROWS((x + FieldElement(f5, 1)));
    }

    TEST_CASE("field axioms exhaustively for q <= 16")
    {
        for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                 {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
            const Field f = FieldSpec::make(p, e);
            const Elem q = f->order();
            CAPTURE(q);
            for (Elem a = 0; a < q; ++a) {
                CHECK(f->add(a, 0) == a);
                CHECK(f->add(a, f->neg(a)) == 0);
                if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
                for (Elem b = 0; b < q; ++b) {
                    CHECK(f->add(a, b) == f->add(b, a));
                    CHECK(f->mul(a, b) == f->mul(b, a));
                    CHECK(f->mul(a, b) == naive_mul(*f, a, b));
                    for (Elem c = 0; c < q; ++c) {
                        CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
                        CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
                        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    }
                }
            }
        }
    }

    TEST_CASE("ext_to_base examples and linearity")
    {
        const Field f2 = FieldSpec::prime(2);
        const Field f4 = FieldSpec::extension(f2, 2);
        std::vector<Elem> c(2);
        ext_to_base(*f4, *f2, 0, c);
        CHECK(c == std::vector<Elem>{0, 0});
        ext_to_base(*f4, *f2, 2, c);
        CHECK(c == std::vector<Elem>{0, 1});
        ext_to_base(*f4, *f2, 3, c);
        CHECK(c == std::vector<Elem>{1, 1});

        // base_to_ext(u+v) = base_to_ext(u) + base_to_ext(v) for every q^r <= 64
        for (auto [base, r] : std::vector<std::pair<Field, std::uint32_t>>{
                 {f2, 2}, {f2, 3}, {f2, 6}, {FieldSpec::prime(3), 3}, {f4, 3}, {FieldSpec::prime(7), 2}}) {
            const Field ext = FieldSpec::extension(base, r);
            const std::uint32_t b = base->order();
            CAPTURE(ext->order());
            const auto vecs = testutil::all_vectors(b, r);
            for (const auto& u : vecs) {
                const Elem eu = base_to_ext(*ext, *base, u);
                std::vector<Elem> back(r);
                ext_to_base(*ext, *base, eu, back);
                CHECK(back == u);
                for (const auto& v : vecs) {
                    std::vector<Elem> s(r);
                    for (std::uint32_t i = 0; i < r; ++i) s[i] = base->add(u[i], v[i]);
                    CHECK(base_to_ext(*ext, *base, s) == ext->add(eu, base_to_ext(*ext, *base, v)));
                }
            }
        }
        CHECK_THROWS(extension_degree(FieldSpec::prime(3), f2));
    }

    TEST_CASE("hamming weight")
    {
        CHECK(FqVector(FieldSpec::prime(3), {0, 1, 2, 0}).hamming_weight() == 2);
    }

    TEST_CASE("rref, rank and kernel")
    {
        const Field f2 = FieldSpec::prime(2);
        const FqMatrix id = FqMatrix::identity(f2, 3);
        const RowEchelon r = rref(id);
        CHECK(r.reduced == id);
        CHECK(r.rank == 3);
        CHECK(kernel(id).rows() == 0);

        const FqMatrix m = FqMatrix::from_rows(f2, 4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}});
        CHECK(rank(m) == 3);
        CHECK(rank(FqMatrix(f2, 2, 3)) == 0);

        const FqMatrix ones = FqMatrix::from_rows(f2, 4, {{1, 1, 1, 1}});
        const FqMatrix k = kernel(ones);
        CHECK(k.rows() == 3);
        // the kernel spans exactly the 8 even-weight vectors
        std::size_t even = 0;
        for (const auto& v : testutil::all_vectors(2, 4)) {
            FqMatrix ext = k;
            ext.append_row(v);
            const bool in_span = rank(ext) == 3;
            CHECK(in_span == (testutil::weight(v) % 2 == 0));
            even += in_span;
        }
        CHECK(even == 8);
        CHECK(kernel(FqMatrix(f2, 1, 2)).rows() == 2);
    }

    TEST_CASE("random matrices: idempotent rref, rank-nullity")
    {
        std::mt19937_64 rng(7);
        for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u}) {
            const Field f = field_of_order(q);
            for (int it = 0; it < 40; ++it) {
                const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
                const FqMatrix m = testutil::random_matrix(rng, f, r, c);
                const RowEchelon e = rref(m);
                CHECK(rref(e.reduced).reduced == e.reduced);
                CHECK(e.rank == e.pivots.size());
                const FqMatrix k = kernel(m);
                CHECK(e.rank + k.rows() == c);
                CHECK(multiply(m, k.transpose()).is_zero());
                // row space preserved
                FqMatrix both = m;
                for (std::size_t i = 0; i < e.rank; ++i) both.append_row(e.reduced.row(i));
                CHECK(rank(both) == e.rank);
            }
        }
    }
}
