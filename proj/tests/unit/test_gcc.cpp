#include <doctest.h>

#include <map>
#include <random>

#include "../common/random_gcc.hpp"
#include "helpers.hpp"
#include "pbec/errors.hpp"
#include "pbec/gcc.hpp"
#include "pbec/oracle.hpp"

using namespace pbec;

namespace {

GccSpec example2_spec()
{
    const Field f2 = FieldSpec::prime(2);
    const Field f4 = FieldSpec::extension(f2, 2);
    GccSpec spec;
    spec.inner = chain_make({LinearCode::from_generators(f2, 4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}}),
                             LinearCode::from_generators(f2, 4, {{1, 1, 1, 1}})});
    spec.outer = {LinearCode::from_generators(f4, 2, {{1, 1}}), LinearCode::full(f2, 2)};
    return spec;
}

// The printed 4x2 generator arrays, written as the column stack (first column, second column).
LinearCode example2_printed()
{
    return LinearCode::from_generators(FieldSpec::prime(2), 8,
                                       {{1, 1, 1, 1, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 1, 1, 1, 1},
                                        {0, 1, 0, 1, 0, 1, 0, 1},
                                        {0, 0, 1, 1, 0, 0, 1, 1}});
}

// Level coordinates of an inner codeword with respect to rows Q_1, ..., Q_{s-1}, G_s, found by search.
std::map<std::vector<Elem>, std::vector<Elem>> inner_coordinates(const GccSpec& spec)
{
    const Field& f = spec.inner.codes.front().field();
    FqMatrix basis(f, 0, spec.n());
    for (const auto& q : spec.inner.quotient_reps)
        for (std::size_t r = 0; r < q.rows(); ++r) basis.append_row(q.row(r));
    const LinearCode& last = spec.inner.codes.back();
    for (std::size_t r = 0; r < last.k(); ++r) basis.append_row(last.generator().row(r));
    std::map<std::vector<Elem>, std::vector<Elem>> out;
    for (const auto& coords : testutil::all_vectors(f->order(), basis.rows())) {
        std::vector<Elem> v(spec.n(), 0);
        vec_mat_acc(basis, coords, v);
        out[v] = coords;
    }
    return out;
}

} // namespace

TEST_SUITE("gcc_construction")
{
    TEST_CASE("Example 2: set equality with the printed generators")
    {
        const GccCode code = gcc_build(example2_spec());
        CHECK(code.dimension() == 4);
        CHECK(code.spec().expected_dimension() == 4);
        const LinearCode printed = example2_printed();
        std::size_t both = 0;
        for (const auto& c : code.code().codewords()) both += printed.contains(c);
        for (const auto& c : printed.codewords()) both += code.code().contains(c);
        CHECK(both == 32);
        CHECK(code.code() == printed);
        for (const FqMatrix& g : code.generator_arrays()) {
            CHECK(g.rows() == 4);
            CHECK(g.cols() == 2);
            CHECK(code.contains(g));
        }
    }

    TEST_CASE("Example 2: certificates")
    {
        const Field f2 = FieldSpec::prime(2);
        const GccCode code = gcc_build(example2_spec());
        const PbecCertificate p = certify_property1(code, ErrorSet::zero(f2, 4), ErrorSet::hamming_ball(f2, 4, 1), 1);
        REQUIRE(p.levels.size() == 2);
        CHECK(p.valid());
        CHECK(p.levels[0].outer_distance == 2);
        CHECK(p.levels[0].condition == Condition::BurstSingle);
        CHECK(p.levels[1].condition == Condition::AllColumns);
        CHECK_FALSE(p.report().empty());

        const PbecCertificate h = certify_hamming(code, 1, 1);
        CHECK(h.valid());
        CHECK(h.levels[0].condition == p.levels[0].condition);
        CHECK(h.levels[1].condition == p.levels[1].condition);
        CHECK(certify_hamming(code, 0, 0).valid());
        const PbecCertificate bad = certify_hamming(code, 2, 1);
        CHECK_FALSE(bad.valid());
        CHECK(bad.levels[0].condition == Condition::None);
        // the oracle agrees that (2,1) is out of reach for this code
        CHECK_FALSE(is_pbecc_linear(code.code(), PbeChannel::hamming(f2, 4, 2, 2, 1)));
        CHECK(is_pbecc_linear(code.code(), PbeChannel::hamming(f2, 4, 2, 1, 1)));

        const PbecCertificate trivial = certify_property1(code, ErrorSet::zero(f2, 4), ErrorSet::zero(f2, 4), 0);
        CHECK(trivial.valid());
    }

    TEST_CASE("single-level edge cases")
    {
        const Field f2 = FieldSpec::prime(2);
        const LinearCode b = LinearCode::from_generators(f2, 3, {{1, 1, 0}, {0, 1, 1}});
        GccSpec full;
        full.inner = chain_make({b});
        full.outer = {LinearCode::full(FieldSpec::extension(f2, 2), 3)};
        const GccCode all = gcc_build(full);
        CHECK(all.dimension() == 3 * 2);
        // exactly the arrays whose columns lie in B
        std::size_t count = 0;
        for (std::uint64_t x = 0; x < (1u << 9); ++x) {
            std::vector<Elem> v(9);
            for (std::size_t i = 0; i < 9; ++i) v[i] = (x >> i) & 1;
            const bool cols_in_b = b.contains(std::span(v).subspan(0, 3)) && b.contains(std::span(v).subspan(3, 3)) &&
                                   b.contains(std::span(v).subspan(6, 3));
            CHECK(all.code().contains(v) == cols_in_b);
            count += cols_in_b;
        }
        CHECK(count == 64);

        GccSpec rep;
        rep.inner = chain_make({LinearCode::from_generators(f2, 3, {{1, 1, 1}})});
        rep.outer = {LinearCode::from_generators(f2, 4, {{1, 1, 1, 1}})};
        const GccCode r = gcc_build(rep);
        CHECK(r.dimension() == 1);
        CHECK(r.code().contains(std::vector<Elem>(12, 1)));

        GccSpec zero = rep;
        zero.outer = {LinearCode::zero(f2, 4)};
        CHECK_THROWS_AS(gcc_build(zero), ParameterError);
        GccSpec wrong = rep;
        wrong.outer = {LinearCode::full(FieldSpec::extension(f2, 2), 4)};
        CHECK_THROWS_AS(gcc_build(wrong), ParameterError);
    }

    TEST_CASE("full inner code with small outer distance fails certification")
    {
        const Field f2 = FieldSpec::prime(2);
        GccSpec s;
        s.inner = chain_make({LinearCode::full(f2, 3)});
        s.outer = {LinearCode::from_generators(FieldSpec::extension(f2, 3), 3, {{1, 1, 0}, {0, 1, 1}})};
        const GccCode code = gcc_build(s);
        const PbecCertificate c = certify_property1(code, ErrorSet::hamming_ball(f2, 3, 1), ErrorSet::hamming_ball(f2, 3, 1), 1);
        CHECK_FALSE(c.valid());
        CHECK(c.levels[0].condition == Condition::None);
    }

    TEST_CASE("dimension formula, column membership and level projections")
    {
        std::mt19937_64 rng(21);
        for (int it = 0; it < 60; ++it) {
            const testutil::GccInstance inst = testutil::random_small_gcc(rng);
            const GccSpec& spec = inst.code.spec();
            CHECK(inst.code.dimension() == spec.expected_dimension());
            CHECK(rank(inst.code.code().generator()) == inst.code.dimension());
            const auto coords = inner_coordinates(spec);
            const Field& f2 = spec.inner.codes.front().field();
            std::mt19937_64 pick(rng());
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<Elem> msg(inst.code.dimension());
                for (auto& x : msg) x = pick() & 1;
                const auto cw = inst.code.code().encode(msg);
                const FqMatrix arr = unflatten_columns(f2, spec.n(), spec.m(), cw);
                // every column is in B_1
                for (std::size_t c = 0; c < spec.m(); ++c) REQUIRE(spec.inner.codes.front().contains(arr.column(c).entries()));
                // level symbols form codewords of the outer codes
                std::size_t offset = 0;
                for (std::size_t j = 0; j < spec.levels(); ++j) {
                    const std::size_t g = spec.inner.gap(j);
                    const Field& ext = spec.outer[j].field();
                    std::vector<Elem> symbols(spec.m());
                    for (std::size_t c = 0; c < spec.m(); ++c) {
                        const auto col = arr.column(c);
                        const auto& co = coords.at(std::vector<Elem>(col.entries().begin(), col.entries().end()));
                        symbols[c] = base_to_ext(*ext, *f2, std::span(co).subspan(offset, g));
                    }
                    CHECK(spec.outer[j].contains(symbols));
                    offset += g;
                }
            }
        }
    }

    TEST_CASE("soundness: certified codes pass the oracle")
    {
        std::mt19937_64 rng(99);
        int certified = 0, tried = 0;
        while (certified < 25 && tried < 5000) {
            ++tried;
            const testutil::GccInstance inst = testutil::random_small_gcc(rng);
            const PbecCertificate cert = certify_property1(inst.code, inst.e1, inst.e2, inst.w);
            if (!cert.valid()) continue;
            ++certified;
            const PbeChannel ch(inst.code.m(), inst.e1, inst.e2, inst.w);
            CHECK(is_pbecc_linear(inst.code.code(), ch));
        }
        CHECK(certified == 25);
    }

    TEST_CASE("distance certificate agrees with the enumerated one on Hamming channels")
    {
        std::mt19937_64 rng(7);
        int compared = 0;
        for (int it = 0; it < 400; ++it) {
            const testutil::GccInstance inst = testutil::random_small_gcc(rng);
            if (inst.e1.radius() != 0) continue;
            const std::size_t t = inst.e2.radius();
            const bool full = certify_property1(inst.code, inst.e1, inst.e2, inst.w).valid();
            CAPTURE(it);
            CHECK(certify_hamming(inst.code, t, inst.w).valid() == full);
            ++compared;
        }
        CHECK(compared > 100);
    }

    TEST_CASE("non-completeness witness: oracle passes where the certificate fails")
    {
        // one level, full inner space F_2^3, outer code <(1, beta)> over GF(8), m = 2, t = w = 1:
        // D = 2 is too small for the table, yet a good beta keeps every codeword off Delta(E)
        const Field f2 = FieldSpec::prime(2);
        const Field f8 = FieldSpec::extension(f2, 3);
        const PbeChannel ch = PbeChannel::hamming(f2, 3, 2, 1, 1);
        int witnesses = 0;
        for (Elem beta = 1; beta < 8; ++beta) {
            GccSpec s;
            s.inner = chain_make({LinearCode::full(f2, 3)});
            s.outer = {LinearCode::from_generators(f8, 2, {{1, beta}})};
            const GccCode code = gcc_build(s);
            const PbecCertificate cert = certify_property1(code, ch.e1(), ch.e2(), ch.w());
            CHECK_FALSE(cert.valid());
            if (is_pbecc_linear(code.code(), ch)) ++witnesses;
        }
        CHECK(witnesses >= 1);
    }

    TEST_CASE("construct_2level and construct_3level on n=7, m=4, t=1, w=1")
    {
        const Field f2 = FieldSpec::prime(2);
        const PbeChannel ch = PbeChannel::hamming(f2, 7, 4, 1, 1);
        const ConstructionResult two = construct_2level(ch);
        const ConstructionResult three = construct_3level(ch);
        CHECK(two.certificate.valid());
        CHECK(three.certificate.valid());
        CHECK(two.code.dimension() > 0);
        CHECK(two.code.dimension() <= three.code.dimension());
        CHECK(two.searched_dims.front() == 7);  // Delta(E1,E1) = {0}
        CHECK(min_distance(two.code.spec().inner.codes.back()) > 2);
        CHECK(is_pbecc_linear(two.code.code(), ch));
        CHECK(is_pbecc_linear(three.code.code(), ch));
        // same seed, same code
        CHECK(construct_3level(ch).code.code() == three.code.code());
    }

    TEST_CASE("construction edge cases")
    {
        const Field f2 = FieldSpec::prime(2);
        // w = 0: every column only needs to lie in B_1 = F_2^n
        const PbeChannel clean = PbeChannel::hamming(f2, 5, 3, 2, 0);
        CHECK(construct_3level(clean).code.dimension() == 15);
        CHECK(construct_2level(clean).code.dimension() == 15);

        // w >= m/2: level 1 contributes nothing, rate k_2 / n
        const PbeChannel wide = PbeChannel::hamming(f2, 7, 4, 1, 2);
        const ConstructionResult r = construct_2level(wide);
        CHECK(r.certificate.valid());
        CHECK(r.code.dimension() == 4 * r.chosen_dims.back());
        CHECK(is_pbecc_linear(r.code.code(), wide));

        // E1 = E2: the middle level collapses
        const PbeChannel same(4, ErrorSet::hamming_ball(f2, 6, 1), ErrorSet::hamming_ball(f2, 6, 1), 1);
        const ConstructionResult a = construct_2level(same), b = construct_3level(same);
        CHECK(a.code.dimension() == b.code.dimension());
        CHECK(a.certificate.valid());
        CHECK(b.certificate.valid());
    }

    TEST_CASE("constructions on random small channels are certified and sound")
    {
        std::mt19937_64 rng(5);
        const Field f2 = FieldSpec::prime(2);
        for (int it = 0; it < 12; ++it) {
            const std::size_t n = 3 + rng() % 4, m = 1 + rng() % 3, t = rng() % 3, w = rng() % (m + 1);
            const PbeChannel ch = PbeChannel::hamming(f2, n, m, t, w);
            CAPTURE(n);
            CAPTURE(m);
            CAPTURE(t);
            CAPTURE(w);
            for (int levels : {2, 3}) {
                try {
                    const ConstructionResult r = levels == 2 ? construct_2level(ch, {std::uint64_t(it) + 1}) : construct_3level(ch, {std::uint64_t(it) + 1});
                    CHECK(r.certificate.valid());
                    CHECK(is_pbecc_linear(r.code.code(), ch));
                } catch (const ParameterError&) {
                    // nothing certifiable at this size
                }
            }
        }
    }

    TEST_CASE("2-level rate approaches the asymptotic value")
    {
        // T = 0.1, W = 0.2; the formula gives 0.71 in the limit
        const Field f2 = FieldSpec::prime(2);
        double last = 0;
        for (std::size_t n : {15u, 31u, 63u}) {
            const PbeChannel ch = PbeChannel::hamming(f2, n, 5, n / 10, 1);
            const ConstructionResult r = construct_2level(ch);
            CHECK(r.certificate.valid());
            last = r.code.rate();
            MESSAGE("n=" << n << " rate=" << last);
        }
        CHECK(std::abs(last - 0.71) < 0.05);
    }

    TEST_CASE("helpers")
    {
        CHECK(min_rs_degree(2, 4) == 2);
        CHECK(min_rs_degree(2, 5) == 3);
        CHECK(min_rs_degree(3, 3) == 1);
        CHECK(max_extension_degree(2) == 16);
        CHECK(max_extension_degree(3) == 10);
    }
}
