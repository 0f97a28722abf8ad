#include <catch2/catch_amalgamated.hpp>

#include "flatmod/series.hpp"
#include "testutil.hpp"

using namespace flatmod;
using testutil::random_series;

namespace {

FieldCtx F3() { return FieldCtx(3, {0, 1}); }

Series mono(const FieldCtx* F, int64_t c, int64_t e, int64_t prec) {
    return Series::monomial(F, FieldElem::from_int(F, c), e, prec);
}

// Schoolbook convolution oracle on explicit coefficient windows.
Series conv_oracle(const Series& f, const Series& g, int64_t lo_f, int64_t hi_f, int64_t lo_g,
                   int64_t hi_g, int64_t prec) {
    const FieldCtx* F = f.ctx();
    Series acc = Series::zero(F, prec);
    for (int64_t i = lo_f; i <= hi_f; ++i)
        for (int64_t j = lo_g; j <= hi_g; ++j)
            acc = acc + Series::monomial(F, f.coeff_at(i) * g.coeff_at(j), i + j, prec);
    return acc;
}

}  // namespace

TEST_CASE("identities") {
    FieldCtx F = F3();
    auto u = mono(&F, 1, 1, 12);
    auto uinv = mono(&F, 1, -1, 12);
    CHECK(eq_to_prec(u * uinv, Series::one(&F, 12)));

    // inv(1-u) = 1 + u + u^2 + u^3 + O(u^4)
    auto f = Series::one(&F, 4) - mono(&F, 1, 1, 4);
    auto g = f.inv();
    CHECK(g.prec() == 4);
    for (int64_t e = 0; e < 4; ++e) CHECK(g.coeff_at(e) == FieldElem::one(&F));
    CHECK(eq_to_prec(f * g, Series::one(&F, 4)));
}

TEST_CASE("schoolbook product over F_3") {
    FieldCtx F = F3();
    // (1+2u)(1+u) = 1 + 3u + 2u^2 = 1 + 2u^2
    auto a = Series::one(&F, 10) + mono(&F, 2, 1, 10);
    auto b = Series::one(&F, 10) + mono(&F, 1, 1, 10);
    auto prod = a * b;
    CHECK(prod.coeff_at(0) == FieldElem::one(&F));
    CHECK(prod.coeff_at(1).is_zero());
    CHECK(prod.coeff_at(2) == FieldElem::from_int(&F, 2));
    CHECK(eq_to_prec(prod, conv_oracle(a, b, 0, 1, 0, 1, 10)));
}

TEST_CASE("random products agree with convolution oracle") {
    FieldCtx F9(3, {1, 0, 1});
    for (int it = 0; it < 60; ++it) {
        auto f = random_series(&F9, -3, 4, 9);
        auto g = random_series(&F9, -2, 5, 10);
        auto direct = f * g;
        auto oracle = conv_oracle(f, g, -3, 4, -2, 5, direct.prec());
        CHECK(eq_to_prec(direct, oracle));
    }
}

TEST_CASE("valuation") {
    FieldCtx F = F3();
    auto f = mono(&F, 1, 2, 10) + mono(&F, 1, 3, 10);
    REQUIRE(f.valuation().has_value());
    CHECK(*f.valuation() == 2);

    auto z = Series::zero(&F, 10);
    CHECK(!z.valuation().has_value());
    CHECK(z.prec() == 10);

    auto g = mono(&F, 1, -1, 10) + mono(&F, 2, 1, 10);
    CHECK(*g.valuation() == -1);
}

TEST_CASE("frobsub") {
    FieldCtx F = F3();
    auto f = mono(&F, 1, -1, 10) + mono(&F, 2, 1, 10);
    auto ff = f.frobsub();
    CHECK(*ff.valuation() == -3);
    CHECK(ff.coeff_at(-3) == FieldElem::one(&F));
    CHECK(ff.coeff_at(3) == FieldElem::from_int(&F, 2));
    CHECK(ff.prec() == 30);

    CHECK(eq_to_prec(Series::one(&F, 10).frobsub(), Series::one(&F, 30)));

    // v = u^2 + u^4, u^{-6} phi(v) = 1 + u^6; oracle: direct expansion
    auto v = mono(&F, 1, 2, 12) + mono(&F, 1, 4, 12);
    auto got = v.frobsub().shifted(-6);
    auto expect = Series::one(&F, 30) + mono(&F, 1, 6, 30);
    CHECK(eq_to_prec(got, expect));
}

TEST_CASE("frobsub is a ring homomorphism to propagated precision") {
    FieldCtx F9(3, {1, 0, 1});
    for (int it = 0; it < 60; ++it) {
        auto f = random_series(&F9, -2, 4, 8);
        auto g = random_series(&F9, -1, 3, 8);
        CHECK(eq_to_prec((f * g).frobsub(), f.frobsub() * g.frobsub()));
        CHECK(eq_to_prec((f + g).frobsub(), f.frobsub() + g.frobsub()));
    }
}

TEST_CASE("valuation is additive on confirmed products") {
    FieldCtx F9(3, {1, 0, 1});
    for (int it = 0; it < 100; ++it) {
        auto f = random_series(&F9, -3, 3, 8);
        auto g = random_series(&F9, -3, 3, 8);
        auto vf = f.valuation(), vg = g.valuation();
        if (!vf || !vg) continue;
        auto vfg = (f * g).valuation();
        REQUIRE(vfg.has_value());
        CHECK(*vfg == *vf + *vg);
    }
}

TEST_CASE("inverse against multiplication") {
    FieldCtx F9(3, {1, 0, 1});
    for (int it = 0; it < 60; ++it) {
        auto f = random_series(&F9, -2, 3, 9);
        if (!f.valuation()) continue;
        auto g = f.inv();
        auto prod = f * g;
        CHECK(eq_to_prec(prod, Series::one(&F9, prod.prec())));
    }
    CHECK_THROWS_AS(Series::zero(&F9, 5).inv(), PrecisionExhausted);
}

TEST_CASE("precision soundness under input truncation") {
    FieldCtx F9(3, {1, 0, 1});
    for (int it = 0; it < 60; ++it) {
        auto f = random_series(&F9, -2, 5, 10);
        auto g = random_series(&F9, -1, 4, 10);
        for (int64_t cut : {3L, 6L}) {
            auto full = f * g;
            auto part = f.truncated(cut) * g.truncated(cut);
            CHECK(eq_to_prec(full, part));  // agreement on the common window
            CHECK(eq_to_prec(f + g, f.truncated(cut) + g.truncated(cut)));
        }
    }
}

TEST_CASE("integrality decisions") {
    FieldCtx F = F3();
    CHECK(mono(&F, 1, 0, 5).is_integral());
    CHECK(!mono(&F, 1, -1, 5).is_integral());
    CHECK(Series::zero(&F, 5).is_integral());          // all negative exponents known zero
    CHECK_THROWS_AS(Series::zero(&F, -2).is_integral(), PrecisionExhausted);
}
