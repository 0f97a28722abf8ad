#pragma once

#include <random>
#include <vector>

#include "flatmod/matrix.hpp"

namespace testutil {

using namespace flatmod;

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(0x5eed5eed1234ULL);
    return r;
}

inline uint64_t pick(uint64_t n) {  // uniform in [0, n)
    return std::uniform_int_distribution<uint64_t>(0, n - 1)(rng());
}

inline FieldElem random_elem(const FieldCtx* F) {
    std::vector<uint32_t> c(F->m());
    for (auto& x : c) x = static_cast<uint32_t>(pick(F->p()));
    return FieldElem(F, std::move(c));
}

inline FieldElem random_nonzero(const FieldCtx* F) {
    for (;;) {
        auto e = random_elem(F);
        if (!e.is_zero()) return e;
    }
}

/// Random series supported on [lo, hi] with ~density nonzero coefficients.
inline Series random_series(const FieldCtx* F, int64_t lo, int64_t hi, int64_t prec,
                            double density = 0.7) {
    std::vector<FieldElem> c;
    for (int64_t e = lo; e <= hi; ++e) {
        bool on = std::uniform_real_distribution<double>(0, 1)(rng()) < density;
        c.push_back(on ? random_elem(F) : FieldElem::zero(F));
    }
    return Series::from_coeffs(F, lo, std::move(c), prec);
}

inline Series random_poly(const FieldCtx* F, int64_t deg, int64_t prec) {
    return random_series(F, 0, deg, prec);
}

inline Series random_unit(const FieldCtx* F, int64_t deg, int64_t prec) {
    auto s = random_poly(F, deg, prec);
    return s + Series::monomial(F, random_nonzero(F), 0, prec) -
           Series::monomial(F, s.coeff_at(0), 0, prec);
}

/// Random element of GL_2(F[[u]]): product of elementary integral matrices.
inline Mat2 random_unimodular(const FieldCtx* F, int64_t prec, int64_t deg = 3, int factors = 4) {
    Mat2 M = Mat2::identity(F, prec);
    for (int k = 0; k < factors; ++k) {
        Mat2 E = Mat2::identity(F, prec);
        switch (pick(4)) {
            case 0: E.b = random_poly(F, deg, prec); break;
            case 1: E.c = random_poly(F, deg, prec); break;
            case 2:
                E.a = random_unit(F, deg, prec);
                E.d = random_unit(F, deg, prec);
                break;
            default:  // swap
                E = {Series::zero(F, prec), Series::one(F, prec), Series::one(F, prec),
                     Series::zero(F, prec)};
        }
        M = M * E;
    }
    return M;
}

inline MatrixTuple random_unimodular_tuple(const InstanceParams& params, int64_t prec,
                                           int64_t deg = 3) {
    MatrixTuple t{params, {}};
    for (uint32_t i = 0; i < params.n; ++i) t.blocks.push_back(random_unimodular(params.field, prec, deg));
    return t;
}

/// Random invertible tuple with monomial-diagonal skeleton times unimodular.
inline MatrixTuple random_invertible_tuple(const InstanceParams& params, int64_t prec,
                                           int64_t exp_range = 3, int64_t deg = 3) {
    MatrixTuple t{params, {}};
    for (uint32_t i = 0; i < params.n; ++i) {
        int64_t x = static_cast<int64_t>(pick(2 * exp_range + 1)) - exp_range;
        int64_t y = static_cast<int64_t>(pick(2 * exp_range + 1)) - exp_range;
        Mat2 D = Mat2::monomial_diag(params.field, FieldElem::one(params.field), x,
                                     FieldElem::one(params.field), y, prec);
        t.blocks.push_back(random_unimodular(params.field, prec, deg) * D);
    }
    return t;
}

}  // namespace testutil
