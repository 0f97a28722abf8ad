#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flatmod/series.hpp"

namespace flatmod {

/// Instance-level parameters: coefficient field F, residue degree n (q = p^n),
/// absolute ramification index e.
struct InstanceParams {
    const FieldCtx* field = nullptr;
    uint32_t n = 1;
    int64_t e = 1;

    int64_t q() const {
        int64_t v = 1;
        for (uint32_t i = 0; i < n; ++i) {
            v *= field->p();
            if (v > (int64_t(1) << 40)) throw InvalidInstance("q = p^n too large");
        }
        return v;
    }

    bool operator==(const InstanceParams& o) const {
        return field == o.field && n == o.n && e == o.e;
    }
};

/// 2x2 matrix of truncated Laurent series. Row-major: (a b; c d).
struct Mat2 {
    Series a, b, c, d;

    static Mat2 identity(const FieldCtx* ctx, int64_t prec) {
        return {Series::one(ctx, prec), Series::zero(ctx, prec), Series::zero(ctx, prec),
                Series::one(ctx, prec)};
    }

    static Mat2 zero(const FieldCtx* ctx, int64_t prec) {
        auto z = Series::zero(ctx, prec);
        return {z, z, z, z};
    }

    /// diag(u^{x} * s1, u^{y} * s2) with unit field coefficients.
    static Mat2 monomial_diag(const FieldCtx* ctx, const FieldElem& c1, int64_t x,
                              const FieldElem& c2, int64_t y, int64_t prec) {
        return {Series::monomial(ctx, c1, x, prec), Series::zero(ctx, prec),
                Series::zero(ctx, prec), Series::monomial(ctx, c2, y, prec)};
    }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

    Mat2 scaled(const FieldElem& s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 scaled(const Series& s) const { return {a * s, b * s, c * s, d * s}; }

    Series det() const { return a * d - b * c; }

    Mat2 adj() const { return {d, -b, -c, a}; }

    Mat2 inverse() const {
        Series dinv = det().inv();  // PrecisionExhausted when det valuation unconfirmed
        return adj().scaled(dinv);
    }

    /// Entrywise f(u) -> f(u^p).
    Mat2 frobsub() const { return {a.frobsub(), b.frobsub(), c.frobsub(), d.frobsub()}; }

    bool is_integral() const {
        return a.is_integral() && b.is_integral() && c.is_integral() && d.is_integral();
    }

    bool is_zero_to_prec() const {
        return a.is_zero_to_prec() && b.is_zero_to_prec() && c.is_zero_to_prec() &&
               d.is_zero_to_prec();
    }

    Series& at(int r, int col) {
        return r == 0 ? (col == 0 ? a : b) : (col == 0 ? c : d);
    }
    const Series& at(int r, int col) const {
        return r == 0 ? (col == 0 ? a : b) : (col == 0 ? c : d);
    }

    friend bool eq_to_prec(const Mat2& x, const Mat2& y) {
        return eq_to_prec(x.a, y.a) && eq_to_prec(x.b, y.b) && eq_to_prec(x.c, y.c) &&
               eq_to_prec(x.d, y.d);
    }

    friend bool poly_equal(const Mat2& x, const Mat2& y) {
        return poly_equal(x.a, y.a) && poly_equal(x.b, y.b) && poly_equal(x.c, y.c) &&
               poly_equal(x.d, y.d);
    }

    std::string str() const {
        return "(" + a.str() + ", " + b.str() + "; " + c.str() + ", " + d.str() + ")";
    }
};

/// n-tuple presentation of a rank-2 phi-module: block i maps component i to
/// component i+1 (cyclically), phi(e^i) = A_i e^{i+1}. Blocks are stored
/// 0-based; the paper's 1-based cyclic indexing is used in messages.
struct MatrixTuple {
    InstanceParams params;
    std::vector<Mat2> blocks;

    uint32_t n() const { return params.n; }
    const Mat2& block(size_t i) const { return blocks[i % blocks.size()]; }
    Mat2& block(size_t i) { return blocks[i % blocks.size()]; }

    friend bool eq_to_prec(const MatrixTuple& x, const MatrixTuple& y) {
        if (x.blocks.size() != y.blocks.size()) return false;
        for (size_t i = 0; i < x.blocks.size(); ++i)
            if (!eq_to_prec(x.blocks[i], y.blocks[i])) return false;
        return true;
    }

    friend bool poly_equal(const MatrixTuple& x, const MatrixTuple& y) {
        if (x.blocks.size() != y.blocks.size()) return false;
        for (size_t i = 0; i < x.blocks.size(); ++i)
            if (!poly_equal(x.blocks[i], y.blocks[i])) return false;
        return true;
    }
};

inline MatrixTuple pm_identity(const InstanceParams& params, int64_t prec) {
    MatrixTuple t{params, {}};
    for (uint32_t i = 0; i < params.n; ++i) t.blocks.push_back(Mat2::identity(params.field, prec));
    return t;
}

/// Presentation of the same module in the basis B * (old basis):
/// (phi(B_i) A_i B_{i+1}^{-1})_i. This formula is the single source of truth
/// for the left action; everything else is derived from it.
inline MatrixTuple pm_base_change(const MatrixTuple& A, const MatrixTuple& B) {
    if (!(A.params == B.params)) throw CtxMismatch("base change across instances");
    MatrixTuple out{A.params, {}};
    const size_t n = A.blocks.size();
    for (size_t i = 0; i < n; ++i)
        out.blocks.push_back(B.blocks[i].frobsub() * A.blocks[i] * B.blocks[(i + 1) % n].inverse());
    return out;
}

/// Componentwise product (B_i C_i)_i, the tuple group law:
/// pm_base_change(A, compose(B, C)) = pm_base_change(pm_base_change(A, C), B).
inline MatrixTuple pm_compose_action(const MatrixTuple& B, const MatrixTuple& C) {
    if (!(B.params == C.params)) throw CtxMismatch("composition across instances");
    MatrixTuple out{B.params, {}};
    for (size_t i = 0; i < B.blocks.size(); ++i) out.blocks.push_back(B.blocks[i] * C.blocks[i]);
    return out;
}

/// Valuations of the block determinants; throws when some determinant has no
/// confirmed leading term.
inline std::vector<int64_t> pm_det_valuations(const MatrixTuple& A) {
    std::vector<int64_t> v;
    for (const auto& blk : A.blocks) v.push_back(blk.det().valuation_or_throw());
    return v;
}

/// The normal form of an absolutely irreducible ambient:
/// (alpha_1 (0 1; u^s 0), alpha_2 I, ..., alpha_n I).
/// Requires (q+1) does not divide s, and F_{q^2} inside F (2n | m).
inline MatrixTuple pm_ambient_irreducible(const InstanceParams& params, int64_t s,
                                          const std::vector<FieldElem>& alphas, int64_t prec) {
    if (s <= 0) throw InvalidInstance("irreducible ambient needs a positive twist exponent");
    if (params.field->m() % (2 * params.n) != 0)
        throw FieldTooSmall("coefficient field must contain F_{q^2} (2n | m)");
    if (s % (params.q() + 1) == 0)
        throw ReducibleParameters("(q+1) | s gives a reducible representation");
    if (alphas.size() != params.n) throw InvalidInstance("need n unit scalars");
    for (const auto& a : alphas)
        if (a.is_zero()) throw InvalidInstance("ambient scalars must be nonzero");
    const FieldCtx* F = params.field;
    MatrixTuple t{params, {}};
    Mat2 head{Series::zero(F, prec), Series::monomial(F, alphas[0], 0, prec),
              Series::monomial(F, alphas[0], s, prec), Series::zero(F, prec)};
    t.blocks.push_back(head);
    for (uint32_t j = 1; j < params.n; ++j)
        t.blocks.push_back(Mat2::identity(F, prec).scaled(alphas[j]));
    return t;
}

/// Upper-triangular ambient (a_i b_i; 0 c_i) for a reducible module; the
/// second basis vector spans the distinguished phi-stable line.
inline MatrixTuple pm_ambient_reducible(const InstanceParams& params, const std::vector<Series>& a,
                                        const std::vector<Series>& b, const std::vector<Series>& c) {
    if (a.size() != params.n || b.size() != params.n || c.size() != params.n)
        throw InvalidInstance("triangular data must have n blocks");
    MatrixTuple t{params, {}};
    for (uint32_t i = 0; i < params.n; ++i) {
        if (!a[i].valuation() || !c[i].valuation())
            throw SingularBlock("diagonal entry is zero to precision");
        t.blocks.push_back({a[i], b[i], Series::zero(params.field, a[i].prec()), c[i]});
    }
    return t;
}

inline bool pm_is_upper_triangular(const MatrixTuple& A) {
    for (const auto& blk : A.blocks)
        if (!blk.c.is_zero_to_prec()) return false;
    return true;
}

}  // namespace flatmod
