#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flatmod/error.hpp"

namespace flatmod {

namespace detail {

/// Dense polynomials over F_p, coefficients ascending, reduced mod p.
using Poly = std::vector<uint32_t>;

inline Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b, uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s % p;
    }
    return poly_trim(std::move(r));
}

inline Poly poly_scale(const Poly& a, uint32_t c, uint32_t p) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint32_t>((uint64_t(a[i]) * c) % p);
    return poly_trim(std::move(r));
}

inline Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    return poly_trim(std::move(r));
}

inline uint32_t inv_mod_p(uint32_t a, uint32_t p) {
    // extended Euclid on integers
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw DivisionByZero("inverse of zero residue");
    return static_cast<uint32_t>(t < 0 ? t + p : t);
}

/// f mod g, g nonzero with invertible leading coefficient.
inline Poly poly_mod(Poly f, const Poly& g, uint32_t p) {
    f = poly_trim(std::move(f));
    const int dg = poly_deg(g);
    const uint32_t lg_inv = inv_mod_p(g.back(), p);
    while (poly_deg(f) >= dg) {
        const uint32_t c = static_cast<uint32_t>((uint64_t(f.back()) * lg_inv) % p);
        const int shift = poly_deg(f) - dg;
        for (int i = 0; i <= dg; ++i) {
            uint64_t sub = (uint64_t(c) * g[i]) % p;
            uint32_t& slot = f[i + shift];
            slot = static_cast<uint32_t>((slot + p - sub) % p);
        }
        f = poly_trim(std::move(f));
    }
    return f;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, uint32_t p) {
    return poly_mod(poly_mul(a, b, p), g, p);
}

inline Poly poly_powmod(Poly base, uint64_t e, const Poly& g, uint32_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), g, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, g, p);
        base = poly_mulmod(base, base, g, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

/// The coefficient field F = F_{p^m} presented as F_p[x]/(modulus).
///
/// The modulus is supplied by the instance (ascending coefficients, monic of
/// degree m) and checked for irreducibility at construction: x^{p^m} = x mod f
/// and gcd(x^{p^{m/l}} - x, f) = 1 for every prime l dividing m.
class FieldCtx {
public:
    FieldCtx(uint32_t p, detail::Poly modulus) : p_(p), mod_(std::move(modulus)) {
        if (!detail::is_prime_u32(p_) || p_ <= 2)
            throw InvalidInstance("characteristic must be a prime > 2");
        mod_ = detail::poly_trim(std::move(mod_));
        if (mod_.size() < 2) throw InvalidInstance("modulus must have degree >= 1");
        for (auto& c : mod_) c %= p_;
        if (mod_.back() != 1) throw InvalidInstance("modulus must be monic");
        m_ = static_cast<uint32_t>(mod_.size() - 1);
        check_irreducible();
    }

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    const detail::Poly& modulus() const { return mod_; }

    /// p^m as uint64 (instances are desk scale; overflow rejected).
    uint64_t card() const {
        uint64_t c = 1;
        for (uint32_t i = 0; i < m_; ++i) c *= p_;
        return c;
    }

    bool operator==(const FieldCtx& o) const {
        return p_ == o.p_ && mod_ == o.mod_;
    }

private:
    void check_irreducible() const {
        using namespace detail;
        uint64_t card = 1;
        for (uint32_t i = 0; i < m_; ++i) {
            card *= p_;
            if (card > (uint64_t(1) << 62)) throw InvalidInstance("field too large");
        }
        const Poly x{0, 1};
        // x^{p^m} == x mod f
        Poly xq = poly_powmod(x, card, mod_, p_);
        if (poly_trim(poly_add(xq, poly_scale(x, p_ - 1, p_), p_)) != Poly{})
            throw InvalidInstance("modulus is reducible over F_p");
        for (uint32_t l = 2; l <= m_; ++l) {
            if (m_ % l != 0 || !is_prime_u32(l)) continue;
            uint64_t sub = 1;
            for (uint32_t i = 0; i < m_ / l; ++i) sub *= p_;
            Poly xs = poly_powmod(x, sub, mod_, p_);
            Poly diff = poly_add(xs, poly_scale(x, p_ - 1, p_), p_);
            Poly g = poly_gcd(mod_, diff, p_);
            if (poly_deg(g) > 0) throw InvalidInstance("modulus is reducible over F_p");
        }
    }

    uint32_t p_;
    uint32_t m_ = 0;
    detail::Poly mod_;
};

/// Element of F_{p^m}: m residues mod p, ascending degree.
class FieldElem {
public:
    FieldElem() = default;

    FieldElem(const FieldCtx* ctx, std::vector<uint32_t> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
        c_.resize(ctx_->m(), 0);
        for (auto& x : c_) x %= ctx_->p();
    }

    static FieldElem zero(const FieldCtx* ctx) { return FieldElem(ctx, {}); }
    static FieldElem one(const FieldCtx* ctx) { return FieldElem(ctx, {1}); }
    static FieldElem from_int(const FieldCtx* ctx, int64_t v) {
        int64_t r = v % ctx->p();
        if (r < 0) r += ctx->p();
        return FieldElem(ctx, {static_cast<uint32_t>(r)});
    }
    /// The residue class of x (a generator when the modulus is primitive).
    static FieldElem gen(const FieldCtx* ctx) {
        if (ctx->m() == 1) throw InvalidInstance("prime field has no polynomial generator");
        return FieldElem(ctx, {0, 1});
    }

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto x : c_)
            if (x) return false;
        return true;
    }

    bool operator==(const FieldElem& o) const {
        require_same(o);
        return c_ == o.c_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator+(const FieldElem& o) const {
        require_same(o);
        FieldElem r(*this);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + o.c_[i]) % p();
        return r;
    }
    FieldElem operator-(const FieldElem& o) const {
        require_same(o);
        FieldElem r(*this);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + p() - o.c_[i]) % p();
        return r;
    }
    FieldElem operator-() const {
        FieldElem r(*this);
        for (auto& x : r.c_) x = (p() - x) % p();
        return r;
    }
    FieldElem operator*(const FieldElem& o) const {
        require_same(o);
        auto prod = detail::poly_mod(detail::poly_mul(detail::poly_trim(c_), detail::poly_trim(o.c_), p()),
                                     ctx_->modulus(), p());
        return FieldElem(ctx_, std::move(prod));
    }

    FieldElem inv() const {
        if (is_zero()) throw DivisionByZero("inv(0) in F_{p^m}");
        // extended Euclid in F_p[x] against the modulus
        using namespace detail;
        Poly r0 = ctx_->modulus(), r1 = poly_trim(c_);
        Poly t0{}, t1{1};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            Poly q{};
            Poly rem = r0;
            const uint32_t lead_inv = inv_mod_p(r1.back(), p());
            while (poly_deg(rem) >= poly_deg(r1)) {
                int shift = poly_deg(rem) - poly_deg(r1);
                uint32_t cq = static_cast<uint32_t>((uint64_t(rem.back()) * lead_inv) % p());
                if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
                q[shift] = (q[shift] + cq) % p();
                Poly sub(shift, 0);
                sub.insert(sub.end(), r1.begin(), r1.end());
                rem = poly_add(rem, poly_scale(sub, p() - cq, p()), p());
            }
            Poly t2 = poly_add(t0, poly_scale(poly_mul(q, t1, p()), p() - 1, p()), p());
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd, a unit scalar since the modulus is irreducible
        if (poly_deg(r0) != 0) throw InternalInvariantViolation("gcd with irreducible modulus not scalar");
        return FieldElem(ctx_, poly_scale(t0, inv_mod_p(r0[0], p()), p()));
    }

    FieldElem pow(uint64_t e) const {
        FieldElem r = one(ctx_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// a^{p^r}; frobenius(m) is the identity.
    FieldElem frobenius(uint32_t r) const {
        FieldElem a = *this;
        r %= ctx_->m();
        for (uint32_t i = 0; i < r; ++i) a = a.pow(p());
        return a;
    }

private:
    uint32_t p() const { return ctx_->p(); }
    void require_same(const FieldElem& o) const {
        if (ctx_ == nullptr || o.ctx_ == nullptr || !(*ctx_ == *o.ctx_))
            throw CtxMismatch("field elements from different contexts");
    }

    const FieldCtx* ctx_ = nullptr;
    std::vector<uint32_t> c_;
};

}  // namespace flatmod
