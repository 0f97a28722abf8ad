#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flatmod/field.hpp"

namespace flatmod {

/// Truncated Laurent series over F_{p^m}.
///
/// Coefficients are known exactly on the window [offset, prec); everything at
/// exponent >= prec is unknown. The representation is kept normalized: the
/// stored coefficient vector starts at the valuation (leading zeros trimmed)
/// and carries no trailing zeros, so an empty vector means "zero to precision".
/// Zero-to-precision is a first-class value and is never promoted to exact zero.
class Series {
public:
    Series() = default;

    Series(const FieldCtx* ctx, int64_t offset, std::vector<FieldElem> coeffs, int64_t prec)
        : ctx_(ctx), off_(offset), prec_(prec), c_(std::move(coeffs)) {
        if (off_ + static_cast<int64_t>(c_.size()) > prec_)
            c_.resize(static_cast<size_t>(std::max<int64_t>(0, prec_ - off_)));
        normalize();
    }

    static Series zero(const FieldCtx* ctx, int64_t prec) { return Series(ctx, prec, {}, prec); }

    static Series monomial(const FieldCtx* ctx, const FieldElem& c, int64_t exp, int64_t prec) {
        if (c.is_zero() || exp >= prec) return zero(ctx, prec);
        return Series(ctx, exp, {c}, prec);
    }

    static Series one(const FieldCtx* ctx, int64_t prec) {
        return monomial(ctx, FieldElem::one(ctx), 0, prec);
    }

    /// Polynomial from ascending coefficients starting at `offset`.
    static Series from_coeffs(const FieldCtx* ctx, int64_t offset, std::vector<FieldElem> coeffs,
                              int64_t prec) {
        return Series(ctx, offset, std::move(coeffs), prec);
    }

    const FieldCtx* ctx() const { return ctx_; }
    int64_t prec() const { return prec_; }
    bool is_zero_to_prec() const { return c_.empty(); }

    /// Smallest exponent with a nonzero coefficient, or nullopt when the
    /// series is zero on the whole known window (v >= prec).
    std::optional<int64_t> valuation() const {
        if (c_.empty()) return std::nullopt;
        return off_;
    }

    int64_t valuation_or_throw() const {
        if (c_.empty()) throw PrecisionExhausted("valuation not resolved inside the precision window");
        return off_;
    }

    /// Coefficient at exponent e; requires e < prec.
    FieldElem coeff_at(int64_t e) const {
        if (e >= prec_) throw PrecisionExhausted("coefficient beyond precision window");
        if (e < off_ || e >= off_ + static_cast<int64_t>(c_.size())) return FieldElem::zero(ctx_);
        return c_[static_cast<size_t>(e - off_)];
    }

    FieldElem lead() const {
        if (c_.empty()) throw PrecisionExhausted("leading coefficient unknown");
        return c_.front();
    }

    /// v_u >= 0, decided. Throws when the window cannot decide.
    bool is_integral() const {
        if (!c_.empty()) return off_ >= 0;
        if (prec_ < 0) throw PrecisionExhausted("integrality undecidable at this precision");
        return true;
    }

    bool operator==(const Series&) const = delete;

    /// Agreement of all coefficients on the common known window.
    friend bool eq_to_prec(const Series& a, const Series& b) {
        a.require_same(b);
        int64_t lo = std::min(a.off_, b.off_);
        int64_t hi = std::min(a.prec_, b.prec_);
        for (int64_t e = lo; e < hi; ++e)
            if (a.coeff_at(e) != b.coeff_at(e)) return false;
        return true;
    }

    /// Exact equality of the stored polynomial data (valuation + coefficients).
    /// Meaningful for reduced canonical entries, which live fully inside their
    /// windows; precision itself is not compared.
    friend bool poly_equal(const Series& a, const Series& b) {
        a.require_same(b);
        if (a.c_.size() != b.c_.size()) return false;
        if (!a.c_.empty() && a.off_ != b.off_) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

    Series operator-() const {
        Series r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Series operator+(const Series& o) const {
        require_same(o);
        int64_t prec = std::min(prec_, o.prec_);
        int64_t lo = std::min(off_, o.off_);
        if (c_.empty() && o.c_.empty()) return zero(ctx_, prec);
        lo = std::min(lo, prec);
        std::vector<FieldElem> out;
        for (int64_t e = lo; e < prec; ++e) out.push_back(coeff_known(e) + o.coeff_known(e));
        return Series(ctx_, lo, std::move(out), prec);
    }

    Series operator-(const Series& o) const { return *this + (-o); }

    Series operator*(const Series& o) const {
        require_same(o);
        // offsets equal valuations (normalized), so this is the spec rule
        // min(v(f) + prec(g), v(g) + prec(f)) with zero-to-precision handled
        // through the offset-as-lower-bound reading.
        int64_t prec = std::min(off_ + o.prec_, o.off_ + prec_);
        if (c_.empty() || o.c_.empty()) return zero(ctx_, prec);
        int64_t lo = off_ + o.off_;
        std::vector<FieldElem> out(static_cast<size_t>(std::max<int64_t>(0, prec - lo)),
                                   FieldElem::zero(ctx_));
        for (size_t i = 0; i < c_.size(); ++i) {
            for (size_t j = 0; j < o.c_.size(); ++j) {
                int64_t e = off_ + static_cast<int64_t>(i) + o.off_ + static_cast<int64_t>(j);
                if (e >= prec) break;
                size_t k = static_cast<size_t>(e - lo);
                out[k] = out[k] + c_[i] * o.c_[j];
            }
        }
        return Series(ctx_, lo, std::move(out), prec);
    }

    Series operator*(const FieldElem& s) const {
        Series r(*this);
        for (auto& x : r.c_) x = x * s;
        r.normalize();
        return r;
    }

    /// Multiplication by u^k.
    Series shifted(int64_t k) const {
        Series r(*this);
        r.off_ += k;
        r.prec_ += k;
        return r;
    }

    Series inv() const {
        if (c_.empty()) throw PrecisionExhausted("inversion needs a confirmed leading term");
        const int64_t v = off_;
        const int64_t len = prec_ - v;  // window length of the unit part
        FieldElem c0i = c_.front().inv();
        std::vector<FieldElem> h(static_cast<size_t>(len), FieldElem::zero(ctx_));
        h[0] = c0i;
        for (int64_t k = 1; k < len; ++k) {
            FieldElem acc = FieldElem::zero(ctx_);
            for (int64_t j = 1; j <= k && j < static_cast<int64_t>(c_.size()); ++j)
                acc = acc + c_[static_cast<size_t>(j)] * h[static_cast<size_t>(k - j)];
            h[static_cast<size_t>(k)] = -(c0i * acc);
        }
        // f = u^v (c0 + ...), known to O(u^{prec}); 1/f known to O(u^{prec - 2v})
        return Series(ctx_, -v, std::move(h), prec_ - 2 * v);
    }

    /// f(u) -> f(u^p): the action of phi on one idempotent component.
    /// Coefficients are fixed; exponents and precision scale by p.
    Series frobsub() const {
        const int64_t p = ctx_->p();
        if (c_.empty()) return zero(ctx_, prec_ * p);
        std::vector<FieldElem> out(static_cast<size_t>((c_.size() - 1) * p + 1),
                                   FieldElem::zero(ctx_));
        for (size_t i = 0; i < c_.size(); ++i) out[i * p] = c_[i];
        return Series(ctx_, off_ * p, std::move(out), prec_ * p);
    }

    /// Restriction to a smaller window (test harness for precision soundness).
    Series truncated(int64_t new_prec) const {
        if (new_prec >= prec_) return *this;
        std::vector<FieldElem> out;
        for (int64_t e = off_; e < new_prec; ++e) out.push_back(coeff_known(e));
        return Series(ctx_, off_, std::move(out), new_prec);
    }

    /// Split at exponent b: first component has support < b, second >= b.
    /// Requires prec >= b so the split is decided.
    std::pair<Series, Series> split_at(int64_t b) const {
        if (prec_ < b) throw PrecisionExhausted("reduction window exceeds known precision");
        std::vector<FieldElem> low, high;
        int64_t hi_off = std::max(off_, b);
        for (int64_t e = off_; e < std::min(b, off_ + static_cast<int64_t>(c_.size())); ++e)
            low.push_back(coeff_known(e));
        for (int64_t e = hi_off; e < off_ + static_cast<int64_t>(c_.size()); ++e)
            high.push_back(coeff_known(e));
        return {Series(ctx_, off_, std::move(low), std::min(b, prec_)),
                Series(ctx_, hi_off, std::move(high), prec_)};
    }

    /// Number of stored coefficients (diagnostics).
    size_t weight() const { return c_.size(); }
    int64_t offset() const { return off_; }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "[";
            const auto& cc = c_[i].coeffs();
            for (size_t j = 0; j < cc.size(); ++j) os << (j ? "," : "") << cc[j];
            os << "]u^" << off_ + static_cast<int64_t>(i);
        }
        if (first) os << "0";
        os << " + O(u^" << prec_ << ")";
        return os.str();
    }

private:
    FieldElem coeff_known(int64_t e) const {
        if (e < off_ || e >= off_ + static_cast<int64_t>(c_.size())) return FieldElem::zero(ctx_);
        return c_[static_cast<size_t>(e - off_)];
    }

    void require_same(const Series& o) const {
        if (ctx_ == nullptr || o.ctx_ == nullptr || !(*ctx_ == *o.ctx_))
            throw CtxMismatch("series over different contexts");
    }

    void normalize() {
        if (static_cast<int64_t>(c_.size()) > (int64_t(1) << 22))
            throw InternalInvariantViolation("series window blew up");
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            off_ = prec_;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            off_ += static_cast<int64_t>(lead);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const FieldCtx* ctx_ = nullptr;
    int64_t off_ = 0;
    int64_t prec_ = 0;
    std::vector<FieldElem> c_;
};

}  // namespace flatmod
