// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>

namespace tarsis {

/// Integer bound with explicit infinities. Finite arithmetic saturates into
/// the infinities instead of overflowing.
class Bound {
public:
    static Bound neg_inf() { return Bound(Kind::NegInf, 0); }
    static Bound pos_inf() { return Bound(Kind::PosInf, 0); }
    static Bound of(std::int64_t v) { return Bound(Kind::Finite, v); }

    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    std::int64_t value() const {
        assert(is_finite());
        return v_;
    }

    bool operator==(const Bound&) const = default;

    bool operator<(const Bound& o) const {
        if (kind_ == o.kind_) return kind_ == Kind::Finite && v_ < o.v_;
        if (is_neg_inf()) return true;
        if (o.is_neg_inf()) return false;
        return o.is_pos_inf();
    }
    bool operator<=(const Bound& o) const { return !(o < *this); }

    Bound operator+(const Bound& o) const {
        if (is_neg_inf() || o.is_neg_inf()) {
            assert(!is_pos_inf() && !o.is_pos_inf());
            return neg_inf();
        }
        if (is_pos_inf() || o.is_pos_inf()) return pos_inf();
        return saturated(static_cast<__int128>(v_) + o.v_);
    }

    Bound operator-() const {
        if (is_neg_inf()) return pos_inf();
        if (is_pos_inf()) return neg_inf();
        return of(v_ == INT64_MIN ? INT64_MAX : -v_);
    }

    Bound operator-(const Bound& o) const { return *this + (-o); }

    Bound operator*(const Bound& o) const {
        if (is_finite() && o.is_finite()) return saturated(static_cast<__int128>(v_) * o.v_);
        // infinities: sign arithmetic, with 0 * inf = 0
        int sa = sign(), sb = o.sign();
        if (sa == 0 || sb == 0) return of(0);
        return sa * sb > 0 ? pos_inf() : neg_inf();
    }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "+inf";
        return std::to_string(v_);
    }

private:
    enum class Kind { NegInf, Finite, PosInf };
    Bound(Kind k, std::int64_t v) : kind_(k), v_(v) {}

    int sign() const {
        if (is_neg_inf()) return -1;
        if (is_pos_inf()) return 1;
        return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0);
    }

    static Bound saturated(__int128 v) {
        if (v > INT64_MAX) return pos_inf();
        if (v < INT64_MIN) return neg_inf();
        return of(static_cast<std::int64_t>(v));
    }

    Kind kind_;
    std::int64_t v_;
};

/// Integer intervals with a bottom element.
class Interval {
public:
    Interval() : bottom_(true), lo_(Bound::of(0)), hi_(Bound::of(0)) {}

    static Interval bottom() { return Interval(); }
    static Interval top() { return of(Bound::neg_inf(), Bound::pos_inf()); }
    static Interval constant(std::int64_t v) { return of(Bound::of(v), Bound::of(v)); }
    static Interval of(Bound lo, Bound hi) {
        if (hi < lo) return bottom();
        assert(!lo.is_pos_inf() && !hi.is_neg_inf());
        Interval i;
        i.bottom_ = false;
        i.lo_ = lo;
        i.hi_ = hi;
        return i;
    }

    bool is_bottom() const { return bottom_; }
    const Bound& lo() const {
        assert(!bottom_);
        return lo_;
    }
    const Bound& hi() const {
        assert(!bottom_);
        return hi_;
    }

    bool operator==(const Interval&) const = default;

    bool contains(std::int64_t v) const {
        return !bottom_ && lo_ <= Bound::of(v) && Bound::of(v) <= hi_;
    }

    bool is_constant(std::int64_t v) const {
        return !bottom_ && lo_ == Bound::of(v) && hi_ == Bound::of(v);
    }

    friend Interval lub(const Interval& a, const Interval& b) {
        if (a.bottom_) return b;
        if (b.bottom_) return a;
        return of(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

    friend Interval glb(const Interval& a, const Interval& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        return of(std::max(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
    }

    friend bool leq(const Interval& a, const Interval& b) {
        if (a.bottom_) return true;
        if (b.bottom_) return false;
        return b.lo_ <= a.lo_ && a.hi_ <= b.hi_;
    }

    /// Unstable bounds jump straight to infinity.
    friend Interval widen(const Interval& a, const Interval& b) {
        if (a.bottom_) return b;
        if (b.bottom_) return a;
        Bound lo = b.lo_ < a.lo_ ? Bound::neg_inf() : a.lo_;
        Bound hi = a.hi_ < b.hi_ ? Bound::pos_inf() : b.hi_;
        return of(lo, hi);
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        return of(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }

    friend Interval operator-(const Interval& a, const Interval& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        return of(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }

    friend Interval operator*(const Interval& a, const Interval& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        Bound c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
        Bound lo = c[0], hi = c[0];
        for (const Bound& x : c) {
            if (x < lo) lo = x;
            if (hi < x) hi = x;
        }
        return of(lo, hi);
    }

    /// Division gives up when the divisor may be zero.
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        if (b.contains(0)) return top();
        if (!a.lo_.is_finite() || !a.hi_.is_finite() || !b.lo_.is_finite() ||
            !b.hi_.is_finite())
            return top();
        std::int64_t c[4] = {a.lo_.value() / b.lo_.value(), a.lo_.value() / b.hi_.value(),
                             a.hi_.value() / b.lo_.value(), a.hi_.value() / b.hi_.value()};
        auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
        return of(Bound::of(*mn), Bound::of(*mx));
    }

    std::string str() const {
        if (bottom_) return "⊥";
        return "[" + lo_.str() + "," + hi_.str() + "]";
    }

private:
    bool bottom_;
    Bound lo_, hi_;
};

}  // namespace tarsis
