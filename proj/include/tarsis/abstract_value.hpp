// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "tarsis/bool_set.hpp"
#include "tarsis/interval.hpp"

namespace tarsis {

/// Coalesced sum of the component domains: a variable is a string, an
/// integer, a boolean, unreachable (Bottom), or unknown-of-any-type (Top).
/// Joining values of different kinds goes straight to Top; a component-level
/// bottom collapses to Bottom.
template <class S>
class AbstractValue {
public:
    enum class Kind { Bottom, Str, Int, Bool, Top };

    AbstractValue() : kind_(Kind::Bottom) {}

    static AbstractValue bottom() { return AbstractValue(); }

    static AbstractValue top() {
        AbstractValue v;
        v.kind_ = Kind::Top;
        return v;
    }

    template <class D>
    static AbstractValue of_str(const D& dom, typename D::Value s) {
        if (dom.is_bottom(s)) return bottom();
        AbstractValue v;
        v.kind_ = Kind::Str;
        v.str_ = std::move(s);
        return v;
    }

    static AbstractValue of_int(Interval i) {
        if (i.is_bottom()) return bottom();
        AbstractValue v;
        v.kind_ = Kind::Int;
        v.int_ = i;
        return v;
    }

    static AbstractValue of_bool(BoolSet b) {
        if (b.is_bottom()) return bottom();
        AbstractValue v;
        v.kind_ = Kind::Bool;
        v.bool_ = b;
        return v;
    }

    Kind kind() const { return kind_; }
    bool is_bottom() const { return kind_ == Kind::Bottom; }
    bool is_top() const { return kind_ == Kind::Top; }
    const S& str() const { return str_; }
    const Interval& intv() const { return int_; }
    const BoolSet& bools() const { return bool_; }

    bool operator==(const AbstractValue&) const = default;

private:
    Kind kind_;
    S str_{};
    Interval int_;
    BoolSet bool_;
};

template <class D, class V = AbstractValue<typename D::Value>>
V lub_value(const D& dom, const V& a, const V& b) {
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    if (a.is_top() || b.is_top() || a.kind() != b.kind()) return V::top();
    switch (a.kind()) {
        case V::Kind::Str:
            return V::of_str(dom, dom.lub(a.str(), b.str()));
        case V::Kind::Int:
            return V::of_int(lub(a.intv(), b.intv()));
        default:
            return V::of_bool(lub(a.bools(), b.bools()));
    }
}

template <class D, class V = AbstractValue<typename D::Value>>
bool leq_value(const D& dom, const V& a, const V& b) {
    if (a.is_bottom() || b.is_top()) return true;
    if (b.is_bottom() || a.is_top()) return false;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case V::Kind::Str:
            return dom.leq(a.str(), b.str());
        case V::Kind::Int:
            return leq(a.intv(), b.intv());
        default:
            return leq(a.bools(), b.bools());
    }
}

template <class D, class V = AbstractValue<typename D::Value>>
V widen_value(const D& dom, const V& a, const V& b) {
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    if (a.is_top() || b.is_top() || a.kind() != b.kind()) return V::top();
    switch (a.kind()) {
        case V::Kind::Str:
            return V::of_str(dom, dom.widen(a.str(), b.str()));
        case V::Kind::Int:
            return V::of_int(widen(a.intv(), b.intv()));
        default:
            return V::of_bool(lub(a.bools(), b.bools()));
    }
}

}  // namespace tarsis
