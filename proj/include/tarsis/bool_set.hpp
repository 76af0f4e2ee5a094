// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace tarsis {

/// Sets of booleans: the four-element powerset lattice.
class BoolSet {
public:
    BoolSet() : has_true_(false), has_false_(false) {}

    static BoolSet bottom() { return BoolSet(); }
    static BoolSet of(bool b) { return b ? BoolSet(true, false) : BoolSet(false, true); }
    static BoolSet both() { return BoolSet(true, true); }

    bool is_bottom() const { return !has_true_ && !has_false_; }
    bool has_true() const { return has_true_; }
    bool has_false() const { return has_false_; }
    bool is_true() const { return has_true_ && !has_false_; }
    bool is_false() const { return has_false_ && !has_true_; }
    bool contains(bool b) const { return b ? has_true_ : has_false_; }

    bool operator==(const BoolSet&) const = default;

    friend BoolSet lub(const BoolSet& a, const BoolSet& b) {
        return BoolSet(a.has_true_ || b.has_true_, a.has_false_ || b.has_false_);
    }

    friend bool leq(const BoolSet& a, const BoolSet& b) {
        return (!a.has_true_ || b.has_true_) && (!a.has_false_ || b.has_false_);
    }

    // Pointwise logic over the members.
    friend BoolSet operator!(const BoolSet& a) { return BoolSet(a.has_false_, a.has_true_); }

    friend BoolSet operator&&(const BoolSet& a, const BoolSet& b) {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        bool t = a.has_true_ && b.has_true_;
        bool f = a.has_false_ || b.has_false_;
        return BoolSet(t, f);
    }

    friend BoolSet operator||(const BoolSet& a, const BoolSet& b) {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        bool t = a.has_true_ || b.has_true_;
        bool f = a.has_false_ && b.has_false_;
        return BoolSet(t, f);
    }

    std::string str() const {
        if (is_bottom()) return "{}";
        if (is_true()) return "{true}";
        if (is_false()) return "{false}";
        return "{true,false}";
    }

private:
    BoolSet(bool t, bool f) : has_true_(t), has_false_(f) {}
    bool has_true_, has_false_;
};

}  // namespace tarsis
