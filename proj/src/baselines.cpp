// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tarsis/baselines.hpp"

#include <algorithm>

#include "tarsis/errors.hpp"

namespace tarsis {

namespace {

std::string common_prefix(const std::string& a, const std::string& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return a.substr(0, i);
}

std::string common_suffix(const std::string& a, const std::string& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[a.size() - 1 - i] == b[b.size() - 1 - i]) ++i;
    return a.substr(a.size() - i);
}

bool is_prefix_of(const std::string& p, const std::string& s) {
    return s.compare(0, p.size(), p) == 0;
}

bool is_suffix_of(const std::string& p, const std::string& s) {
    return p.size() <= s.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
}

// These carriers support concat, lub, a conservative contains, and length
// bounds from the tracked text (plus the partial substring below for
// prefixes); every other operation answers with its result domain's top.
Interval any_index() { return Interval::of(Bound::of(-1), Bound::pos_inf()); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

// ---------------------------------------------------------------- prefix ---

PrefixVal lub(const PrefixVal& a, const PrefixVal& b) {
    if (a.bottom) return b;
    if (b.bottom) return a;
    if (a.exact && b.exact && a.text == b.text) return a;
    return {false, common_prefix(a.text, b.text), false};
}

bool leq(const PrefixVal& a, const PrefixVal& b) {
    if (a.bottom) return true;
    if (b.bottom) return false;
    if (b.exact) return a.exact && a.text == b.text;
    return is_prefix_of(b.text, a.text);
}

PrefixVal prefix_concat(const PrefixVal& x, const PrefixVal& y) {
    if (x.bottom || y.bottom) return PrefixVal::bot();
    if (x.exact) return {false, x.text + y.text, y.exact};
    return x;
}

Interval prefix_length(const PrefixVal& x) {
    if (x.bottom) throw BottomInput("length of bottom prefix value");
    Bound known = Bound::of(static_cast<std::int64_t>(x.text.size()));
    return Interval::of(known, x.exact ? known : Bound::pos_inf());
}

BoolSet prefix_contains(const PrefixVal& x, const PrefixVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("contains on bottom prefix value");
    bool seen = x.text.find(y.text) != std::string::npos;
    if (y.exact) {
        if (seen) return BoolSet::of(true);
        if (x.exact) return BoolSet::of(false);
        return BoolSet::both();
    }
    // The needle starts with y.text; without that much, nothing can match.
    if (x.exact && !seen) return BoolSet::of(false);
    return BoolSet::both();
}

Interval prefix_index_of(const PrefixVal& x, const PrefixVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("indexOf on bottom prefix value");
    return any_index();
}

BoolSet prefix_eq(const PrefixVal& x, const PrefixVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("eq on bottom prefix value");
    if (x.exact && y.exact) return BoolSet::of(x.text == y.text);
    bool possible;
    if (x.exact)
        possible = is_prefix_of(y.text, x.text);
    else if (y.exact)
        possible = is_prefix_of(x.text, y.text);
    else
        possible = is_prefix_of(x.text, y.text) || is_prefix_of(y.text, x.text);
    return possible ? BoolSet::both() : BoolSet::of(false);
}

// The part of the result lying inside the tracked prefix is still known: for a
// fixed start a and guaranteed end of at least to.lo, characters a..to.lo of
// x.text survive. The result is never exact; beyond the tracked region the
// string is unknown.
PrefixVal prefix_substring(const PrefixVal& x, const Interval& from, const Interval& to) {
    if (x.bottom) throw BottomInput("substring on bottom prefix value");
    if (from.is_bottom() || to.is_bottom()) return PrefixVal::bot();
    if (!(from.lo() == from.hi()) || !from.lo().is_finite()) return PrefixVal::unknown();
    std::int64_t a = from.lo().value();
    std::int64_t n = static_cast<std::int64_t>(x.text.size());
    if (a < 0) return PrefixVal::bot();
    if (x.exact && a > n) return PrefixVal::bot();
    if (a >= n) return PrefixVal::unknown();
    std::int64_t jm = a;
    if (to.lo().is_finite()) jm = std::max(a, to.lo().value());
    std::int64_t known_end = std::min(jm, n);
    return {false, x.text.substr(static_cast<std::size_t>(a),
                                 static_cast<std::size_t>(known_end - a)),
            false};
}

PrefixVal prefix_replace(const PrefixVal& x, const PrefixVal& s, const PrefixVal& r) {
    if (x.bottom || s.bottom || r.bottom) throw BottomInput("replace on bottom prefix value");
    return PrefixVal::unknown();
}

bool prefix_member(const PrefixVal& x, std::string_view s) {
    if (x.bottom) return false;
    if (x.exact) return x.text == s;
    return s.size() >= x.text.size() && is_prefix_of(x.text, std::string(s));
}

std::string pretty(const PrefixVal& x) {
    if (x.bottom) return "∅";
    return x.exact ? quoted(x.text) : quoted(x.text) + "⊤";
}

// ---------------------------------------------------------------- suffix ---

SuffixVal lub(const SuffixVal& a, const SuffixVal& b) {
    if (a.bottom) return b;
    if (b.bottom) return a;
    if (a.exact && b.exact && a.text == b.text) return a;
    return {false, common_suffix(a.text, b.text), false};
}

bool leq(const SuffixVal& a, const SuffixVal& b) {
    if (a.bottom) return true;
    if (b.bottom) return false;
    if (b.exact) return a.exact && a.text == b.text;
    return is_suffix_of(b.text, a.text);
}

SuffixVal suffix_concat(const SuffixVal& x, const SuffixVal& y) {
    if (x.bottom || y.bottom) return SuffixVal::bot();
    if (y.exact) return {false, x.text + y.text, x.exact};
    return y;
}

Interval suffix_length(const SuffixVal& x) {
    if (x.bottom) throw BottomInput("length of bottom suffix value");
    Bound known = Bound::of(static_cast<std::int64_t>(x.text.size()));
    return Interval::of(known, x.exact ? known : Bound::pos_inf());
}

BoolSet suffix_contains(const SuffixVal& x, const SuffixVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("contains on bottom suffix value");
    bool seen = x.text.find(y.text) != std::string::npos;
    if (y.exact) {
        if (seen) return BoolSet::of(true);
        if (x.exact) return BoolSet::of(false);
        return BoolSet::both();
    }
    // Mirror of the prefix case: the needle ends with y.text.
    if (x.exact && !seen) return BoolSet::of(false);
    return BoolSet::both();
}

Interval suffix_index_of(const SuffixVal& x, const SuffixVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("indexOf on bottom suffix value");
    return any_index();
}

BoolSet suffix_eq(const SuffixVal& x, const SuffixVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("eq on bottom suffix value");
    if (x.exact && y.exact) return BoolSet::of(x.text == y.text);
    bool possible;
    if (x.exact)
        possible = is_suffix_of(y.text, x.text);
    else if (y.exact)
        possible = is_suffix_of(x.text, y.text);
    else
        possible = is_suffix_of(x.text, y.text) || is_suffix_of(y.text, x.text);
    return possible ? BoolSet::both() : BoolSet::of(false);
}

// Cutting an unknown amount off the front discards everything a suffix knows.
SuffixVal suffix_substring(const SuffixVal& x, const Interval& from, const Interval& to) {
    if (x.bottom) throw BottomInput("substring on bottom suffix value");
    if (from.is_bottom() || to.is_bottom()) return SuffixVal::bot();
    return SuffixVal::unknown();
}

SuffixVal suffix_replace(const SuffixVal& x, const SuffixVal& s, const SuffixVal& r) {
    if (x.bottom || s.bottom || r.bottom) throw BottomInput("replace on bottom suffix value");
    return SuffixVal::unknown();
}

bool suffix_member(const SuffixVal& x, std::string_view s) {
    if (x.bottom) return false;
    if (x.exact) return x.text == s;
    return is_suffix_of(x.text, std::string(s));
}

std::string pretty(const SuffixVal& x) {
    if (x.bottom) return "∅";
    return x.exact ? quoted(x.text) : "⊤" + quoted(x.text);
}

// -------------------------------------------------------- char inclusion ---

CharIncVal CharIncVal::of_constant(std::string_view s) {
    CharIncVal v;
    v.bottom = false;
    for (char c : s) {
        v.certain.insert(c);
        v.possible.insert(c);
    }
    v.exact = std::string(s);
    return v;
}

CharIncVal lub(const CharIncVal& a, const CharIncVal& b) {
    if (a.bottom) return b;
    if (b.bottom) return a;
    CharIncVal v;
    v.bottom = false;
    std::set_intersection(a.certain.begin(), a.certain.end(), b.certain.begin(),
                          b.certain.end(), std::inserter(v.certain, v.certain.end()));
    v.possible = a.possible;
    v.possible.insert(b.possible.begin(), b.possible.end());
    v.open = a.open || b.open;
    if (a.exact && b.exact && *a.exact == *b.exact) v.exact = a.exact;
    return v;
}

bool leq(const CharIncVal& a, const CharIncVal& b) {
    if (a.bottom) return true;
    if (b.bottom) return false;
    if (b.exact && !(a.exact && *a.exact == *b.exact)) return false;
    if (!std::includes(a.certain.begin(), a.certain.end(), b.certain.begin(),
                       b.certain.end()))
        return false;
    if (b.open) return true;
    if (a.open) return false;
    return std::includes(b.possible.begin(), b.possible.end(), a.possible.begin(),
                         a.possible.end());
}

CharIncVal charinc_concat(const CharIncVal& x, const CharIncVal& y) {
    if (x.bottom || y.bottom) return CharIncVal::bot();
    CharIncVal v;
    v.bottom = false;
    v.certain = x.certain;
    v.certain.insert(y.certain.begin(), y.certain.end());
    v.possible = x.possible;
    v.possible.insert(y.possible.begin(), y.possible.end());
    v.open = x.open || y.open;
    if (x.exact && y.exact) v.exact = *x.exact + *y.exact;
    return v;
}

Interval charinc_length(const CharIncVal& x) {
    if (x.bottom) throw BottomInput("length of bottom char-inclusion value");
    if (x.exact) return Interval::constant(static_cast<std::int64_t>(x.exact->size()));
    // every certainly-contained character occurs at least once
    return Interval::of(Bound::of(static_cast<std::int64_t>(x.certain.size())),
                        Bound::pos_inf());
}

BoolSet charinc_contains(const CharIncVal& x, const CharIncVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("contains on bottom char-inclusion value");
    if (x.exact && y.exact)
        return BoolSet::of(x.exact->find(*y.exact) != std::string::npos);
    if (!x.open) {
        for (char c : y.certain)
            if (!x.possible.count(c)) return BoolSet::of(false);
    }
    if (y.exact && y.exact->size() == 1 && x.certain.count((*y.exact)[0]))
        return BoolSet::of(true);
    if (y.exact && y.exact->empty()) return BoolSet::of(true);
    return BoolSet::both();
}

Interval charinc_index_of(const CharIncVal& x, const CharIncVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("indexOf on bottom char-inclusion value");
    return any_index();
}

BoolSet charinc_eq(const CharIncVal& x, const CharIncVal& y) {
    if (x.bottom || y.bottom) throw BottomInput("eq on bottom char-inclusion value");
    if (x.exact && y.exact) return BoolSet::of(*x.exact == *y.exact);
    if (!y.open) {
        for (char c : x.certain)
            if (!y.possible.count(c)) return BoolSet::of(false);
    }
    if (!x.open) {
        for (char c : y.certain)
            if (!x.possible.count(c)) return BoolSet::of(false);
    }
    return BoolSet::both();
}

CharIncVal charinc_substring(const CharIncVal& x, const Interval& from, const Interval& to) {
    if (x.bottom) throw BottomInput("substring on bottom char-inclusion value");
    if (from.is_bottom() || to.is_bottom()) return CharIncVal::bot();
    CharIncVal v;
    v.bottom = false;
    v.possible = x.possible;  // a substring keeps no certainty, only possibility
    v.open = x.open;
    return v;
}

CharIncVal charinc_replace(const CharIncVal& x, const CharIncVal& s, const CharIncVal& r) {
    if (x.bottom || s.bottom || r.bottom)
        throw BottomInput("replace on bottom char-inclusion value");
    return CharIncVal::unknown();
}

bool charinc_member(const CharIncVal& x, std::string_view s) {
    if (x.bottom) return false;
    if (x.exact) return *x.exact == s;
    std::set<char> seen(s.begin(), s.end());
    for (char c : x.certain)
        if (!seen.count(c)) return false;
    if (x.open) return true;
    for (char c : seen)
        if (!x.possible.count(c)) return false;
    return true;
}

std::string pretty(const CharIncVal& x) {
    if (x.bottom) return "∅";
    if (x.exact) return quoted(*x.exact);
    std::string out = "[";
    for (char c : x.certain) out += c;
    out += "][";
    for (char c : x.possible) out += c;
    if (x.open) out += "⊤";
    out += "]";
    return out;
}

}  // namespace tarsis
