// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "tarsis/bool_set.hpp"
#include "tarsis/interval.hpp"

namespace tarsis {

/// Known prefix of a string. `exact` means the value is exactly `text`;
/// otherwise the concretization is text followed by anything. All three
/// baseline carriers keep singleton values exact so that constant-heavy code
/// stays precise.
struct PrefixVal {
    bool bottom = true;
    std::string text;
    bool exact = false;

    static PrefixVal bot() { return {}; }
    static PrefixVal of_constant(std::string_view s) { return {false, std::string(s), true}; }
    static PrefixVal unknown() { return {false, "", false}; }
    bool operator==(const PrefixVal&) const = default;
};

PrefixVal lub(const PrefixVal& a, const PrefixVal& b);
bool leq(const PrefixVal& a, const PrefixVal& b);
PrefixVal prefix_concat(const PrefixVal& x, const PrefixVal& y);
Interval prefix_length(const PrefixVal& x);
BoolSet prefix_contains(const PrefixVal& x, const PrefixVal& y);
Interval prefix_index_of(const PrefixVal& x, const PrefixVal& y);
BoolSet prefix_eq(const PrefixVal& x, const PrefixVal& y);
PrefixVal prefix_substring(const PrefixVal& x, const Interval& from, const Interval& to);
PrefixVal prefix_replace(const PrefixVal& x, const PrefixVal& s, const PrefixVal& r);
bool prefix_member(const PrefixVal& x, std::string_view s);
std::string pretty(const PrefixVal& x);

/// Known suffix, mirror of PrefixVal.
struct SuffixVal {
    bool bottom = true;
    std::string text;
    bool exact = false;

    static SuffixVal bot() { return {}; }
    static SuffixVal of_constant(std::string_view s) { return {false, std::string(s), true}; }
    static SuffixVal unknown() { return {false, "", false}; }
    bool operator==(const SuffixVal&) const = default;
};

SuffixVal lub(const SuffixVal& a, const SuffixVal& b);
bool leq(const SuffixVal& a, const SuffixVal& b);
SuffixVal suffix_concat(const SuffixVal& x, const SuffixVal& y);
Interval suffix_length(const SuffixVal& x);
BoolSet suffix_contains(const SuffixVal& x, const SuffixVal& y);
Interval suffix_index_of(const SuffixVal& x, const SuffixVal& y);
BoolSet suffix_eq(const SuffixVal& x, const SuffixVal& y);
SuffixVal suffix_substring(const SuffixVal& x, const Interval& from, const Interval& to);
SuffixVal suffix_replace(const SuffixVal& x, const SuffixVal& s, const SuffixVal& r);
bool suffix_member(const SuffixVal& x, std::string_view s);
std::string pretty(const SuffixVal& x);

/// Characters certainly present in the string and characters possibly
/// present. `open` marks an unbounded possible set (unknown input). An
/// optional exact witness keeps constants precise, in particular proving
/// containment of single-character needles.
struct CharIncVal {
    bool bottom = true;
    std::set<char> certain;
    std::set<char> possible;
    bool open = false;
    std::optional<std::string> exact;

    static CharIncVal bot() { return {}; }
    static CharIncVal of_constant(std::string_view s);
    static CharIncVal unknown() { return {false, {}, {}, true, std::nullopt}; }
    bool operator==(const CharIncVal&) const = default;
};

CharIncVal lub(const CharIncVal& a, const CharIncVal& b);
bool leq(const CharIncVal& a, const CharIncVal& b);
CharIncVal charinc_concat(const CharIncVal& x, const CharIncVal& y);
Interval charinc_length(const CharIncVal& x);
BoolSet charinc_contains(const CharIncVal& x, const CharIncVal& y);
Interval charinc_index_of(const CharIncVal& x, const CharIncVal& y);
BoolSet charinc_eq(const CharIncVal& x, const CharIncVal& y);
CharIncVal charinc_substring(const CharIncVal& x, const Interval& from, const Interval& to);
CharIncVal charinc_replace(const CharIncVal& x, const CharIncVal& s, const CharIncVal& r);
bool charinc_member(const CharIncVal& x, std::string_view s);
std::string pretty(const CharIncVal& x);

}  // namespace tarsis
