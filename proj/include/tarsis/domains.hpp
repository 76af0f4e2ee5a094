// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "tarsis/baselines.hpp"
#include "tarsis/bool_set.hpp"
#include "tarsis/interval.hpp"
#include "tarsis/string_domain.hpp"

namespace tarsis {

enum class DomainKind { Tarsis, CharFa, Prefix, Suffix, CharInclusion };

inline std::optional<DomainKind> domain_from_name(std::string_view name) {
    if (name == "tarsis") return DomainKind::Tarsis;
    if (name == "charfa") return DomainKind::CharFa;
    if (name == "prefix") return DomainKind::Prefix;
    if (name == "suffix") return DomainKind::Suffix;
    if (name == "charinclusion") return DomainKind::CharInclusion;
    return std::nullopt;
}

inline const char* domain_name(DomainKind k) {
    switch (k) {
        case DomainKind::Tarsis: return "tarsis";
        case DomainKind::CharFa: return "charfa";
        case DomainKind::Prefix: return "prefix";
        case DomainKind::Suffix: return "suffix";
        default: return "charinclusion";
    }
}

/// The automaton-backed domain. In symbolic mode the unknown string is a
/// single top edge; in character mode it is a loop over the program's
/// characters plus the reserved any-char, which is how the character-level
/// baseline differs from the main domain.
struct AutomatonDomain {
    using Value = StringAbs;

    bool symbolic = true;
    std::set<char> program_chars;
    unsigned widening_n = 2;
    unsigned tau = 5;

    Value bottom() const { return StringAbs::bottom(); }
    bool is_bottom(const Value& v) const { return v.is_bottom(); }
    Value constant(std::string_view s) const { return StringAbs::constant(s); }
    Value unknown() const {
        return symbolic ? StringAbs::any_string_symbolic()
                        : StringAbs::any_string_chars(program_chars);
    }
    Value lub(const Value& a, const Value& b) const { return tarsis::lub(a, b); }
    bool leq(const Value& a, const Value& b) const { return tarsis::leq(a, b); }
    Value widen(const Value& a, const Value& b) const {
        return abs_widen(a, b, widening_n, tau);
    }
    Value concat(const Value& a, const Value& b) const { return abs_concat(a, b); }
    Interval length(const Value& a) const { return abs_length(a); }
    BoolSet contains(const Value& a, const Value& b) const { return abs_contains(a, b); }
    Interval index_of(const Value& a, const Value& b) const { return abs_index_of(a, b); }
    Value replace(const Value& x, const Value& s, const Value& r) const {
        Value out = abs_replace(x, s, r);
        // The unknown-string fallback of the symbolic carrier; widen it to the
        // character-level unknown when that is what this domain uses.
        if (!symbolic && out == StringAbs::any_string_symbolic()) return unknown();
        return out;
    }
    Value substring(const Value& x, const Interval& from, const Interval& to) const {
        return abs_substring(x, from, to);
    }
    BoolSet eq(const Value& a, const Value& b) const {
        // Singleton-vs-singleton folds to a definite answer, but only for
        // literal strings: an any-char position makes the value a family.
        auto literal_singleton = [](const Value& v, const SinglePathResult& p) {
            return p.single && p.longest.find(kAnyChar) == std::string::npos &&
                   same_language(v, StringAbs::constant(p.longest));
        };
        SinglePathResult pa = single_path(a.automaton());
        SinglePathResult pb = single_path(b.automaton());
        if (literal_singleton(a, pa) && literal_singleton(b, pb))
            return BoolSet::of(pa.longest == pb.longest);
        if (intersect_empty(a.automaton(), b.automaton())) return BoolSet::of(false);
        return BoolSet::both();
    }
    std::string pretty(const Value& a) const { return tarsis::pretty(a); }
    bool member(const Value& a, std::string_view s) const { return contains_string(a, s); }
};

struct PrefixDomain {
    using Value = PrefixVal;

    Value bottom() const { return PrefixVal::bot(); }
    bool is_bottom(const Value& v) const { return v.bottom; }
    Value constant(std::string_view s) const { return PrefixVal::of_constant(s); }
    Value unknown() const { return PrefixVal::unknown(); }
    Value lub(const Value& a, const Value& b) const { return tarsis::lub(a, b); }
    bool leq(const Value& a, const Value& b) const { return tarsis::leq(a, b); }
    Value widen(const Value& a, const Value& b) const { return tarsis::lub(a, b); }
    Value concat(const Value& a, const Value& b) const { return prefix_concat(a, b); }
    Interval length(const Value& a) const { return prefix_length(a); }
    BoolSet contains(const Value& a, const Value& b) const { return prefix_contains(a, b); }
    Interval index_of(const Value& a, const Value& b) const { return prefix_index_of(a, b); }
    Value replace(const Value& x, const Value& s, const Value& r) const {
        return prefix_replace(x, s, r);
    }
    Value substring(const Value& x, const Interval& from, const Interval& to) const {
        return prefix_substring(x, from, to);
    }
    BoolSet eq(const Value& a, const Value& b) const { return prefix_eq(a, b); }
    std::string pretty(const Value& a) const { return tarsis::pretty(a); }
    bool member(const Value& a, std::string_view s) const { return prefix_member(a, s); }
};

struct SuffixDomain {
    using Value = SuffixVal;

    Value bottom() const { return SuffixVal::bot(); }
    bool is_bottom(const Value& v) const { return v.bottom; }
    Value constant(std::string_view s) const { return SuffixVal::of_constant(s); }
    Value unknown() const { return SuffixVal::unknown(); }
    Value lub(const Value& a, const Value& b) const { return tarsis::lub(a, b); }
    bool leq(const Value& a, const Value& b) const { return tarsis::leq(a, b); }
    Value widen(const Value& a, const Value& b) const { return tarsis::lub(a, b); }
    Value concat(const Value& a, const Value& b) const { return suffix_concat(a, b); }
    Interval length(const Value& a) const { return suffix_length(a); }
    BoolSet contains(const Value& a, const Value& b) const { return suffix_contains(a, b); }
    Interval index_of(const Value& a, const Value& b) const { return suffix_index_of(a, b); }
    Value replace(const Value& x, const Value& s, const Value& r) const {
        return suffix_replace(x, s, r);
    }
    Value substring(const Value& x, const Interval& from, const Interval& to) const {
        return suffix_substring(x, from, to);
    }
    BoolSet eq(const Value& a, const Value& b) const { return suffix_eq(a, b); }
    std::string pretty(const Value& a) const { return tarsis::pretty(a); }
    bool member(const Value& a, std::string_view s) const { return suffix_member(a, s); }
};

struct CharInclusionDomain {
    using Value = CharIncVal;

    Value bottom() const { return CharIncVal::bot(); }
    bool is_bottom(const Value& v) const { return v.bottom; }
    Value constant(std::string_view s) const { return CharIncVal::of_constant(s); }
    Value unknown() const { return CharIncVal::unknown(); }
    Value lub(const Value& a, const Value& b) const { return tarsis::lub(a, b); }
    bool leq(const Value& a, const Value& b) const { return tarsis::leq(a, b); }
    Value widen(const Value& a, const Value& b) const { return tarsis::lub(a, b); }
    Value concat(const Value& a, const Value& b) const { return charinc_concat(a, b); }
    Interval length(const Value& a) const { return charinc_length(a); }
    BoolSet contains(const Value& a, const Value& b) const { return charinc_contains(a, b); }
    Interval index_of(const Value& a, const Value& b) const { return charinc_index_of(a, b); }
    Value replace(const Value& x, const Value& s, const Value& r) const {
        return charinc_replace(x, s, r);
    }
    Value substring(const Value& x, const Interval& from, const Interval& to) const {
        return charinc_substring(x, from, to);
    }
    BoolSet eq(const Value& a, const Value& b) const { return charinc_eq(a, b); }
    std::string pretty(const Value& a) const { return tarsis::pretty(a); }
    bool member(const Value& a, std::string_view s) const { return charinc_member(a, s); }
};

}  // namespace tarsis
