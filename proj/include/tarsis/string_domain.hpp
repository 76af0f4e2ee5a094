// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <string_view>

#include "tarsis/automaton.hpp"
#include "tarsis/bool_set.hpp"
#include "tarsis/interval.hpp"

namespace tarsis {

/// Automaton-backed string abstraction. The carrier is always a canonical
/// automaton; whether it ranges over whole-string symbols plus the unknown
/// marker, or over single characters only, is decided by how values are
/// created (any_string_symbolic vs any_string_chars). All operations below
/// work on either flavor.
class StringAbs {
public:
    StringAbs() : auto_(Automaton::empty_language()) {}

    static StringAbs bottom() { return StringAbs(); }

    /// The one concrete string s, as a chain of single-character symbols.
    static StringAbs constant(std::string_view s);

    /// The unknown string as a single top-symbol edge.
    static StringAbs any_string_symbolic();

    /// The unknown string as a loop over the given characters plus the
    /// reserved any-character; used by the character-level domain.
    static StringAbs any_string_chars(const std::set<char>& chars);

    /// Wraps an arbitrary automaton, canonicalizing it first.
    static StringAbs of(const Automaton& a);

    const Automaton& automaton() const { return auto_; }
    bool is_bottom() const { return auto_.is_empty_language(); }

    bool operator==(const StringAbs& o) const { return auto_ == o.auto_; }

private:
    explicit StringAbs(Automaton a) : auto_(std::move(a)) {}
    Automaton auto_;
};

StringAbs lub(const StringAbs& a, const StringAbs& b);
bool leq(const StringAbs& a, const StringAbs& b);
bool same_language(const StringAbs& a, const StringAbs& b);

/// Membership in the concretization.
bool contains_string(const StringAbs& a, std::string_view s);

StringAbs abs_concat(const StringAbs& x, const StringAbs& y);

/// Interval of possible lengths. Throws BottomInput on the empty abstraction.
Interval abs_length(const StringAbs& x);

/// Whether some string of y occurs inside strings of x:
/// {false} when no string of y is a factor of any string of x, {true} when
/// y is a single-path value whose longest string occurs in every string of
/// x, {true,false} otherwise. Throws BottomInput.
BoolSet abs_contains(const StringAbs& x, const StringAbs& y);

/// Interval of first-occurrence positions of strings of y inside strings of
/// x, with -1 for possible misses. Throws BottomInput.
Interval abs_index_of(const StringAbs& x, const StringAbs& y);

/// Rewires every symbol-boundary-aligned occurrence of needle (a concrete
/// string, or the top symbol meaning a single unknown-string transition)
/// through repl, destructively when that is safe. Throws CyclicAutomaton on
/// cyclic input.
Automaton make_replace(const Automaton& a, const Symbol& needle, const Automaton& repl);

/// Abstract replacement of search strings by repl strings inside x: identity
/// when no search string can occur, a destructive replace for singleton
/// search languages, an additive may-replace otherwise; falls back to the
/// unknown string when occurrences cannot be aligned to symbol boundaries or
/// when cycles / unknown search strings are involved. Throws BottomInput.
StringAbs abs_replace(const StringAbs& x, const StringAbs& search, const StringAbs& repl);

/// Substring over index intervals: exact extraction for finite intervals
/// (pairwise over the index values), factor automaton when a bound is
/// infinite or the pair count exceeds an internal guard, bottom when no
/// index pair is valid. Throws BottomInput.
StringAbs abs_substring(const StringAbs& x, const Interval& from, const Interval& to);

/// Threshold-gated widening: plain lub while the lub automaton has at most
/// tau states, the state-merging widening with parameter n above that.
StringAbs abs_widen(const StringAbs& x, const StringAbs& y, unsigned n, unsigned tau);

/// Regex rendering of the underlying automaton.
std::string pretty(const StringAbs& x);

}  // namespace tarsis
