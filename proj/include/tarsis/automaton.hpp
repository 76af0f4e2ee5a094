// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tarsis/symbol.hpp"

namespace tarsis {

using StateId = std::uint32_t;

struct Transition {
    StateId from;
    std::optional<Symbol> label;  // nullopt = epsilon
    StateId to;
    auto operator<=>(const Transition&) const = default;
};

struct Path {
    std::vector<Transition> transitions;
    std::vector<Symbol> symbols() const;
};

struct LengthBounds {
    std::uint64_t min = 0;
    std::optional<std::uint64_t> max;  // nullopt = unbounded
    bool operator==(const LengthBounds&) const = default;
};

struct SinglePathResult {
    bool single = false;
    std::string longest;  // meaningful only when single
};

/// Finite automaton over Symbol labels (plus epsilon edges while under
/// construction). Lattice operations canonicalize their results: states are
/// renumbered 0..n-1 with initial state 0, the transition list is sorted and
/// deduplicated, and the automaton is a minimal DFA over atomic symbols.
/// Canonical automata with the same symbol-level language compare equal.
class Automaton {
public:
    /// One non-final state, no transitions: the empty language.
    Automaton() = default;

    static Automaton empty_language() { return Automaton(); }
    static Automaton epsilon();

    /// Accepts exactly the unknown-string marker: the top string value.
    static Automaton any_string();

    /// Each word becomes a chain of single-character symbols. The empty word
    /// is allowed and marks the initial state final.
    static Automaton from_strings(const std::set<std::string>& words);

    /// A single chain reading the given symbols in order.
    static Automaton from_symbols(const std::vector<Symbol>& chain);

    /// One final state with a self loop per character: (c1|...|ck)*.
    static Automaton char_loop(const std::set<char>& chars);

    /// Unchecked assembly for algorithm internals and tests. Run the result
    /// through determinize_minimize before comparing or storing it.
    static Automaton raw(StateId num_states, StateId initial,
                         std::set<StateId> finals, std::vector<Transition> transitions);

    StateId num_states() const { return num_states_; }
    StateId initial() const { return initial_; }
    const std::set<StateId>& finals() const { return finals_; }
    bool is_final(StateId q) const { return finals_.count(q) != 0; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    /// True when no final state is reachable from the initial one.
    bool is_empty_language() const;

    bool operator==(const Automaton&) const = default;

    std::string to_dot() const;
    std::string to_json() const;

private:
    StateId num_states_ = 1;
    StateId initial_ = 0;
    std::set<StateId> finals_;
    std::vector<Transition> transitions_;  // kept sorted + unique
};

/// Canonical minimal DFA over atomic symbols (the unknown marker is an
/// ordinary letter here). Also trims unreachable and dead states.
Automaton determinize_minimize(const Automaton& a);

/// Character-level view: multi-character labels split into chains, every
/// unknown-string edge becomes a bypass looping over the automaton's own
/// characters, `extra_chars`, and the reserved any-char character.
Automaton flatten(const Automaton& a, const std::set<char>& extra_chars = {});

/// Is the concrete string s in the concretization? Unknown-string edges
/// match any (possibly empty) stretch of s.
bool member(const Automaton& a, std::string_view s);

/// Least upper bound: language union, canonicalized.
Automaton lub(const Automaton& a, const Automaton& b);

/// Concretization inclusion, decided on the flattened character view.
bool leq(const Automaton& a, const Automaton& b);

inline bool equal_language(const Automaton& a, const Automaton& b) {
    return leq(a, b) && leq(b, a);
}

/// Do the concretizations share no string? Decided on the flattened view.
bool intersect_empty(const Automaton& a, const Automaton& b);

/// Cycle among useful (reachable and co-reachable) states.
bool has_cycle(const Automaton& a);

/// Any unknown-string label on a useful transition.
bool reads_top(const Automaton& a);

/// Any any-char wildcard character inside a useful label.
bool reads_any_char(const Automaton& a);

/// All accepting runs of an acyclic automaton. Throws CyclicAutomaton.
std::vector<Path> enumerate_paths(const Automaton& a);

/// Shortest/longest accepted string lengths; unknown-string edges count 0
/// toward the minimum and unbound the maximum, as do cycles. Throws
/// EmptyLanguage when nothing is accepted.
LengthBounds length_bounds(const Automaton& a);

/// Accepts every factor (contiguous substring) of every accepted string.
/// The empty language stays empty.
Automaton factor_automaton(const Automaton& a);

/// True when the language is finite, top-free, and every word is a prefix of
/// one longest word; returns that word.
SinglePathResult single_path(const Automaton& a);

/// Parametric widening: states of lub(a, b) are merged when they can read
/// the same symbol strings of length <= n; the quotient is canonicalized.
/// The result over-approximates lub(a, b).
Automaton widen(const Automaton& a, const Automaton& b, unsigned n);

/// Language concatenation: epsilon edges from a's finals to b's initial.
Automaton concat(const Automaton& a, const Automaton& b);

/// Characters appearing in the labels of useful transitions.
std::set<char> chars_of(const Automaton& a);

/// Accepted strings of the flattened view up to the given character length.
/// The any-char character appears literally. Intended for tests and for
/// finite enumeration of top-free automata.
std::set<std::string> enumerate_language(const Automaton& a, std::size_t max_len);

/// Accepted symbol sequences of an acyclic automaton.
std::vector<std::vector<Symbol>> enumerate_symbol_language(const Automaton& a);

}  // namespace tarsis
