// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "tarsis/automaton.hpp"
#include "tarsis/symbol.hpp"

namespace tarsis {

/// Immutable regular expression over Symbol atoms. Smart constructors apply
/// the obvious identities (empty absorbs, epsilon is a unit, stars collapse)
/// so state elimination yields readable terms.
class Regex {
public:
    enum class Kind { Empty, Epsilon, Atom, Or, Seq, Star };
    using Ptr = std::shared_ptr<const Regex>;

    static Ptr empty();
    static Ptr epsilon();
    static Ptr atom(Symbol s);
    static Ptr alt(Ptr l, Ptr r);
    static Ptr seq(Ptr l, Ptr r);
    static Ptr star(Ptr inner);

    Kind kind() const { return kind_; }
    const Symbol& symbol() const { return *sym_; }
    const Ptr& left() const { return left_; }
    const Ptr& right() const { return right_; }
    const Ptr& inner() const { return left_; }

    bool equals(const Regex& other) const;

protected:
    Regex(Kind k, std::optional<Symbol> sym, Ptr l, Ptr r)
        : kind_(k), sym_(std::move(sym)), left_(std::move(l)), right_(std::move(r)) {}

private:
    Kind kind_;
    std::optional<Symbol> sym_;
    Ptr left_, right_;
};

/// Regular expression for the automaton's language, by state elimination
/// (states with the fewest incident edges go first).
Regex::Ptr to_regex(const Automaton& a);

/// Thompson construction; the inverse direction of to_regex up to language.
Automaton regex_to_automaton(const Regex::Ptr& r);

/// Paper-style rendering: alternation as (a || b), juxtaposition for
/// concatenation, (r)* for stars, ⊤ for the unknown string.
std::string pretty(const Regex::Ptr& r);

/// A slice under construction while walking a regex: `text` holds the
/// characters found so far (kHole marks characters of an unknown string),
/// `to_skip` characters still to drop, `to_take` characters still wanted.
struct PartialSubstring {
    std::string text;
    std::uint32_t to_skip = 0;
    std::uint32_t to_take = 0;
    auto operator<=>(const PartialSubstring&) const = default;
};

/// All slices obtained by skipping `i` characters and then taking `j` from
/// the strings of the regex language. Slices with to_skip == to_take == 0
/// are finished; the rest document why a string was too short.
std::set<PartialSubstring> rsubs(const Regex::Ptr& r, std::uint32_t i, std::uint32_t j);

/// Keeps the finished slices and lifts them back to an automaton; maximal
/// runs of hole characters become one unknown-string symbol each.
Automaton completed_to_automaton(const std::set<PartialSubstring>& slices);

}  // namespace tarsis
