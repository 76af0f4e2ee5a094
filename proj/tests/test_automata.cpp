// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tarsis/automaton.hpp"
#include "tarsis/errors.hpp"

using namespace tarsis;

namespace {

Automaton strs(const std::set<std::string>& words) { return Automaton::from_strings(words); }

// Symbol chain automaton; "" stands for the unknown-string marker.
Automaton chain(const std::vector<std::string>& labels) {
    std::vector<Symbol> syms;
    for (const auto& l : labels) syms.push_back(l.empty() ? Symbol::top() : Symbol::str(l));
    return Automaton::from_symbols(syms);
}

// Reference factor computation, string level.
std::set<std::string> factors_of(const std::set<std::string>& words) {
    std::set<std::string> out;
    for (const auto& w : words)
        for (std::size_t i = 0; i <= w.size(); ++i)
            for (std::size_t n = 0; n + i <= w.size(); ++n) out.insert(w.substr(i, n));
    return out;
}

std::set<std::string> concat_sets(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(x + y);
    return out;
}

}  // namespace

TEST_CASE("constant languages round-trip through membership and enumeration") {
    std::set<std::string> words{"", "a", "ab", "ring test"};
    Automaton a = strs(words);
    for (const auto& w : words) CHECK(member(a, w));
    CHECK(!member(a, "b"));
    CHECK(!member(a, "ring test "));
    CHECK(enumerate_language(a, 16) == words);

    CHECK(member(Automaton::epsilon(), ""));
    CHECK(!member(Automaton::epsilon(), "x"));
    CHECK(!member(Automaton::empty_language(), ""));
    CHECK(Automaton::empty_language().is_empty_language());
    CHECK(!strs({""}).is_empty_language());
}

TEST_CASE("canonicalization maps equal languages to equal objects") {
    // Same language {ab, ac}, built three different ways.
    Automaton direct = strs({"ab", "ac"});
    Automaton split = lub(chain({"a", "b"}), chain({"a", "c"}));
    Automaton redundant = determinize_minimize(Automaton::raw(
        6, 0,
        {3, 5},
        {{0, Symbol::chr('a'), 1},
         {0, Symbol::chr('a'), 4},
         {1, Symbol::chr('b'), 3},
         {4, Symbol::chr('c'), 5},
         {2, Symbol::chr('z'), 2}}));  // unreachable junk must be trimmed
    CHECK(direct == split);
    CHECK(direct == redundant);
    CHECK(direct.num_states() == 3);  // minimal DFA of {ab, ac}: both endings share a final

    // Multi-character symbols are atoms: "ab" as one symbol is a different
    // canonical object than a-then-b, but the flattened language agrees.
    Automaton atom = chain({"ab"});
    Automaton letters = chain({"a", "b"});
    CHECK(atom != letters);
    CHECK(equal_language(atom, letters));
}

TEST_CASE("lub and leq follow language union and inclusion") {
    Automaton ab = strs({"a", "b"});
    Automaton abc = strs({"a", "b", "c"});
    CHECK(leq(ab, abc));
    CHECK(!leq(abc, ab));
    CHECK(lub(ab, abc) == abc);
    CHECK(lub(ab, Automaton::empty_language()) == ab);
    CHECK(leq(Automaton::empty_language(), ab));

    // Inclusion is decided at character level, so symbol granularity does
    // not matter.
    CHECK(leq(chain({"ab", "c"}), chain({"a", "bc"})));
    CHECK(leq(chain({"a", "bc"}), chain({"ab", "c"})));
}

TEST_CASE("unknown-string edges concretize to every string in that position") {
    Automaton any = Automaton::any_string();
    CHECK(member(any, ""));
    CHECK(member(any, "anything at all"));

    Automaton a_top_b = chain({"a", "", "b"});
    CHECK(member(a_top_b, "ab"));
    CHECK(member(a_top_b, "axyzb"));
    CHECK(member(a_top_b, "aab"));
    CHECK(!member(a_top_b, "a"));
    CHECK(!member(a_top_b, "ba"));

    CHECK(leq(strs({"ab", "aXb"}), a_top_b));
    CHECK(!leq(a_top_b, strs({"ab", "aXb"})));
    CHECK(leq(a_top_b, any));
    CHECK(!intersect_empty(a_top_b, strs({"aqqb"})));
    CHECK(intersect_empty(a_top_b, strs({"b", "ba"})));
}

TEST_CASE("intersect_empty detects shared strings across granularities") {
    CHECK(intersect_empty(strs({"a"}), strs({"b"})));
    CHECK(!intersect_empty(strs({"a", "c"}), strs({"b", "c"})));
    CHECK(!intersect_empty(chain({"ab"}), chain({"a", "b"})));
    CHECK(intersect_empty(Automaton::empty_language(), Automaton::any_string()));
}

TEST_CASE("flatten preserves the character-level language") {
    Automaton a = chain({"abc", "de"});
    Automaton f = flatten(a);
    CHECK(equal_language(a, f));
    // every flattened label is a single character
    for (const auto& t : f.transitions()) {
        REQUIRE(t.label.has_value());
        CHECK(t.label->text().size() == 1);
    }
    // flattening the unknown marker introduces the any-char letter
    Automaton top_flat = flatten(Automaton::any_string(), {'x'});
    CHECK(member(top_flat, ""));
    CHECK(member(top_flat, "xx"));
    CHECK(member(top_flat, std::string(1, kAnyChar)));
}

TEST_CASE("length_bounds covers chains, unions, unknowns and cycles") {
    CHECK(length_bounds(strs({"abc"})) == LengthBounds{3, 3});
    CHECK(length_bounds(strs({"", "abc", "de"})) == LengthBounds{0, 3});
    // unknown-string edges contribute zero to the minimum and unbound the max
    CHECK(length_bounds(chain({"aa", "", "bb"})) == LengthBounds{4, std::nullopt});

    // cycle: (ab)* via raw assembly
    Automaton loop = determinize_minimize(
        Automaton::raw(2, 0, {0}, {{0, Symbol::chr('a'), 1}, {1, Symbol::chr('b'), 0}}));
    CHECK(length_bounds(loop) == LengthBounds{0, std::nullopt});

    CHECK_THROWS_AS(length_bounds(Automaton::empty_language()), EmptyLanguage);
}

TEST_CASE("structural predicates ignore dead states") {
    Automaton loop = determinize_minimize(
        Automaton::raw(2, 0, {0}, {{0, Symbol::chr('a'), 1}, {1, Symbol::chr('b'), 0}}));
    CHECK(has_cycle(loop));
    CHECK(!has_cycle(strs({"ab", "ba"})));

    // cycle and top edge reachable but not co-reachable: both invisible
    Automaton dead_tail = Automaton::raw(3, 0, {1},
                                         {{0, Symbol::chr('a'), 1},
                                          {1, Symbol::top(), 2},
                                          {2, Symbol::chr('b'), 2}});
    CHECK(!has_cycle(dead_tail));
    CHECK(!reads_top(dead_tail));
    CHECK(reads_top(chain({"a", ""})));
    CHECK(!reads_top(strs({"ab"})));

    std::string probe = "x" + std::string(1, kAnyChar);
    CHECK(reads_any_char(chain({probe})));
    CHECK(!reads_any_char(strs({"xy"})));
    CHECK(chars_of(dead_tail) == std::set<char>{'a'});
}

TEST_CASE("enumerate_paths lists accepting runs and rejects cycles") {
    Automaton a = strs({"ab", "cd"});
    auto paths = enumerate_paths(a);
    REQUIRE(paths.size() == 2);
    std::set<std::string> seen;
    for (const auto& p : paths) {
        std::string s;
        for (const auto& sym : p.symbols()) s += sym.text();
        seen.insert(s);
    }
    CHECK(seen == std::set<std::string>{"ab", "cd"});

    Automaton loop = determinize_minimize(
        Automaton::raw(2, 0, {0}, {{0, Symbol::chr('a'), 1}, {1, Symbol::chr('b'), 0}}));
    CHECK_THROWS_AS(enumerate_paths(loop), CyclicAutomaton);
}

TEST_CASE("factor_automaton equals the brute-force factor set") {
    const std::set<std::string> cases[] = {
        {"abc"}, {"aba", "bab"}, {"", "xy"}, {"ring test pas", "ring test fai"}};
    for (const auto& words : cases) {
        CAPTURE(*words.begin());
        Automaton fa = factor_automaton(strs(words));
        std::set<std::string> expect = factors_of(words);
        CHECK(enumerate_language(fa, 16) == expect);
    }
    CHECK(factor_automaton(Automaton::empty_language()).is_empty_language());

    // factors of a⊤b include every string bracketed by nothing at all
    Automaton f = factor_automaton(chain({"a", "", "b"}));
    CHECK(member(f, "a"));
    CHECK(member(f, "qqq"));   // from inside the unknown stretch
    CHECK(member(f, "aqq"));
    CHECK(member(f, "qqb"));
    CHECK(member(f, ""));
}

TEST_CASE("single_path recognizes prefix-closed chains only") {
    SinglePathResult r = single_path(strs({"he", "hell", "hello"}));
    CHECK(r.single);
    CHECK(r.longest == "hello");

    CHECK(single_path(strs({"hello"})).single);
    CHECK(single_path(strs({"", "a"})).single);
    CHECK(!single_path(strs({"a", "b"})).single);
    CHECK(!single_path(strs({"ab", "b"})).single);
    CHECK(!single_path(Automaton::any_string()).single);
    CHECK(!single_path(Automaton::empty_language()).single);
    Automaton loop = determinize_minimize(
        Automaton::raw(1, 0, {0}, {{0, Symbol::chr('a'), 0}}));
    CHECK(!single_path(loop).single);
}

TEST_CASE("concat matches the string-level product") {
    std::set<std::string> xs{"", "a", "bc"};
    std::set<std::string> ys{"d", "ee"};
    Automaton c = concat(strs(xs), strs(ys));
    CHECK(enumerate_language(c, 16) == concat_sets(xs, ys));

    CHECK(concat(strs({"a"}), Automaton::empty_language()).is_empty_language());
    CHECK(concat(Automaton::epsilon(), strs({"a"})) == strs({"a"}));

    Automaton with_top = concat(strs({"a"}), Automaton::any_string());
    CHECK(member(with_top, "a"));
    CHECK(member(with_top, "a tail"));
    CHECK(!member(with_top, "b"));
}

TEST_CASE("widening over-approximates the lub and folds growing chains") {
    // Growing repetitions collapse into a loop once n bounds the lookahead.
    Automaton a = strs({"", "a"});
    Automaton b = strs({"", "a", "aa"});
    Automaton w = widen(a, b, 1);
    Automaton a_star =
        determinize_minimize(Automaton::raw(1, 0, {0}, {{0, Symbol::chr('a'), 0}}));
    CHECK(w == a_star);
    CHECK(leq(lub(a, b), w));

    // n large enough keeps the union exact
    CHECK(widen(a, b, 3) == lub(a, b));

    // iterated application stabilizes
    Automaton x = strs({"c"});
    for (int i = 0; i < 50; ++i) {
        Automaton grown = lub(x, concat(x, strs({"ab"})));
        Automaton nxt = widen(x, grown, 2);
        if (nxt == x) break;
        x = nxt;
        REQUIRE(i < 49);
    }
    CHECK(leq(strs({"c", "cab", "cabab"}), x));
}

TEST_CASE("enumerate_symbol_language keeps symbol granularity") {
    Automaton a = lub(chain({"ab", "c"}), chain({"d"}));
    auto words = enumerate_symbol_language(a);
    std::set<std::vector<Symbol>> got(words.begin(), words.end());
    std::set<std::vector<Symbol>> expect{{Symbol::str("ab"), Symbol::chr('c')},
                                         {Symbol::chr('d')}};
    CHECK(got == expect);
}

TEST_CASE("dot and json dumps mention every state") {
    Automaton a = strs({"ab"});
    std::string dot = a.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    std::string js = a.to_json();
    CHECK(js.find("\"initial\"") != std::string::npos);
}
