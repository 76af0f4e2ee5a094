// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <compare>
#include <set>
#include <string>
#include <string_view>

namespace tarsis {

// Reserved characters. kAnyChar stands for "one character outside the known
// alphabet" in flattened automata; kHole marks unknown characters inside
// partial substrings. Neither may occur in analyzed string constants.
inline constexpr char kAnyChar = '\x7f';
inline constexpr char kHole = '\x01';

/// One letter of the string alphabet: a nonempty chunk of text, or the
/// unknown-string marker (top). Top concretizes to every string, including
/// the empty one.
class Symbol {
public:
    static Symbol top() { return Symbol(std::string()); }

    static Symbol str(std::string_view s) {
        assert(!s.empty() && "empty chunks are represented structurally, not as symbols");
        return Symbol(std::string(s));
    }

    static Symbol chr(char c) { return Symbol(std::string(1, c)); }

    bool is_top() const { return text_.empty(); }

    const std::string& text() const {
        assert(!is_top());
        return text_;
    }

    /// Payload length; the unknown marker can stand for the empty string, so
    /// it contributes 0.
    std::size_t min_length() const { return text_.size(); }

    auto operator<=>(const Symbol&) const = default;

private:
    explicit Symbol(std::string s) : text_(std::move(s)) {}
    std::string text_;  // empty <=> top
};

/// The symbols a program can mention: every nonempty substring of its string
/// constants, plus the unknown-string marker.
class Alphabet {
public:
    void add_literal(std::string_view lit) {
        literals_.emplace(lit);
        for (char c : lit) chars_.insert(c);
    }

    bool contains(const Symbol& s) const {
        if (s.is_top()) return true;
        for (const auto& lit : literals_)
            if (lit.find(s.text()) != std::string::npos) return true;
        return false;
    }

    const std::set<std::string>& literals() const { return literals_; }

    /// Characters occurring in any literal.
    const std::set<char>& chars() const { return chars_; }

private:
    std::set<std::string> literals_;
    std::set<char> chars_;
};

}  // namespace tarsis
