// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tarsis {

/// Path enumeration or replacement was asked for an automaton with a cycle.
struct CyclicAutomaton : std::logic_error {
    using std::logic_error::logic_error;
};

/// An operation that needs at least one accepted string got none.
struct EmptyLanguage : std::logic_error {
    using std::logic_error::logic_error;
};

/// An abstract operation received a bottom operand it cannot handle.
struct BottomInput : std::logic_error {
    using std::logic_error::logic_error;
};

/// The concrete interpreter exhausted its step budget.
struct OutOfFuel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// substring(s, i, j) with indices outside 0 <= i <= j <= |s|.
struct SubstringOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The abstract fixpoint engine hit its hard iteration cap. Widening is
/// supposed to make this impossible; seeing it means a bug.
struct Diverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : std::runtime_error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line, int column)
        : std::runtime_error(msg), line(line), column(column) {}
};

}  // namespace tarsis
