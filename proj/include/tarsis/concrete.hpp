// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>

#include "tarsis/ast.hpp"

namespace tarsis {

using ConcreteValue = std::variant<std::int64_t, bool, std::string>;
using ConcreteMemory = std::map<std::string, ConcreteValue>;

/// Sources for the two input intrinsics. The defaults make execution
/// deterministic: read() yields "" and nondet yields false.
struct ConcreteEnv {
    std::function<std::string()> read = [] { return std::string(); };
    std::function<bool()> nondet = [] { return false; };
};

struct ConcreteResult {
    ConcreteMemory memory;
    /// Observed assert outcomes, keyed by assert id. An assert inside a loop
    /// may contribute both values.
    std::map<int, std::set<bool>> asserts;
};

/// Evaluates a single expression. Operand type mismatches and division by
/// zero raise std::runtime_error.
ConcreteValue eval_concrete(const ExprPtr& e, const ConcreteMemory& mem,
                            const ConcreteEnv& env);

/// Runs a program to completion. Throws OutOfFuel once `fuel` statement and
/// loop-guard steps have been spent, SubstringOutOfRange for invalid
/// substring indexes, and std::runtime_error for type errors or division by
/// zero. Failed asserts do not stop execution; they are recorded.
ConcreteResult concrete_run(const Program& p, const ConcreteEnv& env = {},
                            std::uint64_t fuel = 1'000'000);

/// Renders a value the way the CLI prints memory: numbers and booleans bare,
/// strings quoted with \" and \\ escapes.
std::string show(const ConcreteValue& v);

}  // namespace tarsis
