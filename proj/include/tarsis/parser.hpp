// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "tarsis/ast.hpp"

namespace tarsis {

/// Parses a program: a sequence of semicolon-terminated statements. Throws
/// SyntaxError with 1-based source position on bad input.
Program parse_program(std::string_view source);

/// Source form of an expression, fully parenthesized where precedence is not
/// obvious.
std::string to_source(const ExprPtr& e);

/// Source form of a whole program; parsing it back yields the same program
/// up to node positions.
std::string to_source(const Program& p);

/// String constants mentioned by the program. Membership of the resulting
/// alphabet is closed under nonempty substrings of the literals.
Alphabet extract_alphabet(const StmtPtr& s);

}  // namespace tarsis
