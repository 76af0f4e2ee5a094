// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tarsis/symbol.hpp"

namespace tarsis {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression node. Operand expressions live in `args`; which of the payload
/// fields is meaningful depends on the kind.
struct Expr {
    enum class Kind {
        Ident,
        IntLit,
        BoolLit,
        StrLit,
        ReadStr,     // read(): unknown string input
        NondetBool,  // nondet: unknown boolean
        Add,
        Sub,
        Mul,
        Div,
        Length,
        IndexOf,
        And,
        Or,
        Not,
        Lt,
        Eq,
        Contains,
        Substring,
        Concat,
        Replace,
    };

    Kind kind;
    int line = 0;
    int col = 0;
    std::string name;          // Ident
    std::int64_t int_val = 0;  // IntLit
    bool bool_val = false;     // BoolLit
    std::string str_val;       // StrLit
    std::vector<ExprPtr> args;
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

/// Statement node. If keeps [then, else] in stmts, While keeps [body], Seq
/// keeps its children. `id` numbers conditionals and loops (shared counter,
/// used for trace tokens) and asserts (own counter, used for reports).
struct Stmt {
    enum class Kind { Seq, Skip, Assign, If, While, Assert };

    Kind kind;
    int line = 0;
    int col = 0;
    int id = 0;
    std::string var;            // Assign target
    ExprPtr expr;               // Assign rhs, If/While condition, Assert condition
    std::vector<StmtPtr> stmts;
};

struct Program {
    StmtPtr body;
    int num_branch_nodes = 0;  // ifs + whiles
    int num_asserts = 0;
    Alphabet alphabet;
};

}  // namespace tarsis
