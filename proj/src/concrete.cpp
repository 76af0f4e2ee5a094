// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tarsis/concrete.hpp"

#include <stdexcept>
#include <utility>

#include "tarsis/errors.hpp"

namespace tarsis {

namespace {

[[noreturn]] void type_error(const ExprPtr& e, const char* want) {
    throw std::runtime_error("type error at " + std::to_string(e->line) + ":" +
                             std::to_string(e->col) + ": expected " + want);
}

std::int64_t as_int(const ExprPtr& e, const ConcreteValue& v) {
    if (const auto* p = std::get_if<std::int64_t>(&v)) return *p;
    type_error(e, "an integer");
}

bool as_bool(const ExprPtr& e, const ConcreteValue& v) {
    if (const auto* p = std::get_if<bool>(&v)) return *p;
    type_error(e, "a boolean");
}

const std::string& as_str(const ExprPtr& e, const ConcreteValue& v) {
    if (const auto* p = std::get_if<std::string>(&v)) return *p;
    type_error(e, "a string");
}

std::string replace_all(std::string s, const std::string& search,
                        const std::string& repl) {
    if (search.empty()) return s;
    std::string out;
    std::size_t at = 0;
    while (true) {
        std::size_t hit = s.find(search, at);
        if (hit == std::string::npos) break;
        out.append(s, at, hit - at);
        out += repl;
        at = hit + search.size();
    }
    out.append(s, at, std::string::npos);
    return out;
}

struct Runner {
    const ConcreteEnv& env;
    ConcreteMemory mem;
    std::map<int, std::set<bool>> asserts;
    std::uint64_t fuel;

    void spend() {
        if (fuel == 0) throw OutOfFuel("execution step budget exhausted");
        --fuel;
    }

    ConcreteValue eval(const ExprPtr& e) {
        switch (e->kind) {
            case Expr::Kind::Ident: {
                auto it = mem.find(e->name);
                if (it == mem.end())
                    throw std::runtime_error("unbound variable '" + e->name + "' at " +
                                             std::to_string(e->line) + ":" +
                                             std::to_string(e->col));
                return it->second;
            }
            case Expr::Kind::IntLit: return e->int_val;
            case Expr::Kind::BoolLit: return e->bool_val;
            case Expr::Kind::StrLit: return e->str_val;
            case Expr::Kind::ReadStr: return env.read();
            case Expr::Kind::NondetBool: return env.nondet();
            case Expr::Kind::Add:
                return as_int(e, eval(e->args[0])) + as_int(e, eval(e->args[1]));
            case Expr::Kind::Sub:
                return as_int(e, eval(e->args[0])) - as_int(e, eval(e->args[1]));
            case Expr::Kind::Mul:
                return as_int(e, eval(e->args[0])) * as_int(e, eval(e->args[1]));
            case Expr::Kind::Div: {
                std::int64_t num = as_int(e, eval(e->args[0]));
                std::int64_t den = as_int(e, eval(e->args[1]));
                if (den == 0)
                    throw std::runtime_error("division by zero at " +
                                             std::to_string(e->line) + ":" +
                                             std::to_string(e->col));
                return num / den;
            }
            case Expr::Kind::And:
                if (!as_bool(e, eval(e->args[0]))) return false;
                return as_bool(e, eval(e->args[1]));
            case Expr::Kind::Or:
                if (as_bool(e, eval(e->args[0]))) return true;
                return as_bool(e, eval(e->args[1]));
            case Expr::Kind::Not: return !as_bool(e, eval(e->args[0]));
            case Expr::Kind::Lt:
                return as_int(e, eval(e->args[0])) < as_int(e, eval(e->args[1]));
            case Expr::Kind::Eq: {
                ConcreteValue a = eval(e->args[0]);
                ConcreteValue b = eval(e->args[1]);
                if (a.index() != b.index()) type_error(e, "operands of one type");
                return a == b;
            }
            case Expr::Kind::Length:
                return static_cast<std::int64_t>(as_str(e, eval(e->args[0])).size());
            case Expr::Kind::IndexOf: {
                std::string s = as_str(e, eval(e->args[0]));
                std::string t = as_str(e, eval(e->args[1]));
                std::size_t hit = s.find(t);
                return hit == std::string::npos ? std::int64_t{-1}
                                                : static_cast<std::int64_t>(hit);
            }
            case Expr::Kind::Contains: {
                std::string s = as_str(e, eval(e->args[0]));
                std::string t = as_str(e, eval(e->args[1]));
                return s.find(t) != std::string::npos;
            }
            case Expr::Kind::Substring: {
                std::string s = as_str(e, eval(e->args[0]));
                std::int64_t i = as_int(e, eval(e->args[1]));
                std::int64_t j = as_int(e, eval(e->args[2]));
                if (i < 0 || j < i || j > static_cast<std::int64_t>(s.size()))
                    throw SubstringOutOfRange(
                        "substring(" + std::to_string(i) + ", " + std::to_string(j) +
                        ") out of range for length " + std::to_string(s.size()));
                return s.substr(static_cast<std::size_t>(i),
                                static_cast<std::size_t>(j - i));
            }
            case Expr::Kind::Concat:
                return as_str(e, eval(e->args[0])) + as_str(e, eval(e->args[1]));
            case Expr::Kind::Replace: {
                std::string s = as_str(e, eval(e->args[0]));
                std::string t = as_str(e, eval(e->args[1]));
                std::string r = as_str(e, eval(e->args[2]));
                return replace_all(std::move(s), t, r);
            }
        }
        throw std::logic_error("unreachable expression kind");
    }

    void exec(const StmtPtr& s) {
        switch (s->kind) {
            case Stmt::Kind::Seq:
                for (const auto& c : s->stmts) exec(c);
                return;
            case Stmt::Kind::Skip:
                spend();
                return;
            case Stmt::Kind::Assign:
                spend();
                mem[s->var] = eval(s->expr);
                return;
            case Stmt::Kind::If:
                spend();
                exec(as_bool(s->expr, eval(s->expr)) ? s->stmts[0] : s->stmts[1]);
                return;
            case Stmt::Kind::While:
                while (true) {
                    spend();
                    if (!as_bool(s->expr, eval(s->expr))) return;
                    exec(s->stmts[0]);
                }
            case Stmt::Kind::Assert:
                spend();
                asserts[s->id].insert(as_bool(s->expr, eval(s->expr)));
                return;
        }
    }
};

}  // namespace

ConcreteValue eval_concrete(const ExprPtr& e, const ConcreteMemory& mem,
                            const ConcreteEnv& env) {
    Runner r{env, mem, {}, 0};
    return r.eval(e);
}

ConcreteResult concrete_run(const Program& p, const ConcreteEnv& env,
                            std::uint64_t fuel) {
    Runner r{env, {}, {}, fuel};
    r.exec(p.body);
    return {std::move(r.mem), std::move(r.asserts)};
}

std::string show(const ConcreteValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    const auto& s = std::get<std::string>(v);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace tarsis
