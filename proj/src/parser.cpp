// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tarsis/parser.hpp"

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tarsis/errors.hpp"

namespace tarsis {

namespace {

enum class Tok {
    End,
    Ident,
    Int,
    Str,
    KwSkip,
    KwIf,
    KwElse,
    KwWhile,
    KwAssert,
    KwTrue,
    KwFalse,
    KwRead,
    KwNondet,
    KwLength,
    KwIndexOf,
    KwContains,
    KwSubstring,
    KwConcat,
    KwReplace,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Semi,
    Comma,
    Assign,
    Plus,
    Minus,
    Star,
    Slash,
    Lt,
    EqEq,
    AndAnd,
    OrOr,
    Bang,
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int col = 1;
};

const std::map<std::string, Tok, std::less<>> kKeywords = {
    {"skip", Tok::KwSkip},         {"if", Tok::KwIf},
    {"else", Tok::KwElse},         {"while", Tok::KwWhile},
    {"assert", Tok::KwAssert},     {"true", Tok::KwTrue},
    {"false", Tok::KwFalse},       {"read", Tok::KwRead},
    {"nondet", Tok::KwNondet},     {"length", Tok::KwLength},
    {"indexOf", Tok::KwIndexOf},   {"contains", Tok::KwContains},
    {"substring", Tok::KwSubstring}, {"concat", Tok::KwConcat},
    {"replace", Tok::KwReplace},
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_trivia();
            Token t = next_token();
            out.push_back(t);
            if (t.kind == Tok::End) break;
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, line_, col_); }

    char peek() const { return at_ < src_.size() ? src_[at_] : '\0'; }

    char advance() {
        char c = src_[at_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (at_ < src_.size()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && at_ + 1 < src_.size() && src_[at_ + 1] == '/') {
                while (at_ < src_.size() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token next_token() {
        Token t;
        t.line = line_;
        t.col = col_;
        if (at_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = advance();
        switch (c) {
            case '(': t.kind = Tok::LParen; return t;
            case ')': t.kind = Tok::RParen; return t;
            case '{': t.kind = Tok::LBrace; return t;
            case '}': t.kind = Tok::RBrace; return t;
            case ';': t.kind = Tok::Semi; return t;
            case ',': t.kind = Tok::Comma; return t;
            case '+': t.kind = Tok::Plus; return t;
            case '-': t.kind = Tok::Minus; return t;
            case '*': t.kind = Tok::Star; return t;
            case '/': t.kind = Tok::Slash; return t;
            case '<': t.kind = Tok::Lt; return t;
            case '!': t.kind = Tok::Bang; return t;
            case '=':
                if (peek() == '=') {
                    advance();
                    t.kind = Tok::EqEq;
                } else {
                    t.kind = Tok::Assign;
                }
                return t;
            case '&':
                if (peek() != '&') fail("expected '&&'");
                advance();
                t.kind = Tok::AndAnd;
                return t;
            case '|':
                if (peek() != '|') fail("expected '||'");
                advance();
                t.kind = Tok::OrOr;
                return t;
            case '"': return string_literal(t);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits(1, c);
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
            t.kind = Tok::Int;
            try {
                t.value = std::stoll(digits);
            } catch (const std::out_of_range&) {
                throw SyntaxError("integer literal out of range", t.line, t.col);
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word(1, c);
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                word += advance();
            auto it = kKeywords.find(word);
            t.kind = it == kKeywords.end() ? Tok::Ident : it->second;
            t.text = std::move(word);
            return t;
        }
        throw SyntaxError("unexpected character", t.line, t.col);
    }

    Token string_literal(Token t) {
        t.kind = Tok::Str;
        std::string out;
        while (true) {
            if (at_ >= src_.size()) throw SyntaxError("unterminated string", t.line, t.col);
            char c = advance();
            if (c == '"') break;
            if (c == '\n') throw SyntaxError("unterminated string", t.line, t.col);
            if (c == '\\') {
                if (at_ >= src_.size()) throw SyntaxError("unterminated string", t.line, t.col);
                char e = advance();
                if (e == '"' || e == '\\')
                    out += e;
                else
                    fail("unknown escape; only \\\" and \\\\ are supported");
            } else if (c == kAnyChar || c == kHole) {
                fail("reserved character in string literal");
            } else {
                out += c;
            }
        }
        t.text = std::move(out);
        return t;
    }

    std::string_view src_;
    std::size_t at_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program run() {
        Program p;
        std::vector<StmtPtr> stmts;
        while (cur().kind != Tok::End) stmts.push_back(statement());
        p.body = make_seq(std::move(stmts), 1, 1);
        p.num_branch_nodes = next_branch_id_;
        p.num_asserts = next_assert_id_;
        p.alphabet = extract_alphabet(p.body);
        return p;
    }

private:
    const Token& cur() const { return toks_[at_]; }

    Token eat(Tok kind, const char* what) {
        if (cur().kind != kind)
            throw SyntaxError(std::string("expected ") + what, cur().line, cur().col);
        return toks_[at_++];
    }

    bool eat_if(Tok kind) {
        if (cur().kind != kind) return false;
        ++at_;
        return true;
    }

    static StmtPtr make_seq(std::vector<StmtPtr> stmts, int line, int col) {
        auto s = std::make_shared<Stmt>();
        s->kind = Stmt::Kind::Seq;
        s->line = line;
        s->col = col;
        s->stmts = std::move(stmts);
        return s;
    }

    StmtPtr block() {
        Token open = eat(Tok::LBrace, "'{'");
        std::vector<StmtPtr> stmts;
        while (cur().kind != Tok::RBrace) {
            if (cur().kind == Tok::End)
                throw SyntaxError("unterminated block", open.line, open.col);
            stmts.push_back(statement());
        }
        eat(Tok::RBrace, "'}'");
        return make_seq(std::move(stmts), open.line, open.col);
    }

    StmtPtr statement() {
        Token t = cur();
        auto s = std::make_shared<Stmt>();
        s->line = t.line;
        s->col = t.col;
        switch (t.kind) {
            case Tok::KwSkip:
                ++at_;
                s->kind = Stmt::Kind::Skip;
                eat(Tok::Semi, "';'");
                return s;
            case Tok::KwAssert:
                ++at_;
                s->kind = Stmt::Kind::Assert;
                s->id = next_assert_id_++;
                eat(Tok::LParen, "'('");
                s->expr = expression();
                eat(Tok::RParen, "')'");
                eat(Tok::Semi, "';'");
                return s;
            case Tok::KwIf: {
                ++at_;
                s->kind = Stmt::Kind::If;
                s->id = next_branch_id_++;
                eat(Tok::LParen, "'('");
                s->expr = expression();
                eat(Tok::RParen, "')'");
                s->stmts.push_back(block());
                if (eat_if(Tok::KwElse)) {
                    s->stmts.push_back(block());
                } else {
                    auto none = std::make_shared<Stmt>();
                    none->kind = Stmt::Kind::Seq;
                    none->line = t.line;
                    none->col = t.col;
                    s->stmts.push_back(none);
                }
                eat(Tok::Semi, "';'");
                return s;
            }
            case Tok::KwWhile:
                ++at_;
                s->kind = Stmt::Kind::While;
                s->id = next_branch_id_++;
                eat(Tok::LParen, "'('");
                s->expr = expression();
                eat(Tok::RParen, "')'");
                s->stmts.push_back(block());
                eat(Tok::Semi, "';'");
                return s;
            case Tok::Ident: {
                ++at_;
                s->kind = Stmt::Kind::Assign;
                s->var = t.text;
                eat(Tok::Assign, "'='");
                s->expr = expression();
                eat(Tok::Semi, "';'");
                return s;
            }
            default:
                throw SyntaxError("expected a statement", t.line, t.col);
        }
    }

    std::shared_ptr<Expr> make(Expr::Kind kind, const Token& at, std::vector<ExprPtr> args = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->col = at.col;
        e->args = std::move(args);
        return e;
    }

    ExprPtr expression() { return or_expr(); }

    ExprPtr or_expr() {
        ExprPtr e = and_expr();
        while (cur().kind == Tok::OrOr) {
            Token op = toks_[at_++];
            e = make(Expr::Kind::Or, op, {e, and_expr()});
        }
        return e;
    }

    ExprPtr and_expr() {
        ExprPtr e = cmp_expr();
        while (cur().kind == Tok::AndAnd) {
            Token op = toks_[at_++];
            e = make(Expr::Kind::And, op, {e, cmp_expr()});
        }
        return e;
    }

    ExprPtr cmp_expr() {
        ExprPtr e = add_expr();
        while (cur().kind == Tok::Lt || cur().kind == Tok::EqEq) {
            Token op = toks_[at_++];
            Expr::Kind k = op.kind == Tok::Lt ? Expr::Kind::Lt : Expr::Kind::Eq;
            e = make(k, op, {e, add_expr()});
        }
        return e;
    }

    ExprPtr add_expr() {
        ExprPtr e = mul_expr();
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            Token op = toks_[at_++];
            Expr::Kind k = op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            e = make(k, op, {e, mul_expr()});
        }
        return e;
    }

    ExprPtr mul_expr() {
        ExprPtr e = unary();
        while (cur().kind == Tok::Star || cur().kind == Tok::Slash) {
            Token op = toks_[at_++];
            Expr::Kind k = op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
            e = make(k, op, {e, unary()});
        }
        return e;
    }

    ExprPtr unary() {
        if (cur().kind == Tok::Bang) {
            Token op = toks_[at_++];
            return make(Expr::Kind::Not, op, {unary()});
        }
        if (cur().kind == Tok::Minus) {
            Token op = toks_[at_++];
            auto zero = std::make_shared<Expr>();
            zero->kind = Expr::Kind::IntLit;
            zero->line = op.line;
            zero->col = op.col;
            return make(Expr::Kind::Sub, op, {zero, unary()});
        }
        return primary();
    }

    std::vector<ExprPtr> call_args(std::size_t n) {
        eat(Tok::LParen, "'('");
        std::vector<ExprPtr> args;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) eat(Tok::Comma, "','");
            args.push_back(expression());
        }
        eat(Tok::RParen, "')'");
        return args;
    }

    ExprPtr primary() {
        Token t = cur();
        switch (t.kind) {
            case Tok::Int: {
                ++at_;
                auto e = make(Expr::Kind::IntLit, t);
                e->int_val = t.value;
                return e;
            }
            case Tok::Str: {
                ++at_;
                auto e = make(Expr::Kind::StrLit, t);
                e->str_val = t.text;
                return e;
            }
            case Tok::KwTrue:
            case Tok::KwFalse: {
                ++at_;
                auto e = make(Expr::Kind::BoolLit, t);
                e->bool_val = t.kind == Tok::KwTrue;
                return e;
            }
            case Tok::Ident: {
                ++at_;
                auto e = make(Expr::Kind::Ident, t);
                e->name = t.text;
                return e;
            }
            case Tok::KwRead:
                ++at_;
                eat(Tok::LParen, "'('");
                eat(Tok::RParen, "')'");
                return make(Expr::Kind::ReadStr, t);
            case Tok::KwNondet:
                ++at_;
                return make(Expr::Kind::NondetBool, t);
            case Tok::KwLength:
                ++at_;
                return make(Expr::Kind::Length, t, call_args(1));
            case Tok::KwIndexOf:
                ++at_;
                return make(Expr::Kind::IndexOf, t, call_args(2));
            case Tok::KwContains:
                ++at_;
                return make(Expr::Kind::Contains, t, call_args(2));
            case Tok::KwSubstring:
                ++at_;
                return make(Expr::Kind::Substring, t, call_args(3));
            case Tok::KwConcat:
                ++at_;
                return make(Expr::Kind::Concat, t, call_args(2));
            case Tok::KwReplace:
                ++at_;
                return make(Expr::Kind::Replace, t, call_args(3));
            case Tok::LParen: {
                ++at_;
                ExprPtr e = expression();
                eat(Tok::RParen, "')'");
                return e;
            }
            default:
                throw SyntaxError("expected an expression", t.line, t.col);
        }
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
    int next_branch_id_ = 0;
    int next_assert_id_ = 0;
};

std::string escape_literal(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Or: return 1;
        case Expr::Kind::And: return 2;
        case Expr::Kind::Lt:
        case Expr::Kind::Eq: return 3;
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 4;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 5;
        case Expr::Kind::Not: return 6;
        default: return 7;
    }
}

void expr_source(const ExprPtr& e, std::string& out) {
    // Operators are left-associative, so a left child of equal precedence
    // reparses as-is while a right child of equal precedence needs parens.
    auto child = [&](const ExprPtr& c, bool right) {
        int pc = precedence(c->kind);
        int pe = precedence(e->kind);
        bool paren = pc < pe || (right && pc == pe && pc < 7);
        if (paren) out += '(';
        expr_source(c, out);
        if (paren) out += ')';
    };
    auto binop = [&](const char* op) {
        child(e->args[0], false);
        out += op;
        child(e->args[1], true);
    };
    auto call = [&](const char* name) {
        out += name;
        out += '(';
        for (std::size_t i = 0; i < e->args.size(); ++i) {
            if (i) out += ", ";
            expr_source(e->args[i], out);
        }
        out += ')';
    };
    switch (e->kind) {
        case Expr::Kind::Ident: out += e->name; break;
        case Expr::Kind::IntLit: out += std::to_string(e->int_val); break;
        case Expr::Kind::BoolLit: out += e->bool_val ? "true" : "false"; break;
        case Expr::Kind::StrLit: out += escape_literal(e->str_val); break;
        case Expr::Kind::ReadStr: out += "read()"; break;
        case Expr::Kind::NondetBool: out += "nondet"; break;
        case Expr::Kind::Add: binop(" + "); break;
        case Expr::Kind::Sub: binop(" - "); break;
        case Expr::Kind::Mul: binop(" * "); break;
        case Expr::Kind::Div: binop(" / "); break;
        case Expr::Kind::And: binop(" && "); break;
        case Expr::Kind::Or: binop(" || "); break;
        case Expr::Kind::Lt: binop(" < "); break;
        case Expr::Kind::Eq: binop(" == "); break;
        case Expr::Kind::Not:
            out += '!';
            child(e->args[0], false);
            break;
        case Expr::Kind::Length: call("length"); break;
        case Expr::Kind::IndexOf: call("indexOf"); break;
        case Expr::Kind::Contains: call("contains"); break;
        case Expr::Kind::Substring: call("substring"); break;
        case Expr::Kind::Concat: call("concat"); break;
        case Expr::Kind::Replace: call("replace"); break;
    }
}

void stmt_source(const StmtPtr& s, int indent, std::string& out) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    switch (s->kind) {
        case Stmt::Kind::Seq:
            for (const auto& c : s->stmts) stmt_source(c, indent, out);
            break;
        case Stmt::Kind::Skip:
            out += pad + "skip;\n";
            break;
        case Stmt::Kind::Assign:
            out += pad + s->var + " = " + to_source(s->expr) + ";\n";
            break;
        case Stmt::Kind::Assert:
            out += pad + "assert(" + to_source(s->expr) + ");\n";
            break;
        case Stmt::Kind::If:
            out += pad + "if (" + to_source(s->expr) + ") {\n";
            stmt_source(s->stmts[0], indent + 1, out);
            if (!s->stmts[1]->stmts.empty() || s->stmts[1]->kind != Stmt::Kind::Seq) {
                out += pad + "} else {\n";
                stmt_source(s->stmts[1], indent + 1, out);
            }
            out += pad + "};\n";
            break;
        case Stmt::Kind::While:
            out += pad + "while (" + to_source(s->expr) + ") {\n";
            stmt_source(s->stmts[0], indent + 1, out);
            out += pad + "};\n";
            break;
    }
}

void collect_literals(const ExprPtr& e, Alphabet& a) {
    if (e->kind == Expr::Kind::StrLit && !e->str_val.empty()) a.add_literal(e->str_val);
    for (const auto& c : e->args) collect_literals(c, a);
}

void collect_literals(const StmtPtr& s, Alphabet& a) {
    if (s->expr) collect_literals(s->expr, a);
    for (const auto& c : s->stmts) collect_literals(c, a);
}

}  // namespace

Program parse_program(std::string_view source) {
    return Parser(Lexer(source).run()).run();
}

std::string to_source(const ExprPtr& e) {
    std::string out;
    expr_source(e, out);
    return out;
}

std::string to_source(const Program& p) {
    std::string out;
    stmt_source(p.body, 0, out);
    return out;
}

Alphabet extract_alphabet(const StmtPtr& s) {
    Alphabet a;
    collect_literals(s, a);
    return a;
}

}  // namespace tarsis
