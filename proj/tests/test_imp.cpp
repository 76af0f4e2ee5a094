// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <fstream>
#include <sstream>
#include <string>

#include "tarsis/concrete.hpp"
#include "tarsis/errors.hpp"
#include "tarsis/parser.hpp"

using namespace tarsis;

namespace {

std::string read_corpus(const std::string& name) {
    std::ifstream in(std::string(TARSIS_CORPUS_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ConcreteValue eval_str(const std::string& expr_src) {
    Program p = parse_program("x = " + expr_src + ";");
    ConcreteResult r = concrete_run(p);
    return r.memory.at("x");
}

}  // namespace

TEST_CASE("parsing and printing are mutually inverse on the corpus") {
    for (const char* name : {"subs.imp", "loop.imp", "count.imp", "tostring.imp"}) {
        CAPTURE(name);
        Program p = parse_program(read_corpus(name));
        std::string printed = to_source(p);
        Program again = parse_program(printed);
        CHECK(to_source(again) == printed);
        CHECK(again.num_asserts == p.num_asserts);
        CHECK(again.num_branch_nodes == p.num_branch_nodes);
    }
}

TEST_CASE("node positions and counters are recorded") {
    Program p = parse_program(read_corpus("subs.imp"));
    CHECK(p.num_asserts == 4);
    CHECK(p.num_branch_nodes == 1);

    // the four asserts sit on lines 8..11
    REQUIRE(p.body->kind == Stmt::Kind::Seq);
    int line = 8;
    for (const auto& s : p.body->stmts) {
        if (s->kind != Stmt::Kind::Assert) continue;
        CHECK(s->line == line++);
        CHECK(s->col == 1);
    }
    CHECK(line == 12);
}

TEST_CASE("if keeps both arms; a missing else becomes an empty branch") {
    Program p = parse_program("if (nondet) { x = 1; };");
    const StmtPtr& iff = p.body->kind == Stmt::Kind::Seq ? p.body->stmts.at(0) : p.body;
    REQUIRE(iff->kind == Stmt::Kind::If);
    REQUIRE(iff->stmts.size() == 2);
    CHECK(iff->stmts[0]->kind == Stmt::Kind::Seq);
    CHECK(iff->stmts[1]->kind == Stmt::Kind::Seq);
    CHECK(iff->stmts[1]->stmts.empty());
}

TEST_CASE("syntax errors carry one-based positions") {
    auto expect_error = [](const std::string& src, int line) {
        try {
            parse_program(src);
            FAIL_CHECK("expected a syntax error for: " << src);
        } catch (const SyntaxError& e) {
            CHECK(e.line == line);
            CHECK(e.column >= 1);
        }
    };
    expect_error("x = 1", 1);                    // missing semicolon
    expect_error("x = \"unterminated;\n", 1);    // unterminated string
    expect_error("x = \"bad\\q\";", 1);          // unknown escape
    expect_error("if (nondet) { x = 1; }", 1);   // block needs its semicolon
    expect_error("x = 1;\ny = ;", 2);            // missing expression
    expect_error("x = 1; garbage", 1);           // trailing junk
    expect_error("while nondet { };", 1);        // condition needs parens
    expect_error("assert 1 < 2;", 1);            // assert needs parens
    expect_error("if = 3;", 1);                  // keyword as identifier

    // the reserved characters may not appear in string constants
    expect_error(std::string("x = \"a") + '\x7f' + "\";", 1);
    expect_error(std::string("x = \"a") + '\x01' + "\";", 1);
}

TEST_CASE("escapes cover quotes and backslashes only") {
    Program p = parse_program("x = \"a\\\"b\\\\c\";");
    ConcreteResult r = concrete_run(p);
    CHECK(std::get<std::string>(r.memory.at("x")) == "a\"b\\c");
    CHECK(show(r.memory.at("x")) == "\"a\\\"b\\\\c\"");
}

TEST_CASE("the alphabet is every literal closed under substrings") {
    Program p = parse_program(read_corpus("count.imp"));
    CHECK(p.alphabet.contains(Symbol::str("th")));
    CHECK(p.alphabet.contains(Symbol::str("the throat")));
    CHECK(p.alphabet.contains(Symbol::str("roat")));      // interior substring
    CHECK(p.alphabet.contains(Symbol::top()));
    CHECK(!p.alphabet.contains(Symbol::str("xyz")));
    CHECK(p.alphabet.chars().count('t') == 1);
    CHECK(p.alphabet.chars().count('z') == 0);
}

TEST_CASE("expressions evaluate like ordinary integer and string code") {
    CHECK(std::get<std::int64_t>(eval_str("1 + 2 * 3")) == 7);
    CHECK(std::get<std::int64_t>(eval_str("(1 + 2) * 3")) == 9);
    CHECK(std::get<std::int64_t>(eval_str("7 / 2")) == 3);
    CHECK(std::get<std::int64_t>(eval_str("1 - 2 - 3")) == -4);
    CHECK(std::get<bool>(eval_str("1 < 2")) == true);
    CHECK(std::get<bool>(eval_str("2 < 2")) == false);
    CHECK(std::get<bool>(eval_str("\"a\" == \"a\"")) == true);
    CHECK(std::get<bool>(eval_str("!(1 == 2) && true")) == true);
    CHECK(std::get<bool>(eval_str("false || 3 == 3")) == true);

    CHECK(std::get<std::string>(eval_str("concat(\"ab\", \"cd\")")) == "abcd");
    CHECK(std::get<std::int64_t>(eval_str("length(\"hello\")")) == 5);
    CHECK(std::get<std::int64_t>(eval_str("indexOf(\"hello\", \"l\")")) == 2);
    CHECK(std::get<std::int64_t>(eval_str("indexOf(\"hello\", \"z\")")) == -1);
    CHECK(std::get<bool>(eval_str("contains(\"hello\", \"ell\")")) == true);
    CHECK(std::get<std::string>(eval_str("substring(\"hello\", 1, 3)")) == "el");
    CHECK(std::get<std::string>(eval_str("replace(\"aaaa\", \"aa\", \"b\")")) == "bb");
    CHECK(std::get<std::string>(eval_str("replace(\"abc\", \"\", \"X\")")) == "abc");
}

TEST_CASE("runtime faults surface as typed exceptions") {
    CHECK_THROWS_AS(eval_str("1 / 0"), std::runtime_error);
    CHECK_THROWS_AS(eval_str("substring(\"ab\", 1, 5)"), SubstringOutOfRange);
    CHECK_THROWS_AS(eval_str("substring(\"ab\", 2, 1)"), SubstringOutOfRange);
    CHECK_THROWS_AS(eval_str("1 + \"a\""), std::runtime_error);   // type mismatch
    CHECK_THROWS_AS(eval_str("length(1)"), std::runtime_error);
    CHECK_THROWS_AS(eval_str("y"), std::runtime_error);           // undefined variable

    Program spin = parse_program("while (nondet) { x = 1; };");
    ConcreteEnv always;
    always.nondet = [] { return true; };
    CHECK_THROWS_AS(concrete_run(spin, always), OutOfFuel);
}

TEST_CASE("scripted inputs drive the corpus to its known outcomes") {
    Program count = parse_program(read_corpus("count.imp"));

    ConcreteEnv pick_this;
    pick_this.nondet = [] { return true; };
    ConcreteResult r = concrete_run(count, pick_this);
    CHECK(std::get<std::int64_t>(r.memory.at("count")) == 3);
    // asserts: 0 < count holds, count == 0 fails, count == 3 holds
    CHECK(r.asserts.at(0) == std::set<bool>{true});
    CHECK(r.asserts.at(1) == std::set<bool>{false});
    CHECK(r.asserts.at(2) == std::set<bool>{true});

    ConcreteResult r2 = concrete_run(count);  // default: nondet = false
    CHECK(std::get<std::int64_t>(r2.memory.at("count")) == 2);
    CHECK(r2.asserts.at(2) == std::set<bool>{false});

    Program subs = parse_program(read_corpus("subs.imp"));
    ConcreteResult r3 = concrete_run(subs, pick_this);
    CHECK(std::get<std::string>(r3.memory.at("res")) == "ring test pas");

    // loop.imp echoes its read() input; run two iterations
    Program loop = parse_program(read_corpus("loop.imp"));
    ConcreteEnv scripted;
    auto flips = std::make_shared<std::deque<bool>>(std::deque<bool>{true, true, false});
    scripted.nondet = [flips] {
        if (flips->empty()) return false;
        bool b = flips->front();
        flips->pop_front();
        return b;
    };
    scripted.read = [] { return std::string("hi"); };
    ConcreteResult r4 = concrete_run(loop, scripted);
    CHECK(std::get<std::string>(r4.memory.at("res")) == "Repeat: hi!hi!");
    CHECK(r4.asserts.at(0) == std::set<bool>{true});
    CHECK(r4.asserts.at(2) == std::set<bool>{false});
}

TEST_CASE("asserts inside loops can observe both outcomes") {
    Program p = parse_program(
        "i = 0;\n"
        "while (i < 2) { assert (i == 0); i = i + 1; };");
    ConcreteResult r = concrete_run(p);
    CHECK(r.asserts.at(0) == std::set<bool>{true, false});
    CHECK(std::get<std::int64_t>(r.memory.at("i")) == 2);
}

TEST_CASE("show renders values the way the driver prints memory") {
    CHECK(show(ConcreteValue(std::int64_t{42})) == "42");
    CHECK(show(ConcreteValue(true)) == "true");
    CHECK(show(ConcreteValue(false)) == "false");
    CHECK(show(ConcreteValue(std::string("hi"))) == "\"hi\"");
}
