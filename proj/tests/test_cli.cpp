// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tarsis/cli.hpp"

using namespace tarsis;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) {
    return std::string(TARSIS_CORPUS_DIR) + "/" + name;
}

// Scratch file that cleans up after itself.
struct TempFile {
    std::filesystem::path path;
    TempFile(const std::string& name, const std::string& content) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream(path) << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("analyze prints one block per assert and exits by worst verdict") {
    CliRun r = cli({"analyze", corpus("subs.imp"), "--domain", "tarsis"});
    CHECK(r.code == 1);  // the last assert is provably false
    CHECK(r.err.empty());
    CHECK(r.out ==
          "8:1: ok: assert(contains(res, \"g\"))\n"
          "  res = ring test (fai || pas)\n"
          "9:1: PA: assert(contains(res, \"p\"))\n"
          "  res = ring test (fai || pas)\n"
          "10:1: PA: assert(contains(res, \"f\"))\n"
          "  res = ring test (fai || pas)\n"
          "11:1: DA: assert(contains(res, \"d\"))\n"
          "  res = ring test (fai || pas)\n");

    // possible alarms alone do not fail the run
    CliRun ok = cli({"analyze", corpus("loop.imp"), "--domain", "tarsis"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("6:1: ok:") == 0);
}

TEST_CASE("analyze accepts every domain name and rejects others") {
    for (const char* d : {"tarsis", "charfa", "prefix", "suffix", "charinclusion"}) {
        CAPTURE(d);
        CHECK(cli({"analyze", corpus("loop.imp"), "--domain", d}).code == 0);
    }
    CliRun bad = cli({"analyze", corpus("loop.imp"), "--domain", "bricks"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("unknown domain") != std::string::npos);
}

TEST_CASE("json output is machine-shaped and byte-stable across runs") {
    std::vector<std::string> args{"analyze", corpus("count.imp"), "--format", "json"};
    CliRun a = cli(args);
    CliRun b = cli(args);
    CHECK(a.code == 1);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"domain\": \"tarsis\"") != std::string::npos);
    CHECK(a.out.find("\"verdict\": \"DA\"") != std::string::npos);
    CHECK(a.out.find("\"count\": \"[2,3]\"") != std::string::npos);
    CHECK(a.out.find("millis") == std::string::npos);

    // timing is opt-in, precisely because it breaks stability
    CliRun timed = cli({"analyze", corpus("count.imp"), "--format", "json", "--time"});
    CHECK(timed.out.find("\"millis\":") != std::string::npos);
}

TEST_CASE("text output reports timing only when asked") {
    CliRun plain = cli({"analyze", corpus("loop.imp")});
    CHECK(plain.out.find("time:") == std::string::npos);
    CliRun timed = cli({"analyze", corpus("loop.imp"), "--time"});
    CHECK(timed.out.find("time:") != std::string::npos);
    CHECK(timed.out.find(" ms") != std::string::npos);
}

TEST_CASE("a config file fills in defaults but flags win") {
    TempFile cfg("tarsis_cli_test_cfg.json",
                 "{\"domain\": \"prefix\", \"format\": \"json\"}");
    CliRun from_cfg = cli({"analyze", corpus("loop.imp"), "--config", cfg.str()});
    CHECK(from_cfg.code == 0);
    CHECK(from_cfg.out.find("\"domain\": \"prefix\"") != std::string::npos);

    CliRun overridden = cli({"analyze", corpus("loop.imp"), "--config", cfg.str(),
                             "--domain", "suffix", "--format", "text"});
    CHECK(overridden.code == 0);
    CHECK(overridden.out.find("PA:") != std::string::npos);
    CHECK(overridden.out.find("\"domain\"") == std::string::npos);

    TempFile broken("tarsis_cli_test_bad.json", "{not json");
    CHECK(cli({"analyze", corpus("loop.imp"), "--config", broken.str()}).code == 2);
}

TEST_CASE("knob flags reach the analysis") {
    // with the branches kept apart, x is 1 or 3 and the assert is refuted
    // in both worlds; merging them widens x to [1,3], which contains 2
    TempFile fork("tarsis_cli_test_fork.imp",
                  "x = 0;\n"
                  "if (nondet) { x = 1; } else { x = 3; };\n"
                  "assert (x == 2);\n");
    CliRun split = cli({"analyze", fork.str()});
    CHECK(split.code == 1);
    CHECK(split.out.find("DA:") != std::string::npos);
    CliRun merged = cli({"analyze", fork.str(), "--partition-bound", "0"});
    CHECK(merged.code == 0);
    CHECK(merged.out.find("PA:") != std::string::npos);
    CHECK(merged.out.find("DA:") == std::string::npos);

    // huge tau postpones widening; the loop program still converges
    CHECK(cli({"analyze", corpus("loop.imp"), "--tau", "100", "--widening-n", "3"}).code == 0);
}

TEST_CASE("parse failures point at the offending position") {
    TempFile bad("tarsis_cli_test_bad.imp", "x = \"oops;\n");
    CliRun r = cli({"analyze", bad.str()});
    CHECK(r.code == 2);
    CHECK(r.err.find(bad.str() + ":1:") != std::string::npos);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.out.empty());

    CliRun missing = cli({"analyze", "/nonexistent/nowhere.imp"});
    CHECK(missing.code == 2);
    CHECK(!missing.err.empty());
}

TEST_CASE("run executes concretely with scripted inputs") {
    CliRun r = cli({"run", corpus("count.imp"), "--input", "nondet=true"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count=3\n") != std::string::npos);
    CHECK(r.out.find("str=\"ing\"\n") != std::string::npos);
    // the failing assert (count == 0) is reported but not fatal
    CHECK(r.err.find("assert #1 failed") != std::string::npos);

    CliRun quiet = cli({"run", corpus("subs.imp"), "--input", "nondet=true"});
    CHECK(quiet.out.find("res=\"ring test pas\"\n") != std::string::npos);
    CHECK(quiet.err.find("assert #0") == std::string::npos);  // "g" holds
    CHECK(quiet.err.find("assert #2 failed") != std::string::npos);  // no "f"

    // read() inputs are consumed in order, the last one repeating
    CliRun echo = cli({"run", corpus("loop.imp"), "--input", "nondet=true",
                       "--input", "nondet=false", "--input", "read=hi"});
    CHECK(echo.out.find("res=\"Repeat: hi!\"\n") != std::string::npos);

    CHECK(cli({"run", corpus("count.imp"), "--input", "bogus=1"}).code == 2);
    CHECK(cli({"run", corpus("count.imp"), "--input", "nonsense"}).code == 2);
}

TEST_CASE("bench sweeps the corpus across all domains") {
    CliRun r = cli({"bench", TARSIS_CORPUS_DIR});
    CHECK(r.code == 0);
    for (const char* d : {"tarsis", "charfa", "prefix", "suffix", "charinclusion"}) {
        CAPTURE(d);
        CHECK(r.out.find(d) != std::string::npos);
    }
    CHECK(r.out.find("tostring.imp") != std::string::npos);
    CHECK(r.out.find("millis") != std::string::npos);
    CHECK(r.out.find("verdicts") != std::string::npos);

    CHECK(cli({"bench", "/nonexistent/dir"}).code == 2);
}

TEST_CASE("usage errors and help exit distinctly") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"analyze"}).code == 2);  // missing file argument
    CliRun help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("analyze") != std::string::npos);
    CHECK(cli({"analyze", "--help"}).code == 0);
}
