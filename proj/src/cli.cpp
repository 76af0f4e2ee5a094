// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tarsis/cli.hpp"

#include <deque>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tarsis/concrete.hpp"
#include "tarsis/errors.hpp"
#include "tarsis/parser.hpp"

namespace tarsis {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Options of one `analyze` invocation; --config fills in whatever the
// command line left untouched.
struct AnalyzeOptions {
    std::string file;
    std::string domain = "tarsis";
    unsigned widening_n = 2;
    unsigned tau = 5;
    unsigned partition_bound = 8;
    std::string format = "text";
    bool with_time = false;
    std::string config_path;
};

void apply_config(const nlohmann::json& cfg, const CLI::App& cmd, AnalyzeOptions& opt) {
    if (cmd.count("--domain") == 0 && cfg.contains("domain"))
        opt.domain = cfg.at("domain").get<std::string>();
    if (cmd.count("--widening-n") == 0 && cfg.contains("wideningN"))
        opt.widening_n = cfg.at("wideningN").get<unsigned>();
    if (cmd.count("--tau") == 0 && cfg.contains("tau")) opt.tau = cfg.at("tau").get<unsigned>();
    if (cmd.count("--partition-bound") == 0 && cfg.contains("partitionBound"))
        opt.partition_bound = cfg.at("partitionBound").get<unsigned>();
    if (cmd.count("--format") == 0 && cfg.contains("format"))
        opt.format = cfg.at("format").get<std::string>();
}

Report analyze_file(const std::string& path, DomainKind kind, unsigned widening_n, unsigned tau,
                    unsigned partition_bound) {
    Program program = parse_program(read_file(path));
    AnalysisConfig config;
    config.partition_bound = partition_bound;
    Report rep = analyze_program(program, kind, widening_n, tau, config);
    rep.program = path;
    return rep;
}

bool has_definite_alarm(const Report& rep) {
    for (const ReportEntry& e : rep.asserts)
        if (e.verdict == Verdict::DefiniteAlarm) return true;
    return false;
}

int do_analyze(const AnalyzeOptions& opt, const CLI::App& cmd, std::ostream& out,
               std::ostream& err) {
    AnalyzeOptions merged = opt;
    if (!opt.config_path.empty()) {
        nlohmann::json cfg;
        try {
            cfg = nlohmann::json::parse(read_file(opt.config_path));
        } catch (const std::exception& e) {
            err << "error: bad config: " << e.what() << "\n";
            return 2;
        }
        apply_config(cfg, cmd, merged);
    }
    std::optional<DomainKind> kind = domain_from_name(merged.domain);
    if (!kind) {
        err << "error: unknown domain '" << merged.domain << "'\n";
        return 2;
    }
    if (merged.format != "text" && merged.format != "json") {
        err << "error: unknown format '" << merged.format << "'\n";
        return 2;
    }
    Report rep;
    try {
        rep = analyze_file(merged.file, *kind, merged.widening_n, merged.tau,
                           merged.partition_bound);
    } catch (const SyntaxError& e) {
        err << merged.file << ":" << e.line << ":" << e.column << ": error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    out << (merged.format == "json" ? render_json(rep, merged.with_time)
                                    : render_text(rep, merged.with_time));
    return has_definite_alarm(rep) ? 1 : 0;
}

// Scripted inputs for the concrete runner: each occurrence of --input k=v
// queues one answer for the intrinsic k; the last answer repeats forever.
struct InputScript {
    std::deque<std::string> reads;
    std::deque<bool> nondets;
    std::string last_read;
    bool last_nondet = false;

    std::string next_read() {
        if (!reads.empty()) {
            last_read = reads.front();
            reads.pop_front();
        }
        return last_read;
    }
    bool next_nondet() {
        if (!nondets.empty()) {
            last_nondet = nondets.front();
            nondets.pop_front();
        }
        return last_nondet;
    }
};

int do_run(const std::string& file, const std::vector<std::string>& inputs, std::ostream& out,
           std::ostream& err) {
    auto script = std::make_shared<InputScript>();
    for (const std::string& kv : inputs) {
        auto pos = kv.find('=');
        if (pos == std::string::npos) {
            err << "error: --input expects key=value, got '" << kv << "'\n";
            return 2;
        }
        std::string key = kv.substr(0, pos);
        std::string value = kv.substr(pos + 1);
        if (key == "read") {
            script->reads.push_back(value);
        } else if (key == "nondet") {
            script->nondets.push_back(value == "true" || value == "1");
        } else {
            err << "error: unknown input '" << key << "' (expected read or nondet)\n";
            return 2;
        }
    }

    Program program;
    try {
        program = parse_program(read_file(file));
    } catch (const SyntaxError& e) {
        err << file << ":" << e.line << ":" << e.column << ": error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    ConcreteEnv env;
    env.read = [script] { return script->next_read(); };
    env.nondet = [script] { return script->next_nondet(); };
    ConcreteResult result;
    try {
        result = concrete_run(program, env);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    for (const auto& [name, value] : result.memory) out << name << "=" << show(value) << "\n";
    for (const auto& [id, outcomes] : result.asserts)
        if (outcomes.count(false)) err << "assert #" << id << " failed\n";
    return 0;
}

int do_bench(const std::string& dir, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec))
        if (entry.path().extension() == ".imp") files.push_back(entry.path());
    if (ec) {
        err << "error: cannot read directory " << dir << "\n";
        return 2;
    }
    std::sort(files.begin(), files.end());

    constexpr DomainKind kKinds[] = {DomainKind::Tarsis, DomainKind::CharFa, DomainKind::Prefix,
                                     DomainKind::Suffix, DomainKind::CharInclusion};
    out << std::left << std::setw(16) << "program" << std::setw(16) << "domain" << std::right
        << std::setw(10) << "millis"
        << "  verdicts\n";
    for (const fs::path& file : files) {
        for (DomainKind kind : kKinds) {
            Report rep;
            try {
                rep = analyze_file(file.string(), kind, 2, 5, 8);
            } catch (const std::exception& e) {
                err << file.string() << " (" << domain_name(kind) << "): error: " << e.what()
                    << "\n";
                continue;
            }
            std::string verdicts;
            for (const ReportEntry& entry : rep.asserts) {
                if (!verdicts.empty()) verdicts += ",";
                verdicts += verdict_name(entry.verdict);
            }
            out << std::left << std::setw(16) << file.filename().string() << std::setw(16)
                << domain_name(kind) << std::right << std::setw(10) << std::fixed
                << std::setprecision(1) << rep.millis << "  " << verdicts << "\n";
        }
    }
    return 0;
}

}  // namespace

std::string render_text(const Report& rep, bool with_time) {
    std::ostringstream out;
    for (const ReportEntry& e : rep.asserts) {
        out << e.line << ":" << e.col << ": " << verdict_name(e.verdict) << ": assert("
            << e.condition << ")\n";
        for (const auto& [name, value] : e.values) out << "  " << name << " = " << value << "\n";
    }
    if (with_time)
        out << "time: " << std::fixed << std::setprecision(1) << rep.millis << " ms\n";
    return out.str();
}

std::string render_json(const Report& rep, bool with_time) {
    nlohmann::json j;
    j["program"] = rep.program;
    j["domain"] = rep.domain;
    j["asserts"] = nlohmann::json::array();
    for (const ReportEntry& e : rep.asserts) {
        nlohmann::json entry;
        entry["line"] = e.line;
        entry["col"] = e.col;
        entry["condition"] = e.condition;
        entry["verdict"] = verdict_name(e.verdict);
        entry["values"] = nlohmann::json::object();
        for (const auto& [name, value] : e.values) entry["values"][name] = value;
        j["asserts"].push_back(std::move(entry));
    }
    if (with_time) j["millis"] = rep.millis;
    // ensure_ascii keeps the output seven-bit; the unknown-string glyph comes
    // out as its \u escape.
    return j.dump(2, ' ', true) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"string analysis over finite-state abstractions"};
    app.require_subcommand(1);

    AnalyzeOptions opt;
    CLI::App* analyze = app.add_subcommand("analyze", "abstractly interpret a program");
    analyze->add_option("file", opt.file, "program to analyze")->required();
    analyze->add_option("--domain", opt.domain,
                        "tarsis, charfa, prefix, suffix, or charinclusion");
    analyze->add_option("--widening-n", opt.widening_n, "widening depth");
    analyze->add_option("--tau", opt.tau, "state budget before widening");
    analyze->add_option("--partition-bound", opt.partition_bound, "trace token length limit");
    analyze->add_option("--format", opt.format, "text or json");
    analyze->add_flag("--time", opt.with_time, "include wall-clock time");
    analyze->add_option("--config", opt.config_path, "JSON config; flags win over it");

    std::string run_file;
    std::vector<std::string> run_inputs;
    CLI::App* run = app.add_subcommand("run", "execute a program concretely");
    run->add_option("file", run_file, "program to execute")->required();
    run->add_option("--input", run_inputs, "scripted intrinsic answers, read=s or nondet=b");

    std::string bench_dir;
    CLI::App* bench = app.add_subcommand("bench", "time every domain over a corpus directory");
    bench->add_option("dir", bench_dir, "directory of .imp programs")->required();

    std::vector<const char*> argv;
    argv.push_back("tarsis");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (analyze->parsed()) return do_analyze(opt, *analyze, out, err);
    if (run->parsed()) return do_run(run_file, run_inputs, out, err);
    return do_bench(bench_dir, out, err);
}

}  // namespace tarsis
