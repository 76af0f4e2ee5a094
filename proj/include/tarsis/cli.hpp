// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tarsis/abstract_interpreter.hpp"

namespace tarsis {

/// Text rendering of a report: one block per assert,
///   <line>:<col>: <verdict>: assert(<condition>)
/// followed by two-space indented `name = value` lines.
std::string render_text(const Report& rep, bool with_time);

/// JSON rendering; non-ASCII (notably the unknown-string glyph) is escaped.
/// Timing is only included when asked for, so the default output is
/// byte-stable across runs.
std::string render_json(const Report& rep, bool with_time);

/// The command line driver behind main(). `args` excludes the program name.
/// Returns the process exit code: 0 for a clean run, 1 when the analysis
/// proved an assert false, 2 for usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tarsis
