// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tarsis/abstract_value.hpp"
#include "tarsis/ast.hpp"
#include "tarsis/domains.hpp"

namespace tarsis {

// Knobs of the fixpoint engine itself.  String-domain precision knobs
// (widening depth, the state budget tau) live on the domain object.
struct AnalysisConfig {
    // Maximum trace-token length.  Also the number of loop iterations that
    // are tracked exactly before the widened tail takes over.
    unsigned partition_bound = 8;
    // Hard cap on widened iterations per loop head; exceeding it means the
    // widening failed to enforce convergence and we throw Diverged.
    unsigned max_head_iterations = 1000;
};

// A trace token is a bounded record of control decisions: (branch node id,
// outcome).  For conditionals the outcome is 1 (then) or 0 (else); for loops
// it is the iteration index at which the trace left the loop, saturated at
// the partition bound.  Once the token is full it stops growing and traces
// that share it are merged.
using TraceToken = std::vector<std::pair<int, int>>;

template <class D>
using AbstractMemory = std::map<std::string, AbstractValue<typename D::Value>>;

template <class D>
using Partitions = std::map<TraceToken, AbstractMemory<D>>;

// Join of two memories.  A variable bound on only one side keeps that
// binding: the other side never assigned it, so no constraint is lost for
// runs that can still read it.
template <class D>
AbstractMemory<D> lub_mem(const D& dom, const AbstractMemory<D>& a, const AbstractMemory<D>& b);

template <class D>
AbstractMemory<D> widen_mem(const D& dom, const AbstractMemory<D>& a, const AbstractMemory<D>& b);

// Pointwise order; memories with different variable sets are incomparable.
template <class D>
bool leq_mem(const D& dom, const AbstractMemory<D>& a, const AbstractMemory<D>& b);

// What the analysis learned about one assert statement.
template <class D>
struct AssertInfo {
    int id = 0;
    int line = 0;
    int col = 0;
    ExprPtr condition;
    // Join of the condition's truth value over every partition and visit;
    // stays empty when no trace reaches the assert.
    BoolSet outcome = BoolSet::bottom();
    // Join of the memories in which the condition was evaluated.
    AbstractMemory<D> memory;
};

template <class D>
struct AnalysisResult {
    std::vector<AssertInfo<D>> asserts;  // in source order
    Partitions<D> finals;                // memories at program exit, per token
    double millis = 0.0;
};

template <class D>
AnalysisResult<D> abstract_run(const Program& program, const D& dom,
                               const AnalysisConfig& config = {});

enum class Verdict { Ok, PossibleAlarm, DefiniteAlarm, Unreachable };

const char* verdict_name(Verdict v);

// Domain-independent view of one analyzed assert, ready for printing.
struct ReportEntry {
    int line = 0;
    int col = 0;
    std::string condition;
    Verdict verdict = Verdict::Ok;
    // Pretty-printed values of the variables mentioned in the condition.
    std::map<std::string, std::string> values;
};

struct Report {
    std::string program;  // path of the analyzed file, filled in by the driver
    std::string domain;
    std::vector<ReportEntry> asserts;
    double millis = 0.0;
};

template <class D>
Report make_report(const AnalysisResult<D>& result, const D& dom, const std::string& domain_name);

// Parse-to-report convenience used by the command line driver.  widening_n
// and tau only matter for the automaton-backed domains.
Report analyze_program(const Program& program, DomainKind kind, unsigned widening_n, unsigned tau,
                       const AnalysisConfig& config);

}  // namespace tarsis
