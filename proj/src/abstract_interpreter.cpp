// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tarsis/abstract_interpreter.hpp"

#include <chrono>
#include <set>
#include <utility>

#include "tarsis/errors.hpp"
#include "tarsis/parser.hpp"

namespace tarsis {

template <class D>
AbstractMemory<D> lub_mem(const D& dom, const AbstractMemory<D>& a, const AbstractMemory<D>& b) {
    AbstractMemory<D> out = a;
    for (const auto& [name, value] : b) {
        auto it = out.find(name);
        if (it == out.end())
            out.emplace(name, value);
        else
            it->second = lub_value(dom, it->second, value);
    }
    return out;
}

template <class D>
AbstractMemory<D> widen_mem(const D& dom, const AbstractMemory<D>& a, const AbstractMemory<D>& b) {
    AbstractMemory<D> out = b;
    for (const auto& [name, value] : a) {
        auto it = out.find(name);
        if (it == out.end())
            out.emplace(name, value);
        else
            it->second = widen_value(dom, value, it->second);
    }
    return out;
}

template <class D>
bool leq_mem(const D& dom, const AbstractMemory<D>& a, const AbstractMemory<D>& b) {
    if (a.size() != b.size()) return false;
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!leq_value(dom, ia->second, ib->second)) return false;
    }
    return true;
}

namespace {

TraceToken extend(const TraceToken& tok, int id, int outcome, unsigned bound) {
    if (tok.size() >= bound) return tok;
    TraceToken out = tok;
    out.emplace_back(id, outcome);
    return out;
}

template <class D>
void merge_into(const D& dom, Partitions<D>& dst, const TraceToken& tok,
                const AbstractMemory<D>& mem) {
    auto it = dst.find(tok);
    if (it == dst.end())
        dst.emplace(tok, mem);
    else
        it->second = lub_mem(dom, it->second, mem);
}

template <class D>
class Interp {
public:
    using Value = AbstractValue<typename D::Value>;
    using Mem = AbstractMemory<D>;

    Interp(const D& dom, const AnalysisConfig& cfg, std::vector<AssertInfo<D>>* asserts)
        : dom_(dom), cfg_(cfg), asserts_(asserts) {}

    Partitions<D> exec(const StmtPtr& s, Partitions<D> in) {
        if (in.empty()) return in;
        switch (s->kind) {
            case Stmt::Kind::Seq:
                for (const StmtPtr& child : s->stmts) in = exec(child, std::move(in));
                return in;
            case Stmt::Kind::Skip:
                return in;
            case Stmt::Kind::Assign: {
                Partitions<D> out;
                for (const auto& [tok, mem] : in) {
                    Value v = eval(s->expr, mem);
                    // A bottom right-hand side means every run of this trace
                    // crashes in the expression; the trace dies here.
                    if (v.is_bottom()) continue;
                    Mem next = mem;
                    next[s->var] = std::move(v);
                    out.emplace(tok, std::move(next));
                }
                return out;
            }
            case Stmt::Kind::If: {
                Partitions<D> then_in, else_in;
                for (const auto& [tok, mem] : in) {
                    Value c = eval(s->expr, mem);
                    if (c.is_bottom()) continue;
                    BoolSet b = as_bool(c);
                    // Boolean filtering only: the memory flows into an arm
                    // unchanged whenever the guard may take that arm.
                    if (b.has_true())
                        merge_into(dom_, then_in, extend(tok, s->id, 1, cfg_.partition_bound), mem);
                    if (b.has_false())
                        merge_into(dom_, else_in, extend(tok, s->id, 0, cfg_.partition_bound), mem);
                }
                Partitions<D> out = exec(s->stmts[0], std::move(then_in));
                for (const auto& [tok, mem] : exec(s->stmts[1], std::move(else_in)))
                    merge_into(dom_, out, tok, mem);
                return out;
            }
            case Stmt::Kind::While:
                return exec_while(s, std::move(in));
            case Stmt::Kind::Assert: {
                for (const auto& [tok, mem] : in) {
                    Value c = eval(s->expr, mem);
                    if (c.is_bottom()) continue;
                    AssertInfo<D>& info = (*asserts_)[static_cast<size_t>(s->id)];
                    info.outcome = lub(info.outcome, as_bool(c));
                    info.memory = lub_mem(dom_, info.memory, mem);
                }
                return in;
            }
        }
        return in;
    }

private:
    // Loop policy: the first partition_bound iterations run exactly, each
    // exit tagged with the iteration index it left at.  Traces still inside
    // afterwards share a widened head per token: one plain join as warm-up,
    // then widen until the head stops growing.
    Partitions<D> exec_while(const StmtPtr& s, Partitions<D> in) {
        Partitions<D> exits;
        Partitions<D> live = std::move(in);
        for (unsigned k = 0; k < cfg_.partition_bound && !live.empty(); ++k) {
            Partitions<D> stay;
            for (const auto& [tok, mem] : live) {
                Value c = eval(s->expr, mem);
                if (c.is_bottom()) continue;
                BoolSet b = as_bool(c);
                if (b.has_false())
                    merge_into(dom_, exits, extend(tok, s->id, static_cast<int>(k), cfg_.partition_bound),
                               mem);
                if (b.has_true()) stay.emplace(tok, mem);
            }
            live = exec(s->stmts[0], std::move(stay));
        }
        for (const auto& [tok, mem] : live) {
            Mem head = mem;
            bool reaches_exit = true;
            for (unsigned iter = 1;; ++iter) {
                if (iter > cfg_.max_head_iterations)
                    throw Diverged("loop head failed to stabilize");
                Value c = eval(s->expr, head);
                if (c.is_bottom()) {
                    reaches_exit = false;
                    break;
                }
                if (!as_bool(c).has_true()) break;
                Partitions<D> body_in;
                body_in.emplace(tok, head);
                Partitions<D> body_out = exec(s->stmts[0], std::move(body_in));
                // Every run crashes inside the body, so the head is final.
                if (body_out.empty()) break;
                Mem next = lub_mem(dom_, head, collapse(body_out));
                if (iter == 1) {
                    head = std::move(next);
                    continue;
                }
                Mem wide = widen_mem(dom_, head, next);
                bool stable = leq_mem(dom_, wide, head);
                head = std::move(wide);
                if (stable) break;
            }
            if (!reaches_exit) continue;
            Value c = eval(s->expr, head);
            if (!c.is_bottom() && as_bool(c).has_false())
                merge_into(dom_, exits,
                           extend(tok, s->id, static_cast<int>(cfg_.partition_bound),
                                  cfg_.partition_bound),
                           head);
        }
        return exits;
    }

    Mem collapse(const Partitions<D>& parts) {
        Mem out;
        bool first = true;
        for (const auto& [tok, mem] : parts) {
            if (first) {
                out = mem;
                first = false;
            } else {
                out = lub_mem(dom_, out, mem);
            }
        }
        return out;
    }

    // Kind coercions. Callers rule out bottom before calling these; a value
    // of a different kind than expected means the run would be a type error,
    // so the coercions answer with the target kind's top.
    Interval as_int(const Value& v) const {
        return v.kind() == Value::Kind::Int ? v.intv() : Interval::top();
    }
    BoolSet as_bool(const Value& v) const {
        return v.kind() == Value::Kind::Bool ? v.bools() : BoolSet::both();
    }
    typename D::Value as_str(const Value& v) const {
        return v.kind() == Value::Kind::Str ? v.str() : dom_.unknown();
    }

    Value eval(const ExprPtr& e, const Mem& m) const {
        switch (e->kind) {
            case Expr::Kind::Ident: {
                auto it = m.find(e->name);
                return it == m.end() ? Value::top() : it->second;
            }
            case Expr::Kind::IntLit:
                return Value::of_int(Interval::constant(e->int_val));
            case Expr::Kind::BoolLit:
                return Value::of_bool(BoolSet::of(e->bool_val));
            case Expr::Kind::StrLit:
                return Value::of_str(dom_, dom_.constant(e->str_val));
            case Expr::Kind::ReadStr:
                return Value::of_str(dom_, dom_.unknown());
            case Expr::Kind::NondetBool:
                return Value::of_bool(BoolSet::both());
            case Expr::Kind::Add:
            case Expr::Kind::Sub:
            case Expr::Kind::Mul:
            case Expr::Kind::Div: {
                Value a = eval(e->args[0], m);
                Value b = eval(e->args[1], m);
                if (a.is_bottom() || b.is_bottom()) return Value::bottom();
                Interval x = as_int(a);
                Interval y = as_int(b);
                switch (e->kind) {
                    case Expr::Kind::Add: return Value::of_int(x + y);
                    case Expr::Kind::Sub: return Value::of_int(x - y);
                    case Expr::Kind::Mul: return Value::of_int(x * y);
                    default: return Value::of_int(x / y);
                }
            }
            case Expr::Kind::Length: {
                Value a = eval(e->args[0], m);
                if (a.is_bottom()) return Value::bottom();
                return Value::of_int(dom_.length(as_str(a)));
            }
            case Expr::Kind::IndexOf: {
                Value a = eval(e->args[0], m);
                Value b = eval(e->args[1], m);
                if (a.is_bottom() || b.is_bottom()) return Value::bottom();
                return Value::of_int(dom_.index_of(as_str(a), as_str(b)));
            }
            case Expr::Kind::And:
            case Expr::Kind::Or: {
                Value a = eval(e->args[0], m);
                Value b = eval(e->args[1], m);
                if (a.is_bottom() || b.is_bottom()) return Value::bottom();
                BoolSet x = as_bool(a);
                BoolSet y = as_bool(b);
                return Value::of_bool(e->kind == Expr::Kind::And ? x && y : x || y);
            }
            case Expr::Kind::Not: {
                Value a = eval(e->args[0], m);
                if (a.is_bottom()) return Value::bottom();
                return Value::of_bool(!as_bool(a));
            }
            case Expr::Kind::Lt: {
                Value a = eval(e->args[0], m);
                Value b = eval(e->args[1], m);
                if (a.is_bottom() || b.is_bottom()) return Value::bottom();
                if (a.kind() == Value::Kind::Int && b.kind() == Value::Kind::Int) {
                    const Interval& x = a.intv();
                    const Interval& y = b.intv();
                    if (x.hi() < y.lo()) return Value::of_bool(BoolSet::of(true));
                    if (y.hi() <= x.lo()) return Value::of_bool(BoolSet::of(false));
                }
                return Value::of_bool(BoolSet::both());
            }
            case Expr::Kind::Eq: {
                Value a = eval(e->args[0], m);
                Value b = eval(e->args[1], m);
                if (a.is_bottom() || b.is_bottom()) return Value::bottom();
                return Value::of_bool(abstract_eq(a, b));
            }
            case Expr::Kind::Contains: {
                Value a = eval(e->args[0], m);
                Value b = eval(e->args[1], m);
                if (a.is_bottom() || b.is_bottom()) return Value::bottom();
                return Value::of_bool(dom_.contains(as_str(a), as_str(b)));
            }
            case Expr::Kind::Substring: {
                Value a = eval(e->args[0], m);
                Value lo = eval(e->args[1], m);
                Value hi = eval(e->args[2], m);
                if (a.is_bottom() || lo.is_bottom() || hi.is_bottom()) return Value::bottom();
                return Value::of_str(dom_, dom_.substring(as_str(a), as_int(lo), as_int(hi)));
            }
            case Expr::Kind::Concat: {
                Value a = eval(e->args[0], m);
                Value b = eval(e->args[1], m);
                if (a.is_bottom() || b.is_bottom()) return Value::bottom();
                return Value::of_str(dom_, dom_.concat(as_str(a), as_str(b)));
            }
            case Expr::Kind::Replace: {
                Value a = eval(e->args[0], m);
                Value b = eval(e->args[1], m);
                Value c = eval(e->args[2], m);
                if (a.is_bottom() || b.is_bottom() || c.is_bottom()) return Value::bottom();
                return Value::of_str(dom_, dom_.replace(as_str(a), as_str(b), as_str(c)));
            }
        }
        return Value::top();
    }

    BoolSet abstract_eq(const Value& a, const Value& b) const {
        using K = typename Value::Kind;
        if (a.kind() == K::Str && b.kind() == K::Str) return dom_.eq(a.str(), b.str());
        if (a.kind() == K::Int && b.kind() == K::Int) {
            const Interval& x = a.intv();
            const Interval& y = b.intv();
            if (x.lo().is_finite() && x.lo() == x.hi() && x == y) return BoolSet::of(true);
            if (glb(x, y).is_bottom()) return BoolSet::of(false);
            return BoolSet::both();
        }
        if (a.kind() == K::Bool && b.kind() == K::Bool) {
            const BoolSet& x = a.bools();
            const BoolSet& y = b.bools();
            BoolSet out = BoolSet::bottom();
            if ((x.has_true() && y.has_true()) || (x.has_false() && y.has_false()))
                out = lub(out, BoolSet::of(true));
            if ((x.has_true() && y.has_false()) || (x.has_false() && y.has_true()))
                out = lub(out, BoolSet::of(false));
            return out;
        }
        return BoolSet::both();
    }

    const D& dom_;
    const AnalysisConfig& cfg_;
    std::vector<AssertInfo<D>>* asserts_;
};

template <class D>
void collect_asserts(const StmtPtr& s, std::vector<AssertInfo<D>>& out) {
    switch (s->kind) {
        case Stmt::Kind::Seq:
        case Stmt::Kind::If:
        case Stmt::Kind::While:
            for (const StmtPtr& child : s->stmts) collect_asserts(child, out);
            return;
        case Stmt::Kind::Assert: {
            AssertInfo<D>& info = out[static_cast<size_t>(s->id)];
            info.id = s->id;
            info.line = s->line;
            info.col = s->col;
            info.condition = s->expr;
            return;
        }
        default:
            return;
    }
}

void collect_idents(const ExprPtr& e, std::set<std::string>& names) {
    if (!e) return;
    if (e->kind == Expr::Kind::Ident) names.insert(e->name);
    for (const ExprPtr& a : e->args) collect_idents(a, names);
}

template <class D>
std::string pretty_value(const D& dom, const AbstractValue<typename D::Value>& v) {
    using V = AbstractValue<typename D::Value>;
    switch (v.kind()) {
        case V::Kind::Bottom: return "∅";
        case V::Kind::Str: return dom.pretty(v.str());
        case V::Kind::Int: return v.intv().str();
        case V::Kind::Bool: return v.bools().str();
        case V::Kind::Top: return "⊤";
    }
    return "⊤";
}

}  // namespace

template <class D>
AnalysisResult<D> abstract_run(const Program& program, const D& dom,
                               const AnalysisConfig& config) {
    auto start = std::chrono::steady_clock::now();
    AnalysisResult<D> result;
    result.asserts.resize(static_cast<size_t>(program.num_asserts));
    collect_asserts(program.body, result.asserts);
    Interp<D> interp(dom, config, &result.asserts);
    Partitions<D> init;
    init.emplace(TraceToken{}, AbstractMemory<D>{});
    result.finals = interp.exec(program.body, std::move(init));
    auto stop = std::chrono::steady_clock::now();
    result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return result;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Ok: return "ok";
        case Verdict::PossibleAlarm: return "PA";
        case Verdict::DefiniteAlarm: return "DA";
        case Verdict::Unreachable: return "unreachable";
    }
    return "ok";
}

template <class D>
Report make_report(const AnalysisResult<D>& result, const D& dom,
                   const std::string& domain_name) {
    Report rep;
    rep.domain = domain_name;
    rep.millis = result.millis;
    for (const AssertInfo<D>& info : result.asserts) {
        ReportEntry entry;
        entry.line = info.line;
        entry.col = info.col;
        entry.condition = info.condition ? to_source(info.condition) : "";
        if (info.outcome.is_bottom())
            entry.verdict = Verdict::Unreachable;
        else if (info.outcome.is_false())
            entry.verdict = Verdict::DefiniteAlarm;
        else if (info.outcome.has_false())
            entry.verdict = Verdict::PossibleAlarm;
        else
            entry.verdict = Verdict::Ok;
        std::set<std::string> names;
        collect_idents(info.condition, names);
        for (const std::string& name : names) {
            auto it = info.memory.find(name);
            entry.values[name] = it == info.memory.end() ? "⊤" : pretty_value(dom, it->second);
        }
        rep.asserts.push_back(std::move(entry));
    }
    return rep;
}

Report analyze_program(const Program& program, DomainKind kind, unsigned widening_n, unsigned tau,
                       const AnalysisConfig& config) {
    switch (kind) {
        case DomainKind::Tarsis:
        case DomainKind::CharFa: {
            AutomatonDomain dom{kind == DomainKind::Tarsis, program.alphabet.chars(), widening_n,
                                tau};
            return make_report(abstract_run(program, dom, config), dom, domain_name(kind));
        }
        case DomainKind::Prefix: {
            PrefixDomain dom;
            return make_report(abstract_run(program, dom, config), dom, domain_name(kind));
        }
        case DomainKind::Suffix: {
            SuffixDomain dom;
            return make_report(abstract_run(program, dom, config), dom, domain_name(kind));
        }
        case DomainKind::CharInclusion: {
            CharInclusionDomain dom;
            return make_report(abstract_run(program, dom, config), dom, domain_name(kind));
        }
    }
    throw std::logic_error("unknown domain kind");
}

// The analysis is compiled once per domain.
#define TARSIS_INSTANTIATE(D)                                                                   \
    template AbstractMemory<D> lub_mem<D>(const D&, const AbstractMemory<D>&,                   \
                                          const AbstractMemory<D>&);                            \
    template AbstractMemory<D> widen_mem<D>(const D&, const AbstractMemory<D>&,                 \
                                            const AbstractMemory<D>&);                          \
    template bool leq_mem<D>(const D&, const AbstractMemory<D>&, const AbstractMemory<D>&);     \
    template AnalysisResult<D> abstract_run<D>(const Program&, const D&, const AnalysisConfig&); \
    template Report make_report<D>(const AnalysisResult<D>&, const D&, const std::string&);

TARSIS_INSTANTIATE(AutomatonDomain)
TARSIS_INSTANTIATE(PrefixDomain)
TARSIS_INSTANTIATE(SuffixDomain)
TARSIS_INSTANTIATE(CharInclusionDomain)

#undef TARSIS_INSTANTIATE

}  // namespace tarsis
