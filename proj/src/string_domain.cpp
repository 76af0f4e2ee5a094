// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tarsis/string_domain.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "tarsis/errors.hpp"
#include "tarsis/regex.hpp"

namespace tarsis {

namespace {

// Concrete language of an acyclic, top-free automaton.
std::set<std::string> concrete_strings(const Automaton& a) {
    std::set<std::string> out;
    for (const auto& word : enumerate_symbol_language(a)) {
        std::string s;
        for (const auto& sym : word) s += sym.text();
        out.insert(s);
    }
    return out;
}

// A run of consecutive transitions whose labels concatenate exactly to one
// search string. states has one more entry than edges.
struct Window {
    std::vector<std::size_t> edges;  // indexes into the automaton's transition list
    std::vector<StateId> states;
};

std::vector<Window> find_windows(const Automaton& a, const Symbol& needle) {
    const auto& ts = a.transitions();
    std::vector<Window> out;
    if (needle.is_top()) {
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (ts[i].label && ts[i].label->is_top())
                out.push_back({{i}, {ts[i].from, ts[i].to}});
        return out;
    }
    const std::string& sigma = needle.text();
    if (sigma.empty()) return out;

    std::map<StateId, std::vector<std::size_t>> by_from;
    for (std::size_t i = 0; i < ts.size(); ++i) by_from[ts[i].from].push_back(i);

    // Depth-first growth of label concatenations. Labels are nonempty, so the
    // matched length strictly increases and the search depth is at most
    // |sigma| even in cyclic automata.
    std::vector<std::size_t> edge_stack;
    auto grow = [&](auto&& self, StateId at, std::size_t matched) -> void {
        if (matched == sigma.size()) {
            Window w;
            w.edges = edge_stack;
            w.states.push_back(ts[edge_stack.front()].from);
            for (std::size_t e : edge_stack) w.states.push_back(ts[e].to);
            out.push_back(std::move(w));
            return;
        }
        auto it = by_from.find(at);
        if (it == by_from.end()) return;
        for (std::size_t ei : it->second) {
            const auto& t = ts[ei];
            if (!t.label || t.label->is_top()) continue;
            const std::string& txt = t.label->text();
            if (txt.size() > sigma.size() - matched) continue;
            if (sigma.compare(matched, txt.size(), txt) != 0) continue;
            edge_stack.push_back(ei);
            self(self, t.to, matched + txt.size());
            edge_stack.pop_back();
        }
    };
    for (StateId q = 0; q < a.num_states(); ++q) grow(grow, q, 0);
    return out;
}

bool windows_conflict(const std::vector<Window>& ws) {
    auto interior = [](const Window& w) {
        return std::set<StateId>(w.states.begin() + 1, w.states.end() - 1);
    };
    for (std::size_t i = 0; i < ws.size(); ++i) {
        std::set<std::size_t> edges_i(ws[i].edges.begin(), ws[i].edges.end());
        std::set<StateId> states_i(ws[i].states.begin(), ws[i].states.end());
        auto int_i = interior(ws[i]);
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            for (std::size_t e : ws[j].edges)
                if (edges_i.count(e)) return true;
            for (StateId q : interior(ws[j]))
                if (states_i.count(q)) return true;
            for (StateId q : ws[j].states)
                if (int_i.count(q)) return true;
        }
    }
    return false;
}

// Bridges every window through its replacement automaton; when destructive,
// additionally removes matched material where no other string shares it.
Automaton replace_rewire(const Automaton& a,
                         const std::vector<std::pair<Window, const Automaton*>>& jobs,
                         bool destructive) {
    const std::size_t original_edges = a.transitions().size();
    StateId n = a.num_states();
    std::vector<Transition> ts = a.transitions();
    for (const auto& [w, repl] : jobs) {
        StateId off = n;
        n += repl->num_states();
        for (const auto& t : repl->transitions())
            ts.push_back({static_cast<StateId>(t.from + off), t.label,
                          static_cast<StateId>(t.to + off)});
        ts.push_back({w.states.front(), std::nullopt,
                      static_cast<StateId>(repl->initial() + off)});
        for (StateId f : repl->finals())
            ts.push_back({static_cast<StateId>(f + off), std::nullopt, w.states.back()});
    }

    std::set<std::size_t> dead_edges;
    std::set<StateId> dead_states;
    if (destructive) {
        std::vector<Window> ws;
        for (const auto& [w, repl] : jobs) ws.push_back(w);
        if (!windows_conflict(ws)) {
            for (const auto& w : ws) {
                if (w.edges.size() == 1) {
                    dead_edges.insert(w.edges[0]);
                    continue;
                }
                // Backwards over interior states; a state is removable only
                // when the window's own edges are its sole traffic, so no
                // other accepted string is cut.
                for (std::size_t k = w.states.size() - 2; k >= 1; --k) {
                    StateId qk = w.states[k];
                    if (qk == a.initial() || a.is_final(qk)) break;
                    bool sole = true;
                    for (std::size_t e = 0; e < original_edges && sole; ++e) {
                        if (ts[e].from == qk && e != w.edges[k]) sole = false;
                        if (ts[e].to == qk && e != w.edges[k - 1]) sole = false;
                    }
                    if (!sole) break;
                    dead_states.insert(qk);
                }
            }
        }
    }

    std::vector<Transition> kept;
    for (std::size_t e = 0; e < ts.size(); ++e) {
        if (e < original_edges && dead_edges.count(e)) continue;
        if (dead_states.count(ts[e].from) || dead_states.count(ts[e].to)) continue;
        kept.push_back(ts[e]);
    }
    return determinize_minimize(Automaton::raw(n, a.initial(), a.finals(), kept));
}

// Every character-level occurrence of sigma along every path must start and
// end on symbol boundaries, and no occurrence may straddle the border of an
// unknown-string edge. Occurrences entirely inside unknown material are fine:
// the unknown edge absorbs the rewrite.
bool aligned_everywhere(const std::vector<Path>& paths, const std::string& sigma) {
    for (const auto& p : paths) {
        auto syms = p.symbols();
        std::size_t i = 0;
        while (i < syms.size()) {
            if (syms[i].is_top()) {
                ++i;
                continue;
            }
            bool top_left = i > 0;  // runs start either at the path start or after a top
            std::string payload;
            std::set<std::size_t> boundaries{0};
            while (i < syms.size() && !syms[i].is_top()) {
                payload += syms[i].text();
                boundaries.insert(payload.size());
                ++i;
            }
            bool top_right = i < syms.size();

            for (std::size_t pos = payload.find(sigma); pos != std::string::npos;
                 pos = payload.find(sigma, pos + 1)) {
                if (!boundaries.count(pos) || !boundaries.count(pos + sigma.size()))
                    return false;
            }
            if (top_left) {
                std::size_t kmax = std::min(sigma.size() - 1, payload.size());
                for (std::size_t k = 1; k <= kmax; ++k)
                    if (sigma.compare(sigma.size() - k, k, payload, 0, k) == 0) return false;
            }
            if (top_right) {
                std::size_t kmax = std::min(sigma.size() - 1, payload.size());
                for (std::size_t k = 1; k <= kmax; ++k)
                    if (sigma.compare(0, k, payload, payload.size() - k, k) == 0) return false;
            }
            if (top_left && top_right && payload.size() + 2 <= sigma.size()) {
                for (std::size_t at = 1; at + payload.size() < sigma.size(); ++at)
                    if (sigma.compare(at, payload.size(), payload) == 0) return false;
            }
        }
    }
    return true;
}

// First-occurrence interval of one concrete needle across the paths of x.
Interval index_of_one(const std::vector<Path>& paths, const std::string& needle) {
    if (needle.empty()) return Interval::constant(0);

    bool any_may_miss = false;
    bool all_must_miss = true;
    bool any_top = false;
    std::optional<std::int64_t> min_pos;
    std::optional<std::int64_t> max_pos;

    for (const auto& p : paths) {
        auto syms = p.symbols();
        std::string payload;
        std::optional<std::size_t> first_top;
        bool must_contain = false;
        std::string run;
        auto close_run = [&]() {
            if (!run.empty() && run.find(needle) != std::string::npos) must_contain = true;
            run.clear();
        };
        for (const auto& sym : syms) {
            if (sym.is_top()) {
                close_run();
                if (!first_top) first_top = payload.size();
            } else {
                run += sym.text();
                payload += sym.text();
            }
        }
        close_run();
        bool has_top = first_top.has_value();
        any_top = any_top || has_top;

        std::optional<std::size_t> earliest;
        if (has_top) {
            // Earliest position where the fixed prefix before the first
            // unknown edge is compatible with an occurrence; the unknown
            // material can complete any partial match.
            for (std::size_t pos = 0; pos <= *first_top; ++pos) {
                std::size_t k = std::min(*first_top - pos, needle.size());
                if (payload.compare(pos, k, needle, 0, k) == 0) {
                    earliest = pos;
                    break;
                }
            }
        } else {
            std::size_t pos = payload.find(needle);
            if (pos != std::string::npos) earliest = pos;
        }

        bool must_miss = !has_top && !earliest.has_value();
        all_must_miss = all_must_miss && must_miss;
        if (!must_contain) any_may_miss = true;

        if (earliest) {
            std::int64_t e = static_cast<std::int64_t>(*earliest);
            if (!min_pos || e < *min_pos) min_pos = e;
            if (!has_top && (!max_pos || e > *max_pos)) max_pos = e;
        }
    }

    if (all_must_miss) return Interval::constant(-1);
    Bound lo = any_may_miss ? Bound::of(-1) : Bound::of(min_pos.value());
    Bound hi = any_top ? Bound::pos_inf() : Bound::of(max_pos.value());
    return Interval::of(lo, hi);
}

Automaton union_all(const std::vector<Automaton>& parts) {
    if (parts.empty()) return Automaton::empty_language();
    StateId n = 1;  // fresh initial
    std::set<StateId> finals;
    std::vector<Transition> ts;
    for (const auto& p : parts) {
        StateId off = n;
        n += p.num_states();
        ts.push_back({0, std::nullopt, static_cast<StateId>(p.initial() + off)});
        for (const auto& t : p.transitions())
            ts.push_back({static_cast<StateId>(t.from + off), t.label,
                          static_cast<StateId>(t.to + off)});
        for (StateId f : p.finals()) finals.insert(static_cast<StateId>(f + off));
    }
    return determinize_minimize(Automaton::raw(n, 0, finals, ts));
}

}  // namespace

StringAbs StringAbs::constant(std::string_view s) {
    return StringAbs(Automaton::from_strings({std::string(s)}));
}

StringAbs StringAbs::any_string_symbolic() {
    return StringAbs(Automaton::from_symbols({Symbol::top()}));
}

StringAbs StringAbs::any_string_chars(const std::set<char>& chars) {
    std::set<char> cs = chars;
    cs.insert(kAnyChar);
    return StringAbs(Automaton::char_loop(cs));
}

StringAbs StringAbs::of(const Automaton& a) { return StringAbs(determinize_minimize(a)); }

StringAbs lub(const StringAbs& a, const StringAbs& b) {
    return StringAbs::of(lub(a.automaton(), b.automaton()));
}

bool leq(const StringAbs& a, const StringAbs& b) { return leq(a.automaton(), b.automaton()); }

bool same_language(const StringAbs& a, const StringAbs& b) {
    return equal_language(a.automaton(), b.automaton());
}

bool contains_string(const StringAbs& a, std::string_view s) { return member(a.automaton(), s); }

StringAbs abs_concat(const StringAbs& x, const StringAbs& y) {
    return StringAbs::of(concat(x.automaton(), y.automaton()));
}

Interval abs_length(const StringAbs& x) {
    if (x.is_bottom()) throw BottomInput("length of bottom string value");
    LengthBounds lb = length_bounds(x.automaton());
    Bound lo = Bound::of(static_cast<std::int64_t>(lb.min));
    if (!lb.max) return Interval::of(lo, Bound::pos_inf());
    return Interval::of(lo, Bound::of(static_cast<std::int64_t>(*lb.max)));
}

namespace {

// Occurrence check of one literal needle against every string the automaton
// denotes, by walking the automaton in lockstep with the needle's prefix
// matcher. Any-char positions and unknown-string edges pick their content
// existentially, so the answer is exact: {true} when every denoted string
// contains the needle, {false} when none does.
BoolSet contains_literal(const Automaton& a, const std::string& needle) {
    if (needle.empty()) return BoolSet::of(true);
    const std::size_t m = needle.size();

    std::vector<std::size_t> pi(m, 0);
    for (std::size_t i = 1; i < m; ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && needle[i] != needle[k]) k = pi[k - 1];
        if (needle[i] == needle[k]) ++k;
        pi[i] = k;
    }
    // matched-prefix automaton: states 0..m, with m (full match) absorbing
    auto step = [&](std::size_t s, char c) -> std::size_t {
        if (s == m) return m;
        while (s > 0 && needle[s] != c) s = pi[s - 1];
        return needle[s] == c ? s + 1 : 0;
    };

    std::set<char> probes(needle.begin(), needle.end());
    // One arbitrary character: any needle character, or anything else, which
    // always resets the match (no needle prefix ends in a foreign character).
    auto any_char_steps = [&](std::size_t s) {
        std::set<std::size_t> out;
        if (s == m) {
            out.insert(m);
            return out;
        }
        out.insert(0);
        for (char c : probes) out.insert(step(s, c));
        return out;
    };
    // An arbitrary string can always complete the needle, or wander through
    // any prefix state reachable without completing it.
    std::vector<std::set<std::size_t>> any_string_steps(m + 1);
    any_string_steps[m] = {m};
    for (std::size_t s = 0; s < m; ++s) {
        std::set<std::size_t>& reach = any_string_steps[s];
        std::vector<std::size_t> work{s};
        reach.insert(s);
        while (!work.empty()) {
            std::size_t t = work.back();
            work.pop_back();
            for (std::size_t nxt : any_char_steps(t))
                if (nxt != m && reach.insert(nxt).second) work.push_back(nxt);
        }
        reach.insert(m);
    }

    std::vector<std::vector<const Transition*>> adj(a.num_states());
    for (const auto& t : a.transitions()) adj[t.from].push_back(&t);

    bool may_contain = false;  // some denoted string has the needle
    bool may_avoid = false;    // some denoted string lacks it
    std::set<std::pair<StateId, std::size_t>> seen;
    std::vector<std::pair<StateId, std::size_t>> work{{a.initial(), 0}};
    seen.insert(work.front());
    while (!work.empty() && !(may_contain && may_avoid)) {
        auto [q, s] = work.back();
        work.pop_back();
        if (a.is_final(q)) {
            if (s == m) may_contain = true;
            if (s != m) may_avoid = true;
        }
        for (const Transition* t : adj[q]) {
            std::set<std::size_t> next;
            if (!t->label) {
                next.insert(s);
            } else if (t->label->is_top()) {
                next = any_string_steps[s];
            } else {
                next.insert(s);
                for (char c : t->label->text()) {
                    std::set<std::size_t> after;
                    for (std::size_t u : next) {
                        if (c == kAnyChar) {
                            auto more = any_char_steps(u);
                            after.insert(more.begin(), more.end());
                        } else {
                            after.insert(step(u, c));
                        }
                    }
                    next = std::move(after);
                }
            }
            for (std::size_t u : next) {
                std::pair<StateId, std::size_t> p{t->to, u};
                if (seen.insert(p).second) work.push_back(p);
            }
        }
    }
    if (!may_contain) return BoolSet::of(false);
    if (!may_avoid) return BoolSet::of(true);
    return BoolSet::both();
}

}  // namespace

BoolSet abs_contains(const StringAbs& x, const StringAbs& y) {
    if (x.is_bottom() || y.is_bottom()) throw BottomInput("contains on bottom string value");
    SinglePathResult sp = single_path(y.automaton());
    if (sp.single && sp.longest.find(kAnyChar) == std::string::npos) {
        // The needle language is a chain of prefixes of sp.longest. Its
        // longest string is the hardest to contain and decides whether a miss
        // is possible; its shortest is the easiest and decides whether a hit
        // is. Both checks are exact, so their combination is too.
        BoolSet hardest = contains_literal(x.automaton(), sp.longest);
        LengthBounds lb = length_bounds(y.automaton());
        if (lb.min == sp.longest.size()) return hardest;  // singleton needle
        BoolSet easiest =
            contains_literal(x.automaton(), sp.longest.substr(0, lb.min));
        // A missed shortest prefix implies a missed longest string, so the
        // two flags can never both be off.
        if (easiest.has_true() && hardest.has_false()) return BoolSet::both();
        return BoolSet::of(easiest.has_true());
    }
    if (intersect_empty(y.automaton(), factor_automaton(x.automaton())))
        return BoolSet::of(false);
    return BoolSet::both();
}

Interval abs_index_of(const StringAbs& x, const StringAbs& y) {
    if (x.is_bottom() || y.is_bottom()) throw BottomInput("indexOf on bottom string value");
    if (has_cycle(x.automaton()) || has_cycle(y.automaton()) || reads_top(y.automaton()))
        return Interval::of(Bound::of(-1), Bound::pos_inf());
    if (intersect_empty(y.automaton(), factor_automaton(x.automaton())))
        return Interval::constant(-1);
    // Any-char positions shift matches unpredictably; beyond the definite-miss
    // test above, give up on position arithmetic.
    if (reads_any_char(x.automaton()) || reads_any_char(y.automaton()))
        return Interval::of(Bound::of(-1), Bound::pos_inf());
    auto paths = enumerate_paths(x.automaton());
    Interval acc;
    for (const auto& needle : concrete_strings(y.automaton()))
        acc = lub(acc, index_of_one(paths, needle));
    return acc;
}

Automaton make_replace(const Automaton& a, const Symbol& needle, const Automaton& repl) {
    if (has_cycle(a)) throw CyclicAutomaton("replace on a cyclic automaton");
    auto ws = find_windows(a, needle);
    if (ws.empty()) return determinize_minimize(a);
    std::vector<std::pair<Window, const Automaton*>> jobs;
    jobs.reserve(ws.size());
    for (auto& w : ws) jobs.emplace_back(std::move(w), &repl);
    return replace_rewire(a, jobs, true);
}

StringAbs abs_replace(const StringAbs& x, const StringAbs& search, const StringAbs& repl) {
    if (x.is_bottom() || search.is_bottom() || repl.is_bottom())
        throw BottomInput("replace on bottom string value");
    const Automaton& xa = x.automaton();
    if (has_cycle(xa) || has_cycle(search.automaton()) || reads_top(search.automaton()))
        return StringAbs::any_string_symbolic();

    std::set<std::string> needles = concrete_strings(search.automaton());
    Automaton factors = factor_automaton(xa);
    std::set<std::string> occurring;
    for (const auto& s : needles) {
        if (s.empty()) continue;  // replacing the empty string is the identity
        if (!intersect_empty(Automaton::from_strings({s}), factors)) occurring.insert(s);
    }
    if (occurring.empty()) return StringAbs::of(xa);
    // The window matcher reads labels literally, which is wrong once any-char
    // positions can take part in a match.
    if (reads_any_char(xa) || reads_any_char(search.automaton()))
        return StringAbs::any_string_symbolic();

    auto paths = enumerate_paths(xa);
    for (const auto& s : occurring)
        if (!aligned_everywhere(paths, s)) return StringAbs::any_string_symbolic();

    if (needles.size() == 1)
        return StringAbs::of(make_replace(xa, Symbol::str(*needles.begin()), repl.automaton()));

    // Several search strings: additive rewiring only. Every window is bridged
    // with the replacement joined with its own needle, so partially replaced
    // combinations stay representable and originals survive for the needles
    // that miss.
    std::vector<Automaton> variants;
    variants.reserve(occurring.size());
    for (const auto& s : occurring)
        variants.push_back(lub(repl.automaton(), Automaton::from_strings({s})));
    std::vector<std::pair<Window, const Automaton*>> jobs;
    std::size_t vi = 0;
    for (const auto& s : occurring) {
        for (auto& w : find_windows(xa, Symbol::str(s)))
            jobs.emplace_back(std::move(w), &variants[vi]);
        ++vi;
    }
    return StringAbs::of(replace_rewire(xa, jobs, false));
}

StringAbs abs_substring(const StringAbs& x, const Interval& from, const Interval& to) {
    if (x.is_bottom() || from.is_bottom() || to.is_bottom())
        throw BottomInput("substring on bottom value");
    if (!from.lo().is_finite() || !from.hi().is_finite() || !to.lo().is_finite() ||
        !to.hi().is_finite())
        return StringAbs::of(factor_automaton(x.automaton()));

    std::int64_t flo = std::max<std::int64_t>(0, from.lo().value());
    std::int64_t fhi = from.hi().value();
    std::int64_t tlo = std::max<std::int64_t>(0, to.lo().value());
    std::int64_t thi = to.hi().value();
    // The unknown-edge slicing enumerates skip budgets one by one, so indexes
    // have to stay small in absolute value, not just in range width.
    constexpr std::int64_t kMaxIndex = 4096;
    constexpr std::int64_t kMaxPairs = 10000;
    if (fhi > kMaxIndex || thi > kMaxIndex)
        return StringAbs::of(factor_automaton(x.automaton()));
    std::int64_t from_span = fhi < flo ? 0 : fhi - flo + 1;
    std::int64_t to_span = thi < tlo ? 0 : thi - tlo + 1;
    if (from_span * to_span > kMaxPairs)
        return StringAbs::of(factor_automaton(x.automaton()));

    Regex::Ptr r = to_regex(x.automaton());
    std::vector<Automaton> parts;
    for (std::int64_t a = flo; a <= fhi; ++a) {
        for (std::int64_t b = std::max(a, tlo); b <= thi; ++b) {
            Automaton piece = completed_to_automaton(
                rsubs(r, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b - a)));
            if (!piece.is_empty_language()) parts.push_back(std::move(piece));
        }
    }
    return StringAbs::of(union_all(parts));
}

StringAbs abs_widen(const StringAbs& x, const StringAbs& y, unsigned n, unsigned tau) {
    StringAbs u = lub(x, y);
    if (u.automaton().num_states() <= tau) return u;
    return StringAbs::of(widen(x.automaton(), y.automaton(), n));
}

std::string pretty(const StringAbs& x) {
    if (x.is_bottom()) return "∅";
    return pretty(to_regex(x.automaton()));
}

}  // namespace tarsis
