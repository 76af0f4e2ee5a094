// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tarsis/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tarsis/errors.hpp"

namespace tarsis {

namespace {

using Adj = std::vector<std::vector<std::pair<std::optional<Symbol>, StateId>>>;

Adj adjacency(const Automaton& a) {
    Adj adj(a.num_states());
    for (const auto& t : a.transitions()) adj[t.from].push_back({t.label, t.to});
    return adj;
}

std::vector<bool> reachable_from(const Automaton& a, StateId start) {
    Adj adj = adjacency(a);
    std::vector<bool> seen(a.num_states(), false);
    std::deque<StateId> work{start};
    seen[start] = true;
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        for (const auto& [lbl, to] : adj[q])
            if (!seen[to]) {
                seen[to] = true;
                work.push_back(to);
            }
    }
    return seen;
}

std::vector<bool> coreachable(const Automaton& a) {
    std::vector<std::vector<StateId>> radj(a.num_states());
    for (const auto& t : a.transitions()) radj[t.to].push_back(t.from);
    std::vector<bool> seen(a.num_states(), false);
    std::deque<StateId> work;
    for (StateId f : a.finals()) {
        seen[f] = true;
        work.push_back(f);
    }
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        for (StateId p : radj[q])
            if (!seen[p]) {
                seen[p] = true;
                work.push_back(p);
            }
    }
    return seen;
}

std::vector<bool> useful_states(const Automaton& a) {
    auto r = reachable_from(a, a.initial());
    auto c = coreachable(a);
    std::vector<bool> u(a.num_states());
    for (StateId q = 0; q < a.num_states(); ++q) u[q] = r[q] && c[q];
    return u;
}

/// Epsilon closure of each state, as sorted state lists.
std::vector<std::vector<StateId>> eps_closures(const Automaton& a) {
    std::vector<std::vector<StateId>> eps(a.num_states());
    for (const auto& t : a.transitions())
        if (!t.label) eps[t.from].push_back(t.to);
    std::vector<std::vector<StateId>> closure(a.num_states());
    for (StateId q = 0; q < a.num_states(); ++q) {
        std::vector<bool> seen(a.num_states(), false);
        std::deque<StateId> work{q};
        seen[q] = true;
        while (!work.empty()) {
            StateId p = work.front();
            work.pop_front();
            closure[q].push_back(p);
            for (StateId r : eps[p])
                if (!seen[r]) {
                    seen[r] = true;
                    work.push_back(r);
                }
        }
        std::sort(closure[q].begin(), closure[q].end());
    }
    return closure;
}

/// Deterministic automaton as dense tables, for minimization.
struct Dfa {
    // per state, sorted by symbol
    std::vector<std::vector<std::pair<Symbol, StateId>>> delta;
    std::vector<bool> final_;
    StateId initial = 0;
    std::size_t size() const { return delta.size(); }
};

Dfa subset_construct(const Automaton& a) {
    auto closure = eps_closures(a);
    Adj adj = adjacency(a);

    auto close = [&](std::vector<StateId> states) {
        std::set<StateId> out;
        for (StateId q : states) out.insert(closure[q].begin(), closure[q].end());
        return std::vector<StateId>(out.begin(), out.end());
    };

    std::map<std::vector<StateId>, StateId> ids;
    std::vector<std::vector<StateId>> sets;
    Dfa dfa;

    auto intern = [&](std::vector<StateId> s) {
        auto [it, fresh] = ids.try_emplace(std::move(s), static_cast<StateId>(sets.size()));
        if (fresh) {
            sets.push_back(it->first);
            dfa.delta.emplace_back();
            bool fin = false;
            for (StateId q : it->first) fin = fin || (a.finals().count(q) != 0);
            dfa.final_.push_back(fin);
        }
        return it->second;
    };

    dfa.initial = intern(close({a.initial()}));
    for (StateId cur = 0; cur < sets.size(); ++cur) {
        std::map<Symbol, std::set<StateId>> move;
        for (StateId q : sets[cur])
            for (const auto& [lbl, to] : adj[q])
                if (lbl) move[*lbl].insert(to);
        for (const auto& [sym, targets] : move) {
            StateId tgt = intern(close({targets.begin(), targets.end()}));
            dfa.delta[cur].push_back({sym, tgt});
        }
    }
    return dfa;
}

/// Drop states that cannot reach a final state; returns false when the
/// initial state itself is dead (empty language).
bool trim_dead(Dfa& dfa) {
    std::vector<std::vector<StateId>> radj(dfa.size());
    for (StateId q = 0; q < dfa.size(); ++q)
        for (const auto& [sym, to] : dfa.delta[q]) radj[to].push_back(q);
    std::vector<bool> live(dfa.size(), false);
    std::deque<StateId> work;
    for (StateId q = 0; q < dfa.size(); ++q)
        if (dfa.final_[q]) {
            live[q] = true;
            work.push_back(q);
        }
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        for (StateId p : radj[q])
            if (!live[p]) {
                live[p] = true;
                work.push_back(p);
            }
    }
    if (!live[dfa.initial]) return false;

    std::vector<StateId> remap(dfa.size(), 0);
    StateId next = 0;
    for (StateId q = 0; q < dfa.size(); ++q)
        if (live[q]) remap[q] = next++;
    Dfa out;
    out.delta.resize(next);
    out.final_.resize(next);
    for (StateId q = 0; q < dfa.size(); ++q) {
        if (!live[q]) continue;
        out.final_[remap[q]] = dfa.final_[q];
        for (const auto& [sym, to] : dfa.delta[q])
            if (live[to]) out.delta[remap[q]].push_back({sym, remap[to]});
    }
    out.initial = remap[dfa.initial];
    dfa = std::move(out);
    return true;
}

/// Moore partition refinement with an implicit dead sink for missing edges.
void minimize(Dfa& dfa) {
    const std::size_t n = dfa.size();
    std::vector<int> cls(n);
    for (std::size_t q = 0; q < n; ++q) cls[q] = dfa.final_[q] ? 1 : 0;

    for (;;) {
        // signature: own class + per-symbol class of the target (-1 = sink)
        std::map<std::pair<int, std::vector<std::pair<Symbol, int>>>, int> sig_ids;
        std::vector<int> next_cls(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<std::pair<Symbol, int>> sig;
            for (const auto& [sym, to] : dfa.delta[q]) sig.push_back({sym, cls[to]});
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(cls[q], std::move(sig));
            auto [it, fresh] = sig_ids.try_emplace(std::move(key), static_cast<int>(sig_ids.size()));
            (void)fresh;
            next_cls[q] = it->second;
        }
        bool changed = false;
        for (std::size_t q = 0; q < n; ++q) changed = changed || (next_cls[q] != cls[q]);
        cls = std::move(next_cls);
        if (!changed) break;
    }

    int num_cls = 0;
    for (std::size_t q = 0; q < n; ++q) num_cls = std::max(num_cls, cls[q] + 1);
    Dfa out;
    out.delta.resize(num_cls);
    out.final_.resize(num_cls);
    std::vector<bool> done(num_cls, false);
    for (std::size_t q = 0; q < n; ++q) {
        int c = cls[q];
        out.final_[c] = dfa.final_[q];
        if (done[c]) continue;
        done[c] = true;
        for (const auto& [sym, to] : dfa.delta[q]) out.delta[c].push_back({sym, cls[to]});
        std::sort(out.delta[c].begin(), out.delta[c].end());
    }
    out.initial = cls[dfa.initial];
    dfa = std::move(out);
}

/// BFS renumbering, visiting edges in symbol order. On a minimal DFA this
/// yields a unique representative per language.
Automaton canonical_numbering(const Dfa& dfa) {
    std::vector<StateId> order(dfa.size(), UINT32_MAX);
    StateId next = 0;
    std::deque<StateId> work{dfa.initial};
    order[dfa.initial] = next++;
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        for (const auto& [sym, to] : dfa.delta[q])  // already symbol-sorted
            if (order[to] == UINT32_MAX) {
                order[to] = next++;
                work.push_back(to);
            }
    }
    assert(next == dfa.size() && "minimized DFA must be connected");

    std::set<StateId> finals;
    std::vector<Transition> transitions;
    for (StateId q = 0; q < dfa.size(); ++q) {
        if (dfa.final_[q]) finals.insert(order[q]);
        for (const auto& [sym, to] : dfa.delta[q])
            transitions.push_back({order[q], sym, order[to]});
    }
    return Automaton::raw(static_cast<StateId>(dfa.size()), 0, std::move(finals),
                          std::move(transitions));
}

std::string label_text(const std::optional<Symbol>& lbl) {
    if (!lbl) return "ε";
    if (lbl->is_top()) return "⊤";
    return lbl->text();
}

}  // namespace

std::vector<Symbol> Path::symbols() const {
    std::vector<Symbol> out;
    out.reserve(transitions.size());
    for (const auto& t : transitions) {
        assert(t.label && "paths are read off canonical automata");
        out.push_back(*t.label);
    }
    return out;
}

Automaton Automaton::raw(StateId num_states, StateId initial, std::set<StateId> finals,
                         std::vector<Transition> transitions) {
    assert(num_states > 0 && initial < num_states);
    Automaton a;
    a.num_states_ = num_states;
    a.initial_ = initial;
    a.finals_ = std::move(finals);
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    a.transitions_ = std::move(transitions);
    return a;
}

Automaton Automaton::epsilon() {
    return raw(1, 0, {0}, {});
}

Automaton Automaton::any_string() {
    return raw(2, 0, {1}, {{0, Symbol::top(), 1}});
}

Automaton Automaton::from_strings(const std::set<std::string>& words) {
    StateId next = 1;
    std::set<StateId> finals;
    std::vector<Transition> ts;
    for (const auto& w : words) {
        StateId cur = 0;
        for (char c : w) {
            ts.push_back({cur, Symbol::chr(c), next});
            cur = next++;
        }
        finals.insert(cur);
    }
    return determinize_minimize(raw(std::max<StateId>(next, 1), 0, std::move(finals), std::move(ts)));
}

Automaton Automaton::from_symbols(const std::vector<Symbol>& chain) {
    StateId n = static_cast<StateId>(chain.size()) + 1;
    std::vector<Transition> ts;
    for (StateId i = 0; i < chain.size(); ++i) ts.push_back({i, chain[i], i + 1});
    return determinize_minimize(raw(n, 0, {n - 1}, std::move(ts)));
}

Automaton Automaton::char_loop(const std::set<char>& chars) {
    std::vector<Transition> ts;
    for (char c : chars) ts.push_back({0, Symbol::chr(c), 0});
    return determinize_minimize(raw(1, 0, {0}, std::move(ts)));
}

bool Automaton::is_empty_language() const {
    auto r = reachable_from(*this, initial_);
    for (StateId f : finals_)
        if (r[f]) return false;
    return true;
}

Automaton determinize_minimize(const Automaton& a) {
    Dfa dfa = subset_construct(a);
    if (!trim_dead(dfa)) return Automaton::empty_language();
    minimize(dfa);
    return canonical_numbering(dfa);
}

namespace {

/// Character-level explosion of `a` without canonicalization: multi-char
/// symbols become chains, top edges become loops over the working charset,
/// kAnyChar edges fan out over it.  Decision procedures determinize the
/// result themselves and skip the (comparatively expensive) minimization.
Automaton flatten_raw(const Automaton& a, const std::set<char>& extra_chars) {
    std::set<char> cs = chars_of(a);
    cs.insert(extra_chars.begin(), extra_chars.end());
    cs.insert(kAnyChar);

    StateId next = a.num_states();
    std::vector<Transition> ts;
    // kAnyChar stands for "one arbitrary character", so an edge carrying it
    // fans out over the whole working charset; that keeps inclusion and
    // intersection tests exact instead of treating it as its own letter.
    auto char_edge = [&](StateId from, char c, StateId to) {
        if (c == kAnyChar)
            for (char x : cs) ts.push_back({from, Symbol::chr(x), to});
        else
            ts.push_back({from, Symbol::chr(c), to});
    };
    for (const auto& t : a.transitions()) {
        if (!t.label) {
            ts.push_back(t);
        } else if (t.label->is_top()) {
            StateId loop = next++;
            ts.push_back({t.from, std::nullopt, loop});
            for (char c : cs) ts.push_back({loop, Symbol::chr(c), loop});
            ts.push_back({loop, std::nullopt, t.to});
        } else {
            const std::string& w = t.label->text();
            StateId cur = t.from;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                char_edge(cur, w[i], next);
                cur = next++;
            }
            char_edge(cur, w.back(), t.to);
        }
    }
    return Automaton::raw(next, a.initial(), a.finals(), std::move(ts));
}

}  // namespace

Automaton flatten(const Automaton& a, const std::set<char>& extra_chars) {
    return determinize_minimize(flatten_raw(a, extra_chars));
}

bool member(const Automaton& a, std::string_view s) {
    Dfa dfa = subset_construct(flatten_raw(a, {}));
    if (!trim_dead(dfa)) return false;

    std::set<StateId> cur{dfa.initial};
    for (char c : s) {
        std::set<StateId> nxt;
        for (StateId q : cur)
            for (const auto& [sym, to] : dfa.delta[q]) {
                char l = sym.text()[0];
                // kAnyChar survives determinization as its own letter and
                // still matches every input character.
                if (l == c || l == kAnyChar) nxt.insert(to);
            }
        cur = std::move(nxt);
        if (cur.empty()) return false;
    }
    for (StateId q : cur)
        if (dfa.final_[q]) return true;
    return false;
}

Automaton lub(const Automaton& a, const Automaton& b) {
    StateId off_a = 1;
    StateId off_b = 1 + a.num_states();
    StateId n = 1 + a.num_states() + b.num_states();
    std::vector<Transition> ts;
    ts.push_back({0, std::nullopt, off_a + a.initial()});
    ts.push_back({0, std::nullopt, off_b + b.initial()});
    for (const auto& t : a.transitions()) ts.push_back({t.from + off_a, t.label, t.to + off_a});
    for (const auto& t : b.transitions()) ts.push_back({t.from + off_b, t.label, t.to + off_b});
    std::set<StateId> finals;
    for (StateId f : a.finals()) finals.insert(f + off_a);
    for (StateId f : b.finals()) finals.insert(f + off_b);
    return determinize_minimize(Automaton::raw(n, 0, std::move(finals), std::move(ts)));
}

namespace {

/// Step table of a character-level DFA, for product walks.  `empty` marks a
/// table whose language is empty; the walks treat it as an immediate sink.
struct CharDfa {
    std::vector<std::map<char, StateId>> step;
    std::vector<bool> final_;
    StateId initial = 0;
    bool empty = false;

    CharDfa(const Automaton& a, const std::set<char>& extra_chars) {
        Dfa dfa = subset_construct(flatten_raw(a, extra_chars));
        if (!trim_dead(dfa)) {
            empty = true;
            step.resize(1);
            final_.assign(1, false);
            return;
        }
        step.resize(dfa.size());
        final_ = dfa.final_;
        for (StateId q = 0; q < dfa.size(); ++q)
            for (const auto& [sym, to] : dfa.delta[q]) step[q][sym.text()[0]] = to;
        initial = dfa.initial;
    }
};

constexpr StateId kSink = UINT32_MAX;

StateId step_or_sink(const CharDfa& d, StateId q, char c) {
    if (q == kSink) return kSink;
    auto it = d.step[q].find(c);
    return it == d.step[q].end() ? kSink : it->second;
}

}  // namespace

bool leq(const Automaton& a, const Automaton& b) {
    if (a.is_empty_language()) return true;
    std::set<char> ca = chars_of(a), cb = chars_of(b);
    CharDfa da(a, cb), db(b, ca);
    if (da.empty) return true;
    if (db.empty) return false;

    // product walk of da against the complement of db
    std::set<std::pair<StateId, StateId>> seen;
    std::deque<std::pair<StateId, StateId>> work;
    work.push_back({da.initial, db.initial});
    seen.insert(work.front());
    while (!work.empty()) {
        auto [qa, qb] = work.front();
        work.pop_front();
        if (da.final_[qa] && (qb == kSink || !db.final_[qb])) return false;
        for (const auto& [c, ta] : da.step[qa]) {
            std::pair<StateId, StateId> nxt{ta, step_or_sink(db, qb, c)};
            if (seen.insert(nxt).second) work.push_back(nxt);
        }
    }
    return true;
}

bool intersect_empty(const Automaton& a, const Automaton& b) {
    std::set<char> ca = chars_of(a), cb = chars_of(b);
    CharDfa da(a, cb), db(b, ca);
    if (da.empty || db.empty) return true;

    std::set<std::pair<StateId, StateId>> seen;
    std::deque<std::pair<StateId, StateId>> work;
    work.push_back({da.initial, db.initial});
    seen.insert(work.front());
    while (!work.empty()) {
        auto [qa, qb] = work.front();
        work.pop_front();
        if (da.final_[qa] && db.final_[qb]) return false;
        for (const auto& [c, ta] : da.step[qa]) {
            StateId tb = step_or_sink(db, qb, c);
            if (tb == kSink) continue;
            std::pair<StateId, StateId> nxt{ta, tb};
            if (seen.insert(nxt).second) work.push_back(nxt);
        }
    }
    return true;
}

bool has_cycle(const Automaton& a) {
    auto useful = useful_states(a);
    Adj adj = adjacency(a);
    // iterative three-color DFS over the useful subgraph
    std::vector<int> color(a.num_states(), 0);
    for (StateId root = 0; root < a.num_states(); ++root) {
        if (!useful[root] || color[root] != 0) continue;
        std::vector<std::pair<StateId, std::size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [q, i] = stack.back();
            if (i < adj[q].size()) {
                StateId to = adj[q][i++].second;
                if (!useful[to]) continue;
                if (color[to] == 1) return true;
                if (color[to] == 0) {
                    color[to] = 1;
                    stack.push_back({to, 0});
                }
            } else {
                color[q] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

bool reads_top(const Automaton& a) {
    auto useful = useful_states(a);
    for (const auto& t : a.transitions())
        if (t.label && t.label->is_top() && useful[t.from] && useful[t.to]) return true;
    return false;
}

bool reads_any_char(const Automaton& a) {
    auto useful = useful_states(a);
    for (const auto& t : a.transitions()) {
        if (!t.label || t.label->is_top()) continue;
        if (!useful[t.from] || !useful[t.to]) continue;
        if (t.label->text().find(kAnyChar) != std::string::npos) return true;
    }
    return false;
}

std::vector<Path> enumerate_paths(const Automaton& a) {
    if (has_cycle(a)) throw CyclicAutomaton("enumerate_paths: automaton has a cycle");
    auto useful = useful_states(a);
    Adj adj = adjacency(a);

    std::vector<Path> out;
    Path cur;
    constexpr std::size_t kPathCap = 200000;

    auto dfs = [&](auto&& self, StateId q) -> void {
        if (a.is_final(q)) out.push_back(cur);
        if (out.size() > kPathCap)
            throw std::runtime_error("enumerate_paths: too many paths");
        for (const auto& [lbl, to] : adj[q]) {
            if (!useful[to]) continue;
            cur.transitions.push_back({q, lbl, to});
            self(self, to);
            cur.transitions.pop_back();
        }
    };
    if (!useful.empty() && useful[a.initial()]) dfs(dfs, a.initial());
    return out;
}

LengthBounds length_bounds(const Automaton& a) {
    if (a.is_empty_language()) throw EmptyLanguage("length_bounds: empty language");
    auto useful = useful_states(a);
    Adj adj = adjacency(a);

    auto weight = [](const std::optional<Symbol>& lbl) -> std::uint64_t {
        return lbl ? lbl->min_length() : 0;
    };

    // Dijkstra for the shortest accepted length
    constexpr std::uint64_t inf = UINT64_MAX;
    std::vector<std::uint64_t> dist(a.num_states(), inf);
    using Item = std::pair<std::uint64_t, StateId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[a.initial()] = 0;
    pq.push({0, a.initial()});
    while (!pq.empty()) {
        auto [d, q] = pq.top();
        pq.pop();
        if (d > dist[q]) continue;
        for (const auto& [lbl, to] : adj[q]) {
            if (!useful[to]) continue;
            std::uint64_t nd = d + weight(lbl);
            if (nd < dist[to]) {
                dist[to] = nd;
                pq.push({nd, to});
            }
        }
    }
    std::uint64_t best = inf;
    for (StateId f : a.finals())
        if (dist[f] < best) best = dist[f];
    assert(best != inf);

    LengthBounds lb;
    lb.min = best;
    if (has_cycle(a) || reads_top(a)) {
        lb.max = std::nullopt;
        return lb;
    }

    // longest path over the useful DAG
    std::vector<StateId> order;
    {
        std::vector<int> indeg(a.num_states(), 0);
        for (const auto& t : a.transitions())
            if (useful[t.from] && useful[t.to]) indeg[t.to]++;
        std::deque<StateId> work;
        for (StateId q = 0; q < a.num_states(); ++q)
            if (useful[q] && indeg[q] == 0) work.push_back(q);
        while (!work.empty()) {
            StateId q = work.front();
            work.pop_front();
            order.push_back(q);
            for (const auto& [lbl, to] : adj[q])
                if (useful[to] && --indeg[to] == 0) work.push_back(to);
        }
    }
    std::vector<std::int64_t> longest(a.num_states(), -1);
    longest[a.initial()] = 0;
    for (StateId q : order) {
        if (longest[q] < 0) continue;
        for (const auto& [lbl, to] : adj[q]) {
            if (!useful[to]) continue;
            std::int64_t nd = longest[q] + static_cast<std::int64_t>(weight(lbl));
            if (nd > longest[to]) longest[to] = nd;
        }
    }
    std::int64_t max = -1;
    for (StateId f : a.finals()) max = std::max(max, longest[f]);
    assert(max >= 0);
    lb.max = static_cast<std::uint64_t>(max);
    return lb;
}

Automaton factor_automaton(const Automaton& a) {
    Automaton c = determinize_minimize(a);
    if (c.is_empty_language()) return Automaton::empty_language();

    // split multi-character labels so factors can start and end mid-label
    StateId next = c.num_states();
    std::vector<Transition> ts;
    for (const auto& t : c.transitions()) {
        if (t.label->is_top() || t.label->text().size() == 1) {
            ts.push_back(t);
            continue;
        }
        const std::string& w = t.label->text();
        StateId cur = t.from;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            ts.push_back({cur, Symbol::chr(w[i]), next});
            cur = next++;
        }
        ts.push_back({cur, Symbol::chr(w.back()), t.to});
    }

    StateId start = next++;
    std::set<StateId> finals;
    for (StateId q = 0; q < next; ++q) {
        finals.insert(q);
        if (q != start) ts.push_back({start, std::nullopt, q});
    }
    return determinize_minimize(Automaton::raw(next, start, std::move(finals), std::move(ts)));
}

SinglePathResult single_path(const Automaton& a) {
    if (a.is_empty_language() || has_cycle(a) || reads_top(a)) return {};
    std::vector<std::string> words;
    for (const auto& syms : enumerate_symbol_language(a)) {
        std::string w;
        for (const auto& s : syms) w += s.text();
        words.push_back(std::move(w));
    }
    assert(!words.empty());
    std::sort(words.begin(), words.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const std::string& longest = words.back();
    if (words.size() > 1 && words[words.size() - 2].size() == longest.size() &&
        words[words.size() - 2] != longest)
        return {};
    for (const auto& w : words)
        if (longest.compare(0, w.size(), w) != 0) return {};
    return {true, longest};
}

Automaton widen(const Automaton& a, const Automaton& b, unsigned n) {
    Automaton u = lub(a, b);
    if (u.num_states() <= 1) return u;
    Adj adj = adjacency(u);

    // local languages: symbol strings of length <= n readable from each state
    using Word = std::vector<Symbol>;
    std::vector<std::set<Word>> local(u.num_states());
    for (StateId q = 0; q < u.num_states(); ++q) local[q].insert(Word{});
    for (unsigned k = 0; k < n; ++k) {
        std::vector<std::set<Word>> next(u.num_states());
        for (StateId q = 0; q < u.num_states(); ++q) {
            next[q].insert(Word{});
            for (const auto& [lbl, to] : adj[q])
                for (const auto& w : local[to]) {
                    Word ext{*lbl};
                    ext.insert(ext.end(), w.begin(), w.end());
                    next[q].insert(std::move(ext));
                }
        }
        local = std::move(next);
    }

    std::map<std::set<Word>, StateId> cls_ids;
    std::vector<StateId> cls(u.num_states());
    for (StateId q = 0; q < u.num_states(); ++q) {
        auto [it, fresh] =
            cls_ids.try_emplace(local[q], static_cast<StateId>(cls_ids.size()));
        (void)fresh;
        cls[q] = it->second;
    }

    std::set<StateId> finals;
    for (StateId f : u.finals()) finals.insert(cls[f]);
    std::vector<Transition> ts;
    for (const auto& t : u.transitions()) ts.push_back({cls[t.from], t.label, cls[t.to]});
    return determinize_minimize(Automaton::raw(static_cast<StateId>(cls_ids.size()),
                                               cls[u.initial()], std::move(finals),
                                               std::move(ts)));
}

Automaton concat(const Automaton& a, const Automaton& b) {
    StateId off_b = a.num_states();
    StateId n = a.num_states() + b.num_states();
    std::vector<Transition> ts = a.transitions();
    for (StateId f : a.finals()) ts.push_back({f, std::nullopt, off_b + b.initial()});
    for (const auto& t : b.transitions()) ts.push_back({t.from + off_b, t.label, t.to + off_b});
    std::set<StateId> finals;
    for (StateId f : b.finals()) finals.insert(f + off_b);
    return determinize_minimize(Automaton::raw(n, a.initial(), std::move(finals), std::move(ts)));
}

std::set<char> chars_of(const Automaton& a) {
    auto useful = useful_states(a);
    std::set<char> out;
    for (const auto& t : a.transitions()) {
        if (!t.label || t.label->is_top()) continue;
        if (!useful[t.from] || !useful[t.to]) continue;
        for (char c : t.label->text()) out.insert(c);
    }
    return out;
}

std::set<std::string> enumerate_language(const Automaton& a, std::size_t max_len) {
    Automaton fl = flatten(a);
    Adj adj = adjacency(fl);

    // prune with shortest distance to a final state
    std::vector<std::size_t> to_final(fl.num_states(), SIZE_MAX);
    {
        std::vector<std::vector<StateId>> radj(fl.num_states());
        for (const auto& t : fl.transitions()) radj[t.to].push_back(t.from);
        std::deque<StateId> work;
        for (StateId f : fl.finals()) {
            to_final[f] = 0;
            work.push_back(f);
        }
        while (!work.empty()) {
            StateId q = work.front();
            work.pop_front();
            for (StateId p : radj[q])
                if (to_final[p] == SIZE_MAX) {
                    to_final[p] = to_final[q] + 1;
                    work.push_back(p);
                }
        }
    }

    std::set<std::string> out;
    std::string cur;
    auto dfs = [&](auto&& self, StateId q) -> void {
        if (fl.is_final(q)) out.insert(cur);
        if (cur.size() == max_len) return;
        for (const auto& [lbl, to] : adj[q]) {
            if (to_final[to] == SIZE_MAX || cur.size() + 1 + to_final[to] > max_len) continue;
            cur.push_back(lbl->text()[0]);
            self(self, to);
            cur.pop_back();
        }
    };
    if (!fl.is_empty_language()) dfs(dfs, fl.initial());
    return out;
}

std::vector<std::vector<Symbol>> enumerate_symbol_language(const Automaton& a) {
    std::vector<std::vector<Symbol>> out;
    for (const auto& p : enumerate_paths(a)) out.push_back(p.symbols());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Automaton::to_dot() const {
    std::ostringstream os;
    os << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    os << "  __start [shape=point];\n  __start -> s" << initial_ << ";\n";
    for (StateId f : finals_) os << "  s" << f << " [shape=doublecircle];\n";
    for (const auto& t : transitions_) {
        std::string lbl = label_text(t.label);
        std::string esc;
        for (char c : lbl) {
            if (c == '"' || c == '\\') esc.push_back('\\');
            esc.push_back(c);
        }
        os << "  s" << t.from << " -> s" << t.to << " [label=\"" << esc << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string Automaton::to_json() const {
    nlohmann::json j;
    j["states"] = num_states_;
    j["initial"] = initial_;
    j["finals"] = finals_;
    j["transitions"] = nlohmann::json::array();
    for (const auto& t : transitions_) {
        nlohmann::json e;
        e["from"] = t.from;
        if (!t.label)
            e["label"] = nullptr;
        else if (t.label->is_top())
            e["label"] = "⊤";
        else
            e["label"] = t.label->text();
        e["to"] = t.to;
        j["transitions"].push_back(std::move(e));
    }
    return j.dump(2, ' ', true);
}

}  // namespace tarsis
