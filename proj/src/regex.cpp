// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tarsis/regex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <vector>

#include "tarsis/errors.hpp"

namespace tarsis {

namespace {
Regex::Ptr make(Regex::Kind k, std::optional<Symbol> sym, Regex::Ptr l, Regex::Ptr r);
}

Regex::Ptr Regex::empty() {
    static Ptr e = make(Kind::Empty, std::nullopt, nullptr, nullptr);
    return e;
}

Regex::Ptr Regex::epsilon() {
    static Ptr e = make(Kind::Epsilon, std::nullopt, nullptr, nullptr);
    return e;
}

Regex::Ptr Regex::atom(Symbol s) {
    return make(Kind::Atom, std::move(s), nullptr, nullptr);
}

Regex::Ptr Regex::alt(Ptr l, Ptr r) {
    if (l->kind() == Kind::Empty) return r;
    if (r->kind() == Kind::Empty) return l;
    if (l->equals(*r)) return l;
    return make(Kind::Or, std::nullopt, std::move(l), std::move(r));
}

Regex::Ptr Regex::seq(Ptr l, Ptr r) {
    if (l->kind() == Kind::Empty || r->kind() == Kind::Empty) return empty();
    if (l->kind() == Kind::Epsilon) return r;
    if (r->kind() == Kind::Epsilon) return l;
    return make(Kind::Seq, std::nullopt, std::move(l), std::move(r));
}

Regex::Ptr Regex::star(Ptr inner) {
    if (inner->kind() == Kind::Empty || inner->kind() == Kind::Epsilon) return epsilon();
    if (inner->kind() == Kind::Star) return inner;
    return make(Kind::Star, std::nullopt, std::move(inner), nullptr);
}

bool Regex::equals(const Regex& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Empty:
        case Kind::Epsilon:
            return true;
        case Kind::Atom:
            return *sym_ == *other.sym_;
        case Kind::Star:
            return left_->equals(*other.left_);
        case Kind::Or:
        case Kind::Seq:
            return left_->equals(*other.left_) && right_->equals(*other.right_);
    }
    return false;
}

namespace {

Regex::Ptr make(Regex::Kind k, std::optional<Symbol> sym, Regex::Ptr l, Regex::Ptr r) {
    struct Concrete : Regex {
        Concrete(Kind k, std::optional<Symbol> sym, Ptr l, Ptr r)
            : Regex(k, std::move(sym), std::move(l), std::move(r)) {}
    };
    return std::make_shared<Concrete>(k, std::move(sym), std::move(l), std::move(r));
}

}  // namespace

Regex::Ptr to_regex(const Automaton& input) {
    Automaton a = determinize_minimize(input);
    if (a.is_empty_language()) return Regex::empty();

    const StateId n = a.num_states();
    const StateId kInit = n, kFinal = n + 1;
    std::vector<std::vector<Regex::Ptr>> r(n + 2,
                                           std::vector<Regex::Ptr>(n + 2, Regex::empty()));
    r[kInit][a.initial()] = Regex::epsilon();
    for (StateId f : a.finals()) r[f][kFinal] = Regex::epsilon();
    for (const auto& t : a.transitions())
        r[t.from][t.to] = Regex::alt(r[t.from][t.to], Regex::atom(*t.label));

    std::vector<bool> gone(n + 2, false);
    for (StateId round = 0; round < n; ++round) {
        // pick the remaining state with the fewest incident edge pairs
        StateId best = UINT32_MAX;
        std::size_t best_cost = SIZE_MAX;
        for (StateId s = 0; s < n; ++s) {
            if (gone[s]) continue;
            std::size_t in = 0, out = 0;
            for (StateId q = 0; q < n + 2; ++q) {
                if (gone[q] || q == s) continue;
                if (r[q][s]->kind() != Regex::Kind::Empty) in++;
                if (r[s][q]->kind() != Regex::Kind::Empty) out++;
            }
            std::size_t cost = in * out;
            if (cost < best_cost) {
                best_cost = cost;
                best = s;
            }
        }
        StateId s = best;
        gone[s] = true;
        Regex::Ptr loop = Regex::star(r[s][s]);
        for (StateId p = 0; p < n + 2; ++p) {
            if (gone[p] || r[p][s]->kind() == Regex::Kind::Empty) continue;
            for (StateId q = 0; q < n + 2; ++q) {
                if (gone[q] || r[s][q]->kind() == Regex::Kind::Empty) continue;
                r[p][q] = Regex::alt(r[p][q],
                                     Regex::seq(Regex::seq(r[p][s], loop), r[s][q]));
            }
        }
        for (StateId q = 0; q < n + 2; ++q) {
            r[s][q] = Regex::empty();
            r[q][s] = Regex::empty();
        }
    }
    return r[kInit][kFinal];
}

namespace {

struct Frag {
    StateId start, end;
};

struct NfaBuilder {
    StateId next = 0;
    std::vector<Transition> ts;
    StateId fresh() { return next++; }
    void edge(StateId a, std::optional<Symbol> s, StateId b) { ts.push_back({a, std::move(s), b}); }
};

Frag build(NfaBuilder& b, const Regex::Ptr& r) {
    StateId s = b.fresh(), e = b.fresh();
    switch (r->kind()) {
        case Regex::Kind::Empty:
            break;
        case Regex::Kind::Epsilon:
            b.edge(s, std::nullopt, e);
            break;
        case Regex::Kind::Atom:
            b.edge(s, r->symbol(), e);
            break;
        case Regex::Kind::Or: {
            Frag l = build(b, r->left()), rr = build(b, r->right());
            b.edge(s, std::nullopt, l.start);
            b.edge(s, std::nullopt, rr.start);
            b.edge(l.end, std::nullopt, e);
            b.edge(rr.end, std::nullopt, e);
            break;
        }
        case Regex::Kind::Seq: {
            Frag l = build(b, r->left()), rr = build(b, r->right());
            b.edge(s, std::nullopt, l.start);
            b.edge(l.end, std::nullopt, rr.start);
            b.edge(rr.end, std::nullopt, e);
            break;
        }
        case Regex::Kind::Star: {
            Frag in = build(b, r->inner());
            b.edge(s, std::nullopt, e);
            b.edge(s, std::nullopt, in.start);
            b.edge(in.end, std::nullopt, in.start);
            b.edge(in.end, std::nullopt, e);
            break;
        }
    }
    return {s, e};
}

}  // namespace

Automaton regex_to_automaton(const Regex::Ptr& r) {
    NfaBuilder b;
    Frag f = build(b, r);
    return determinize_minimize(
        Automaton::raw(b.next, f.start, {f.end}, std::move(b.ts)));
}

namespace {

void escape_into(std::ostringstream& os, const std::string& text) {
    for (char c : text) {
        if (c == kAnyChar) {
            os << "·";
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
            os << buf;
        } else {
            os << c;
        }
    }
}

void pretty_into(std::ostringstream& os, const Regex::Ptr& r) {
    switch (r->kind()) {
        case Regex::Kind::Empty:
            os << "∅";
            break;
        case Regex::Kind::Epsilon:
            os << "ε";
            break;
        case Regex::Kind::Atom:
            if (r->symbol().is_top())
                os << "⊤";
            else
                escape_into(os, r->symbol().text());
            break;
        case Regex::Kind::Or: {
            os << "(";
            // flatten nested alternatives into one group
            std::vector<Regex::Ptr> alts;
            auto gather = [&](auto&& self, const Regex::Ptr& x) -> void {
                if (x->kind() == Regex::Kind::Or) {
                    self(self, x->left());
                    self(self, x->right());
                } else {
                    alts.push_back(x);
                }
            };
            gather(gather, r);
            for (std::size_t i = 0; i < alts.size(); ++i) {
                if (i) os << " || ";
                pretty_into(os, alts[i]);
            }
            os << ")";
            break;
        }
        case Regex::Kind::Seq:
            pretty_into(os, r->left());
            pretty_into(os, r->right());
            break;
        case Regex::Kind::Star:
            os << "(";
            pretty_into(os, r->inner());
            os << ")*";
            break;
    }
}

}  // namespace

std::string pretty(const Regex::Ptr& r) {
    std::ostringstream os;
    pretty_into(os, r);
    return os.str();
}

std::set<PartialSubstring> rsubs(const Regex::Ptr& r, std::uint32_t i, std::uint32_t j) {
    using Out = std::set<PartialSubstring>;
    switch (r->kind()) {
        case Regex::Kind::Empty:
            return {};
        case Regex::Kind::Epsilon:
            return {{"", i, j}};
        case Regex::Kind::Atom: {
            if (r->symbol().is_top()) {
                Out out;
                for (std::uint32_t k = 0; k <= i; ++k) out.insert({"", i - k, j});
                for (std::uint32_t k = 0; k <= j; ++k)
                    out.insert({std::string(k, kHole), 0, j - k});
                return out;
            }
            const std::string& s = r->symbol().text();
            const auto len = static_cast<std::uint32_t>(s.size());
            if (i > len) return {{"", i - len, j}};
            if (i + j > len) return {{s.substr(i), 0, j - (len - i)}};
            return {{s.substr(i, j), 0, 0}};
        }
        case Regex::Kind::Or: {
            Out out = rsubs(r->left(), i, j);
            Out rr = rsubs(r->right(), i, j);
            out.insert(rr.begin(), rr.end());
            return out;
        }
        case Regex::Kind::Seq: {
            Out out;
            for (const auto& p : rsubs(r->left(), i, j)) {
                if (p.to_take == 0 && p.to_skip == 0) {
                    out.insert(p);
                    continue;
                }
                for (const auto& q : rsubs(r->right(), p.to_skip, p.to_take))
                    out.insert({p.text + q.text, q.to_skip, q.to_take});
            }
            return out;
        }
        case Regex::Kind::Star: {
            Out result{{"", i, j}};
            constexpr std::size_t kCap = 100000;
            for (;;) {
                Out fresh;
                for (const auto& p : result) {
                    if (p.to_take == 0 && p.to_skip == 0) continue;
                    for (const auto& q : rsubs(r->inner(), p.to_skip, p.to_take)) {
                        PartialSubstring t{p.text + q.text, q.to_skip, q.to_take};
                        if (!result.count(t)) fresh.insert(std::move(t));
                    }
                }
                if (fresh.empty()) break;
                result.insert(fresh.begin(), fresh.end());
                if (result.size() > kCap)
                    throw std::runtime_error("rsubs: slice accumulation does not settle");
            }
            return result;
        }
    }
    return {};
}

Automaton completed_to_automaton(const std::set<PartialSubstring>& slices) {
    NfaBuilder b;
    StateId start = b.fresh();
    std::set<StateId> finals;
    bool any = false;
    for (const auto& p : slices) {
        if (p.to_skip != 0 || p.to_take != 0) continue;
        any = true;
        StateId cur = start;
        std::size_t k = 0;
        while (k < p.text.size()) {
            StateId nxt = b.fresh();
            if (p.text[k] == kHole) {
                while (k < p.text.size() && p.text[k] == kHole) ++k;
                b.edge(cur, Symbol::top(), nxt);
            } else {
                b.edge(cur, Symbol::chr(p.text[k]), nxt);
                ++k;
            }
            cur = nxt;
        }
        finals.insert(cur);
    }
    if (!any) return Automaton::empty_language();
    return determinize_minimize(Automaton::raw(b.next, start, std::move(finals), std::move(b.ts)));
}

}  // namespace tarsis
