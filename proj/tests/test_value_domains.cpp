// Copyright (c) tarsis contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tarsis/abstract_value.hpp"
#include "tarsis/baselines.hpp"
#include "tarsis/bool_set.hpp"
#include "tarsis/domains.hpp"
#include "tarsis/interval.hpp"

using namespace tarsis;

namespace {

Interval iv(std::int64_t lo, std::int64_t hi) {
    return Interval::of(Bound::of(lo), Bound::of(hi));
}

// Concrete strings drawn from a prefix value: the text, then optional junk.
std::vector<std::string> prefix_samples(const PrefixVal& v) {
    if (v.bottom) return {};
    if (v.exact) return {v.text};
    return {v.text, v.text + "x", v.text + "longer tail"};
}

std::vector<std::string> suffix_samples(const SuffixVal& v) {
    if (v.bottom) return {};
    if (v.exact) return {v.text};
    return {v.text, "x" + v.text, "some head " + v.text};
}

}  // namespace

TEST_CASE("bounds order and saturate") {
    CHECK(Bound::neg_inf() < Bound::of(INT64_MIN));
    CHECK(Bound::of(INT64_MAX) < Bound::pos_inf());
    CHECK(Bound::of(3) + Bound::of(4) == Bound::of(7));
    CHECK(Bound::of(INT64_MAX) + Bound::of(1) == Bound::pos_inf());
    CHECK(Bound::of(INT64_MIN) + Bound::of(-1) == Bound::neg_inf());
    CHECK(Bound::pos_inf() + Bound::of(-5) == Bound::pos_inf());
    CHECK(-Bound::pos_inf() == Bound::neg_inf());
    CHECK(Bound::of(2) * Bound::pos_inf() == Bound::pos_inf());
    CHECK(Bound::of(-2) * Bound::pos_inf() == Bound::neg_inf());
    CHECK(Bound::of(0) * Bound::pos_inf() == Bound::of(0));
}

TEST_CASE("interval arithmetic matches integer arithmetic on samples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> pick(-20, 20);
    for (int i = 0; i < 500; ++i) {
        std::int64_t a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
        Interval x = iv(std::min(a, b), std::max(a, b));
        Interval y = iv(std::min(c, d), std::max(c, d));
        for (std::int64_t u = std::min(a, b); u <= std::max(a, b); ++u) {
            for (std::int64_t v = std::min(c, d); v <= std::max(c, d); ++v) {
                CHECK((x + y).contains(u + v));
                CHECK((x - y).contains(u - v));
                CHECK((x * y).contains(u * v));
                if (v != 0) CHECK((x / y).contains(u / v));
            }
        }
    }
}

TEST_CASE("interval lattice and widening") {
    CHECK(lub(iv(0, 2), iv(5, 9)) == iv(0, 9));
    CHECK(glb(iv(0, 5), iv(3, 9)) == iv(3, 5));
    CHECK(glb(iv(0, 2), iv(5, 9)).is_bottom());
    CHECK(leq(iv(1, 2), iv(0, 3)));
    CHECK(!leq(iv(0, 3), iv(1, 2)));
    CHECK(leq(Interval::bottom(), iv(0, 0)));

    CHECK(widen(iv(0, 2), iv(0, 5)) == Interval::of(Bound::of(0), Bound::pos_inf()));
    CHECK(widen(iv(0, 2), iv(-1, 2)) == Interval::of(Bound::neg_inf(), Bound::of(2)));
    CHECK(widen(iv(0, 2), iv(0, 2)) == iv(0, 2));
    CHECK(widen(Interval::bottom(), iv(1, 1)) == iv(1, 1));

    CHECK(Interval::top() / Interval::constant(0) == Interval::top());
    CHECK(iv(4, 9) / iv(2, 3) == iv(1, 4));
}

TEST_CASE("bool sets are the powerset lattice with pointwise logic") {
    BoolSet t = BoolSet::of(true), f = BoolSet::of(false), tf = BoolSet::both();
    CHECK((t && f) == f);
    CHECK((t && tf) == tf);
    CHECK((f && tf) == f);   // false absorbs conjunction
    CHECK((t || tf) == t);   // true absorbs disjunction
    CHECK((f || f) == f);
    CHECK(!tf == tf);
    CHECK(!t == f);
    CHECK((BoolSet::bottom() && t).is_bottom());
    CHECK(lub(t, f) == tf);
    CHECK(leq(t, tf));
    CHECK(!leq(tf, t));
    CHECK(BoolSet::both().str() == "{true,false}");
}

TEST_CASE("prefix values join on the common prefix and drop exactness") {
    PrefixVal ab = PrefixVal::of_constant("abc");
    PrefixVal abd = PrefixVal::of_constant("abd");
    PrefixVal j = lub(ab, abd);
    CHECK(j.text == "ab");
    CHECK(!j.exact);
    CHECK(leq(ab, j));
    CHECK(leq(abd, j));
    CHECK(!leq(j, ab));
    CHECK(lub(ab, PrefixVal::bot()) == ab);
    CHECK(leq(PrefixVal::of_constant("abc"), PrefixVal::of_constant("abc")));

    CHECK(prefix_member(j, "abX"));
    CHECK(prefix_member(j, "ab"));
    CHECK(!prefix_member(j, "aX"));
    CHECK(prefix_member(ab, "abc"));
    CHECK(!prefix_member(ab, "abcd"));  // exact constant
}

TEST_CASE("prefix operations stay sound on sampled strings") {
    PrefixVal vals[] = {PrefixVal::of_constant("the throat"), PrefixVal::unknown(),
                        lub(PrefixVal::of_constant("thin"), PrefixVal::of_constant("this")),
                        PrefixVal::of_constant("")};
    for (const auto& x : vals) {
        for (const auto& y : vals) {
            for (const auto& cx : prefix_samples(x)) {
                for (const auto& cy : prefix_samples(y)) {
                    CAPTURE(cx);
                    CAPTURE(cy);
                    CHECK(prefix_member(prefix_concat(x, y), cx + cy));
                    CHECK(prefix_length(x).contains(static_cast<std::int64_t>(cx.size())));
                    bool has = cx.find(cy) != std::string::npos;
                    CHECK(prefix_contains(x, y).contains(has));
                    auto pos = cx.find(cy);
                    std::int64_t ix = pos == std::string::npos
                                          ? -1
                                          : static_cast<std::int64_t>(pos);
                    CHECK(prefix_index_of(x, y).contains(ix));
                    CHECK(prefix_eq(x, y).contains(cx == cy));
                }
            }
        }
    }
}

TEST_CASE("prefix substring keeps the known head only") {
    PrefixVal p = PrefixVal::of_constant("hello world");
    PrefixVal s = prefix_substring(p, Interval::constant(0), Interval::constant(5));
    CHECK(s.text == "hello");
    // slicing re-opens the value: the analysis result is a prefix fact only
    CHECK(!s.exact);
    CHECK(prefix_member(s, "hello"));
    CHECK(prefix_member(s, "helloX"));

    // a non-constant start offset invalidates the whole head
    CHECK(prefix_substring(p, iv(0, 3), Interval::constant(5)) == PrefixVal::unknown());
    // exact value, start past the end: no concrete run survives
    CHECK(prefix_substring(p, Interval::constant(50), Interval::constant(51)).bottom);
}

TEST_CASE("suffix mirrors prefix") {
    SuffixVal ed = SuffixVal::of_constant("passed");
    SuffixVal fd = SuffixVal::of_constant("failed");
    SuffixVal j = lub(ed, fd);
    CHECK(j.text == "ed");
    CHECK(!j.exact);
    CHECK(suffix_member(j, "Xed"));
    CHECK(!suffix_member(j, "Xe"));

    for (const auto& cx : suffix_samples(j))
        CHECK(suffix_member(suffix_concat(j, SuffixVal::of_constant("!")), cx + "!"));

    CHECK(suffix_length(ed) == Interval::constant(6));
    CHECK(suffix_contains(ed, SuffixVal::of_constant("sse")) == BoolSet::of(true));
    CHECK(suffix_contains(j, SuffixVal::of_constant("zzz")) == BoolSet::both());
    CHECK(suffix_eq(ed, fd) == BoolSet::of(false));
}

TEST_CASE("char inclusion tracks certain and possible sets") {
    CharIncVal c = CharIncVal::of_constant("aba");
    CHECK(c.certain == std::set<char>{'a', 'b'});
    CHECK(c.possible == std::set<char>{'a', 'b'});
    CHECK(c.exact == "aba");

    CharIncVal d = CharIncVal::of_constant("bc");
    CharIncVal j = lub(c, d);
    CHECK(j.certain == std::set<char>{'b'});
    CHECK(j.possible == std::set<char>{'a', 'b', 'c'});
    CHECK(!j.exact);
    CHECK(leq(c, j));
    CHECK(charinc_member(j, "aba"));
    CHECK(charinc_member(j, "bc"));
    CHECK(charinc_member(j, "b"));    // covers certain {b}, stays inside possible
    CHECK(!charinc_member(j, "ac"));  // misses the certain 'b'
    CHECK(!charinc_member(j, "bz"));  // 'z' is not possible

    CHECK(charinc_contains(c, CharIncVal::of_constant("b")) == BoolSet::of(true));
    CHECK(charinc_contains(j, CharIncVal::of_constant("z")) == BoolSet::of(false));
    CHECK(charinc_contains(j, CharIncVal::of_constant("a")) == BoolSet::both());
    CHECK(charinc_length(c) == Interval::constant(3));
    CHECK(charinc_length(j).contains(2));
    CHECK(charinc_length(j).contains(3));
    CHECK(charinc_eq(c, CharIncVal::of_constant("aba")) == BoolSet::of(true));
    CHECK(charinc_eq(c, d) == BoolSet::of(false));

    CharIncVal cc = charinc_concat(c, d);
    CHECK(cc.certain == std::set<char>{'a', 'b', 'c'});
    CHECK(charinc_member(cc, "ababc"));

    CharIncVal u = CharIncVal::unknown();
    CHECK(u.open);
    CHECK(charinc_member(u, "anything"));
    CHECK(charinc_contains(u, CharIncVal::of_constant("q")) == BoolSet::both());
}

TEST_CASE("coalesced sum joins across kinds into top") {
    PrefixDomain dom;
    using V = AbstractValue<PrefixVal>;
    V s = V::of_str(dom, PrefixVal::of_constant("a"));
    V i = V::of_int(iv(1, 2));
    V b = V::of_bool(BoolSet::of(true));

    CHECK(lub_value(dom, s, i).is_top());
    CHECK(lub_value(dom, i, b).is_top());
    CHECK(lub_value(dom, s, V::bottom()) == s);
    CHECK(lub_value(dom, i, V::of_int(iv(5, 6))) == V::of_int(iv(1, 6)));

    CHECK(leq_value(dom, V::bottom(), s));
    CHECK(leq_value(dom, s, V::top()));
    CHECK(!leq_value(dom, V::top(), s));
    CHECK(!leq_value(dom, s, i));
    CHECK(leq_value(dom, V::of_int(iv(1, 1)), i));

    CHECK(widen_value(dom, i, V::of_int(iv(1, 9))) ==
          V::of_int(Interval::of(Bound::of(1), Bound::pos_inf())));
    CHECK(widen_value(dom, s, i).is_top());

    // component bottoms collapse to the shared bottom
    CHECK(V::of_int(Interval::bottom()).is_bottom());
    CHECK(V::of_bool(BoolSet::bottom()).is_bottom());
    CHECK(V::of_str(dom, PrefixVal::bot()).is_bottom());
}

TEST_CASE("domain facades answer the same as the free functions") {
    PrefixDomain pd;
    CHECK(pd.contains(PrefixVal::of_constant("abc"), PrefixVal::of_constant("b")) ==
          BoolSet::of(true));
    CHECK(pd.is_bottom(pd.bottom()));
    CHECK(pd.member(pd.unknown(), "whatever"));
    CHECK(pd.pretty(PrefixVal::of_constant("ab")) == pretty(PrefixVal::of_constant("ab")));

    SuffixDomain sd;
    CHECK(sd.length(sd.constant("xy")) == Interval::constant(2));

    CharInclusionDomain cd;
    CHECK(cd.eq(cd.constant("a"), cd.constant("a")) == BoolSet::of(true));
}
