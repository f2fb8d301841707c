#include "doctest.h"

#include "rkl/homogeneity.hpp"
#include "rkl/oracles.hpp"
#include "rkl/reductions.hpp"
#include "support/brute.hpp"

using namespace rkl;
using namespace rkl::testing;

namespace {

// Column-by-column view of a coloring: row y lists f(0,y)..f(y-1,y).
std::vector<std::string> columns(const PairColoring& f) {
    std::vector<std::string> out;
    for (Nat y = 1; y <= f.n(); ++y) {
        std::string col;
        for (Nat x = 0; x < y; ++x) col += static_cast<char>('0' + to_int(f(x, y)));
        out.push_back(col);
    }
    return out;
}

FinTree full_tree(Nat depth) {
    FinTree::Members m;
    for (const auto& s : all_strings(depth)) m.insert(s);
    return FinTree::close(m);
}

} // namespace

TEST_CASE("path_pigeonhole") {
    // Zeros of 0100110 sit at 0,2,3,6 and ones at 1,4,5.
    auto [c, h] = path_pigeonhole(bs("0100110"));
    CHECK(c == Color::zero);
    CHECK(h == NatSet{0, 2, 3, 6});
    CHECK(is_homog_string(h, bs("0100110"), c));

    auto [c2, h2] = path_pigeonhole(bs("1111"));
    CHECK(c2 == Color::one);
    CHECK(h2 == NatSet{0, 1, 2, 3});

    auto [c3, h3] = path_pigeonhole(bs("01"));
    CHECK(c3 == Color::zero);
    CHECK(h3 == NatSet{0});

    CHECK_THROWS_AS(path_pigeonhole(BitString{}), EmptyPath);
}

TEST_CASE("tree_to_stable_coloring") {
    auto f = tree_to_stable_coloring(full_tree(3), 3);
    CHECK(f == PairColoring(3));

    // σ_1="0", σ_2="00", σ_3="000", σ_4="1111".
    auto g = tree_to_stable_coloring(closure_of({"000", "1111"}), 4);
    CHECK(columns(g) == std::vector<std::string>{"0", "00", "000", "1111"});

    try {
        tree_to_stable_coloring(closure_of({"1"}), 2);
        FAIL("expected LevelEmpty");
    } catch (const LevelEmpty& e) {
        CHECK(e.level() == 2);
    }
}

TEST_CASE("stability_bound") {
    auto r = stability_bound(closure_of({"000", "1111"}), 0);
    CHECK(r.dead_bounds == std::map<BitString, Nat>{{bs("0"), 3}});
    CHECK(r.bound == 3);
    CHECK(r.limit_color == Color::one);

    auto full = stability_bound(full_tree(4), 1);
    CHECK(full.bound == 0);
    CHECK(full.dead_bounds.empty());
    CHECK(full.limit_color == Color::zero);

    auto chain = stability_bound(closure_of({"1111"}), 2);
    CHECK(chain.bound == 0);
    CHECK(chain.limit_color == Color::one);

    CHECK_THROWS_AS(stability_bound(closure_of({"11"}), 2), InvalidArgument);
}

TEST_CASE("stability: columns settle on the limit color past the bound") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Nat horizon = 10;
        FinTree::Members m;
        for (Nat i = random_below(rng, 3) + 1; i > 0; --i) m.insert(random_string(rng, horizon));
        for (Nat i = random_below(rng, 5); i > 0; --i) m.insert(random_string(rng, random_below(rng, 7)));
        auto t = FinTree::close(m);
        auto f = tree_to_stable_coloring(t, horizon);
        for (Nat x = 0; x < 6; ++x) {
            auto r = stability_bound(t, x);
            REQUIRE(r.limit_color);
            for (auto [tau, s] : r.dead_bounds) CHECK(s <= r.bound);
            for (Nat y = std::max(r.bound, x) + 1; y <= horizon; ++y) CHECK(f(x, y) == *r.limit_color);
        }
    }
}

TEST_CASE("sigma_to_coloring") {
    // σ_1=σ_2="10", σ_3=σ_4="0110".
    auto f = sigma_to_coloring(family_of({"10", "0110"}), 4);
    CHECK(columns(f) == std::vector<std::string>{"1", "10", "011", "0110"});
    auto sel = select_sigma(family_of({"10", "0110"}), 4);
    CHECK(sel[1] == bs("10"));
    CHECK(sel[3] == bs("0110"));

    std::vector<BitString> zeros;
    for (Nat y = 1; y <= 5; ++y) zeros.emplace_back(y, Color::zero);
    CHECK(sigma_to_coloring(StringFamily::graded_from(zeros), 5) == PairColoring(5));

    try {
        sigma_to_coloring(family_of({"10"}), 3);
        FAIL("expected NoLongString");
    } catch (const NoLongString& e) {
        CHECK(e.y() == 3);
    }
}

TEST_CASE("alternating family: f(0,y) alternates with the parity of y") {
    std::vector<BitString> alt;
    for (Nat len = 1; len <= 6; ++len) {
        BitString s(len, Color::zero);
        s.set(0, to_color(static_cast<int>(len % 2)));
        alt.push_back(s);
    }
    auto f = sigma_to_coloring(StringFamily::graded_from(alt), 6);
    for (Nat y = 1; y <= 6; ++y) CHECK(to_int(f(0, y)) == static_cast<int>(y % 2));
}

TEST_CASE("coloring_to_sigma") {
    auto zero = coloring_to_sigma(PairColoring(3));
    CHECK(as_text(zero.members()) == std::set<std::string>{"0", "00", "000"});
    CHECK(zero.graded());

    auto first = PairColoring::from_function(3, [](Nat x, Nat) { return to_color(x == 0); });
    CHECK(as_text(coloring_to_sigma(first).members()) == std::set<std::string>{"1", "10", "100"});

    auto empty = coloring_to_sigma(PairColoring(0));
    CHECK(empty.empty());
    CHECK(empty.graded());
}

TEST_CASE("sigma_to_coloring inverts coloring_to_sigma") {
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = random_coloring(rng, random_below(rng, 13));
        CHECK(sigma_to_coloring(coloring_to_sigma(f), f.n()) == f);
    }
}

TEST_CASE("ce_tree_to_sigma") {
    auto fam = ce_tree_to_sigma({{1, bs("1")}, {2, bs("11")}, {3, bs("0")}}, 3);
    CHECK(as_text(fam.members()) == std::set<std::string>{"1", "11", "000"});

    auto plain = ce_tree_to_sigma({{1, bs("0")}, {2, bs("00")}, {3, bs("000")}}, 3);
    CHECK(as_text(plain.members()) == std::set<std::string>{"0", "00", "000"});

    auto stage_of = [](auto&& fn) {
        try {
            fn();
        } catch (const BadStage& e) {
            return e.stage();
        }
        return Nat{999};
    };
    CHECK(stage_of([] { ce_tree_to_sigma({{1, bs("11")}}, 1); }) == 1);
    CHECK(stage_of([] { ce_tree_to_sigma({{1, bs("1")}, {1, bs("0")}}, 1); }) == 1);
    CHECK(stage_of([] { ce_tree_to_sigma({{1, bs("1")}}, 2); }) == 2);
    CHECK(stage_of([] { ce_tree_to_sigma({{3, bs("1")}}, 2); }) == 3);
}

TEST_CASE("ce_tree_to_sigma covers its input without spurious branches") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Nat stages = random_below(rng, 12) + 1;
        std::vector<StageEntry> entries;
        for (Nat s = 1; s <= stages; ++s) entries.push_back({s, random_string(rng, random_below(rng, s + 1))});
        auto fam = ce_tree_to_sigma(entries, stages);
        CHECK(fam.graded());
        CHECK(fam.n() == stages);
        for (const auto& en : entries) {
            bool covered = false;
            for (const auto& s : fam.members()) covered = covered || en.tau.is_prefix_of(s);
            CHECK(covered);
        }
        for (const auto& s : fam.members()) {
            bool extends = false;
            for (const auto& en : entries) extends = extends || en.tau.is_prefix_of(s);
            CHECK(extends);
        }
    }
}

TEST_CASE("pi2_tree_to_sigma1") {
    StringPredicate z_ge_y = [](const BitString&, Nat y, Nat z) { return z >= y; };
    // y ranges up to |τ| = 3, so z = 3 must be below the bound.
    CHECK(pi2_tree_to_sigma1(z_ge_y, bs("010"), 4));
    CHECK_FALSE(pi2_tree_to_sigma1(z_ge_y, bs("010"), 3));
    StringPredicate always = [](const BitString&, Nat, Nat) { return true; };
    CHECK(pi2_tree_to_sigma1(always, bs("0110"), 1));
    CHECK(pi2_tree_to_sigma1(always, BitString{}, 1));
    CHECK_THROWS_AS(pi2_tree_to_sigma1(always, bs("0"), 0), InvalidArgument);
}

TEST_CASE("pi2_tree_to_sigma1 is monotone in the bound") {
    Rng rng(21);
    StringPredicate phi = [](const BitString& tau, Nat y, Nat z) {
        Nat ones = 0;
        for (Nat i = 0; i < tau.size(); ++i) ones += static_cast<Nat>(to_int(tau[i]));
        return z >= y + ones;
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto tau = random_string(rng, random_below(rng, 7));
        bool seen_true = false;
        for (Nat b = 1; b <= 16; ++b) {
            bool now = pi2_tree_to_sigma1(phi, tau, b);
            if (seen_true) CHECK(now);
            seen_true = seen_true || now;
        }
    }
}

namespace {

const TernaryPredicate even = [](Nat x, Nat m, Nat n) { return x % 2 == 0 && n >= m; };
const TernaryPredicate odd = [](Nat x, Nat m, Nat n) { return x % 2 == 1 && n >= m; };
const TernaryPredicate never = [](Nat, Nat, Nat) { return false; };

} // namespace

TEST_CASE("yokoyama_h") {
    // h(2,3): m ranges over 0,1,2 and n >= 2 must lie below z, so z = 3.
    CHECK(yokoyama_h(even, odd, 2, 3, 100) == 3);
    // h(3,5): odd side, n >= 4 below z.
    CHECK(yokoyama_h(even, odd, 3, 5, 100) == 5);
    try {
        yokoyama_h(never, never, 0, 1, 10);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.x() == 0);
        CHECK(e.y() == 1);
    }
    CHECK_THROWS_AS(yokoyama_h(even, odd, 2, 3, 2), CapExceeded);
}

TEST_CASE("yokoyama_coloring") {
    auto f = yokoyama_coloring(even, odd, 5, 100);
    for (Nat y = 1; y <= 5; ++y)
        for (Nat x = 0; x < y; ++x) CHECK(f(x, y) == to_color(x % 2));

    TernaryPredicate always = [](Nat, Nat, Nat) { return true; };
    CHECK(yokoyama_coloring(always, never, 5, 10) == PairColoring(5));

    TernaryPredicate low = [](Nat x, Nat m, Nat n) { return n > m && x < 3; };
    TernaryPredicate high = [](Nat x, Nat m, Nat n) { return n > m && x >= 3; };
    auto g = yokoyama_coloring(low, high, 5, 100);
    for (Nat y = 1; y <= 5; ++y)
        for (Nat x = 0; x < y; ++x) CHECK(g(x, y) == to_color(x >= 3));

    CHECK_THROWS_AS(yokoyama_coloring(never, never, 3, 10), CapExceeded);
}

TEST_CASE("yokoyama_coloring colors are backed by their matrix") {
    // Overlapping sets at different rates so both sides compete.
    TernaryPredicate t0 = [](Nat x, Nat m, Nat n) { return x % 3 != 2 && n >= 2 * m; };
    TernaryPredicate t1 = [](Nat x, Nat m, Nat n) { return x % 3 != 0 && n >= m + x; };
    const Nat cap = 200;
    auto f = yokoyama_coloring(t0, t1, 12, cap);
    for (Nat y = 1; y <= 12; ++y)
        for (Nat x = 0; x < y; ++x) {
            const Nat h = yokoyama_h(t0, t1, x, y, cap);
            const auto& theta = f(x, y) == Color::zero ? t0 : t1;
            for (Nat m = 0; m < y; ++m) {
                bool found = false;
                for (Nat n = 0; n < h && !found; ++n) found = theta(x, m, n);
                CHECK(found);
            }
        }
}

TEST_CASE("set_to_path_tree") {
    NatSet evens{0, 2, 4, 6};
    CHECK(as_text(set_to_path_tree(evens, 3).members()) == std::set<std::string>{"-", "1", "10", "101"});
    CHECK(as_text(set_to_path_tree({}, 2).members()) == std::set<std::string>{"-", "0", "00"});
    CHECK(as_text(set_to_path_tree({0, 1, 2, 3}, 2).members()) == std::set<std::string>{"-", "1", "11"});

    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_subset(rng, 20);
        const Nat l = random_below(rng, 15);
        auto t = set_to_path_tree(a, l);
        for (Nat len = 0; len <= l; ++len) CHECK(t.level_size(len) == 1);
        CHECK(t.size() == l + 1);
    }
}
