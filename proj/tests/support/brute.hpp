#pragma once

// Brute-force reference implementations for tests. These deliberately avoid
// the library's search and construction code: everything is enumerated from
// the definitions.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rkl/bitstring.hpp"
#include "rkl/coloring.hpp"
#include "rkl/diagonal.hpp"
#include "rkl/family.hpp"
#include "rkl/natset.hpp"
#include "rkl/tree.hpp"

namespace rkl::testing {

inline BitString bs(const char* text) { return BitString::parse(text); }

inline FinTree::Members strings(std::initializer_list<const char*> items) {
    FinTree::Members out;
    for (auto* s : items) out.insert(bs(s));
    return out;
}

inline FinTree closure_of(std::initializer_list<const char*> items) {
    return FinTree::close(strings(items));
}

inline StringFamily family_of(std::initializer_list<const char*> items) {
    return StringFamily(strings(items));
}

inline std::set<std::string> as_text(const std::set<BitString>& members) {
    std::set<std::string> out;
    for (const auto& m : members) out.insert(m.empty() ? "-" : m.str());
    return out;
}

/// Every prefix of every member, by direct enumeration.
inline std::set<std::string> brute_prefixes(const std::set<std::string>& items) {
    std::set<std::string> out{"-"};
    for (const auto& s : items)
        for (std::size_t len = 1; len <= s.size(); ++len) out.insert(s.substr(0, len));
    return out;
}

/// Lex-least maximum monochromatic subset of [0, n] by enumerating all
/// 2^(n+1) subsets. Returns (color, elements) with size >= min_size.
inline std::optional<std::pair<Color, std::vector<Nat>>> naive_ramsey(const PairColoring& f,
                                                                      Nat min_size) {
    const Nat points = f.n() + 1;
    std::optional<std::pair<Color, std::vector<Nat>>> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << points); ++mask) {
        std::vector<Nat> el;
        for (Nat i = 0; i < points; ++i)
            if (mask >> i & 1U) el.push_back(i);
        if (el.size() < 2) continue;
        Color c = f(el[0], el[1]);
        bool mono = true;
        for (Nat j = 1; j < el.size() && mono; ++j)
            for (Nat i = 0; i < j && mono; ++i)
                if (f(el[i], el[j]) != c) mono = false;
        if (!mono) continue;
        if (!best || el.size() > best->second.size() ||
            (el.size() == best->second.size() && el < best->second))
            best = std::pair{c, el};
    }
    if (best && best->second.size() < min_size) return std::nullopt;
    return best;
}

/// First e+3 elements of W_{e,length} in (stage, value) order, recomputed from
/// the raw events.
inline std::optional<std::vector<Nat>> brute_window(const std::vector<EnumEvent>& events, Nat e,
                                                    Nat length) {
    std::vector<std::pair<Nat, Nat>> seen;  // (stage, x)
    for (const auto& ev : events)
        if (ev.e == e && ev.stage <= length) seen.emplace_back(ev.stage, ev.x);
    std::sort(seen.begin(), seen.end());
    if (seen.size() < e + 3) return std::nullopt;
    std::vector<Nat> w;
    for (Nat i = 0; i < e + 3; ++i) w.push_back(seen[i].second);
    if (*std::max_element(w.begin(), w.end()) >= length) return std::nullopt;
    return w;
}

/// Membership set of the diagonal tree by testing all 2^l strings per level.
inline std::set<BitString> brute_diagonal(const StagedEnum& enums, Nat l_max) {
    std::set<BitString> out;
    for (Nat l = 0; l <= l_max; ++l) {
        std::vector<std::vector<Nat>> windows;
        for (Nat e = 0; e < enums.k(); ++e)
            if (auto w = brute_window(enums.events(), e, l)) windows.push_back(*w);
        for (const auto& s : all_strings(l)) {
            bool ok = true;
            for (const auto& w : windows) {
                bool constant = true;
                for (Nat x : w)
                    if (s[x] != s[w[0]]) constant = false;
                if (constant) ok = false;
            }
            if (ok) out.insert(s);
        }
    }
    return out;
}

// ------------------------------------------------------------ generators

using Rng = std::mt19937_64;

inline Color random_color(Rng& rng) { return to_color(static_cast<int>(rng() & 1U)); }

inline Nat random_below(Rng& rng, Nat bound) { return bound ? static_cast<Nat>(rng() % bound) : 0; }

inline BitString random_string(Rng& rng, Nat len) {
    BitString s;
    for (Nat i = 0; i < len; ++i) s.push_back(random_color(rng));
    return s;
}

inline PairColoring random_coloring(Rng& rng, Nat n) {
    return PairColoring::from_function(n, [&](Nat, Nat) { return random_color(rng); });
}

inline StringFamily random_graded(Rng& rng, Nat n) {
    std::vector<BitString> v;
    for (Nat len = 1; len <= n; ++len) v.push_back(random_string(rng, len));
    return StringFamily::graded_from(v);
}

inline NatSet random_subset(Rng& rng, Nat bound) {
    std::vector<Nat> v;
    for (Nat x = 0; x < bound; ++x)
        if (rng() & 1U) v.push_back(x);
    return NatSet(std::move(v));
}

/// Up to `max_k` indices, each enumerating a handful of elements below
/// `universe` at stages 1..max_stage.
inline StagedEnum random_enum(Rng& rng, Nat max_k, Nat universe, Nat max_stage) {
    std::vector<EnumEvent> events;
    const Nat k = random_below(rng, max_k + 1);
    for (Nat e = 0; e < k; ++e) {
        std::set<Nat> used;
        const Nat count = random_below(rng, e + 7);
        for (Nat i = 0; i < count; ++i) {
            Nat x = random_below(rng, universe);
            if (used.insert(x).second) events.push_back({e, random_below(rng, max_stage) + 1, x});
        }
    }
    return StagedEnum(std::move(events));
}

} // namespace rkl::testing
