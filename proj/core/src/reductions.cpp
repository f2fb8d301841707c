#include "rkl/reductions.hpp"

#include <algorithm>

namespace rkl {

std::pair<Color, NatSet> path_pigeonhole(const BitString& p) {
    if (p.empty()) throw EmptyPath();
    std::vector<Nat> zeros, ones;
    for (Nat x = 0; x < p.size(); ++x) (p[x] == Color::zero ? zeros : ones).push_back(x);
    if (zeros.size() >= ones.size()) return {Color::zero, NatSet(std::move(zeros))};
    return {Color::one, NatSet(std::move(ones))};
}

PairColoring tree_to_stable_coloring(const FinTree& t, Nat n) {
    std::vector<BitString> sigma(n + 1);
    for (Nat y = 1; y <= n; ++y) {
        auto least = t.lex_least_at(y);
        if (!least) throw LevelEmpty(y);
        sigma[y] = std::move(*least);
    }
    return PairColoring::from_function(n, [&](Nat x, Nat y) { return sigma[y][x]; });
}

StabilityReport stability_bound(const FinTree& t, Nat x) {
    if (x + 1 > t.horizon())
        throw InvalidArgument("stability_bound needs x+1 <= horizon (x=" + std::to_string(x) +
                              ", horizon=" + std::to_string(t.horizon()) + ")");
    StabilityReport report;
    report.x = x;
    for (const auto& tau : t.level(x + 1)) {
        Nat reach = t.max_extension_length(tau);
        if (reach == t.horizon()) {
            if (!report.limit_color) report.limit_color = tau[x];
        } else {
            report.dead_bounds.emplace(tau, reach);
            report.bound = std::max(report.bound, reach);
        }
    }
    return report;
}

std::vector<BitString> select_sigma(const StringFamily& family, Nat n) {
    std::vector<BitString> sigma(n + 1);
    const auto& members = family.members();
    for (Nat y = 1; y <= n; ++y) {
        // Shortlex order: the first member of length >= y is the lex-least
        // member of the shortest qualifying length.
        auto it = members.lower_bound(BitString(y, Color::zero));
        if (it == members.end()) throw NoLongString(y);
        sigma[y] = *it;
    }
    return sigma;
}

PairColoring sigma_to_coloring(const StringFamily& family, Nat n) {
    auto sigma = select_sigma(family, n);
    return PairColoring::from_function(n, [&](Nat x, Nat y) { return sigma[y][x]; });
}

StringFamily coloring_to_sigma(const PairColoring& f) {
    std::vector<BitString> strings;
    strings.reserve(f.n());
    for (Nat y = 1; y <= f.n(); ++y) {
        BitString s(y, Color::zero);
        for (Nat x = 0; x < y; ++x) s.set(x, f(x, y));
        strings.push_back(std::move(s));
    }
    return StringFamily::graded_from(strings);
}

StringFamily ce_tree_to_sigma(const std::vector<StageEntry>& entries, Nat max_stage) {
    std::vector<const BitString*> at_stage(max_stage + 1, nullptr);
    for (const auto& entry : entries) {
        if (entry.stage == 0 || entry.stage > max_stage)
            throw BadStage(entry.stage, "outside 1.." + std::to_string(max_stage));
        if (entry.tau.size() > entry.stage)
            throw BadStage(entry.stage, "string " + entry.tau.str() + " is longer than the stage");
        if (at_stage[entry.stage]) throw BadStage(entry.stage, "more than one string enters");
        at_stage[entry.stage] = &entry.tau;
    }
    std::vector<BitString> strings;
    strings.reserve(max_stage);
    for (Nat s = 1; s <= max_stage; ++s) {
        if (!at_stage[s]) throw BadStage(s, "no string enters");
        strings.push_back(at_stage[s]->padded(s, Color::zero));
    }
    return StringFamily::graded_from(strings);
}

bool pi2_tree_to_sigma1(const StringPredicate& phi, const BitString& tau, Nat bound) {
    if (bound == 0) throw InvalidArgument("pi2_tree_to_sigma1 needs bound >= 1");
    // ψ(τ, ẑ) is monotone in ẑ, so it suffices to test ẑ = bound.
    for (Nat x = 0; x <= tau.size(); ++x) {
        const BitString restricted = tau.prefix(x);
        for (Nat y = 0; y <= tau.size(); ++y) {
            bool witnessed = false;
            for (Nat z = 0; z < bound && !witnessed; ++z) witnessed = phi(restricted, y, z);
            if (!witnessed) return false;
        }
    }
    return true;
}

namespace {

// Least z <= cap with (∀m<y)(∃n<z) θ(x,m,n), if any.
std::optional<Nat> least_bound(const TernaryPredicate& theta, Nat x, Nat y, Nat cap) {
    Nat z = 0;
    for (Nat m = 0; m < y; ++m) {
        Nat n = 0;
        while (n < cap && !theta(x, m, n)) ++n;
        if (n == cap) return std::nullopt;
        z = std::max(z, n + 1);
    }
    return z;
}

bool all_witnessed_below(const TernaryPredicate& theta, Nat x, Nat y, Nat z) {
    for (Nat m = 0; m < y; ++m) {
        bool found = false;
        for (Nat n = 0; n < z && !found; ++n) found = theta(x, m, n);
        if (!found) return false;
    }
    return true;
}

} // namespace

Nat yokoyama_h(const TernaryPredicate& theta0, const TernaryPredicate& theta1, Nat x, Nat y,
               Nat cap) {
    if (cap == 0) throw InvalidArgument("yokoyama_h needs cap >= 1");
    auto z0 = least_bound(theta0, x, y, cap);
    auto z1 = least_bound(theta1, x, y, cap);
    if (!z0 && !z1) throw CapExceeded(x, y, cap);
    if (!z0) return *z1;
    if (!z1) return *z0;
    return std::min(*z0, *z1);
}

PairColoring yokoyama_coloring(const TernaryPredicate& theta0, const TernaryPredicate& theta1,
                               Nat n, Nat cap) {
    return PairColoring::from_function(n, [&](Nat x, Nat y) {
        Nat h = yokoyama_h(theta0, theta1, x, y, cap);
        return all_witnessed_below(theta0, x, y, h) ? Color::zero : Color::one;
    });
}

FinTree set_to_path_tree(const NatSet& a, Nat l) {
    FinTree::Members members{BitString{}};
    BitString chi;
    for (Nat x = 0; x < l; ++x) {
        chi.push_back(a.contains(x) ? Color::one : Color::zero);
        members.insert(chi);
    }
    return FinTree::validate(std::move(members));
}

} // namespace rkl
