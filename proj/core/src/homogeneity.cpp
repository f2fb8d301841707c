#include "rkl/homogeneity.hpp"

namespace rkl {

bool is_homog_string(const NatSet& h, const BitString& sigma, Color c) {
    for (Nat x : h) {
        if (x >= sigma.size()) break;
        if (sigma[x] != c) return false;
    }
    return true;
}

std::optional<HomWitness> is_homog_path(const NatSet& h, const FinTree& t, Nat horizon) {
    if (horizon > t.horizon())
        throw InvalidArgument("horizon " + std::to_string(horizon) + " exceeds tree horizon " +
                              std::to_string(t.horizon()));
    auto first = t.members().lower_bound(BitString(horizon, Color::zero));
    for (Color c : kColors) {
        for (auto it = first; it != t.members().end(); ++it) {
            if (is_homog_string(h, *it, c)) return HomWitness{c, {*it}, {horizon}};
        }
    }
    return std::nullopt;
}

std::optional<Color> is_homog_graded(const NatSet& h, const StringFamily& family) {
    if (!family.graded()) throw NotGraded();
    for (Color c : kColors) {
        bool ok = true;
        for (const auto& sigma : family.members()) {
            if (h.contains(sigma.size()) && !is_homog_string(h, sigma, c)) {
                ok = false;
                break;
            }
        }
        if (ok) return c;
    }
    return std::nullopt;
}

} // namespace rkl
