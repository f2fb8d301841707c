#include "rkl/tree.hpp"

#include <algorithm>

namespace rkl {

FinTree::FinTree() : members_{BitString{}} {}

FinTree FinTree::validate(Members strings) {
    strings.insert(BitString{});
    // Checking the immediate parent of every member suffices: shortlex order
    // visits parents first, so the first failure names the shortest offender.
    for (const auto& s : strings) {
        if (s.empty()) continue;
        auto parent = s.prefix(s.size() - 1);
        if (!strings.contains(parent)) {
            auto missing = parent;
            while (!missing.empty() && !strings.contains(missing.prefix(missing.size() - 1)))
                missing = missing.prefix(missing.size() - 1);
            throw NotPrefixClosed(s.str(), missing.empty() ? "-" : missing.str());
        }
    }
    return FinTree(std::move(strings));
}

FinTree FinTree::close(const Members& strings) {
    Members out{BitString{}};
    for (const auto& s : strings) {
        for (Nat len = s.size(); len > 0; --len) {
            if (!out.insert(s.prefix(len)).second) break;
        }
    }
    return FinTree(std::move(out));
}

Nat FinTree::level_size(Nat length) const {
    auto r = level(length);
    return static_cast<Nat>(std::ranges::distance(r));
}

std::optional<BitString> FinTree::lex_least_at(Nat length) const {
    auto r = level(length);
    if (r.empty()) return std::nullopt;
    return *r.begin();
}

Nat FinTree::max_extension_length(const BitString& node) const {
    Nat best = node.size();
    for (Nat len = node.size() + 1; len <= horizon(); ++len) {
        bool found = false;
        for (const auto& s : level(len)) {
            if (node.is_prefix_of(s)) {
                found = true;
                break;
            }
        }
        if (!found) break;
        best = len;
    }
    return best;
}

} // namespace rkl
