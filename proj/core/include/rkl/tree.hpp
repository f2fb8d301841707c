#pragma once

#include <optional>
#include <ranges>
#include <set>
#include <vector>

#include "rkl/bitstring.hpp"

namespace rkl {

/// A prefix-closed finite set of bit strings containing the empty string.
/// The horizon is the maximum member length.
class FinTree {
public:
    using Members = std::set<BitString>;

    /// The root-only tree {ε}.
    FinTree();

    /// Validates prefix closure of `strings ∪ {ε}`; throws NotPrefixClosed
    /// naming the shortlex-least offending member and its missing parent.
    static FinTree validate(Members strings);

    /// Prefix closure of arbitrary strings; never throws.
    static FinTree close(const Members& strings);

    const Members& members() const noexcept { return members_; }
    Nat size() const noexcept { return members_.size(); }
    Nat horizon() const noexcept { return members_.rbegin()->size(); }
    bool contains(const BitString& s) const { return members_.contains(s); }

    /// Members of length exactly `length`, in lexicographic order.
    auto level(Nat length) const {
        auto first = members_.lower_bound(BitString(length, Color::zero));
        auto last = members_.lower_bound(BitString(length + 1, Color::zero));
        return std::ranges::subrange(first, last);
    }

    Nat level_size(Nat length) const;
    std::optional<BitString> lex_least_at(Nat length) const;

    /// Greatest length of a member extending `node` (node must be a member).
    Nat max_extension_length(const BitString& node) const;

    bool operator==(const FinTree& other) const = default;

private:
    explicit FinTree(Members members) : members_(std::move(members)) {}
    Members members_;
};

/// Free-function spelling of FinTree::validate.
inline FinTree validate_tree(FinTree::Members strings) { return FinTree::validate(std::move(strings)); }

} // namespace rkl
