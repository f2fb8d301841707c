#pragma once

#include <set>
#include <vector>

#include "rkl/tree.hpp"

namespace rkl {

/// A finite set of strings. The family is graded when it holds exactly one
/// string of each length 1..n and nothing else; gradedness is a property of
/// the members, not a separate flag that could disagree with them.
class StringFamily {
public:
    using Members = std::set<BitString>;

    StringFamily() = default;
    explicit StringFamily(Members members) : members_(std::move(members)) {}

    /// Builds a graded family from one string per length; `strings[i]` must
    /// have length i+1. Throws NotGraded otherwise.
    static StringFamily graded_from(const std::vector<BitString>& strings);

    const Members& members() const noexcept { return members_; }
    Nat size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    /// Maximum member length, 0 for the empty family.
    Nat n() const noexcept { return members_.empty() ? 0 : members_.rbegin()->size(); }

    bool graded() const noexcept;

    /// The unique member of length `length`; requires graded().
    const BitString& graded_at(Nat length) const;

    bool operator==(const StringFamily& other) const = default;

private:
    Members members_;
};

/// T_Σ = {τ : τ ⪯ σ for some σ ∈ Σ}.
FinTree downward_closure(const StringFamily& family);

} // namespace rkl
