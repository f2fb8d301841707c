#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

#include "rkl/error.hpp"

namespace rkl {

/// Finite set of naturals, stored strictly increasing.
class NatSet {
public:
    NatSet() = default;
    NatSet(std::initializer_list<Nat> elements) : NatSet(std::vector<Nat>(elements)) {}

    /// Throws InvalidArgument unless `elements` is strictly increasing.
    explicit NatSet(std::vector<Nat> elements);

    /// Sorts and deduplicates.
    static NatSet from_unsorted(std::vector<Nat> elements);

    std::span<const Nat> elements() const noexcept { return elements_; }
    Nat size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    Nat max() const { return elements_.back(); }
    bool contains(Nat x) const noexcept;

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    /// H ∩ [0, bound).
    NatSet below(Nat bound) const;

    /// The `count` smallest elements.
    NatSet first(Nat count) const;

    bool is_subset_of(const NatSet& other) const noexcept;

    /// Lexicographic order on the increasing element sequences.
    auto operator<=>(const NatSet& other) const noexcept = default;
    bool operator==(const NatSet& other) const noexcept = default;

private:
    std::vector<Nat> elements_;
};

} // namespace rkl
