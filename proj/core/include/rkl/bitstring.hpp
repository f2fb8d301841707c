#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rkl/error.hpp"

namespace rkl {

enum class Color : std::uint8_t { zero = 0, one = 1 };

constexpr int to_int(Color c) noexcept { return static_cast<int>(c); }
constexpr Color flip(Color c) noexcept { return c == Color::zero ? Color::one : Color::zero; }

/// Color from a bit value; anything nonzero is Color::one.
constexpr Color to_color(int bit) noexcept { return bit ? Color::one : Color::zero; }

inline constexpr Color kColors[] = {Color::zero, Color::one};

/// A finite {0,1}-sequence. Serves as a tree node, a path prefix and a
/// characteristic-function prefix.
///
/// Ordering is shortlex: shorter strings first, equal lengths compared
/// lexicographically with 0 < 1. Within one length this is the plain
/// lexicographic order.
class BitString {
public:
    BitString() = default;

    /// n copies of `fill`.
    BitString(Nat n, Color fill) : bits_(n, static_cast<std::uint8_t>(fill)) {}

    /// Parses "0101"-style text; "" and "-" both denote the empty string.
    static BitString parse(std::string_view text);

    Nat size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    /// sigma(x); requires x < size().
    Color operator[](Nat x) const { return static_cast<Color>(bits_[x]); }
    Color at(Nat x) const;

    void push_back(Color c) { bits_.push_back(static_cast<std::uint8_t>(c)); }
    void set(Nat x, Color c) { bits_.at(x) = static_cast<std::uint8_t>(c); }

    /// sigma restricted to its first `n` bits (the whole string if n >= size()).
    BitString prefix(Nat n) const;

    /// sigma extended with `fill` up to length n (unchanged if already that long).
    BitString padded(Nat n, Color fill = Color::zero) const;

    /// tau.is_prefix_of(sigma) iff tau is an initial segment of sigma.
    bool is_prefix_of(const BitString& other) const noexcept;

    /// "0101"; the empty string prints as "" (file writers substitute "-").
    std::string str() const;

    std::strong_ordering operator<=>(const BitString& other) const noexcept;
    bool operator==(const BitString& other) const noexcept = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Every string of length n, in lexicographic order.
std::vector<BitString> all_strings(Nat n);

} // namespace rkl
