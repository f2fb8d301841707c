#pragma once

#include <functional>
#include <vector>

#include "rkl/bitstring.hpp"

namespace rkl {

/// A 2-coloring of the pairs {(x, y) : 0 <= x < y <= n}.
class PairColoring {
public:
    /// All pairs colored zero.
    explicit PairColoring(Nat n = 0);

    /// Colors each pair with fn(x, y).
    static PairColoring from_function(Nat n, const std::function<Color(Nat, Nat)>& fn);

    Nat n() const noexcept { return n_; }

    /// Number of pairs, n(n+1)/2.
    Nat pair_count() const noexcept { return values_.size(); }

    /// f(x, y); requires x < y <= n (throws InvalidArgument otherwise).
    Color at(Nat x, Nat y) const;
    void set(Nat x, Nat y, Color c);

    /// f(x, y) without the range check.
    Color operator()(Nat x, Nat y) const noexcept { return static_cast<Color>(values_[index(x, y)]); }

    bool operator==(const PairColoring& other) const = default;

private:
    static Nat index(Nat x, Nat y) noexcept { return y * (y - 1) / 2 + x; }
    void check(Nat x, Nat y) const;

    Nat n_;
    std::vector<std::uint8_t> values_;
};

} // namespace rkl
