#include "rkl/coloring.hpp"

#include <string>

namespace rkl {

PairColoring::PairColoring(Nat n) : n_(n), values_(n * (n + 1) / 2, 0) {}

PairColoring PairColoring::from_function(Nat n, const std::function<Color(Nat, Nat)>& fn) {
    PairColoring f(n);
    for (Nat y = 1; y <= n; ++y)
        for (Nat x = 0; x < y; ++x) f.values_[index(x, y)] = static_cast<std::uint8_t>(fn(x, y));
    return f;
}

void PairColoring::check(Nat x, Nat y) const {
    if (!(x < y && y <= n_))
        throw InvalidArgument("pair (" + std::to_string(x) + "," + std::to_string(y) +
                              ") outside 0 <= x < y <= " + std::to_string(n_));
}

Color PairColoring::at(Nat x, Nat y) const {
    check(x, y);
    return (*this)(x, y);
}

void PairColoring::set(Nat x, Nat y, Color c) {
    check(x, y);
    values_[index(x, y)] = static_cast<std::uint8_t>(c);
}

} // namespace rkl
