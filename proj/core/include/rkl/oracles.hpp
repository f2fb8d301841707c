#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rkl/coloring.hpp"
#include "rkl/family.hpp"
#include "rkl/natset.hpp"
#include "rkl/tree.hpp"

namespace rkl {

/// Largest cardinality homogeneous set H ⊆ [0, f.n()] for f, if it has at
/// least `min_size` elements. Among maximum sets the lexicographically least
/// one is returned, with its color. Requires min_size >= 2 and f.n() <= 63.
std::optional<std::pair<Color, NatSet>> ramsey_search(const PairColoring& f, Nat min_size);

/// True iff f is constant with color c on every pair from h (elements must be <= f.n()).
bool is_homog_for_coloring(const PairColoring& f, const NatSet& h, Color c);

/// The lex-least member of maximum length.
BitString longest_path(const FinTree& t);

struct StabilityEvidence {
    /// True when column x did not change at the final step; evidence only.
    bool stabilized = false;
    /// Greatest y with f(x,y) ≠ f(x,y-1), or x+1 if the column is constant.
    Nat last_change = 0;
    Color final_color = Color::zero;
};

/// Requires x < f.n().
StabilityEvidence check_stable(const PairColoring& f, Nat x);

/// Source of a coloring: a tree (lex-least member per level) or a string
/// family (shortest member of length >= y, lex-least among those).
using ReductionSource = std::variant<FinTree, StringFamily>;

struct ReductionVerdict {
    /// y ∈ h for which h∩[0,y) is not homogeneous for σ_y↾y with the color
    /// (or σ_y does not exist).
    std::vector<Nat> counterexamples;
    bool confirmed() const noexcept { return counterexamples.empty(); }
};

/// Recomputes σ_y from the source for each y ∈ h and checks h∩[0,y) against
/// it. Throws NotHomogeneousForColoring unless h ⊆ [0, f.n()] is homogeneous
/// for f with color c.
ReductionVerdict verify_reduction(const ReductionSource& source, const PairColoring& f,
                                  const NatSet& h, Color c);

} // namespace rkl
