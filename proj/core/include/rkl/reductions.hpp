#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rkl/coloring.hpp"
#include "rkl/family.hpp"
#include "rkl/natset.hpp"
#include "rkl/tree.hpp"

namespace rkl {

/// Decidable matrix θ(x, m, n). Must be reentrant.
using TernaryPredicate = std::function<bool(Nat x, Nat m, Nat n)>;

/// Decidable matrix φ(τ, y, z) over a string argument. Must be reentrant.
using StringPredicate = std::function<bool(const BitString& tau, Nat y, Nat z)>;

// ---------------------------------------------------------------------------
// Paths and trees to colorings

/// Majority color of p (ties to zero) and the positions carrying it.
/// Throws EmptyPath on the empty string.
std::pair<Color, NatSet> path_pigeonhole(const BitString& p);

/// f(x, y) = σ_y(x) where σ_y is the lex-least member of t of length y.
/// Throws LevelEmpty(y) if some level 1..n is empty.
PairColoring tree_to_stable_coloring(const FinTree& t, Nat n);

/// Horizon-bounded evidence that column x of tree_to_stable_coloring settles.
struct StabilityReport {
    Nat x = 0;
    /// Largest s_τ over the dead level-(x+1) members; 0 when none are dead.
    Nat bound = 0;
    /// τ_{x+1}(x) for the lex-least level-(x+1) member extendible to the horizon.
    std::optional<Color> limit_color;
    /// s_τ = greatest length reached above each dead level-(x+1) member τ.
    std::map<BitString, Nat> dead_bounds;
};

/// A member is live when it extends to a member of length t.horizon();
/// everything else at level x+1 is dead. Requires x+1 <= t.horizon().
StabilityReport stability_bound(const FinTree& t, Nat x);

// ---------------------------------------------------------------------------
// String families and colorings

/// σ_y for y = 1..n: the lex-least member among the shortest members of
/// length >= y. Index 0 of the result is unused (empty string).
/// Throws NoLongString(y).
std::vector<BitString> select_sigma(const StringFamily& family, Nat n);

/// f(x, y) = σ_y(x) with σ_y chosen by select_sigma.
PairColoring sigma_to_coloring(const StringFamily& family, Nat n);

/// The graded family {σ_y : |σ_y| = y, σ_y(x) = f(x, y)} for y = 1..f.n().
StringFamily coloring_to_sigma(const PairColoring& f);

/// "τ enters the tree at stage s".
struct StageEntry {
    Nat stage = 0;
    BitString tau;

    bool operator==(const StageEntry&) const = default;
};

/// One graded member per stage: τ_s padded with zeros to length s.
/// Throws BadStage(s) if |τ_s| > s, a stage in 1..max_stage has zero or
/// several entries, or an entry lies outside 1..max_stage.
StringFamily ce_tree_to_sigma(const std::vector<StageEntry>& entries, Nat max_stage);

/// Membership of τ in the Σ⁰₁ tree S at search bound `bound`:
/// ∃ẑ <= bound with (∀x, y <= |τ|)(∃z < ẑ) φ(τ↾x, y, z). Monotone in bound.
bool pi2_tree_to_sigma1(const StringPredicate& phi, const BitString& tau, Nat bound);

// ---------------------------------------------------------------------------
// Splitting a partition of N into two Π⁰₂ sets

/// h(x, y) = μz ≤ cap [(∀m<y)(∃n<z) θ_0(x,m,n) ∨ (∀m<y)(∃n<z) θ_1(x,m,n)].
/// Throws CapExceeded(x, y) when no z <= cap qualifies.
Nat yokoyama_h(const TernaryPredicate& theta0, const TernaryPredicate& theta1, Nat x, Nat y,
               Nat cap);

/// f(x, y) = 0 iff (∀m<y)(∃n<h(x,y)) θ_0(x,m,n); 1 otherwise.
PairColoring yokoyama_coloring(const TernaryPredicate& theta0, const TernaryPredicate& theta1,
                               Nat n, Nat cap);

// ---------------------------------------------------------------------------

/// The tree of initial segments of χ_A of length <= l.
FinTree set_to_path_tree(const NatSet& a, Nat l);

} // namespace rkl
