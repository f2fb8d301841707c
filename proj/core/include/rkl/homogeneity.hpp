#pragma once

#include <optional>
#include <vector>

#include "rkl/family.hpp"
#include "rkl/natset.hpp"
#include "rkl/tree.hpp"

namespace rkl {

/// Evidence that H is homogeneous for a path: one color and, per checked
/// threshold, a member at least that long on which H is homogeneous.
struct HomWitness {
    Color color = Color::zero;
    std::vector<BitString> witnesses;
    std::vector<Nat> thresholds;

    bool operator==(const HomWitness&) const = default;
};

/// σ(x) = c for every x ∈ h with x < |σ|.
bool is_homog_string(const NatSet& h, const BitString& sigma, Color c);

/// Finite-horizon form of "homogeneous for a path through T": some member of
/// length >= horizon on which h is homogeneous. Homogeneity is prefix-monotone,
/// so one such member certifies every smaller threshold too.
///
/// Color zero is tried first; within a color the shortlex-least member wins.
/// Requires horizon <= t.horizon().
std::optional<HomWitness> is_homog_path(const NatSet& h, const FinTree& t, Nat horizon);

/// The color c such that h is homogeneous with color c for every σ ∈ family
/// with |σ| ∈ h; zero on ties. Throws NotGraded if the family is not graded.
std::optional<Color> is_homog_graded(const NatSet& h, const StringFamily& family);

} // namespace rkl
