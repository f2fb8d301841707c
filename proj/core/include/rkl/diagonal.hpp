#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rkl/natset.hpp"
#include "rkl/tree.hpp"

namespace rkl {

/// "x enters W_e at stage s".
struct EnumEvent {
    Nat e = 0;
    Nat stage = 1;
    Nat x = 0;

    auto operator<=>(const EnumEvent&) const = default;
};

/// Finite stand-in for a list of c.e. sets W_0..W_{k-1} with stage
/// approximations. k and max_stage are derived from the events.
///
/// Enumeration order within one index is by stage, then by element value
/// inside a stage.
class StagedEnum {
public:
    StagedEnum() = default;

    /// Throws InvalidArgument on stage 0 or a repeated (e, x) pair.
    explicit StagedEnum(std::vector<EnumEvent> events);

    /// Events sorted by (e, stage, x).
    const std::vector<EnumEvent>& events() const noexcept { return events_; }
    Nat k() const noexcept { return k_; }
    Nat max_stage() const noexcept { return max_stage_; }

    /// Elements of W_{e,s} in enumeration order.
    std::vector<Nat> enumerated(Nat e, Nat stage) const;

    /// W_{e,s} as a set.
    NatSet approximation(Nat e, Nat stage) const;

    /// W_e after the last stage.
    NatSet final_set(Nat e) const { return approximation(e, max_stage_); }

    bool operator==(const StagedEnum&) const = default;

private:
    std::vector<EnumEvent> events_;
    Nat k_ = 0;
    Nat max_stage_ = 0;
};

/// The avoidance window of index e at length l: the first e+3 enumerated
/// elements of W_{e,l}, provided there are that many and all lie below l.
std::optional<NatSet> avoidance_window(const StagedEnum& enums, Nat e, Nat length);

struct DiagReport {
    FinTree tree;
    /// level_counts[l] = number of members of length l, for l = 0..l_max.
    std::vector<Nat> level_counts;
    /// (e, l) pairs whose avoidance window was active at length l.
    std::set<std::pair<Nat, Nat>> triggered;
};

/// Members are the strings σ with |σ| <= l_max such that, for every e < k
/// whose avoidance window at |σ| is active, σ is not constant on the window.
/// The condition is prefix-monotone, so the result is a tree.
DiagReport build_diagonal_tree(const StagedEnum& enums, Nat l_max);

/// g(e): the e+3 least elements of h. Throws TooSmall if |h| < e+3.
NatSet dnr_g(const NatSet& h, Nat e);

struct FpfVerdict {
    enum class Kind {
        vacuous,        ///< not triggered at the horizon
        distinguished,  ///< W_e ≠ g(e), `witness` is in exactly one of them
        undefined,      ///< |h| < e+3, g(e) is not defined
        fixed_point,    ///< W_e = g(e): the construction failed
    };

    Nat e = 0;
    Kind kind = Kind::vacuous;
    std::optional<Nat> witness;
    std::optional<NatSet> g;

    bool operator==(const FpfVerdict&) const = default;
};

/// Checks W_e ≠ g(e) for every index triggered at the tree's horizon. The
/// witness is the least element of g(e) \ W_e, or failing that the least
/// element of W_e \ g(e). Throws NotHomogeneous unless h is homogeneous for a
/// path through report.tree at its horizon.
std::vector<FpfVerdict> check_fpf(const NatSet& h, const StagedEnum& enums,
                                  const DiagReport& report);

const char* to_string(FpfVerdict::Kind kind) noexcept;

} // namespace rkl
