#include "rkl/diagonal.hpp"

#include <algorithm>

#include "rkl/homogeneity.hpp"

namespace rkl {

StagedEnum::StagedEnum(std::vector<EnumEvent> events) : events_(std::move(events)) {
    std::sort(events_.begin(), events_.end());
    std::set<std::pair<Nat, Nat>> seen;
    for (const auto& ev : events_) {
        if (ev.stage == 0)
            throw InvalidArgument("stage must be >= 1 (index " + std::to_string(ev.e) +
                                  ", element " + std::to_string(ev.x) + ")");
        if (!seen.emplace(ev.e, ev.x).second)
            throw InvalidArgument("element " + std::to_string(ev.x) + " enters W_" +
                                  std::to_string(ev.e) + " twice");
        k_ = std::max(k_, ev.e + 1);
        max_stage_ = std::max(max_stage_, ev.stage);
    }
}

std::vector<Nat> StagedEnum::enumerated(Nat e, Nat stage) const {
    std::vector<Nat> out;
    // events_ is sorted by (e, stage, x), which is enumeration order per index.
    auto first = std::lower_bound(events_.begin(), events_.end(), EnumEvent{e, 0, 0});
    for (auto it = first; it != events_.end() && it->e == e && it->stage <= stage; ++it)
        out.push_back(it->x);
    return out;
}

NatSet StagedEnum::approximation(Nat e, Nat stage) const {
    return NatSet::from_unsorted(enumerated(e, stage));
}

std::optional<NatSet> avoidance_window(const StagedEnum& enums, Nat e, Nat length) {
    auto seq = enums.enumerated(e, length);
    if (seq.size() < e + 3) return std::nullopt;
    seq.resize(e + 3);
    if (*std::max_element(seq.begin(), seq.end()) >= length) return std::nullopt;
    return NatSet::from_unsorted(std::move(seq));
}

namespace {

bool constant_on(const BitString& s, const NatSet& window) {
    return is_homog_string(window, s, Color::zero) || is_homog_string(window, s, Color::one);
}

} // namespace

DiagReport build_diagonal_tree(const StagedEnum& enums, Nat l_max) {
    if (l_max == 0) throw InvalidArgument("build_diagonal_tree needs l_max >= 1");
    DiagReport report;
    FinTree::Members members{BitString{}};
    std::vector<BitString> frontier{BitString{}};
    report.level_counts.push_back(1);

    for (Nat len = 1; len <= l_max; ++len) {
        std::vector<NatSet> windows;
        for (Nat e = 0; e < enums.k(); ++e) {
            if (auto w = avoidance_window(enums, e, len)) {
                windows.push_back(std::move(*w));
                report.triggered.emplace(e, len);
            }
        }
        // Membership is prefix-monotone, so extending the previous level by
        // one bit reaches every member of this level.
        std::vector<BitString> next;
        for (const auto& parent : frontier) {
            for (Color c : kColors) {
                BitString child = parent;
                child.push_back(c);
                bool ok = std::none_of(windows.begin(), windows.end(),
                                       [&](const NatSet& w) { return constant_on(child, w); });
                if (ok) next.push_back(std::move(child));
            }
        }
        report.level_counts.push_back(next.size());
        members.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    report.tree = FinTree::validate(std::move(members));
    return report;
}

NatSet dnr_g(const NatSet& h, Nat e) {
    if (h.size() < e + 3) throw TooSmall(h.size(), e + 3);
    return h.first(e + 3);
}

std::vector<FpfVerdict> check_fpf(const NatSet& h, const StagedEnum& enums,
                                  const DiagReport& report) {
    const Nat horizon = report.tree.horizon();
    if (!is_homog_path(h, report.tree, horizon))
        throw NotHomogeneous("set is not homogeneous for any member of length " +
                             std::to_string(horizon));

    std::vector<FpfVerdict> verdicts;
    for (Nat e = 0; e < enums.k(); ++e) {
        FpfVerdict v;
        v.e = e;
        if (!report.triggered.contains({e, horizon})) {
            verdicts.push_back(std::move(v));
            continue;
        }
        if (h.size() < e + 3) {
            v.kind = FpfVerdict::Kind::undefined;
            verdicts.push_back(std::move(v));
            continue;
        }
        NatSet g = dnr_g(h, e);
        NatSet w = enums.final_set(e);
        auto missing_from_w =
            std::find_if(g.begin(), g.end(), [&](Nat x) { return !w.contains(x); });
        auto missing_from_g =
            std::find_if(w.begin(), w.end(), [&](Nat x) { return !g.contains(x); });
        if (missing_from_w != g.end()) {
            v.kind = FpfVerdict::Kind::distinguished;
            v.witness = *missing_from_w;
        } else if (missing_from_g != w.end()) {
            v.kind = FpfVerdict::Kind::distinguished;
            v.witness = *missing_from_g;
        } else {
            v.kind = FpfVerdict::Kind::fixed_point;
        }
        v.g = std::move(g);
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

const char* to_string(FpfVerdict::Kind kind) noexcept {
    switch (kind) {
    case FpfVerdict::Kind::vacuous: return "vacuous";
    case FpfVerdict::Kind::distinguished: return "distinguished";
    case FpfVerdict::Kind::undefined: return "undefined";
    case FpfVerdict::Kind::fixed_point: return "fixed-point";
    }
    return "?";
}

} // namespace rkl
