#include "rkl/oracles.hpp"

#include <bit>
#include <cstdint>

namespace rkl {

namespace {

using Mask = std::uint64_t;

// Lex-least maximum clique by depth-first search in increasing vertex order.
// Preorder of that search is lexicographic order on increasing sequences, so
// the first clique reaching a new record size is the lex-least of that size.
class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    std::vector<Nat> run() {
        Mask all = adj_.size() == 64 ? ~Mask{0} : (Mask{1} << adj_.size()) - 1;
        expand(all);
        return best_;
    }

private:
    void expand(Mask candidates) {
        if (current_.size() > best_.size()) best_ = current_;
        while (candidates) {
            if (current_.size() + static_cast<Nat>(std::popcount(candidates)) <= best_.size())
                return;
            Nat v = static_cast<Nat>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            current_.push_back(v);
            expand(candidates & adj_[v]);
            current_.pop_back();
        }
    }

    std::vector<Mask> adj_;
    std::vector<Nat> current_;
    std::vector<Nat> best_;
};

std::vector<Nat> max_clique(const PairColoring& f, Color c) {
    const Nat points = f.n() + 1;
    std::vector<Mask> adj(points, 0);
    for (Nat y = 1; y < points; ++y)
        for (Nat x = 0; x < y; ++x)
            if (f(x, y) == c) {
                adj[x] |= Mask{1} << y;
                adj[y] |= Mask{1} << x;
            }
    return CliqueSearch(std::move(adj)).run();
}

} // namespace

std::optional<std::pair<Color, NatSet>> ramsey_search(const PairColoring& f, Nat min_size) {
    if (min_size < 2) throw InvalidArgument("ramsey_search needs min_size >= 2");
    if (f.n() > 63) throw InvalidArgument("ramsey_search supports at most 64 points");
    NatSet zero(max_clique(f, Color::zero));
    NatSet one(max_clique(f, Color::one));
    bool pick_one = one.size() > zero.size() || (one.size() == zero.size() && one < zero);
    auto& best = pick_one ? one : zero;
    if (best.size() < min_size) return std::nullopt;
    return std::pair{pick_one ? Color::one : Color::zero, std::move(best)};
}

bool is_homog_for_coloring(const PairColoring& f, const NatSet& h, Color c) {
    auto el = h.elements();
    if (!el.empty() && el.back() > f.n()) return false;
    for (Nat j = 1; j < el.size(); ++j)
        for (Nat i = 0; i < j; ++i)
            if (f(el[i], el[j]) != c) return false;
    return true;
}

BitString longest_path(const FinTree& t) { return *t.lex_least_at(t.horizon()); }

StabilityEvidence check_stable(const PairColoring& f, Nat x) {
    if (x >= f.n())
        throw InvalidArgument("check_stable needs x < n (x=" + std::to_string(x) +
                              ", n=" + std::to_string(f.n()) + ")");
    StabilityEvidence ev;
    ev.last_change = x + 1;
    for (Nat y = x + 2; y <= f.n(); ++y)
        if (f(x, y) != f(x, y - 1)) ev.last_change = y;
    ev.stabilized = ev.last_change < f.n();
    ev.final_color = f(x, f.n());
    return ev;
}

namespace {

// σ_y recomputed straight from the definitions, by scanning all members.
std::optional<BitString> sigma_for(const ReductionSource& source, Nat y) {
    if (const auto* tree = std::get_if<FinTree>(&source)) {
        std::optional<BitString> best;
        for (const auto& s : tree->members())
            if (s.size() == y && (!best || s < *best)) best = s;
        return best;
    }
    const auto& family = std::get<StringFamily>(source);
    std::optional<BitString> best;
    for (const auto& s : family.members()) {
        if (s.size() < y) continue;
        if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best))
            best = s;
    }
    if (best) return best->prefix(y);
    return best;
}

} // namespace

ReductionVerdict verify_reduction(const ReductionSource& source, const PairColoring& f,
                                  const NatSet& h, Color c) {
    if (!h.empty() && h.max() > f.n())
        throw NotHomogeneousForColoring("set element " + std::to_string(h.max()) +
                                        " exceeds the coloring horizon " + std::to_string(f.n()));
    if (!is_homog_for_coloring(f, h, c))
        throw NotHomogeneousForColoring("set is not homogeneous for the coloring with color " +
                                        std::to_string(to_int(c)));
    ReductionVerdict verdict;
    for (Nat y : h) {
        auto sigma = sigma_for(source, y);
        if (!sigma) {
            verdict.counterexamples.push_back(y);
            continue;
        }
        const NatSet below = h.below(y);
        bool ok = true;
        for (Nat x : below)
            if ((*sigma)[x] != c) ok = false;
        if (!ok) verdict.counterexamples.push_back(y);
    }
    return verdict;
}

} // namespace rkl
