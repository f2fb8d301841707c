#include "rkl/natset.hpp"

#include <algorithm>
#include <string>

namespace rkl {

NatSet::NatSet(std::vector<Nat> elements) : elements_(std::move(elements)) {
    for (Nat i = 1; i < elements_.size(); ++i)
        if (elements_[i - 1] >= elements_[i])
            throw InvalidArgument("set elements must be strictly increasing (saw " +
                                  std::to_string(elements_[i - 1]) + " then " +
                                  std::to_string(elements_[i]) + ")");
}

NatSet NatSet::from_unsorted(std::vector<Nat> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return NatSet(std::move(elements));
}

bool NatSet::contains(Nat x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

NatSet NatSet::below(Nat bound) const {
    auto cut = std::lower_bound(elements_.begin(), elements_.end(), bound);
    return NatSet(std::vector<Nat>(elements_.begin(), cut));
}

NatSet NatSet::first(Nat count) const {
    count = std::min(count, size());
    return NatSet(std::vector<Nat>(elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(count)));
}

bool NatSet::is_subset_of(const NatSet& other) const noexcept {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

} // namespace rkl
