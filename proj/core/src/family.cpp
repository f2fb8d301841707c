#include "rkl/family.hpp"

namespace rkl {

StringFamily StringFamily::graded_from(const std::vector<BitString>& strings) {
    Members members;
    for (Nat i = 0; i < strings.size(); ++i) {
        if (strings[i].size() != i + 1) throw NotGraded();
        members.insert(strings[i]);
    }
    return StringFamily(std::move(members));
}

bool StringFamily::graded() const noexcept {
    // Shortlex order: graded iff the i-th member (from 0) has length i+1.
    Nat expected = 1;
    for (const auto& s : members_) {
        if (s.size() != expected) return false;
        ++expected;
    }
    return true;
}

const BitString& StringFamily::graded_at(Nat length) const {
    if (!graded()) throw NotGraded();
    if (length == 0 || length > n())
        throw InvalidArgument("no member of length " + std::to_string(length));
    return *std::next(members_.begin(), static_cast<std::ptrdiff_t>(length - 1));
}

FinTree downward_closure(const StringFamily& family) { return FinTree::close(family.members()); }

} // namespace rkl
