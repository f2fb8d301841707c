#include "rkl/bitstring.hpp"

#include <algorithm>

namespace rkl {

BitString BitString::parse(std::string_view text) {
    BitString out;
    if (text == "-") return out;
    out.bits_.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw ParseError("invalid bit string '" + std::string(text) + "'", 0);
        out.bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
}

Color BitString::at(Nat x) const {
    if (x >= bits_.size())
        throw InvalidArgument("bit index " + std::to_string(x) + " out of range for length " +
                              std::to_string(bits_.size()));
    return (*this)[x];
}

BitString BitString::prefix(Nat n) const {
    BitString out;
    out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
    return out;
}

BitString BitString::padded(Nat n, Color fill) const {
    BitString out = *this;
    if (out.bits_.size() < n) out.bits_.resize(n, static_cast<std::uint8_t>(fill));
    return out;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
    return size() <= other.size() && std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string BitString::str() const {
    std::string out(bits_.size(), '0');
    for (Nat i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out[i] = '1';
    return out;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const noexcept {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return bits_ <=> other.bits_;
}

std::vector<BitString> all_strings(Nat n) {
    if (n >= 8 * sizeof(Nat) - 1) throw InvalidArgument("string length too large to enumerate");
    std::vector<BitString> out;
    out.reserve(Nat{1} << n);
    for (Nat code = 0; code < (Nat{1} << n); ++code) {
        BitString s(n, Color::zero);
        for (Nat i = 0; i < n; ++i)
            if ((code >> (n - 1 - i)) & 1U) s.set(i, Color::one);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace rkl
