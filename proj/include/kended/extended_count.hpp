#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace kended {

/// A non-negative count or +infinity. Infinity compares above every finite
/// value and absorbs addition.
class ExtendedCount {
public:
    constexpr ExtendedCount() = default;
    constexpr ExtendedCount(std::int64_t value) : value_(value) {}

    static constexpr ExtendedCount infinity() {
        ExtendedCount c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    /// Finite value; throws std::logic_error on infinity.
    std::int64_t value() const;

    friend constexpr ExtendedCount operator+(ExtendedCount a, std::int64_t b) {
        return a.infinite_ ? a : ExtendedCount(a.value_ + b);
    }

    friend constexpr bool operator==(const ExtendedCount& a, const ExtendedCount& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const ExtendedCount& a,
                                                      const ExtendedCount& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(const ExtendedCount& a, std::int64_t b) {
        return !a.infinite_ && a.value_ == b;
    }
    friend constexpr std::strong_ordering operator<=>(const ExtendedCount& a, std::int64_t b) {
        if (a.infinite_) return std::strong_ordering::greater;
        return a.value_ <=> b;
    }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

/// "inf" or the decimal value.
std::string to_string(const ExtendedCount& c);

} // namespace kended
