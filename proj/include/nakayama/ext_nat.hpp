#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace nakayama {

/// A nonnegative integer or Infinity. Infinity is maximal and absorbs addition.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(int value) : value_(value) {}  // NOLINT: implicit from int on purpose

    static constexpr ExtNat infinity()
    {
        ExtNat x;
        x.infinite_ = true;
        return x;
    }

    constexpr bool is_finite() const { return !infinite_; }
    constexpr bool is_infinite() const { return infinite_; }

    /// Only meaningful when finite.
    constexpr int value() const { return value_; }

    constexpr ExtNat operator+(ExtNat rhs) const
    {
        if (infinite_ || rhs.infinite_)
            return infinity();
        return ExtNat(value_ + rhs.value_);
    }

    constexpr bool operator==(const ExtNat& rhs) const
    {
        return infinite_ == rhs.infinite_ && (infinite_ || value_ == rhs.value_);
    }

    constexpr std::strong_ordering operator<=>(const ExtNat& rhs) const
    {
        if (infinite_ || rhs.infinite_)
            return infinite_ <=> rhs.infinite_;
        return value_ <=> rhs.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    int value_ = 0;
    bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, ExtNat x) { return os << x.to_string(); }

inline constexpr ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }
inline constexpr ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }

}  // namespace nakayama
