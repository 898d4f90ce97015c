#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace pwss {

inline constexpr int kClassCount = 3;

/// Password strength class with its fixed integer encoding.
enum class StrengthLabel : std::uint8_t { weak = 0, medium = 1, strong = 2 };

inline constexpr std::array<StrengthLabel, kClassCount> kAllLabels = {
    StrengthLabel::weak, StrengthLabel::medium, StrengthLabel::strong};

inline constexpr int label_index(StrengthLabel label) {
    return static_cast<int>(label);
}

/// Throws a data error unless index is 0, 1 or 2.
StrengthLabel label_from_index(long long index);

std::string_view label_name(StrengthLabel label);

}  // namespace pwss
