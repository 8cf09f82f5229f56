#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccsg {

using Bits = std::vector<uint8_t>;

inline std::string bits_to_string(const Bits& b) {
    std::string s;
    s.reserve(b.size());
    for (uint8_t v : b) s.push_back(v ? '1' : '0');
    return s;
}

inline Bits bits_from_string(std::string_view s) {
    Bits b;
    b.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw std::invalid_argument("bit string: invalid character at position " +
                                        std::to_string(i));
        b.push_back(s[i] == '1');
    }
    return b;
}

inline bool all_zero(const Bits& b) {
    for (uint8_t v : b)
        if (v) return false;
    return true;
}

}  // namespace ccsg
