#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccsg/lfsr.hpp"

namespace ccsg {

// Shrinking generator / clock-controlled shrinking generator. An empty tap
// set makes X_t identically 1, i.e. the plain shrinking generator.
struct CcsgSpec {
    LfsrSpec r1;            // control register
    LfsrSpec r2;            // generating register
    std::vector<int> taps;  // strictly ascending stage indices of r1

    CcsgSpec(LfsrSpec control, LfsrSpec generating, std::vector<int> tap_indices = {});
    int width() const { return static_cast<int>(taps.size()); }
};

// Rule P: keep b[i] where a[i] = 1. Sequences must have equal length.
Bits shrink(const Bits& a, const Bits& b);

// b'_t = b_{sigma(t)} with sigma(0) = 0 and sigma(t) = sigma(t-1) + X_{t-1},
// X_t = 1 + sum_j 2^j A_{i_j}(t) on r1's stage contents.
Bits ccsg_decimate(const CcsgSpec& spec, size_t n);

// First n symbols of shrink(a, b'), both streams extended as far as needed.
Bits ccsg_keystream(const CcsgSpec& spec, size_t n);

// Smallest T >= 1 with bits[j+T] == bits[j] for all j, requiring 2T <= size.
std::optional<uint64_t> sequence_period(const Bits& bits);

// Brute-force keystream period over a generous buffer.
uint64_t keystream_period(const CcsgSpec& spec);

}  // namespace ccsg
