#pragma once

#include <cstdint>

#include "ccsg/bits.hpp"
#include "ccsg/gf2poly.hpp"

namespace ccsg {

// Maximal-length LFSR described by its characteristic polynomial and the
// first L output bits. Stage i at time t holds a_{t+i}: the emitted sequence
// satisfies sum_k p_k a_{t+k} = 0.
struct LfsrSpec {
    BinaryPolynomial char_poly;
    Bits seed;  // seed[i] = A_i(0) = a_i

    LfsrSpec(BinaryPolynomial poly, Bits s);
    int length() const { return char_poly.degree(); }
    bool seed_is_zero() const { return all_zero(seed); }
};

Bits lfsr_sequence(const LfsrSpec& spec, size_t n);

// Smallest t > 0 with state(t) = state(0); requires a nonzero seed.
uint64_t lfsr_period(const LfsrSpec& spec);

}  // namespace ccsg
