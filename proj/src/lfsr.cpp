#include "ccsg/lfsr.hpp"

#include <stdexcept>

namespace ccsg {

LfsrSpec::LfsrSpec(BinaryPolynomial poly, Bits s) : char_poly(std::move(poly)), seed(std::move(s)) {
    int l = char_poly.degree();
    if (l < 1) throw std::invalid_argument("LfsrSpec: characteristic polynomial degree must be >= 1");
    if (static_cast<int>(seed.size()) != l)
        throw std::invalid_argument("LfsrSpec: seed length must equal the polynomial degree");
}

Bits lfsr_sequence(const LfsrSpec& spec, size_t n) {
    int l = spec.length();
    Bits a = spec.seed;
    a.reserve(n > a.size() ? n : a.size());
    Bits taps;  // positions k < l with p_k = 1
    for (int k = 0; k < l; ++k)
        if (spec.char_poly.coeff(k)) taps.push_back(static_cast<uint8_t>(k));
    while (a.size() < n) {
        size_t t = a.size() - l;
        uint8_t v = 0;
        for (uint8_t k : taps) v ^= a[t + k];
        a.push_back(v);
    }
    a.resize(n);
    return a;
}

uint64_t lfsr_period(const LfsrSpec& spec) {
    if (spec.seed_is_zero())
        throw std::invalid_argument("lfsr_period: degenerate all-zero state");
    int l = spec.length();
    // state(t) is the window a_t .. a_{t+l-1}; step it until it recurs
    Bits window = spec.seed;
    Bits taps;
    for (int k = 0; k < l; ++k)
        if (spec.char_poly.coeff(k)) taps.push_back(static_cast<uint8_t>(k));
    Bits state = window;
    uint64_t t = 0;
    do {
        uint8_t v = 0;
        for (uint8_t k : taps) v ^= state[k];
        state.erase(state.begin());
        state.push_back(v);
        ++t;
    } while (state != window);
    return t;
}

}  // namespace ccsg
