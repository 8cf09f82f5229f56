#include <map>

#include "ccsg/gf2poly.hpp"
#include "ccsg/lfsr.hpp"
#include "doctest.h"

using namespace ccsg;

namespace {
BinaryPolynomial P(const char* text) { return BinaryPolynomial::parse(text); }
LfsrSpec spec(const char* poly, const char* seed) {
    return LfsrSpec(P(poly), bits_from_string(seed));
}
}  // namespace

TEST_CASE("lfsr_sequence golden values") {
    CHECK(bits_to_string(lfsr_sequence(spec("1+x^2+x^3", "100"), 7)) == "1001110");
    CHECK(bits_to_string(lfsr_sequence(spec("1+x+x^4", "1000"), 15)) == "100010011010111");
    CHECK(bits_to_string(lfsr_sequence(spec("1+x+x^4", "0000"), 8)) == "00000000");
    CHECK(lfsr_sequence(spec("1+x^2+x^3", "100"), 0).empty());
    // stage content A_i(t) = a_{t+i}
    Bits a = lfsr_sequence(spec("1+x^2+x^3", "100"), 10);
    CHECK(a[3 + 1] == a[4]);
}

TEST_CASE("lfsr_period golden values") {
    CHECK(lfsr_period(spec("1+x^2+x^3", "100")) == 7);
    CHECK(lfsr_period(spec("1+x+x^4", "1000")) == 15);
    CHECK(lfsr_period(spec("1+x+x^2+x^4+x^5", "10000")) == 31);
    CHECK_THROWS_AS(lfsr_period(spec("1+x+x^4", "0000")), std::invalid_argument);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(LfsrSpec(P("1+x+x^4"), bits_from_string("100")), std::invalid_argument);
    CHECK_THROWS_AS(LfsrSpec(P("1"), Bits{}), std::invalid_argument);
}

TEST_CASE("PN window property, exhaustive through length 6") {
    for (int degree = 2; degree <= 6; ++degree) {
        uint64_t period = (uint64_t(1) << degree) - 1;
        for (const BinaryPolynomial& p : primitive_polynomials(degree)) {
            for (uint64_t s = 1; s <= period; ++s) {
                Bits seed(degree);
                for (int i = 0; i < degree; ++i) seed[i] = (s >> i) & 1;
                LfsrSpec reg(p, seed);
                CHECK(lfsr_period(reg) == period);
                Bits seq = lfsr_sequence(reg, period + degree - 1);
                std::map<uint64_t, int> windows;
                for (uint64_t t = 0; t < period; ++t) {
                    uint64_t w = 0;
                    for (int i = 0; i < degree; ++i) w |= uint64_t(seq[t + i]) << i;
                    windows[w]++;
                }
                CHECK(windows.size() == period);  // every nonzero window exactly once
                CHECK(windows.count(0) == 0);
            }
        }
    }
}

TEST_CASE("berlekamp_massey round-trips the characteristic polynomial") {
    for (const char* poly : {"1+x^2+x^3", "1+x+x^4", "1+x+x^2+x^4+x^5", "x^6+x+1"}) {
        BinaryPolynomial p = P(poly);
        Bits seed(p.degree(), 0);
        seed[0] = 1;
        Bits seq = lfsr_sequence(LfsrSpec(p, seed), 2 * p.degree());
        CHECK(berlekamp_massey(seq) == p);
    }
}
