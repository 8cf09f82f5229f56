#include <random>

#include "ccsg/automata.hpp"
#include "ccsg/gf2poly.hpp"
#include "ccsg/phaseshift.hpp"
#include "doctest.h"

using namespace ccsg;

namespace {

BinaryPolynomial P(const char* text) { return BinaryPolynomial::parse(text); }
const RuleString kExample3 = RuleString::parse("0011001100");

// simulation oracle: cell's column equals the reference column advanced by m
void check_table_by_simulation(const RuleString& rules, std::mt19937_64& rng) {
    int n = rules.size();
    BinaryPolynomial r = ca_char_poly(rules);
    uint64_t period = s_power_count(r);
    CaState state(n);
    for (int i = 0; i < n; ++i) state[i] = rng() & 1;
    auto rows = ca_run(rules, state, period + 2 * period);
    ShiftTable table = phase_shift_table(rules);
    for (const auto& [key, m] : table.entries) {
        Bits ci = cell_column(rows, key.first);
        Bits cref = cell_column(rows, key.second);
        for (uint64_t t = 0; t < period; ++t) CHECK(ci[t] == cref[t + m]);
    }
}

}  // namespace

TEST_CASE("cell_operator_polys for the 10-cell example") {
    auto polys = cell_operator_polys(kExample3, 10);
    CHECK(polys[9] == P("1"));
    CHECK(polys[8] == P("x"));
    CHECK(polys[7] == P("x^2+1"));
    CHECK(polys[3] == P("x^6"));
    CHECK(polys[1] == P("x^8+x^6+x^5+x^4+x^3+x+1"));
    CHECK(polys[0] == P("x^9+x^4+x^3+x^2+x+1"));

    auto single = cell_operator_polys(RuleString::parse("0"), 1);
    CHECK(single[0] == P("1"));

    CHECK_THROWS_AS(cell_operator_polys(kExample3, 5), std::invalid_argument);
}

TEST_CASE("reversal symmetry of operator polynomials") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 10);
        Bits b(n);
        for (int i = 0; i < n; ++i) b[i] = rng() & 1;
        RuleString rules(b);
        auto from_end = cell_operator_polys(rules, n);
        auto mirrored = cell_operator_polys(rules.mirrored(), 1);
        for (int i = 1; i <= n; ++i) CHECK(mirrored[i - 1] == from_end[n - i]);
    }
}

TEST_CASE("s_discrete_log") {
    BinaryPolynomial q = P("1+x+x^3+x^4+x^5");
    BinaryPolynomial r = q * q;
    CHECK(s_discrete_log(P("x^2+1"), r) == 26);
    CHECK(s_discrete_log(P("1"), r) == 0);
    BinaryPolynomial s6 = poly_pow_mod(P("x"), 6, r);
    CHECK(s_discrete_log(s6, r) == 6);
    // cell 2's operator polynomial is not a power of S
    CHECK(s_discrete_log(P("x^8+x^6+x^5+x^4+x^3+x+1"), r) == std::nullopt);
    CHECK_THROWS_AS(s_discrete_log(P("0"), r), std::invalid_argument);

    CHECK(s_power_count(r) == 62);
}

TEST_CASE("s_discrete_log handles a nilpotent shift operator") {
    // x divides the modulus, so powers of S enter a cycle after a tail
    BinaryPolynomial r = P("x^3+x^2");  // x^2 (x + 1)
    CHECK(s_discrete_log(P("1"), r) == 0);
    CHECK(s_discrete_log(P("x^2"), r) == 2);
    BinaryPolynomial s5 = poly_pow_mod(P("x"), 5, r);
    auto m = s_discrete_log(s5, r);
    REQUIRE(m.has_value());
    CHECK(poly_pow_mod(P("x"), *m, r) == s5);
}

TEST_CASE("phase_shift_table reproduces the published shifts") {
    ShiftTable table = phase_shift_table(kExample3);
    CHECK(table.shift_of(9, 10) == 1);
    CHECK(table.shift_of(8, 10) == 26);
    CHECK(table.shift_of(4, 10) == 6);
    CHECK(table.shift_of(2, 1) == 1);
    CHECK(table.shift_of(3, 1) == 26);
    CHECK(table.shift_of(7, 1) == 6);
    CHECK(table.shift_of(10, 10) == 0);
    CHECK(table.shift_of(1, 1) == 0);
    CHECK(table.entries.size() == 8);
    // every other cell generates a different sequence
    for (int cell : {1, 2, 3, 5, 6, 7}) CHECK(table.unrelated.count({cell, 10}) == 1);
    for (int cell : {4, 5, 6, 8, 9, 10}) CHECK(table.unrelated.count({cell, 1}) == 1);

    ShiftTable single = phase_shift_table(RuleString::parse("0"));
    CHECK(single.shift_of(1, 1) == 0);
    CHECK(single.unrelated.empty());
}

TEST_CASE("tabulated shifts are sound under simulation") {
    std::mt19937_64 rng(17);
    check_table_by_simulation(kExample3, rng);
    check_table_by_simulation(RuleString::parse("01110011111111001110"), rng);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Bits b(n);
        for (int i = 0; i < n; ++i) b[i] = rng() & 1;
        check_table_by_simulation(RuleString(b), rng);
    }
}

TEST_CASE("extreme-cell sequence repetition in the 20-cell automaton") {
    // frozen from an exhaustive table build; cells 19 and 2 echo the extremes
    ShiftTable table = phase_shift_table(RuleString::parse("01110011111111001110"));
    CHECK(table.shift_of(20, 20) == 0);
    CHECK(table.shift_of(19, 20) == 1);
    CHECK(table.shift_of(1, 1) == 0);
    CHECK(table.shift_of(2, 1) == 1);
    size_t repeated = 0;
    for (const auto& [key, m] : table.entries)
        if (key.first != key.second) ++repeated;
    CHECK(repeated >= 2);
    CHECK(table.entries.size() + table.unrelated.size() == 40);
}

TEST_CASE("shift table serialization") {
    std::string text = phase_shift_table(kExample3).to_text();
    CHECK(text.find("cell, reference, shift") != std::string::npos);
    CHECK(text.find("8, 10, 26") != std::string::npos);
    CHECK(text.find("unrelated:") != std::string::npos);
}
