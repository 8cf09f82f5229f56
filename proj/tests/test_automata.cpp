#include <random>

#include "ccsg/automata.hpp"
#include "ccsg/gf2poly.hpp"
#include "doctest.h"

using namespace ccsg;

namespace {

BinaryPolynomial P(const char* text) { return BinaryPolynomial::parse(text); }

const char* kTable1Rows[10] = {
    "0001110110", "0010010001", "0111101010", "1011101011", "0001101001",
    "0010101110", "0110000101", "1001001100", "0111110010", "1011011111",
};
const RuleString kTable1Rules = RuleString::parse("0111001110");  // 90,150,150,150,90,90,150,150,150,90

CaState random_state(std::mt19937_64& rng, int n) {
    CaState s(n);
    for (int i = 0; i < n; ++i) s[i] = rng() & 1;
    return s;
}

RuleString random_rules(std::mt19937_64& rng, int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b[i] = rng() & 1;
    return RuleString(std::move(b));
}

}  // namespace

TEST_CASE("ca_step") {
    CHECK(bits_to_string(ca_step(kTable1Rules, bits_from_string("0001110110"))) == "0010010001");
    CHECK(ca_step(kTable1Rules, CaState(10, 0)) == CaState(10, 0));
    CHECK(bits_to_string(ca_step(RuleString::parse("00"), bits_from_string("10"))) == "01");
    CHECK_THROWS_AS(ca_step(kTable1Rules, CaState(9, 0)), std::invalid_argument);
}

TEST_CASE("ca_run reproduces Table 1") {
    auto rows = ca_run(kTable1Rules, bits_from_string(kTable1Rows[0]), 9);
    REQUIRE(rows.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(bits_to_string(rows[i]) == kTable1Rows[i]);

    CaState s = bits_from_string("0110");
    auto two = ca_run(RuleString::parse("0101"), s, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == s);
    CHECK(two[1] == ca_step(RuleString::parse("0101"), s));

    auto zero = ca_run(kTable1Rules, CaState(10, 0), 5);
    for (const auto& row : zero) CHECK(all_zero(row));
}

TEST_CASE("ca_char_poly golden values") {
    BinaryPolynomial q = P("1+x+x^3+x^4+x^5");
    CHECK(ca_char_poly(RuleString::parse("0011001100")) == q * q);
    CHECK(ca_char_poly(RuleString::parse("0")) == P("x"));
    CHECK(ca_char_poly(RuleString::parse("01111")) == P("x^5+x^2+1"));
    CHECK(ca_char_poly(RuleString::parse("10000")) == P("1+x+x^2+x^4+x^5"));
}

TEST_CASE("ca_char_poly is mirror invariant, exhaustively through length 12") {
    for (int n = 1; n <= 12; ++n) {
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            Bits b(n);
            for (int i = 0; i < n; ++i) b[i] = (mask >> i) & 1;
            RuleString rules(b);
            CHECK(ca_char_poly(rules) == ca_char_poly(rules.mirrored()));
        }
    }
}

TEST_CASE("every cell column satisfies the characteristic recurrence") {
    std::mt19937_64 rng(11);
    for (int n : {3, 8, 15, 24}) {
        RuleString rules = random_rules(rng, n);
        BinaryPolynomial delta = ca_char_poly(rules);
        auto rows = ca_run(rules, random_state(rng, n), n + 40);
        for (int cell = 1; cell <= n; ++cell) {
            Bits col = cell_column(rows, cell);
            for (size_t t = 0; t + n < col.size(); ++t) {
                uint8_t v = 0;
                for (int k = 0; k <= n; ++k)
                    if (delta.coeff(k)) v ^= col[t + k];
                CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("ca_step is GF(2)-linear") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 20);
        RuleString rules = random_rules(rng, n);
        CaState u = random_state(rng, n), v = random_state(rng, n);
        CaState uv(n);
        for (int i = 0; i < n; ++i) uv[i] = u[i] ^ v[i];
        CaState su = ca_step(rules, u), sv = ca_step(rules, v), suv = ca_step(rules, uv);
        for (int i = 0; i < n; ++i) CHECK(suv[i] == (su[i] ^ sv[i]));
    }
}

TEST_CASE("ca_solve_initial_state round trips") {
    // Table 1 column 1 determines the Table 1 initial state
    auto rows = ca_run(kTable1Rules, bits_from_string(kTable1Rows[0]), 9);
    Bits prefix = cell_column(rows, 1);
    CaStateSolution sol = ca_solve_initial_state(kTable1Rules, 1, prefix);
    CHECK(sol.unique);
    CHECK(sol.state == bits_from_string(kTable1Rows[0]));

    CaStateSolution zero = ca_solve_initial_state(kTable1Rules, 1, Bits(10, 0));
    CHECK(all_zero(zero.state));

    CHECK_THROWS_AS(ca_solve_initial_state(kTable1Rules, 1, Bits(4, 0)), std::invalid_argument);
    CHECK_THROWS_AS(ca_solve_initial_state(kTable1Rules, 11, Bits(10, 0)), std::invalid_argument);
}

TEST_CASE("ca_solve_initial_state flags non-unique solutions") {
    // middle cell of the all-90 3-cell automaton cannot see the outer parity
    RuleString rules = RuleString::parse("000");
    Bits prefix = {0, 1, 0};
    CaStateSolution sol = ca_solve_initial_state(rules, 2, prefix);
    CHECK_FALSE(sol.unique);
    Bits col = cell_column(ca_run(rules, sol.state, 2), 2);
    CHECK(col == prefix);
}

TEST_CASE("ca_solve_initial_state rejects unreachable prefixes") {
    // the middle cell of the all-90 3-cell automaton emits columns spanned by
    // (0,1,0) and (1,0,0); a third output of 1 is unreachable
    RuleString rules = RuleString::parse("000");
    CHECK_THROWS_AS(ca_solve_initial_state(rules, 2, Bits{0, 0, 1}), std::domain_error);
}
