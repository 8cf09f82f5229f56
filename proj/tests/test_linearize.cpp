#include <set>

#include "ccsg/gf2poly.hpp"
#include "ccsg/keystream.hpp"
#include "ccsg/linearize.hpp"
#include "doctest.h"

using namespace ccsg;

namespace {

BinaryPolynomial P(const char* text) { return BinaryPolynomial::parse(text); }

// exhaustive oracle, independent of the search inside cattell_muzio_synthesize
std::set<RuleString> oracle_synthesize(const BinaryPolynomial& p) {
    int n = p.degree();
    std::set<RuleString> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b[i] = (mask >> i) & 1;
        RuleString rules(b);
        if (ca_char_poly(rules) == p) out.insert(rules);
    }
    return out;
}

bool satisfies_recurrence(const Bits& bits, const BinaryPolynomial& p) {
    int d = p.degree();
    for (size_t t = 0; t + d < bits.size(); ++t) {
        uint8_t v = 0;
        for (int k = 0; k <= d; ++k)
            if (p.coeff(k)) v ^= bits[t + k];
        if (v) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("coset_exponent") {
    CHECK(coset_exponent(3) == 7);
    CHECK(coset_exponent(3, 3) == 35);
    CHECK(coset_exponent(3, 3) % 31 == 4);
    CHECK(coset_exponent(2, 1) == 5);
    CHECK(coset_exponent(1) == 1);
    CHECK_THROWS_AS(coset_exponent(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(coset_exponent(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(coset_exponent(0), std::invalid_argument);
}

TEST_CASE("cattell_muzio_synthesize golden pairs") {
    auto pair1 = cattell_muzio_synthesize(P("x^5+x^2+1"));
    CHECK(pair1.first.to_string() == "01111");
    CHECK(pair1.second.to_string() == "11110");

    auto pair2 = cattell_muzio_synthesize(P("1+x+x^2+x^4+x^5"));
    std::set<std::string> got{pair2.first.to_string(), pair2.second.to_string()};
    CHECK(got == std::set<std::string>{"10000", "00001"});
    CHECK(pair2.second == pair2.first.mirrored());

    auto single = cattell_muzio_synthesize(P("x"));
    CHECK(single.first.to_string() == "0");
    CHECK(single.second.to_string() == "0");

    CHECK_THROWS_AS(cattell_muzio_synthesize(P("x^2+1")), std::invalid_argument);
}

TEST_CASE("synthesis agrees with the exhaustive oracle and squares under doubling") {
    for (int degree = 1; degree <= 8; ++degree) {
        for (const BinaryPolynomial& p : irreducible_polynomials(degree)) {
            auto pair = cattell_muzio_synthesize(p);
            std::set<RuleString> expected = oracle_synthesize(p);
            std::set<RuleString> got{pair.first, pair.second};
            CHECK(got == expected);
            CHECK(pair.second == pair.first.mirrored());
            CHECK_FALSE(pair.second < pair.first);
            CHECK(ca_char_poly(pair.first) == p);

            RuleString doubled = double_rules(pair.first);
            CHECK(ca_char_poly(doubled) == p * p);
        }
    }
}

TEST_CASE("synthesis above the exhaustive cutoff uses the same contract") {
    // degree 17 exercises the meet-in-the-middle path
    BinaryPolynomial p = P("x^17+x^3+1");
    REQUIRE(is_irreducible(p));
    auto pair = cattell_muzio_synthesize(p);
    CHECK(ca_char_poly(pair.first) == p);
    CHECK(ca_char_poly(pair.second) == p);
    CHECK(pair.second == pair.first.mirrored());
}

TEST_CASE("double_rules golden chains") {
    CHECK(double_rules(RuleString::parse("01111")).to_string() == "0111001110");
    CHECK(double_rules(RuleString::parse("0111001110")).to_string() == "01110011111111001110");
    CHECK(double_rules(RuleString::parse("10000")).to_string() == "1000110001");
    CHECK(double_rules(RuleString::parse("1000110001")).to_string() == "10001100000000110001");

    RuleString two = double_rules(RuleString::parse("0"));
    CHECK(two.to_string() == "11");
    CHECK(ca_char_poly(two) == P("x^2"));
}

TEST_CASE("linearize_generator section-3 pipeline") {
    LinearizationReport rep = linearize_generator(3, P("1+x+x^2+x^4+x^5"));
    CHECK(rep.exponent == 7);
    CHECK(rep.coset_leader == 7);
    CHECK(rep.coset_size == 5);
    CHECK(rep.coset_poly == P("1+x^2+x^5"));
    CHECK(rep.base_pair.first.to_string() == "01111");
    CHECK(rep.base_pair.second.to_string() == "11110");
    CHECK(rep.doublings == 2);
    std::set<std::string> finals{rep.final_pair.first.to_string(),
                                 rep.final_pair.second.to_string()};
    CHECK(finals == std::set<std::string>{"01110011111111001110", "11111111100111111111"});
    CHECK_FALSE(rep.degenerate_coset);
    CHECK_FALSE(rep.w_equals_l1);
}

TEST_CASE("linearize_generator section-4 pipeline") {
    LinearizationReport rep = linearize_generator(3, P("1+x+x^2+x^4+x^5"), 3);
    CHECK(rep.exponent == 35);
    CHECK(rep.coset_leader == 1);
    CHECK(rep.coset_poly == P("1+x+x^2+x^4+x^5"));
    std::set<std::string> base{rep.base_pair.first.to_string(), rep.base_pair.second.to_string()};
    CHECK(base == std::set<std::string>{"10000", "00001"});
    std::set<std::string> finals{rep.final_pair.first.to_string(),
                                 rep.final_pair.second.to_string()};
    CHECK(finals == std::set<std::string>{"10001100000000110001", "00000000011000000000"});
    CHECK(rep.w_equals_l1);
}

TEST_CASE("linearize_generator smallest pipeline, verified by full-period replay") {
    LinearizationReport rep = linearize_generator(2, P("x^3+x+1"));
    CHECK(rep.exponent == 3);
    CHECK(rep.coset_poly == min_poly_of_power(P("x^3+x+1"), 3));
    CHECK(rep.final_pair.first.size() == 6);

    CcsgSpec sg(LfsrSpec(P("x^2+x+1"), bits_from_string("10")),
                LfsrSpec(P("x^3+x+1"), bits_from_string("100")));
    uint64_t period = keystream_period(sg);
    CHECK(period == 14);
    Bits ks = ccsg_keystream(sg, period + 6);
    Bits prefix(ks.begin(), ks.begin() + 6);
    CaStateSolution sol = ca_solve_initial_state(rep.final_pair.first, 1, prefix);
    Bits column = cell_column(ca_run(rep.final_pair.first, sol.state, period + 5), 1);
    CHECK(column == ks);
}

TEST_CASE("report flags a degenerate coset instead of failing") {
    // D = 35 = 5 mod 15 has the two-element coset {5, 10}
    LinearizationReport rep = linearize_generator(3, P("1+x+x^4"), 3);
    CHECK(rep.degenerate_coset);
    CHECK(rep.coset_size == 2);
    CHECK(rep.coset_poly == P("x^2+x+1"));
    CHECK(rep.final_pair.first.size() == 8);
    CHECK(ca_char_poly(rep.final_pair.first) ==
          rep.coset_poly * rep.coset_poly * rep.coset_poly * rep.coset_poly);
}

TEST_CASE("final automata have characteristic polynomial coset_poly^(2^(L1-1))") {
    for (auto [l1, poly] : std::vector<std::pair<int, const char*>>{
             {2, "x^3+x+1"}, {3, "1+x+x^2+x^4+x^5"}, {3, "1+x+x^4"}}) {
        LinearizationReport rep = linearize_generator(l1, P(poly));
        BinaryPolynomial expect = rep.coset_poly;
        for (int i = 0; i < l1 - 1; ++i) expect = expect * expect;
        CHECK(ca_char_poly(rep.final_pair.first) == expect);
        CHECK(ca_char_poly(rep.final_pair.second) == expect);
        // the base pair is a reversal pair; each doubled member is its own mirror
        CHECK(rep.base_pair.second == rep.base_pair.first.mirrored());
        CHECK(rep.final_pair.first.mirrored() == rep.final_pair.first);
        CHECK(rep.final_pair.second.mirrored() == rep.final_pair.second);
    }
}

TEST_CASE("reports do not depend on the control polynomial") {
    // both degree-3 control registers lead to the same report, and both
    // keystreams satisfy the coset_poly^(2^(L1-1)) recurrence
    LinearizationReport rep = linearize_generator(3, P("1+x+x^2+x^4+x^5"));
    BinaryPolynomial r = rep.coset_poly;
    for (int i = 0; i < 2; ++i) r = r * r;
    for (const char* p1 : {"1+x^2+x^3", "1+x+x^3"}) {
        CcsgSpec sg(LfsrSpec(P(p1), bits_from_string("100")),
                    LfsrSpec(P("1+x+x^2+x^4+x^5"), bits_from_string("10000")));
        CHECK(satisfies_recurrence(ccsg_keystream(sg, 280), r));
    }
}

TEST_CASE("coinciding cosets give identical reports for SG and CCSG") {
    // E = 3 and D = 5 share the coset {3, 5, 6} mod 7
    LinearizationReport sg = linearize_generator(2, P("x^3+x+1"));
    LinearizationReport cc = linearize_generator(2, P("x^3+x+1"), 1);
    CHECK(sg.exponent == 3);
    CHECK(cc.exponent == 5);
    CHECK(sg.coset_leader == cc.coset_leader);
    CHECK(sg.coset_poly == cc.coset_poly);
    CHECK(sg.base_pair == cc.base_pair);
    CHECK(sg.final_pair == cc.final_pair);
}

TEST_CASE("linearize_generator validates its inputs") {
    CHECK_THROWS_AS(linearize_generator(1, P("x^3+x+1")), std::invalid_argument);
    CHECK_THROWS_AS(linearize_generator(3, P("x^4+x^3+x^2+x+1")), std::invalid_argument);
    // E = 15 = 0 mod 15: degenerate exponent surfaces from min_poly_of_power
    CHECK_THROWS_AS(linearize_generator(4, P("1+x+x^4")), std::invalid_argument);
}

TEST_CASE("report text uses the stable field names") {
    LinearizationReport rep = linearize_generator(3, P("1+x+x^2+x^4+x^5"), 3);
    std::string text = rep.to_text();
    for (const char* key : {"exponent: 35", "coset_leader: 1", "coset_poly: ", "base_pair: ",
                            "final_pair: ", "doublings: 2", "w_equals_l1: true"})
        CHECK(text.find(key) != std::string::npos);
}
