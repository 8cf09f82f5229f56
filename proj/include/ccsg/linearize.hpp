#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ccsg/automata.hpp"
#include "ccsg/gf2poly.hpp"

namespace ccsg {

struct LinearizationReport {
    int l1 = 0;
    std::optional<int> taps_width;
    uint64_t exponent = 0;      // E = 2^l1 - 1, or D = (1 + 2^w) 2^(l1-1) - 1
    uint64_t coset_leader = 0;
    int coset_size = 0;
    BinaryPolynomial coset_poly;
    std::pair<RuleString, RuleString> base_pair;   // lexicographically ordered
    std::pair<RuleString, RuleString> final_pair;
    int doublings = 0;          // l1 - 1
    bool degenerate_coset = false;  // coset size < deg(p2)
    bool w_equals_l1 = false;

    std::string to_text() const;
};

// E when taps_width is absent, D otherwise. Requires 1 <= w <= l1.
uint64_t coset_exponent(int l1, std::optional<int> taps_width = {});

// Two 90/150 rule strings whose characteristic polynomial is the given
// irreducible p; the second is the mirror image of the first, the first is
// lexicographically smallest. Found by continuant search (meet in the
// middle above degree 16).
std::pair<RuleString, RuleString> cattell_muzio_synthesize(const BinaryPolynomial& p);

// Complement the rightmost rule bit, then append the mirror image; the
// characteristic polynomial squares.
RuleString double_rules(const RuleString& rules);

// Full pipeline: exponent, coset polynomial, base pair, l1 - 1 doublings.
LinearizationReport linearize_generator(int l1, const BinaryPolynomial& p2,
                                        std::optional<int> taps_width = {});

}  // namespace ccsg
