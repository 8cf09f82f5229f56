#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccsg/automata.hpp"
#include "ccsg/gf2poly.hpp"

namespace ccsg {

// Relative shifts between cells emitting the same sequence. An entry
// (cell, reference) -> m means the cell's sequence equals the reference
// sequence advanced by m steps: X_cell(t) = X_ref(t + m). Cells 1-indexed.
struct ShiftTable {
    std::map<std::pair<int, int>, uint64_t> entries;
    std::set<std::pair<int, int>> unrelated;

    std::optional<uint64_t> shift_of(int cell, int reference) const;
    std::string to_text() const;
};

// Operator polynomials p_i with X_i = p_i(S) X_ref, obtained by
// back-substitution through the per-cell difference equations and reduced
// mod R(S) = ca_char_poly(rules). Reference must be an extreme cell (1 or n).
std::vector<BinaryPolynomial> cell_operator_polys(const RuleString& rules, int reference);

// Smallest m >= 0 with S^m = target mod modulus, or nullopt when the target
// is not a power of S. Linear scan with cycle detection; no factorization of
// the modulus is assumed.
std::optional<uint64_t> s_discrete_log(const BinaryPolynomial& target,
                                       const BinaryPolynomial& modulus);

// Number of distinct powers of S modulo R (the order of S when invertible).
uint64_t s_power_count(const BinaryPolynomial& modulus);

ShiftTable phase_shift_table(const RuleString& rules);

}  // namespace ccsg
