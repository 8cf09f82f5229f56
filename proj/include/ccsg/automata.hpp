#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccsg/bits.hpp"
#include "ccsg/gf2poly.hpp"

namespace ccsg {

// Per-cell rule assignment of a null hybrid 90/150 automaton: 0 = rule 90,
// 1 = rule 150. Index 0 is cell 1 (cells are 1-indexed in reports).
class RuleString {
public:
    RuleString() = default;
    explicit RuleString(Bits rules);
    static RuleString parse(std::string_view text);

    int size() const { return static_cast<int>(rules_.size()); }
    bool is_150(int i) const { return rules_[i] != 0; }  // 0-indexed
    const Bits& bits() const { return rules_; }
    RuleString mirrored() const;
    std::string to_string() const { return bits_to_string(rules_); }

    bool operator==(const RuleString& o) const { return rules_ == o.rules_; }
    bool operator!=(const RuleString& o) const { return rules_ != o.rules_; }
    bool operator<(const RuleString& o) const { return rules_ < o.rules_; }

private:
    Bits rules_;
};

using CaState = Bits;

// One synchronous update with null boundaries.
CaState ca_step(const RuleString& rules, const CaState& state);

// Initial state plus n_steps successors: n_steps + 1 rows.
std::vector<CaState> ca_run(const RuleString& rules, const CaState& state, size_t n_steps);

// Column of a 1-indexed cell from a run's rows.
Bits cell_column(const std::vector<CaState>& rows, int cell);

// Characteristic polynomial of the transition map via the tridiagonal
// recurrence D_k = (x + d_k) D_{k-1} + D_{k-2}, D_0 = 1, D_{-1} = 0.
BinaryPolynomial ca_char_poly(const RuleString& rules);

struct CaStateSolution {
    CaState state;
    bool unique;
};

// State whose run makes the 1-indexed cell emit exactly `prefix` over the
// first n steps (prefix length must equal the CA length). Throws when no
// preimage exists; a rank-deficient system returns one solution, flagged.
CaStateSolution ca_solve_initial_state(const RuleString& rules, int cell, const Bits& prefix);

}  // namespace ccsg
