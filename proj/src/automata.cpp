#include "ccsg/automata.hpp"

#include <stdexcept>

#include "ccsg/gf2linalg.hpp"

namespace ccsg {

RuleString::RuleString(Bits rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw std::invalid_argument("RuleString: length must be >= 1");
    for (uint8_t v : rules_)
        if (v > 1) throw std::invalid_argument("RuleString: entries must be 0 or 1");
}

RuleString RuleString::parse(std::string_view text) {
    return RuleString(bits_from_string(text));
}

RuleString RuleString::mirrored() const {
    Bits rev(rules_.rbegin(), rules_.rend());
    return RuleString(std::move(rev));
}

CaState ca_step(const RuleString& rules, const CaState& state) {
    int n = rules.size();
    if (static_cast<int>(state.size()) != n)
        throw std::invalid_argument("ca_step: state length does not match rule string");
    CaState next(n);
    for (int i = 0; i < n; ++i) {
        uint8_t left = (i > 0) ? state[i - 1] : 0;
        uint8_t right = (i < n - 1) ? state[i + 1] : 0;
        next[i] = left ^ right ^ (rules.is_150(i) ? state[i] : 0);
    }
    return next;
}

std::vector<CaState> ca_run(const RuleString& rules, const CaState& state, size_t n_steps) {
    std::vector<CaState> rows;
    rows.reserve(n_steps + 1);
    rows.push_back(state);
    for (size_t t = 0; t < n_steps; ++t) rows.push_back(ca_step(rules, rows.back()));
    return rows;
}

Bits cell_column(const std::vector<CaState>& rows, int cell) {
    Bits col;
    col.reserve(rows.size());
    for (const CaState& row : rows) {
        if (cell < 1 || cell > static_cast<int>(row.size()))
            throw std::invalid_argument("cell_column: cell index out of range");
        col.push_back(row[cell - 1]);
    }
    return col;
}

BinaryPolynomial ca_char_poly(const RuleString& rules) {
    BinaryPolynomial prev2;                          // D_{-1} = 0
    BinaryPolynomial prev = BinaryPolynomial::one();  // D_0 = 1
    BinaryPolynomial x = BinaryPolynomial::x();
    for (int k = 0; k < rules.size(); ++k) {
        BinaryPolynomial factor = rules.is_150(k) ? x + BinaryPolynomial::one() : x;
        BinaryPolynomial cur = factor * prev + prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

CaStateSolution ca_solve_initial_state(const RuleString& rules, int cell, const Bits& prefix) {
    int n = rules.size();
    if (cell < 1 || cell > n)
        throw std::invalid_argument("ca_solve_initial_state: cell index out of range");
    if (static_cast<int>(prefix.size()) != n)
        throw std::invalid_argument("ca_solve_initial_state: prefix length must equal CA length");

    // column i = the cell's first n outputs from unit state e_i (linearity)
    BitMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        CaState s(n, 0);
        s[i] = 1;
        for (int t = 0; t < n; ++t) {
            a.set(t, i, s[cell - 1]);
            if (t + 1 < n) s = ca_step(rules, s);
        }
    }
    auto sol = gf2_solve(a, prefix);
    if (!sol)
        throw std::domain_error("ca_solve_initial_state: no preimage for the given prefix");
    return {sol->x, sol->unique};
}

}  // namespace ccsg
