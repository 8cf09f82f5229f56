#include "ccsg/phaseshift.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ccsg {

namespace {

// residues of S^0, S^1, ... mod R until the first repeat; R degree <= 63 so
// residues pack into one word
std::unordered_map<uint64_t, uint64_t> power_residues(const BinaryPolynomial& modulus) {
    if (modulus.degree() < 1)
        throw std::invalid_argument("s_discrete_log: modulus degree must be >= 1");
    if (modulus.degree() > 63)
        throw std::domain_error("s_discrete_log: modulus degree limited to 63");
    uint64_t m = modulus.to_mask();
    int dm = modulus.degree();
    std::unordered_map<uint64_t, uint64_t> seen;
    uint64_t r = 1, k = 0;
    while (seen.find(r) == seen.end()) {
        seen.emplace(r, k);
        r <<= 1;  // degree can only reach dm after one shift
        if ((r >> dm) & 1) r ^= m;
        ++k;
    }
    return seen;
}

}  // namespace

std::vector<BinaryPolynomial> cell_operator_polys(const RuleString& rules, int reference) {
    int n = rules.size();
    if (reference != 1 && reference != n)
        throw std::invalid_argument("cell_operator_polys: reference must be an extreme cell");
    BinaryPolynomial r = ca_char_poly(rules);
    BinaryPolynomial x = BinaryPolynomial::x();
    std::vector<BinaryPolynomial> p(n + 2);
    if (reference == n) {
        // S X_i = X_{i-1} + d_i X_i + X_{i+1}  =>  p_{i-1} = (S + d_i) p_i + p_{i+1}
        p[n] = BinaryPolynomial::one();
        p[n + 1] = BinaryPolynomial::zero();
        for (int i = n; i >= 2; --i) {
            BinaryPolynomial factor = rules.is_150(i - 1) ? x + BinaryPolynomial::one() : x;
            p[i - 1] = (factor * p[i] + p[i + 1]) % r;
        }
    } else {
        p[1] = BinaryPolynomial::one();
        p[0] = BinaryPolynomial::zero();
        for (int i = 1; i <= n - 1; ++i) {
            BinaryPolynomial factor = rules.is_150(i - 1) ? x + BinaryPolynomial::one() : x;
            p[i + 1] = (factor * p[i] + p[i - 1]) % r;
        }
    }
    return std::vector<BinaryPolynomial>(p.begin() + 1, p.begin() + n + 1);
}

std::optional<uint64_t> s_discrete_log(const BinaryPolynomial& target,
                                       const BinaryPolynomial& modulus) {
    if (target.is_zero()) throw std::invalid_argument("s_discrete_log: zero target");
    BinaryPolynomial reduced = target % modulus;
    if (reduced.is_zero()) throw std::invalid_argument("s_discrete_log: target is 0 mod modulus");
    auto residues = power_residues(modulus);
    auto it = residues.find(reduced.to_mask());
    if (it == residues.end()) return std::nullopt;
    return it->second;
}

uint64_t s_power_count(const BinaryPolynomial& modulus) {
    return power_residues(modulus).size();
}

ShiftTable phase_shift_table(const RuleString& rules) {
    int n = rules.size();
    ShiftTable table;
    BinaryPolynomial r = ca_char_poly(rules);
    auto residues = power_residues(r);
    std::vector<int> refs = (n == 1) ? std::vector<int>{1} : std::vector<int>{1, n};
    for (int ref : refs) {
        std::vector<BinaryPolynomial> polys = cell_operator_polys(rules, ref);
        for (int cell = 1; cell <= n; ++cell) {
            auto it = residues.find((polys[cell - 1] % r).to_mask());
            if (it != residues.end())
                table.entries[{cell, ref}] = it->second;
            else
                table.unrelated.insert({cell, ref});
        }
    }
    return table;
}

std::optional<uint64_t> ShiftTable::shift_of(int cell, int reference) const {
    auto it = entries.find({cell, reference});
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

std::string ShiftTable::to_text() const {
    std::ostringstream os;
    os << "cell, reference, shift\n";
    for (const auto& [key, m] : entries)
        os << key.first << ", " << key.second << ", " << m << "\n";
    os << "unrelated:";
    if (unrelated.empty()) os << " none";
    for (const auto& [cell, ref] : unrelated) os << " " << cell << "/" << ref;
    os << "\n";
    return os.str();
}

}  // namespace ccsg
