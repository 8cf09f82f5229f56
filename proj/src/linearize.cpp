#include "ccsg/linearize.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ccsg {

namespace {

// mask polynomials: bit k = coefficient of x^k, degrees kept below 64

int mdeg(uint64_t p) { return 63 - std::countl_zero(p); }

uint64_t mmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

uint64_t mmod(uint64_t a, uint64_t m) {
    int dm = mdeg(m);
    while (a && mdeg(a) >= dm) a ^= m << (mdeg(a) - dm);
    return a;
}

uint64_t mdiv(uint64_t a, uint64_t m) {
    uint64_t q = 0;
    int dm = mdeg(m);
    while (a && mdeg(a) >= dm) {
        int s = mdeg(a) - dm;
        q ^= uint64_t(1) << s;
        a ^= m << s;
    }
    return q;
}

// inverse of a modulo m, gcd(a, m) = 1 assumed (successive continuants are coprime)
uint64_t minv(uint64_t a, uint64_t m) {
    uint64_t r0 = m, r1 = mmod(a, m);
    if (r1 == 0) throw std::logic_error("minv: not invertible");
    uint64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        uint64_t q = mdiv(r0, r1);
        uint64_t r2 = r0 ^ mmul(q, r1);
        uint64_t t2 = t0 ^ mmul(q, t1);
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::logic_error("minv: gcd is not 1");
    return t0;
}

// continuant D_n of the rule mask (bit k = rule of cell k+1)
uint64_t continuant(uint64_t rules, int n) {
    uint64_t prev2 = 0, prev = 1;
    for (int k = 0; k < n; ++k) {
        uint64_t factor = 2 | ((rules >> k) & 1);
        uint64_t cur = mmul(factor, prev) ^ prev2;
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

std::vector<uint64_t> search_exhaustive(uint64_t p, int n) {
    std::vector<uint64_t> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask)
        if (continuant(mask, n) == p) out.push_back(mask);
    return out;
}

// Meet in the middle on the continuant identity
//   D_n = D_h * K(d_{h+1}..d_n) + D_{h-1} * K(d_{h+2}..d_n)
// which, reduced mod D_h, pins K(d_{h+2}..d_n) = p * D_{h-1}^{-1} mod D_h
// exactly (its degree n-h-1 stays below h).
std::vector<uint64_t> search_mitm(uint64_t p, int n) {
    int h = n / 2 + 1;
    int nr = n - h;
    std::unordered_map<uint64_t, std::vector<uint64_t>> right;  // K(h+2..n) -> masks
    for (uint64_t mask = 0; mask < (uint64_t(1) << nr); ++mask) {
        uint64_t r1 = 1, r2 = 0;  // K(j..n), K(j+1..n) walking j downwards
        for (int j = nr - 1; j >= 0; --j) {
            uint64_t factor = 2 | ((mask >> j) & 1);
            uint64_t cur = mmul(factor, r1) ^ r2;
            r2 = r1;
            r1 = cur;
        }
        right[r2].push_back(mask);
    }
    std::vector<uint64_t> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << h); ++mask) {
        uint64_t dh = 1, dh1 = 0;
        for (int k = 0; k < h; ++k) {
            uint64_t factor = 2 | ((mask >> k) & 1);
            uint64_t cur = mmul(factor, dh) ^ dh1;
            dh1 = dh;
            dh = cur;
        }
        uint64_t key = mmod(mmul(mmod(p, dh), minv(dh1, dh)), dh);
        auto it = right.find(key);
        if (it == right.end()) continue;
        for (uint64_t rmask : it->second) {
            uint64_t full = mask | (rmask << h);
            if (continuant(full, n) == p) out.push_back(full);
        }
    }
    return out;
}

RuleString mask_to_rules(uint64_t mask, int n) {
    Bits b(n);
    for (int k = 0; k < n; ++k) b[k] = (mask >> k) & 1;
    return RuleString(std::move(b));
}

}  // namespace

uint64_t coset_exponent(int l1, std::optional<int> taps_width) {
    if (l1 < 1 || l1 > 31) throw std::invalid_argument("coset_exponent: l1 out of range");
    if (!taps_width) return (uint64_t(1) << l1) - 1;
    int w = *taps_width;
    if (w < 1 || w > l1)
        throw std::invalid_argument("coset_exponent: taps width must satisfy 1 <= w <= l1");
    return ((uint64_t(1) + (uint64_t(1) << w)) << (l1 - 1)) - 1;
}

std::pair<RuleString, RuleString> cattell_muzio_synthesize(const BinaryPolynomial& p) {
    int n = p.degree();
    if (n < 1) throw std::invalid_argument("cattell_muzio_synthesize: degree must be >= 1");
    if (n > 48) throw std::domain_error("cattell_muzio_synthesize: degree limited to 48");
    if (!is_irreducible(p))
        throw std::invalid_argument("cattell_muzio_synthesize: polynomial must be irreducible");

    uint64_t mask = p.to_mask();
    std::vector<uint64_t> found = (n <= 16) ? search_exhaustive(mask, n) : search_mitm(mask, n);

    std::set<RuleString> sols;
    for (uint64_t f : found) sols.insert(mask_to_rules(f, n));
    if (sols.empty())
        throw std::logic_error("cattell_muzio_synthesize: no 90/150 automaton found");
    RuleString first = *sols.begin();
    RuleString second = first.mirrored();
    if (sols.count(second) == 0 || sols.size() > 2)
        throw std::logic_error("cattell_muzio_synthesize: unexpected solution set");
    return {first, second};
}

RuleString double_rules(const RuleString& rules) {
    Bits b = rules.bits();
    b.back() ^= 1;
    Bits out = b;
    out.insert(out.end(), b.rbegin(), b.rend());
    return RuleString(std::move(out));
}

LinearizationReport linearize_generator(int l1, const BinaryPolynomial& p2,
                                        std::optional<int> taps_width) {
    if (l1 < 2) throw std::invalid_argument("linearize_generator: l1 must be >= 2");
    if (!is_primitive(p2))
        throw std::invalid_argument("linearize_generator: p2 must be primitive");
    int l2 = p2.degree();

    LinearizationReport rep;
    rep.l1 = l1;
    rep.taps_width = taps_width;
    rep.exponent = coset_exponent(l1, taps_width);
    rep.doublings = l1 - 1;
    rep.w_equals_l1 = taps_width && *taps_width == l1;

    uint64_t n = (uint64_t(1) << l2) - 1;
    std::vector<uint64_t> coset = cyclotomic_coset(rep.exponent, n);
    rep.coset_leader = coset.front();
    rep.coset_size = static_cast<int>(coset.size());
    rep.degenerate_coset = rep.coset_size < l2;
    rep.coset_poly = min_poly_of_power(p2, rep.exponent % n);

    rep.base_pair = cattell_muzio_synthesize(rep.coset_poly);
    rep.final_pair = rep.base_pair;
    for (int i = 0; i < rep.doublings; ++i) {
        rep.final_pair.first = double_rules(rep.final_pair.first);
        rep.final_pair.second = double_rules(rep.final_pair.second);
    }
    return rep;
}

std::string LinearizationReport::to_text() const {
    std::ostringstream os;
    os << "l1: " << l1 << "\n";
    if (taps_width) os << "taps_width: " << *taps_width << "\n";
    os << "exponent: " << exponent << "\n";
    os << "coset_leader: " << coset_leader << "\n";
    os << "coset_size: " << coset_size << "\n";
    os << "coset_poly: " << coset_poly.to_string() << "\n";
    os << "base_pair: " << base_pair.first.to_string() << " " << base_pair.second.to_string()
       << "\n";
    os << "final_pair: " << final_pair.first.to_string() << " " << final_pair.second.to_string()
       << "\n";
    os << "doublings: " << doublings << "\n";
    if (degenerate_coset) os << "degenerate_coset: true\n";
    if (w_equals_l1) os << "w_equals_l1: true\n";
    return os.str();
}

}  // namespace ccsg
