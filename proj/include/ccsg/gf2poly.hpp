#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccsg/bits.hpp"

namespace ccsg {

// Polynomial over GF(2). Bit k of the backing words is the coefficient of x^k;
// the representation is kept canonical (no zero words above the degree).
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;  // zero polynomial, degree -1

    static BinaryPolynomial zero() { return {}; }
    static BinaryPolynomial one() { return from_mask(1); }
    static BinaryPolynomial x() { return from_mask(2); }
    static BinaryPolynomial monomial(int k);
    static BinaryPolynomial from_mask(uint64_t mask);
    static BinaryPolynomial from_coeff_bits(const Bits& ascending);

    // Accepts "x^5 + x^2 + 1" (any spacing) or an ascending 0/1 coefficient
    // string such as "101001" = 1 + x^2 + x^5.
    static BinaryPolynomial parse(std::string_view text);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    bool coeff(int k) const;
    void set_coeff(int k, bool v);
    Bits coeff_bits() const;    // ascending, degree+1 entries (empty for zero)
    uint64_t to_mask() const;   // requires degree < 64

    BinaryPolynomial operator+(const BinaryPolynomial& o) const;
    BinaryPolynomial& operator+=(const BinaryPolynomial& o);
    BinaryPolynomial operator*(const BinaryPolynomial& o) const;
    BinaryPolynomial shifted(int k) const;  // multiply by x^k

    static std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a,
                                                                const BinaryPolynomial& b);
    BinaryPolynomial operator%(const BinaryPolynomial& m) const;
    BinaryPolynomial operator/(const BinaryPolynomial& m) const;
    static BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

    BinaryPolynomial reciprocal() const;  // x^deg * p(1/x)

    std::string to_string() const;  // "x^5 + x^2 + 1"; zero prints "0"

    bool operator==(const BinaryPolynomial& o) const { return words_ == o.words_; }
    bool operator!=(const BinaryPolynomial& o) const { return words_ != o.words_; }
    bool operator<(const BinaryPolynomial& o) const;

private:
    std::vector<uint64_t> words_;
    void trim();
};

// Residue class in GF(2)[x]/(modulus).
class FieldElement {
public:
    FieldElement(BinaryPolynomial residue, BinaryPolynomial modulus);

    static FieldElement zero(const BinaryPolynomial& modulus);
    static FieldElement one(const BinaryPolynomial& modulus);
    static FieldElement alpha(const BinaryPolynomial& modulus);  // class of x

    const BinaryPolynomial& residue() const { return residue_; }
    const BinaryPolynomial& modulus() const { return modulus_; }
    bool is_zero() const { return residue_.is_zero(); }
    bool is_one() const { return residue_.is_one(); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement pow(uint64_t e) const;

    bool operator==(const FieldElement& o) const {
        return residue_ == o.residue_ && modulus_ == o.modulus_;
    }

private:
    BinaryPolynomial residue_;
    BinaryPolynomial modulus_;
};

// (a*b) mod m; m must have degree >= 1.
BinaryPolynomial poly_product_mod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                                  const BinaryPolynomial& m);
BinaryPolynomial poly_pow_mod(const BinaryPolynomial& base, uint64_t e,
                              const BinaryPolynomial& m);

bool is_irreducible(const BinaryPolynomial& p);
bool is_primitive(const BinaryPolynomial& p);

// Orbit {e, 2e, 4e, ...} mod n, in ascending order. e is reduced mod n first.
std::vector<uint64_t> cyclotomic_coset(uint64_t e, uint64_t n);

// Minimal polynomial of alpha^e where alpha is a root of the primitive
// polynomial p2: the product of (x + alpha^(e*2^j)) over the full coset.
BinaryPolynomial min_poly_of_power(const BinaryPolynomial& p2, uint64_t e);

// Minimal characteristic polynomial p with sum_k p_k * bits[t+k] = 0 for all
// valid t. The all-zero sequence yields the constant 1 (linear complexity 0).
BinaryPolynomial berlekamp_massey(const Bits& bits);
inline int linear_complexity(const Bits& bits) { return berlekamp_massey(bits).degree(); }

std::vector<BinaryPolynomial> irreducible_polynomials(int degree);
std::vector<BinaryPolynomial> primitive_polynomials(int degree);

// Decompose p as base^(2^j) with base not a square; returns (base, 2^j).
std::pair<BinaryPolynomial, int> two_power_base(const BinaryPolynomial& p);

}  // namespace ccsg
