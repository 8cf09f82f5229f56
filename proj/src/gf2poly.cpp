#include "ccsg/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ccsg {

namespace {

int word_index(int k) { return k >> 6; }
uint64_t word_bit(int k) { return uint64_t(1) << (k & 63); }

}  // namespace

void BinaryPolynomial::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial BinaryPolynomial::monomial(int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    BinaryPolynomial p;
    p.words_.resize(word_index(k) + 1, 0);
    p.words_.back() |= word_bit(k);
    return p;
}

BinaryPolynomial BinaryPolynomial::from_mask(uint64_t mask) {
    BinaryPolynomial p;
    if (mask) p.words_.push_back(mask);
    return p;
}

BinaryPolynomial BinaryPolynomial::from_coeff_bits(const Bits& ascending) {
    BinaryPolynomial p;
    for (size_t k = 0; k < ascending.size(); ++k)
        if (ascending[k]) p.set_coeff(static_cast<int>(k), true);
    return p;
}

int BinaryPolynomial::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(words_.size()) * 64 - 1 - std::countl_zero(words_.back());
}

bool BinaryPolynomial::coeff(int k) const {
    if (k < 0) return false;
    size_t w = word_index(k);
    if (w >= words_.size()) return false;
    return (words_[w] & word_bit(k)) != 0;
}

void BinaryPolynomial::set_coeff(int k, bool v) {
    if (k < 0) throw std::invalid_argument("set_coeff: negative exponent");
    size_t w = word_index(k);
    if (v) {
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= word_bit(k);
    } else if (w < words_.size()) {
        words_[w] &= ~word_bit(k);
        trim();
    }
}

Bits BinaryPolynomial::coeff_bits() const {
    int d = degree();
    Bits b(d + 1, 0);
    for (int k = 0; k <= d; ++k) b[k] = coeff(k);
    return b;
}

uint64_t BinaryPolynomial::to_mask() const {
    if (degree() >= 64) throw std::domain_error("to_mask: degree exceeds 63");
    return words_.empty() ? 0 : words_[0];
}

BinaryPolynomial BinaryPolynomial::operator+(const BinaryPolynomial& o) const {
    BinaryPolynomial r = *this;
    r += o;
    return r;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
}

BinaryPolynomial BinaryPolynomial::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    BinaryPolynomial r;
    int wshift = k >> 6, bshift = k & 63;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] |= words_[i] << bshift;
        if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (64 - bshift);
    }
    r.trim();
    return r;
}

BinaryPolynomial BinaryPolynomial::operator*(const BinaryPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    BinaryPolynomial acc;
    int d = degree();
    for (int k = 0; k <= d; ++k)
        if (coeff(k)) acc += o.shifted(k);
    return acc;
}

std::pair<BinaryPolynomial, BinaryPolynomial> BinaryPolynomial::divmod(
    const BinaryPolynomial& a, const BinaryPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    BinaryPolynomial q, r = a;
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int s = r.degree() - db;
        q.set_coeff(s, true);
        r += b.shifted(s);
    }
    return {q, r};
}

BinaryPolynomial BinaryPolynomial::operator%(const BinaryPolynomial& m) const {
    return divmod(*this, m).second;
}

BinaryPolynomial BinaryPolynomial::operator/(const BinaryPolynomial& m) const {
    return divmod(*this, m).first;
}

BinaryPolynomial BinaryPolynomial::gcd(BinaryPolynomial a, BinaryPolynomial b) {
    while (!b.is_zero()) {
        BinaryPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BinaryPolynomial BinaryPolynomial::reciprocal() const {
    int d = degree();
    if (d <= 0) return *this;
    BinaryPolynomial r;
    for (int k = 0; k <= d; ++k)
        if (coeff(k)) r.set_coeff(d - k, true);
    return r;
}

std::string BinaryPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        if (!coeff(k)) continue;
        if (!s.empty()) s += " + ";
        if (k == 0)
            s += "1";
        else if (k == 1)
            s += "x";
        else
            s += "x^" + std::to_string(k);
    }
    return s;
}

bool BinaryPolynomial::operator<(const BinaryPolynomial& o) const {
    if (words_.size() != o.words_.size()) return words_.size() < o.words_.size();
    for (size_t i = words_.size(); i-- > 0;)
        if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
    size_t first = text.find_first_not_of(" \t");
    size_t last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos)
        throw std::invalid_argument("polynomial parse error: empty input");
    std::string_view body = text.substr(first, last - first + 1);

    bool binary_only = true;
    for (char c : body)
        if (c != '0' && c != '1') { binary_only = false; break; }
    if (binary_only) {
        BinaryPolynomial p;
        for (size_t k = 0; k < body.size(); ++k)
            if (body[k] == '1') p.set_coeff(static_cast<int>(k), true);
        return p;
    }

    BinaryPolynomial p;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t plus = body.find('+', pos);
        size_t end = (plus == std::string_view::npos) ? body.size() : plus;
        size_t ts = pos, te = end;
        while (ts < te && (body[ts] == ' ' || body[ts] == '\t')) ++ts;
        while (te > ts && (body[te - 1] == ' ' || body[te - 1] == '\t')) --te;
        std::string_view term = body.substr(ts, te - ts);
        size_t at = first + ts;
        if (term.empty())
            throw std::invalid_argument("polynomial parse error: empty term at position " +
                                        std::to_string(at));
        int k;
        if (term == "1") {
            k = 0;
        } else if (term == "x") {
            k = 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            k = 0;
            for (size_t i = 2; i < term.size(); ++i) {
                if (term[i] < '0' || term[i] > '9')
                    throw std::invalid_argument(
                        "polynomial parse error: bad exponent at position " +
                        std::to_string(at + i));
                k = k * 10 + (term[i] - '0');
                if (k > 1'000'000)
                    throw std::invalid_argument(
                        "polynomial parse error: exponent too large at position " +
                        std::to_string(at));
            }
        } else {
            throw std::invalid_argument("polynomial parse error: bad term at position " +
                                        std::to_string(at));
        }
        p.set_coeff(k, !p.coeff(k));  // characteristic 2: repeated terms cancel
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return p;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(BinaryPolynomial residue, BinaryPolynomial modulus)
    : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1)
        throw std::invalid_argument("FieldElement: modulus must have degree >= 1");
    residue_ = residue % modulus_;
}

FieldElement FieldElement::zero(const BinaryPolynomial& modulus) {
    return {BinaryPolynomial::zero(), modulus};
}
FieldElement FieldElement::one(const BinaryPolynomial& modulus) {
    return {BinaryPolynomial::one(), modulus};
}
FieldElement FieldElement::alpha(const BinaryPolynomial& modulus) {
    return {BinaryPolynomial::x(), modulus};
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (modulus_ != o.modulus_)
        throw std::invalid_argument("FieldElement: mixed moduli");
    return {residue_ + o.residue_, modulus_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (modulus_ != o.modulus_)
        throw std::invalid_argument("FieldElement: mixed moduli");
    return {poly_product_mod(residue_, o.residue_, modulus_), modulus_};
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement r = one(modulus_);
    FieldElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------

BinaryPolynomial poly_product_mod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                                  const BinaryPolynomial& m) {
    if (m.degree() < 1)
        throw std::invalid_argument("poly_product_mod: invalid modulus");
    return (a * b) % m;
}

BinaryPolynomial poly_pow_mod(const BinaryPolynomial& base, uint64_t e,
                              const BinaryPolynomial& m) {
    if (m.degree() < 1) throw std::invalid_argument("poly_pow_mod: invalid modulus");
    BinaryPolynomial r = BinaryPolynomial::one() % m;
    BinaryPolynomial b = base % m;
    while (e) {
        if (e & 1) r = poly_product_mod(r, b, m);
        b = poly_product_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// x^(2^k) mod p by repeated squaring of the Frobenius chain
BinaryPolynomial x_pow_pow2_mod(int k, const BinaryPolynomial& p) {
    BinaryPolynomial r = BinaryPolynomial::x() % p;
    for (int i = 0; i < k; ++i) r = poly_product_mod(r, r, p);
    return r;
}

}  // namespace

bool is_irreducible(const BinaryPolynomial& p) {
    int d = p.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    // Rabin: x^(2^d) == x mod p, and gcd(x^(2^(d/q)) - x, p) = 1 for primes q | d
    BinaryPolynomial x = BinaryPolynomial::x();
    if (x_pow_pow2_mod(d, p) != x % p) return false;
    for (uint64_t q : prime_factors(static_cast<uint64_t>(d))) {
        BinaryPolynomial h = x_pow_pow2_mod(d / static_cast<int>(q), p) + x % p;
        if (!BinaryPolynomial::gcd(h, p).is_one()) return false;
    }
    return true;
}

bool is_primitive(const BinaryPolynomial& p) {
    int d = p.degree();
    if (d < 1) return false;
    if (!p.coeff(0)) return false;  // x divides p, so x is not a unit mod p
    if (!is_irreducible(p)) return false;
    if (d > 62) throw std::domain_error("is_primitive: degree limited to 62");
    uint64_t n = (uint64_t(1) << d) - 1;
    BinaryPolynomial x = BinaryPolynomial::x();
    for (uint64_t q : prime_factors(n))
        if (poly_pow_mod(x, n / q, p).is_one()) return false;
    return true;
}

std::vector<uint64_t> cyclotomic_coset(uint64_t e, uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_coset: zero modulus");
    e %= n;
    std::vector<uint64_t> coset;
    uint64_t v = e;
    do {
        coset.push_back(v);
        v = (v * 2) % n;
    } while (v != e);
    std::sort(coset.begin(), coset.end());
    return coset;
}

BinaryPolynomial min_poly_of_power(const BinaryPolynomial& p2, uint64_t e) {
    int l2 = p2.degree();
    if (l2 < 1 || l2 > 62)
        throw std::invalid_argument("min_poly_of_power: degree out of range");
    if (!is_primitive(p2))
        throw std::invalid_argument("min_poly_of_power: p2 must be primitive");
    uint64_t n = (uint64_t(1) << l2) - 1;
    if (e % n == 0)
        throw std::invalid_argument("min_poly_of_power: degenerate exponent (e = 0 mod 2^L2 - 1)");
    std::vector<uint64_t> coset = cyclotomic_coset(e, n);

    // product of (y + alpha^c) with coefficients in GF(2^L2), ascending in y
    FieldElement alpha = FieldElement::alpha(p2);
    std::vector<FieldElement> coeffs{FieldElement::one(p2)};
    for (uint64_t c : coset) {
        FieldElement ac = alpha.pow(c);
        std::vector<FieldElement> next(coeffs.size() + 1, FieldElement::zero(p2));
        for (size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] = next[j + 1] + coeffs[j];
            next[j] = next[j] + coeffs[j] * ac;
        }
        coeffs = std::move(next);
    }
    BinaryPolynomial result;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        const BinaryPolynomial& r = coeffs[j].residue();
        if (r.is_one())
            result.set_coeff(static_cast<int>(j), true);
        else if (!r.is_zero())
            throw std::logic_error("min_poly_of_power: non-binary coefficient");
    }
    return result;
}

BinaryPolynomial berlekamp_massey(const Bits& bits) {
    if (bits.empty()) throw std::invalid_argument("berlekamp_massey: empty sequence");
    // connection polynomial C with s_j = sum_{i>=1} c_i s_{j-i}
    BinaryPolynomial c = BinaryPolynomial::one();
    BinaryPolynomial b = BinaryPolynomial::one();
    int len = 0, m = 1;
    for (size_t n = 0; n < bits.size(); ++n) {
        uint8_t d = bits[n];
        for (int i = 1; i <= len; ++i)
            if (c.coeff(i) && bits[n - i]) d ^= 1;
        if (d) {
            BinaryPolynomial t = c;
            c += b.shifted(m);
            if (2 * len <= static_cast<int>(n)) {
                len = static_cast<int>(n) + 1 - len;
                b = std::move(t);
                m = 1;
            } else {
                ++m;
            }
        } else {
            ++m;
        }
    }
    // characteristic polynomial p_k = c_{L-k}, monic of degree L
    BinaryPolynomial p;
    for (int k = 0; k <= len; ++k)
        if (c.coeff(len - k)) p.set_coeff(k, true);
    return p;
}

std::vector<BinaryPolynomial> irreducible_polynomials(int degree) {
    if (degree < 1 || degree > 30)
        throw std::invalid_argument("irreducible_polynomials: degree out of range");
    std::vector<BinaryPolynomial> out;
    uint64_t lead = uint64_t(1) << degree;
    for (uint64_t low = 0; low < lead; ++low) {
        BinaryPolynomial p = BinaryPolynomial::from_mask(lead | low);
        if (is_irreducible(p)) out.push_back(p);
    }
    return out;
}

std::vector<BinaryPolynomial> primitive_polynomials(int degree) {
    std::vector<BinaryPolynomial> out;
    for (const BinaryPolynomial& p : irreducible_polynomials(degree))
        if (is_primitive(p)) out.push_back(p);
    return out;
}

std::pair<BinaryPolynomial, int> two_power_base(const BinaryPolynomial& p) {
    BinaryPolynomial base = p;
    int power = 1;
    while (base.degree() >= 2) {
        bool square = true;
        for (int k = 0; k <= base.degree() && square; ++k)
            if (base.coeff(k) && (k & 1)) square = false;
        if (!square) break;
        BinaryPolynomial root;
        for (int k = 0; k <= base.degree(); k += 2)
            if (base.coeff(k)) root.set_coeff(k / 2, true);
        base = root;
        power *= 2;
    }
    return {base, power};
}

}  // namespace ccsg
