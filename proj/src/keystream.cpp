#include "ccsg/keystream.hpp"

#include <stdexcept>

namespace ccsg {

namespace {

// grow-on-demand view of an LFSR output
class Stream {
public:
    explicit Stream(const LfsrSpec& spec) : spec_(spec), bits_(spec.seed) {}
    uint8_t at(size_t i) {
        if (i >= bits_.size()) bits_ = lfsr_sequence(spec_, std::max(i + 1, bits_.size() * 2));
        return bits_[i];
    }

private:
    const LfsrSpec& spec_;
    Bits bits_;
};

}  // namespace

CcsgSpec::CcsgSpec(LfsrSpec control, LfsrSpec generating, std::vector<int> tap_indices)
    : r1(std::move(control)), r2(std::move(generating)), taps(std::move(tap_indices)) {
    int l1 = r1.length();
    if (static_cast<int>(taps.size()) > l1)
        throw std::invalid_argument("CcsgSpec: more taps than control stages");
    for (size_t j = 0; j < taps.size(); ++j) {
        if (taps[j] < 0 || taps[j] >= l1)
            throw std::invalid_argument("CcsgSpec: tap index out of range");
        if (j > 0 && taps[j] <= taps[j - 1])
            throw std::invalid_argument("CcsgSpec: tap indices must be strictly ascending");
    }
}

Bits shrink(const Bits& a, const Bits& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("shrink: control and generating sequences differ in length");
    Bits c;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) c.push_back(b[i]);
    return c;
}

Bits ccsg_decimate(const CcsgSpec& spec, size_t n) {
    Stream a(spec.r1), b(spec.r2);
    Bits out;
    out.reserve(n);
    uint64_t sigma = 0;
    for (size_t t = 0; t < n; ++t) {
        out.push_back(b.at(sigma));
        uint64_t x = 1;
        for (size_t j = 0; j < spec.taps.size(); ++j)
            x += static_cast<uint64_t>(a.at(t + spec.taps[j])) << j;
        sigma += x;
    }
    return out;
}

Bits ccsg_keystream(const CcsgSpec& spec, size_t n) {
    if (spec.r1.seed_is_zero())
        throw std::invalid_argument("ccsg_keystream: degenerate control register (all-zero seed)");
    Stream a(spec.r1), b(spec.r2);
    Bits out;
    out.reserve(n);
    uint64_t sigma = 0;
    for (size_t t = 0; out.size() < n; ++t) {
        if (a.at(t)) out.push_back(b.at(sigma));
        uint64_t x = 1;
        for (size_t j = 0; j < spec.taps.size(); ++j)
            x += static_cast<uint64_t>(a.at(t + spec.taps[j])) << j;
        sigma += x;
    }
    return out;
}

std::optional<uint64_t> sequence_period(const Bits& bits) {
    size_t n = bits.size();
    for (size_t t = 1; 2 * t <= n; ++t) {
        bool ok = true;
        for (size_t j = 0; j + t < n; ++j) {
            if (bits[j + t] != bits[j]) { ok = false; break; }
        }
        if (ok) return t;
    }
    return std::nullopt;
}

uint64_t keystream_period(const CcsgSpec& spec) {
    int l1 = spec.r1.length(), l2 = spec.r2.length();
    if (l1 > 20 || l2 > 30)
        throw std::domain_error("keystream_period: registers too long for brute force");
    uint64_t bound = ((uint64_t(1) << l2) - 1) << (l1 - 1);
    Bits ks = ccsg_keystream(spec, 8 * bound + 64);
    auto t = sequence_period(ks);
    if (!t) throw std::runtime_error("keystream_period: no period found within buffer");
    return *t;
}

}  // namespace ccsg
