#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ccsg/automata.hpp"
#include "ccsg/bits.hpp"
#include "ccsg/gf2poly.hpp"

namespace ccsg {

struct InterceptedWindow {
    Bits bits;
    uint64_t offset = 0;  // absolute time index of the first bit

    InterceptedWindow(Bits b, uint64_t off);
    uint64_t length() const { return bits.size(); }
};

enum class BitSource { Intercepted, PhaseShift, InterleaveCompletion };

// Two derivations disagreed on a bit value: wrong model or misaligned offset.
class InconsistencyError : public std::runtime_error {
public:
    InconsistencyError(uint64_t position, const std::string& what);
    uint64_t position() const { return position_; }

private:
    uint64_t position_;
};

struct ReconstructionResult {
    std::map<uint64_t, uint8_t> known;       // absolute position -> bit
    std::map<uint64_t, BitSource> sources;   // provenance of each known bit
    uint64_t nt_estimate = 0;                // M * floor(M / L2)^2
    uint64_t horizon = 0;                    // positions analysed: [0, horizon)

    size_t count(BitSource s) const;
    std::string to_text(size_t position_listing_limit = 10000) const;
};

uint64_t nt_estimate(uint64_t m, int l2);

// Place the window at both extreme cells of both automata, convert every
// tabulated phase shift into known bits, and recurse on the derived
// subsequences until no new bit appears.
ReconstructionResult propagate_window(const std::pair<RuleString, RuleString>& pair,
                                      const InterceptedWindow& window);

// Complete the 2^(l1-1) strided PN streams whose known bits determine the
// degree-L2 recurrence state (exact linear algebra; scattered bits allowed).
ReconstructionResult interleave_complete(ReconstructionResult result,
                                         const BinaryPolynomial& coset_poly, int l1);

// propagate_window and interleave_complete iterated to a fixpoint. When
// include_reverse is set, the pair for the reciprocal polynomial is derived
// and the reversed keystream is processed identically, recovering bits
// before the window.
ReconstructionResult reconstruct(const std::pair<RuleString, RuleString>& pair,
                                 const InterceptedWindow& window,
                                 const BinaryPolynomial& coset_poly, int l1,
                                 bool include_reverse = false);

// Re-run the reconstruction loops on an existing result; a fixpoint of
// reconstruct comes back unchanged.
ReconstructionResult reconstruct_more(ReconstructionResult result,
                                      const std::pair<RuleString, RuleString>& pair,
                                      const BinaryPolynomial& coset_poly, int l1,
                                      bool include_reverse = false);

}  // namespace ccsg
