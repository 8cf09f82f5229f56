#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccsg/bits.hpp"

namespace ccsg {

// Dense bit matrix over GF(2), rows packed 64 columns per word.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void xor_row(int dst, int src);
    void swap_rows(int a, int b);

private:
    int rows_, cols_, wpr_;
    std::vector<uint64_t> w_;
};

struct Gf2Solution {
    Bits x;
    bool unique;
};

// Solve A x = b by Gaussian elimination. Returns nullopt when inconsistent;
// free variables are set to zero and flagged via unique = false.
std::optional<Gf2Solution> gf2_solve(BitMatrix a, Bits b);

}  // namespace ccsg
