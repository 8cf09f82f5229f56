#include "ccsg/gf2linalg.hpp"

#include <stdexcept>

namespace ccsg {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative size");
    wpr_ = (cols + 63) / 64;
    w_.assign(static_cast<size_t>(rows) * wpr_, 0);
}

bool BitMatrix::get(int r, int c) const {
    return (w_[static_cast<size_t>(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1;
}

void BitMatrix::set(int r, int c, bool v) {
    uint64_t& word = w_[static_cast<size_t>(r) * wpr_ + (c >> 6)];
    uint64_t bit = uint64_t(1) << (c & 63);
    if (v)
        word |= bit;
    else
        word &= ~bit;
}

void BitMatrix::xor_row(int dst, int src) {
    size_t d = static_cast<size_t>(dst) * wpr_, s = static_cast<size_t>(src) * wpr_;
    for (int i = 0; i < wpr_; ++i) w_[d + i] ^= w_[s + i];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    size_t pa = static_cast<size_t>(a) * wpr_, pb = static_cast<size_t>(b) * wpr_;
    for (int i = 0; i < wpr_; ++i) std::swap(w_[pa + i], w_[pb + i]);
}

std::optional<Gf2Solution> gf2_solve(BitMatrix a, Bits b) {
    int rows = a.rows(), cols = a.cols();
    if (static_cast<int>(b.size()) != rows)
        throw std::invalid_argument("gf2_solve: rhs size mismatch");

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int r = row; r < rows; ++r)
            if (a.get(r, col)) { sel = r; break; }
        if (sel < 0) continue;
        a.swap_rows(row, sel);
        std::swap(b[row], b[sel]);
        for (int r = 0; r < rows; ++r) {
            if (r != row && a.get(r, col)) {
                a.xor_row(r, row);
                b[r] ^= b[row];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (b[r]) return std::nullopt;

    Gf2Solution sol;
    sol.x.assign(cols, 0);
    for (int r = 0; r < row; ++r) sol.x[pivot_col[r]] = b[r];
    sol.unique = (row == cols);
    return sol;
}

}  // namespace ccsg
