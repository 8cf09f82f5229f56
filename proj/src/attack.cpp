#include "ccsg/attack.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "ccsg/gf2linalg.hpp"
#include "ccsg/linearize.hpp"
#include "ccsg/phaseshift.hpp"

namespace ccsg {

InterceptedWindow::InterceptedWindow(Bits b, uint64_t off) : bits(std::move(b)), offset(off) {
    if (bits.empty()) throw std::invalid_argument("InterceptedWindow: empty window");
}

InconsistencyError::InconsistencyError(uint64_t position, const std::string& what)
    : std::runtime_error(what), position_(position) {}

uint64_t nt_estimate(uint64_t m, int l2) {
    if (m < 1 || l2 < 1) throw std::invalid_argument("nt_estimate: arguments must be >= 1");
    uint64_t p = m / static_cast<uint64_t>(l2);
    return m * p * p;
}

namespace {

// One (automaton, extreme reference) combination with its informative shifts.
struct Placement {
    Bits d_along;  // rule bits ordered from the reference inward
    std::vector<std::pair<int, uint64_t>> related;  // (depth >= 1, shift m)
};

std::vector<Placement> build_placements(const std::vector<RuleString>& members) {
    std::vector<Placement> out;
    for (const RuleString& rules : members) {
        int n = rules.size();
        ShiftTable table = phase_shift_table(rules);
        std::vector<int> refs = (n == 1) ? std::vector<int>{1} : std::vector<int>{1, n};
        for (int ref : refs) {
            Placement pl;
            pl.d_along.resize(n);
            for (int k = 0; k < n; ++k)
                pl.d_along[k] = rules.bits()[ref == n ? (n - 1) - k : k];
            for (const auto& [key, m] : table.entries) {
                auto [cell, r] = key;
                if (r != ref || cell == ref) continue;
                int depth = (ref == n) ? (n - cell) : (cell - 1);
                pl.related.emplace_back(depth, m);
            }
            out.push_back(std::move(pl));
        }
    }
    return out;
}

// Columns derivable from the reference column: knowing the reference over
// [0, M) determines depth k over [0, M - k) via the difference equations.
std::vector<Bits> triangle(const Bits& window, const Bits& d_along) {
    std::vector<Bits> cols{window};
    Bits prev(window.size(), 0);  // null boundary outside the reference
    for (size_t k = 0; k + 1 < d_along.size(); ++k) {
        const Bits& cur = cols.back();
        if (cur.size() <= 1) break;
        Bits next(cur.size() - 1);
        for (size_t t = 0; t + 1 < cur.size(); ++t)
            next[t] = cur[t + 1] ^ (d_along[k] ? cur[t] : 0) ^ prev[t];
        prev = cur;
        cols.push_back(std::move(next));
    }
    return cols;
}

class Engine {
public:
    Engine(ReconstructionResult result, std::vector<Placement> fwd, std::vector<Placement> rev)
        : res_(std::move(result)), fwd_(std::move(fwd)), rev_(std::move(rev)) {}

    ReconstructionResult take() && { return std::move(res_); }

    void insert(uint64_t pos, uint8_t v, BitSource src) {
        auto it = res_.known.find(pos);
        if (it != res_.known.end()) {
            if (it->second != v)
                throw InconsistencyError(
                    pos, "conflicting bit assignments at position " + std::to_string(pos) +
                             " (wrong model or misaligned offset)");
            return;
        }
        res_.known.emplace(pos, v);
        res_.sources.emplace(pos, src);
        dirty_ = true;
    }

    // fold positions before t = 0 forward by the period bound, drop anything
    // outside the analysis horizon
    void merge_derived(int64_t pos, uint8_t v) {
        if (pos < 0) {
            if (fold_ == 0) return;
            pos += static_cast<int64_t>(((-pos + fold_ - 1) / fold_) * fold_);
        }
        if (static_cast<uint64_t>(pos) >= res_.horizon) return;
        insert(static_cast<uint64_t>(pos), v, BitSource::PhaseShift);
    }

    void set_fold(uint64_t fold) { fold_ = static_cast<int64_t>(fold); }

    std::vector<std::pair<uint64_t, uint64_t>> runs() const {  // (start, length)
        std::vector<std::pair<uint64_t, uint64_t>> out;
        auto it = res_.known.begin();
        while (it != res_.known.end()) {
            uint64_t start = it->first, end = start;
            while (std::next(it) != res_.known.end() && std::next(it)->first == end + 1) {
                ++it;
                ++end;
            }
            out.emplace_back(start, end - start + 1);
            ++it;
        }
        return out;
    }

    bool propagate_to_fixpoint() {
        bool any = false;
        for (;;) {
            dirty_ = false;
            auto snapshot = runs();
            for (const auto& [start, len] : snapshot) {
                Bits win(len);
                for (uint64_t t = 0; t < len; ++t) win[t] = res_.known.at(start + t);
                for (size_t pi = 0; pi < fwd_.size(); ++pi) {
                    if (!processed_.insert({0, pi, start, len}).second) continue;
                    apply_forward(fwd_[pi], start, win);
                }
                if (rev_.empty()) continue;
                Bits rwin(win.rbegin(), win.rend());
                for (size_t pi = 0; pi < rev_.size(); ++pi) {
                    if (!processed_.insert({1, pi, start, len}).second) continue;
                    apply_reverse(rev_[pi], start, len, rwin);
                }
            }
            any |= dirty_;
            if (!dirty_) break;
        }
        return any;
    }

    bool interleave_pass(const BinaryPolynomial& coset_poly, int l1) {
        dirty_ = false;
        int d = coset_poly.degree();
        uint64_t stride = uint64_t(1) << (l1 - 1);
        for (uint64_t r = 0; r < stride; ++r) {
            uint64_t slots = (res_.horizon > r) ? (res_.horizon - r + stride - 1) / stride : 0;
            if (slots == 0) continue;
            std::vector<std::pair<uint64_t, uint8_t>> samples;  // (stream index, bit)
            for (uint64_t j = 0; j < slots; ++j) {
                auto it = res_.known.find(r + j * stride);
                if (it != res_.known.end()) samples.emplace_back(j, it->second);
            }
            if (samples.size() < static_cast<size_t>(d)) continue;
            // stream value at index j is <x^j mod coset_poly, initial block>
            BitMatrix a(static_cast<int>(samples.size()), d);
            Bits rhs(samples.size());
            for (size_t row = 0; row < samples.size(); ++row) {
                BinaryPolynomial xj =
                    poly_pow_mod(BinaryPolynomial::x(), samples[row].first, coset_poly);
                for (int k = 0; k < d; ++k) a.set(static_cast<int>(row), k, xj.coeff(k));
                rhs[row] = samples[row].second;
            }
            auto sol = gf2_solve(a, rhs);
            if (!sol)
                throw InconsistencyError(r, "interleave stream " + std::to_string(r) +
                                                " violates the coset-polynomial recurrence");
            if (!sol->unique) continue;  // under-determined stream, leave untouched
            for (uint64_t j = 0; j < slots; ++j) {
                BinaryPolynomial xj = poly_pow_mod(BinaryPolynomial::x(), j, coset_poly);
                uint8_t v = 0;
                for (int k = 0; k < d; ++k)
                    if (xj.coeff(k) && sol->x[k]) v ^= 1;
                insert(r + j * stride, v, BitSource::InterleaveCompletion);
            }
        }
        return dirty_;
    }

private:
    void apply_forward(const Placement& pl, uint64_t start, const Bits& win) {
        std::vector<Bits> cols = triangle(win, pl.d_along);
        for (const auto& [depth, m] : pl.related) {
            if (static_cast<size_t>(depth) >= cols.size()) continue;
            const Bits& col = cols[depth];
            for (size_t t = 0; t < col.size(); ++t)
                merge_derived(static_cast<int64_t>(start + m + t), col[t]);
        }
    }

    // the reversed run models the time-reversed sequence; a derived reverse
    // position m + t maps back to (run end) - m - t
    void apply_reverse(const Placement& pl, uint64_t start, uint64_t len, const Bits& rwin) {
        std::vector<Bits> cols = triangle(rwin, pl.d_along);
        int64_t end = static_cast<int64_t>(start + len - 1);
        for (const auto& [depth, m] : pl.related) {
            if (static_cast<size_t>(depth) >= cols.size()) continue;
            const Bits& col = cols[depth];
            for (size_t t = 0; t < col.size(); ++t)
                merge_derived(end - static_cast<int64_t>(m + t), col[t]);
        }
    }

    ReconstructionResult res_;
    std::vector<Placement> fwd_, rev_;
    std::set<std::tuple<int, size_t, uint64_t, uint64_t>> processed_;
    int64_t fold_ = 0;
    bool dirty_ = false;
};

ReconstructionResult seed_result(const InterceptedWindow& window, uint64_t horizon, int l2) {
    ReconstructionResult res;
    res.horizon = horizon;
    res.nt_estimate = nt_estimate(window.length(), l2);
    for (uint64_t t = 0; t < window.length(); ++t) {
        res.known.emplace(window.offset + t, window.bits[t]);
        res.sources.emplace(window.offset + t, BitSource::Intercepted);
    }
    return res;
}

}  // namespace

ReconstructionResult propagate_window(const std::pair<RuleString, RuleString>& pair,
                                      const InterceptedWindow& window) {
    BinaryPolynomial r = ca_char_poly(pair.first);
    int l2 = two_power_base(r).first.degree();
    uint64_t period_bound = s_power_count(r);
    uint64_t horizon = window.offset + window.length() + period_bound;

    ReconstructionResult res = seed_result(window, horizon, l2);
    if (window.length() < static_cast<uint64_t>(l2)) return res;  // nothing propagates

    Engine engine(std::move(res), build_placements({pair.first, pair.second}), {});
    engine.set_fold(period_bound);
    engine.propagate_to_fixpoint();
    return std::move(engine).take();
}

ReconstructionResult interleave_complete(ReconstructionResult result,
                                         const BinaryPolynomial& coset_poly, int l1) {
    if (coset_poly.degree() < 1)
        throw std::invalid_argument("interleave_complete: coset polynomial degree must be >= 1");
    if (l1 < 1) throw std::invalid_argument("interleave_complete: l1 must be >= 1");
    if (result.horizon == 0 && !result.known.empty())
        result.horizon = result.known.rbegin()->first + 1;
    Engine engine(std::move(result), {}, {});
    engine.interleave_pass(coset_poly, l1);
    return std::move(engine).take();
}

namespace {

ReconstructionResult run_reconstruction(ReconstructionResult res,
                                        const std::pair<RuleString, RuleString>& pair,
                                        const BinaryPolynomial& coset_poly, int l1,
                                        bool include_reverse, bool gate_closed,
                                        uint64_t fold) {
    std::vector<Placement> fwd = build_placements({pair.first, pair.second});
    std::vector<Placement> rev;
    if (include_reverse) {
        auto rev_pair = cattell_muzio_synthesize(coset_poly.reciprocal());
        RuleString a = rev_pair.first, b = rev_pair.second;
        for (int i = 1; i < l1; ++i) {
            a = double_rules(a);
            b = double_rules(b);
        }
        rev = build_placements({a, b});
    }
    Engine engine(std::move(res), std::move(fwd), std::move(rev));
    engine.set_fold(fold);
    bool gate_open = !gate_closed;
    for (;;) {
        bool changed = false;
        if (gate_open) changed |= engine.propagate_to_fixpoint();
        changed |= engine.interleave_pass(coset_poly, l1);
        if (!changed) break;
        gate_open = true;  // completion may have grown runs past the gate
    }
    return std::move(engine).take();
}

}  // namespace

ReconstructionResult reconstruct(const std::pair<RuleString, RuleString>& pair,
                                 const InterceptedWindow& window,
                                 const BinaryPolynomial& coset_poly, int l1,
                                 bool include_reverse) {
    if (l1 < 2) throw std::invalid_argument("reconstruct: l1 must be >= 2");
    int l2 = coset_poly.degree();
    uint64_t period_bound = s_power_count(ca_char_poly(pair.first));
    uint64_t horizon = window.offset + window.length() + period_bound;
    ReconstructionResult res = seed_result(window, horizon, l2);
    bool gate_closed = window.length() < static_cast<uint64_t>(l2);
    return run_reconstruction(std::move(res), pair, coset_poly, l1, include_reverse, gate_closed,
                              period_bound);
}

ReconstructionResult reconstruct_more(ReconstructionResult result,
                                      const std::pair<RuleString, RuleString>& pair,
                                      const BinaryPolynomial& coset_poly, int l1,
                                      bool include_reverse) {
    if (result.horizon == 0 && !result.known.empty())
        result.horizon = result.known.rbegin()->first + 1;
    uint64_t period_bound = s_power_count(ca_char_poly(pair.first));
    return run_reconstruction(std::move(result), pair, coset_poly, l1, include_reverse, false,
                              period_bound);
}

size_t ReconstructionResult::count(BitSource s) const {
    size_t n = 0;
    for (const auto& [_, src] : sources)
        if (src == s) ++n;
    return n;
}

std::string ReconstructionResult::to_text(size_t position_listing_limit) const {
    std::ostringstream os;
    os << "known_total: " << known.size() << "\n";
    os << "intercepted: " << count(BitSource::Intercepted) << "\n";
    os << "phase_shift: " << count(BitSource::PhaseShift) << "\n";
    os << "interleave_completion: " << count(BitSource::InterleaveCompletion) << "\n";
    os << "nt_estimate: " << nt_estimate << "\n";
    os << "horizon: " << horizon << "\n";
    if (known.size() <= position_listing_limit) {
        os << "positions:";
        for (const auto& [pos, v] : known) os << " " << pos << ":" << int(v);
        os << "\n";
    } else {
        os << "positions: suppressed (" << known.size() << " entries)\n";
    }
    return os.str();
}

}  // namespace ccsg
