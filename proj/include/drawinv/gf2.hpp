#ifndef DRAWINV_GF2_HPP
#define DRAWINV_GF2_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "drawinv/errors.hpp"

namespace drawinv {

/// Bit-packed row vector over GF(2).
struct BitRow {
    std::vector<std::uint64_t> w;

    explicit BitRow(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= 1ULL << (i & 63); }
    void flip(std::size_t i) { w[i >> 6] ^= 1ULL << (i & 63); }
    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void operator^=(const BitRow& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    bool any() const {
        for (std::uint64_t x : w)
            if (x) return true;
        return false;
    }
};

/// Row-reduced GF(2) system solver that remembers how each reduced row was
/// combined from the original rows, so it can hand out either a solution or
/// an inconsistent row combination for any right-hand side.
class Gf2Solver {
public:
    Gf2Solver(std::vector<BitRow> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
        std::size_t m = rows_.size();
        combo_.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            BitRow c(m);
            c.flip(i);
            combo_.push_back(std::move(c));
        }
        pivot_col_.assign(m, SIZE_MAX);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < m; ++col) {
            std::size_t sel = SIZE_MAX;
            for (std::size_t r = rank; r < m; ++r)
                if (rows_[r].get(col)) {
                    sel = r;
                    break;
                }
            if (sel == SIZE_MAX) continue;
            std::swap(rows_[rank], rows_[sel]);
            std::swap(combo_[rank], combo_[sel]);
            for (std::size_t r = 0; r < m; ++r) {
                if (r != rank && rows_[r].get(col)) {
                    rows_[r] ^= rows_[rank];
                    combo_[r] ^= combo_[rank];
                }
            }
            pivot_col_[rank] = col;
            ++rank;
        }
        rank_ = rank;
    }

    std::size_t rank() const { return rank_; }

    struct Result {
        bool solvable;
        std::vector<std::uint8_t> solution;       // size cols, when solvable
        std::vector<std::size_t> certificate;     // original row indices, otherwise
    };

    /// Solves A x = b for the original row order of b.
    Result solve(const std::vector<std::uint8_t>& b) const {
        if (b.size() != combo_.size() && !(combo_.empty() && b.empty()))
            throw error("gf2 solve: rhs size mismatch");
        Result res;
        std::size_t m = combo_.size();
        std::vector<std::uint8_t> bt(m, 0);
        for (std::size_t r = 0; r < m; ++r) {
            std::uint8_t v = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (combo_[r].get(i)) v ^= b[i] & 1;
            bt[r] = v;
        }
        for (std::size_t r = rank_; r < m; ++r) {
            if (bt[r]) {
                res.solvable = false;
                for (std::size_t i = 0; i < m; ++i)
                    if (combo_[r].get(i)) res.certificate.push_back(i);
                return res;
            }
        }
        res.solvable = true;
        res.solution.assign(cols_, 0);
        for (std::size_t r = 0; r < rank_; ++r)
            if (bt[r]) res.solution[pivot_col_[r]] = 1;
        return res;
    }

private:
    std::size_t cols_;
    std::size_t rank_ = 0;
    std::vector<BitRow> rows_;
    std::vector<BitRow> combo_;
    std::vector<std::size_t> pivot_col_;
};

}  // namespace drawinv

#endif
