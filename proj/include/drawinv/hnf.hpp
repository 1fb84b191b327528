#ifndef DRAWINV_HNF_HPP
#define DRAWINV_HNF_HPP

#include <optional>
#include <vector>

#include "drawinv/rational.hpp"

namespace drawinv {

/// Decides membership of integer vectors in the column lattice of a fixed
/// integer matrix, via a column-echelon Hermite reduction H = M * U with U
/// unimodular. Exact big integers throughout.
class IntSpanSolver {
public:
    /// m x n matrix given row-major: rows = coordinates, columns = generators.
    IntSpanSolver(std::vector<std::vector<Int>> m_rows)
        : h_(std::move(m_rows)) {
        rows_ = h_.size();
        cols_ = rows_ ? h_[0].size() : 0;
        u_.assign(cols_, std::vector<Int>(cols_, 0));
        for (std::size_t j = 0; j < cols_; ++j) u_[j][j] = 1;

        std::size_t lead = 0;
        for (std::size_t row = 0; row < rows_ && lead < cols_; ++row) {
            // gcd-eliminate entries h_[row][lead..] down to a single pivot
            while (true) {
                std::size_t best = SIZE_MAX;
                for (std::size_t j = lead; j < cols_; ++j) {
                    if (h_[row][j] == 0) continue;
                    if (best == SIZE_MAX ||
                        cmp(abs(h_[row][j]), abs(h_[row][best])) < 0)
                        best = j;
                }
                if (best == SIZE_MAX) break;  // row already zero on the right
                col_swap(best, lead);
                bool cleared = true;
                for (std::size_t j = lead + 1; j < cols_; ++j) {
                    if (h_[row][j] == 0) continue;
                    Int q = quotient_round(h_[row][j], h_[row][lead]);
                    if (q != 0) col_axpy(j, lead, q);  // col_j -= q * col_lead
                    if (h_[row][j] != 0) cleared = false;
                }
                if (cleared) break;
            }
            if (h_[row][lead] != 0) {
                if (h_[row][lead] < 0) col_negate(lead);
                pivot_row_.push_back(row);
                ++lead;
            }
        }
        rank_ = lead;
    }

    /// Integer coefficients x with M x = b, or nullopt when b is outside the
    /// column lattice.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
        if (b.size() != rows_) throw error("int span solve: size mismatch");
        std::vector<Int> residual = b;
        std::vector<Int> y(cols_, 0);
        std::size_t piv = 0;
        for (std::size_t row = 0; row < rows_; ++row) {
            if (piv < rank_ && pivot_row_[piv] == row) {
                Int rem = residual[row] % h_[row][piv];
                if (rem != 0) return std::nullopt;
                Int q = residual[row] / h_[row][piv];
                if (q != 0)
                    for (std::size_t r = row; r < rows_; ++r)
                        residual[r] -= q * h_[r][piv];
                y[piv] = q;
                ++piv;
            } else if (residual[row] != 0) {
                return std::nullopt;
            }
        }
        // x = U y
        std::vector<Int> x(cols_, 0);
        for (std::size_t i = 0; i < cols_; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < rank_; ++j)
                if (y[j] != 0) s += u_[i][j] * y[j];
            x[i] = s;
        }
        return x;
    }

    std::size_t rank() const { return rank_; }

private:
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(h_[r][a], h_[r][b]);
        for (std::size_t r = 0; r < cols_; ++r) std::swap(u_[r][a], u_[r][b]);
    }
    void col_axpy(std::size_t j, std::size_t k, const Int& q) {
        for (std::size_t r = 0; r < rows_; ++r) h_[r][j] -= q * h_[r][k];
        for (std::size_t r = 0; r < cols_; ++r) u_[r][j] -= q * u_[r][k];
    }
    void col_negate(std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) h_[r][j] = -h_[r][j];
        for (std::size_t r = 0; r < cols_; ++r) u_[r][j] = -u_[r][j];
    }
    static Int quotient_round(const Int& a, const Int& b) {
        // round-to-nearest quotient keeps the remainders small
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (2 * r > abs(b)) q += 1;
        return q;
    }

    std::size_t rows_ = 0, cols_ = 0, rank_ = 0;
    std::vector<std::vector<Int>> h_;
    std::vector<std::vector<Int>> u_;
    std::vector<std::size_t> pivot_row_;
};

}  // namespace drawinv

#endif
