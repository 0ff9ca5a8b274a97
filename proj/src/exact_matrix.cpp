#include "htp/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace htp {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: shape mismatch in product");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

bool ExactMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

int ExactMatrix::rank() const {
    ExactMatrix m = *this;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (int i = r + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) / m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

ExactMatrix::RankPsd ExactMatrix::sym_rank_psd() const {
    if (!is_symmetric()) throw std::invalid_argument("sym_rank_psd: matrix not symmetric");
    ExactMatrix m = *this;
    int n = rows_;
    std::vector<char> done(n, 0);
    int rank = 0;
    bool psd = true;
    for (int step = 0; step < n; ++step) {
        // Largest-magnitude nonzero diagonal among active indices.
        int piv = -1;
        Rational best(0);
        for (int i = 0; i < n; ++i) {
            if (done[i] || m.at(i, i) == 0) continue;
            Rational mag = abs(m.at(i, i));
            if (piv < 0 || mag > best) {
                piv = i;
                best = mag;
            }
        }
        if (piv < 0) {
            // All active diagonal entries vanish. Any active off-diagonal
            // entry then witnesses a hyperbolic pair → indefinite.
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j) {
                    if (done[j] || j == i) continue;
                    if (m.at(i, j) != 0) {
                        a = i;
                        b = j;
                        break;
                    }
                }
            }
            if (a < 0) break;  // active block is zero: diagonalization complete
            psd = false;
            // e_a ← e_a + e_b makes the (a,a) entry 2·m(a,b) ≠ 0; continue for rank.
            for (int j = 0; j < n; ++j)
                if (!done[j]) m.at(a, j) += m.at(b, j);
            for (int i = 0; i < n; ++i)
                if (!done[i]) m.at(i, a) += m.at(i, b);
            --step;
            continue;
        }
        Rational d = m.at(piv, piv);
        if (d < 0) psd = false;
        ++rank;
        done[piv] = 1;
        // Clear the pivot row/column congruently.
        for (int i = 0; i < n; ++i) {
            if (done[i] || m.at(i, piv) == 0) continue;
            Rational f = m.at(i, piv) / d;
            for (int j = 0; j < n; ++j)
                if (!done[j]) m.at(i, j) -= f * m.at(piv, j);
            m.at(i, piv) = 0;
        }
        for (int j = 0; j < n; ++j)
            if (!done[j] && j != piv) m.at(piv, j) = 0;
    }
    return {rank, psd};
}

std::string ExactMatrix::to_tsv() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out << '\t';
            out << at(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace htp
