#pragma once

#include <string>
#include <vector>

#include "htp/rational.hpp"

namespace htp {

// Dense matrix over exact rationals.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Rational(0)) {}

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    ExactMatrix transposed() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const Rational& c) const;
    bool operator==(const ExactMatrix& o) const = default;

    bool is_symmetric() const;
    bool is_zero() const;

    // Rank by plain Gaussian elimination (any matrix).
    int rank() const;

    struct RankPsd {
        int rank;
        bool psd;
    };

    // Exact congruence diagonalization for symmetric matrices. Pivots on the
    // largest-magnitude diagonal entry; when every remaining diagonal entry is
    // zero but some off-diagonal entry is not, the form is indefinite (a
    // hyperbolic pair) — that settles PSD immediately, and a symmetric
    // row/column addition regenerates a nonzero diagonal so the rank sweep can
    // continue.
    RankPsd sym_rank_psd() const;

    std::string to_tsv() const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace htp
