#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "htp/perm.hpp"
#include "htp/rational.hpp"

namespace htp {

// Exact complex rationals, enough arithmetic for deterministic matrix moments.
struct RatComplex {
    Rational re, im;

    RatComplex() : re(0), im(0) {}
    RatComplex(int v) : re(v), im(0) {}  // NOLINT: implicit by design
    RatComplex(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

    RatComplex conj() const { return {re, -im}; }
    bool operator==(const RatComplex&) const = default;

    RatComplex& operator+=(const RatComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend RatComplex operator+(RatComplex a, const RatComplex& b) { return a += b; }
    friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RatComplex operator/(const RatComplex& a, const RatComplex& b) {
        Rational d = b.re * b.re + b.im * b.im;
        if (d == 0) throw std::domain_error("RatComplex: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

template <typename T>
struct SquareMat {
    int n = 0;
    std::vector<T> a;

    SquareMat() = default;
    explicit SquareMat(int size) : n(size), a(static_cast<std::size_t>(size) * size, T(0)) {}

    static SquareMat identity(int size) {
        SquareMat m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = T(1);
        return m;
    }

    T& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    SquareMat operator*(const SquareMat& o) const {
        SquareMat out(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const T& f = at(i, k);
                for (int j = 0; j < n; ++j) out.at(i, j) += f * o.at(k, j);
            }
        return out;
    }
    SquareMat operator+(const SquareMat& o) const {
        SquareMat out(n);
        for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + o.a[i];
        return out;
    }
    SquareMat scaled(const T& c) const {
        SquareMat out(n);
        for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] * c;
        return out;
    }
    T trace() const {
        T t(0);
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }
    bool operator==(const SquareMat&) const = default;
};

template <typename T>
struct TraceMonomial {
    SquareMat<T> matrix_part;
    T scalar;
};

// Read a degree-n permutation as a trace monomial in x_1..x_n: ordered product
// along the marked cycle (0 excluded) times one unnormalised trace per other
// cycle; scalar part is Tr(matrix_part)/N.
template <typename T>
TraceMonomial<T> evaluate_trace_monomial(const Perm& alpha, const std::vector<SquareMat<T>>& xs) {
    const int n = alpha.degree();
    if (static_cast<int>(xs.size()) != n)
        throw std::invalid_argument("evaluate_trace_monomial: need one matrix per slot");
    if (n == 0) throw std::invalid_argument("evaluate_trace_monomial: empty monomial");
    const int N = xs[0].n;
    for (const auto& x : xs)
        if (x.n != N) throw std::invalid_argument("evaluate_trace_monomial: size mismatch");

    SquareMat<T> m = SquareMat<T>::identity(N);
    std::vector<int> marked = alpha.marked_cycle();
    for (std::size_t i = 1; i < marked.size(); ++i) m = m * xs[marked[i] - 1];
    T factor(1);
    for (const auto& cyc : alpha.cycles()) {
        if (cyc[0] == 0) continue;
        SquareMat<T> p = SquareMat<T>::identity(N);
        for (int s : cyc) p = p * xs[s - 1];
        factor = factor * p.trace();
    }
    TraceMonomial<T> out{m.scaled(factor), T(0)};
    out.scalar = out.matrix_part.trace() / T(N);
    return out;
}

// Pairing sum at fixed matrix size: sum over pair matchings of
// N^(cyc0(pi alpha) - n/2) times the product of slot-vector inner products.
Rational wick_moment(const Perm& alpha, const std::vector<std::vector<Rational>>& vectors, int N);

// Matrix-valued version: d has n+1 entries, d[0] multiplies from the left;
// each matching contributes the trace monomial of pi alpha over d[1..n],
// scaled by N^(-n/2) and the vector pairing product.
SquareMat<RatComplex> wick_matrix_moment(const Perm& alpha,
                                         const std::vector<std::vector<Rational>>& vectors,
                                         const std::vector<SquareMat<RatComplex>>& d, int N);

using CMat = SquareMat<std::complex<double>>;

// d independent Hermitian Gaussians: diagonal b/sqrt(N), off-diagonal
// (u+iv)/sqrt(2N).  Each sample index gets its own generator so draws are
// reproducible in any order.
struct GaussianEnsemble {
    int N = 1;
    int dim = 1;
    std::uint64_t seed = 0;

    std::vector<CMat> draw(std::uint64_t sample) const;
    CMat field(const std::vector<CMat>& dirs, const std::vector<Rational>& h) const;
};

struct McResult {
    double estimate = 0;
    double estimate_imag = 0;
    double stderr_real = 0;
};

// Monte Carlo estimate of the normalised trace moment of alpha with the given
// slot vectors.
McResult mc_check(const Perm& alpha, const std::vector<std::vector<Rational>>& vectors, int N,
                  long samples, std::uint64_t seed);

}  // namespace htp
