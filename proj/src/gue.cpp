#include "htp/gue.hpp"

#include <cmath>
#include <random>

#include "htp/trace_algebra.hpp"

namespace htp {

namespace {

Rational int_power(int base, int e) {
    Rational p(1);
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    if (e < 0) p = 1 / p;
    return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Ordered pairwise reduction of per-chunk partial sums.
double pairwise_sum(std::vector<double> v) {
    if (v.empty()) return 0;
    while (v.size() > 1) {
        std::vector<double> next;
        next.reserve((v.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] + v[i + 1]);
        if (v.size() % 2) next.push_back(v.back());
        v = std::move(next);
    }
    return v[0];
}

}  // namespace

Rational wick_moment(const Perm& alpha, const std::vector<std::vector<Rational>>& vectors, int N) {
    const int n = alpha.degree();
    if (static_cast<int>(vectors.size()) != n)
        throw std::invalid_argument("wick_moment: need one vector per slot");
    if (N < 1) throw std::invalid_argument("wick_moment: N must be positive");
    if (n % 2 != 0) return Rational(0);
    Rational acc(0);
    for (const Matching& pi : pair_matchings(n)) {
        Rational cf(1);
        for (const auto& [i, j] : pi.pairs()) {
            cf *= dot(vectors[i - 1], vectors[j - 1]);
            if (cf == 0) break;
        }
        if (cf == 0) continue;
        Perm pa = pi.as_perm(n).compose(alpha);
        acc += cf * int_power(N, pa.cyc0() - n / 2);
    }
    return acc;
}

SquareMat<RatComplex> wick_matrix_moment(const Perm& alpha,
                                         const std::vector<std::vector<Rational>>& vectors,
                                         const std::vector<SquareMat<RatComplex>>& d, int N) {
    const int n = alpha.degree();
    if (static_cast<int>(vectors.size()) != n)
        throw std::invalid_argument("wick_matrix_moment: need one vector per slot");
    if (static_cast<int>(d.size()) != n + 1)
        throw std::invalid_argument("wick_matrix_moment: need n+1 deterministic matrices");
    for (const auto& m : d)
        if (m.n != N) throw std::invalid_argument("wick_matrix_moment: matrix size mismatch");
    if (n == 0) return d[0];

    SquareMat<RatComplex> acc(N);
    const std::vector<SquareMat<RatComplex>> tail(d.begin() + 1, d.end());
    const Rational norm = int_power(N, -(n / 2));
    for (const Matching& pi : pair_matchings(n)) {
        Rational cf(1);
        for (const auto& [i, j] : pi.pairs()) {
            cf *= dot(vectors[i - 1], vectors[j - 1]);
            if (cf == 0) break;
        }
        if (cf == 0) continue;
        Perm pa = pi.as_perm(n).compose(alpha);
        TraceMonomial<RatComplex> tm = evaluate_trace_monomial(pa, tail);
        acc = acc + (d[0] * tm.matrix_part).scaled(RatComplex(cf * norm));
    }
    return acc;
}

std::vector<CMat> GaussianEnsemble::draw(std::uint64_t sample) const {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(sample + 0x51ed2701ull)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double dn = 1.0 / std::sqrt(static_cast<double>(N));
    const double od = 1.0 / std::sqrt(2.0 * N);
    std::vector<CMat> dirs;
    dirs.reserve(dim);
    for (int t = 0; t < dim; ++t) {
        CMat x(N);
        for (int j = 0; j < N; ++j) x.at(j, j) = gauss(rng) * dn;
        for (int j = 0; j < N; ++j)
            for (int k = j + 1; k < N; ++k) {
                double u = gauss(rng), v = gauss(rng);
                x.at(j, k) = std::complex<double>(u, v) * od;
                x.at(k, j) = std::conj(x.at(j, k));
            }
        dirs.push_back(std::move(x));
    }
    return dirs;
}

CMat GaussianEnsemble::field(const std::vector<CMat>& dirs,
                             const std::vector<Rational>& h) const {
    CMat x(N);
    for (int t = 0; t < dim; ++t) {
        double c = h[t].get_d();
        if (c == 0) continue;
        x = x + dirs[t].scaled(c);
    }
    return x;
}

McResult mc_check(const Perm& alpha, const std::vector<std::vector<Rational>>& vectors, int N,
                  long samples, std::uint64_t seed) {
    const int n = alpha.degree();
    if (samples < 2) throw std::invalid_argument("mc_check: need at least 2 samples");
    if (n == 0) return {1.0, 0.0, 0.0};
    const int dim = static_cast<int>(vectors[0].size());
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("mc_check: ragged vector list");
    GaussianEnsemble ens{N, dim, seed};

    const long chunk = 1024;
    std::vector<double> ps_re, ps_im, ps_re2;
    double cre = 0, cim = 0, cre2 = 0;
    for (long s = 0; s < samples; ++s) {
        std::vector<CMat> dirs = ens.draw(static_cast<std::uint64_t>(s));
        std::vector<CMat> mats;
        mats.reserve(n);
        for (int i = 0; i < n; ++i) mats.push_back(ens.field(dirs, vectors[i]));
        std::complex<double> x = evaluate_trace_monomial(alpha, mats).scalar;
        cre += x.real();
        cim += x.imag();
        cre2 += x.real() * x.real();
        if ((s + 1) % chunk == 0) {
            ps_re.push_back(cre);
            ps_im.push_back(cim);
            ps_re2.push_back(cre2);
            cre = cim = cre2 = 0;
        }
    }
    if (cre != 0 || cim != 0 || cre2 != 0 || ps_re.empty()) {
        ps_re.push_back(cre);
        ps_im.push_back(cim);
        ps_re2.push_back(cre2);
    }
    const double s1 = pairwise_sum(ps_re);
    const double s1i = pairwise_sum(ps_im);
    const double s2 = pairwise_sum(ps_re2);
    const double mean = s1 / samples;
    double var = (s2 - samples * mean * mean) / (samples - 1);
    if (var < 0) var = 0;
    return {mean, s1i / samples, std::sqrt(var / samples)};
}

}  // namespace htp
