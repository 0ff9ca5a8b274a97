#include "htp/char_theory.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace htp {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition: parts must be decreasing");
    }
}

int IntPartition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

IntPartition IntPartition::transposed() const {
    std::vector<int> t(cols(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return IntPartition(std::move(t));
}

std::vector<IntPartition> IntPartition::covers() const {
    std::vector<IntPartition> out;
    for (int i = 0; i <= rows(); ++i) {
        std::vector<int> p = parts_;
        if (i == rows()) {
            p.push_back(1);
        } else {
            if (i > 0 && p[i] == p[i - 1]) continue;  // box would break monotonicity
            ++p[i];
        }
        out.emplace_back(std::move(p));
    }
    return out;
}

bool IntPartition::contains(const IntPartition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 0; i < mu.rows(); ++i)
        if (mu.parts()[i] > parts_[i]) return false;
    return true;
}

std::string IntPartition::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << "]";
    return out.str();
}

std::vector<IntPartition> partitions_of(int n) {
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

// Removing a border strip of size r from λ: enumerate the results together
// with the strip heights. A strip is a connected rim hook (edgewise-connected
// skew shape with no 2×2 square).
std::vector<std::pair<IntPartition, int>> strip_removals(const IntPartition& lambda, int r) {
    std::vector<std::pair<IntPartition, int>> out;
    const auto& l = lambda.parts();
    int rows = lambda.rows();
    // The strip occupies consecutive rows i..j; within those rows the shape
    // left behind is forced: mu[t] = l[t+1] − 1 for t in i..j−1, and mu[j]
    // makes the size work out. (Standard rim hook parametrization.)
    for (int i = 0; i < rows; ++i) {
        for (int j = i; j < rows; ++j) {
            std::vector<int> mu = l;
            int removed = 0;
            bool ok = true;
            for (int t = i; t < j; ++t) {
                int nv = l[t + 1] - 1;  // forces connectivity and rules out 2×2
                if (nv > l[t] || nv < 0) {
                    ok = false;
                    break;
                }
                removed += l[t] - nv;
                mu[t] = nv;
            }
            if (!ok) continue;
            int take = r - removed;
            int nv = l[j] - take;
            // Row j keeps nv boxes; validity: strip nonempty in row j, shape
            // stays a partition.
            if (take <= 0 || nv < 0) continue;
            if (j + 1 < rows && nv < l[j + 1]) continue;
            if (i > 0 && mu[i] > l[i - 1]) continue;
            mu[j] = nv;
            // Strip must be edgewise connected between rows: row t's segment
            // must overlap row t+1's segment by at least one column, which the
            // forced values guarantee when each row actually loses boxes; the
            // top row must lose at least one box as well.
            bool each_row_touched = true;
            for (int t = i; t <= j; ++t)
                if (mu[t] == l[t]) each_row_touched = false;
            if (!each_row_touched) continue;
            std::vector<int> clean;
            for (int v : mu)
                if (v > 0) clean.push_back(v);
            bool decreasing = true;
            for (std::size_t t = 1; t < clean.size(); ++t)
                if (clean[t] > clean[t - 1]) decreasing = false;
            if (!decreasing) continue;
            out.emplace_back(IntPartition(std::move(clean)), j - i);
        }
    }
    return out;
}

using CharKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<CharKey, Integer> char_cache;

Integer mn_character(const IntPartition& lambda, std::vector<int> mu) {
    if (lambda.weight() == 0) return 1;
    CharKey key{lambda.parts(), mu};
    auto it = char_cache.find(key);
    if (it != char_cache.end()) return it->second;
    int r = mu.front();
    std::vector<int> rest(mu.begin() + 1, mu.end());
    Integer acc = 0;
    for (const auto& [shape, height] : strip_removals(lambda, r)) {
        Integer term = mn_character(shape, rest);
        acc += (height % 2 == 0) ? term : -term;
    }
    char_cache.emplace(std::move(key), acc);
    return acc;
}

}  // namespace

Integer irr_character(const IntPartition& lambda, const IntPartition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: |lambda| must equal |mu|");
    return mn_character(lambda, mu.parts());
}

Integer dim_hook(const IntPartition& lambda) {
    int n = lambda.weight();
    if (n == 0) return 1;
    IntPartition t = lambda.transposed();
    Integer hooks = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j)
            hooks *= (lambda.parts()[i] - j) + (t.parts()[j] - i) - 1;
    Integer d = factorial(n) / hooks;
    return d;
}

Integer ssyt_count(const IntPartition& lambda, int N) {
    if (N < 0) throw std::invalid_argument("ssyt_count: negative N");
    if (lambda.rows() > N) return 0;
    IntPartition t = lambda.transposed();
    Rational acc(1);
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) {
            int hook = (lambda.parts()[i] - j) + (t.parts()[j] - i) - 1;
            acc *= Rational(N + j - i) / Rational(hook);
        }
    if (acc.get_den() != 1) throw std::logic_error("ssyt_count: non-integer result");
    return acc.get_num();
}

std::map<IntPartition, Rational> chi_q_decompose(int n, int N) {
    if (N < 0) throw std::invalid_argument("chi_q_decompose: N must be ≥ 0");
    std::map<IntPartition, Rational> out;
    if (N == 0) {
        Rational denom(factorial(n + 1));
        for (const auto& lam : partitions_of(n + 1))
            out[lam] = Rational(dim_hook(lam)) / denom;
    } else {
        Integer denom = 1;
        for (int i = 0; i <= n; ++i) denom *= N;
        for (const auto& lam : partitions_of(n + 1))
            out[lam] = Rational(ssyt_count(lam, N)) / Rational(denom);
    }
    return out;
}

Rational restricted_character(const IntPartition& lambda_prime, const IntPartition& lambda,
                              const Perm& alpha) {
    int n = alpha.degree();
    if (lambda.weight() != n || lambda_prime.weight() != n + 1)
        throw std::invalid_argument("restricted_character: weights must be n and n+1");
    Rational acc(0);
    for (const Perm& sigma : all_perms_fixing_0(n)) {
        // Cycle type of σ within S(n): drop the fixed 0.
        std::vector<int> type = sigma.cycle_type();
        type.erase(std::find(type.begin(), type.end(), 1));  // removes one 1 (the 0-cycle)
        Integer c1 = irr_character(lambda, IntPartition(type));
        if (c1 == 0) continue;
        Integer c2 = irr_character(lambda_prime,
                                   IntPartition(sigma.inverse().compose(alpha).cycle_type()));
        acc += Rational(c1) * Rational(c2);
    }
    return acc * Rational(dim_hook(lambda)) / Rational(factorial(n));
}

GAElement central_projection(const IntPartition& lambda, int n) {
    if (lambda.weight() != n + 1)
        throw std::invalid_argument("central_projection: lambda must partition n+1");
    GAElement out(n);
    Rational scale = Rational(dim_hook(lambda)) / Rational(factorial(n + 1));
    for (const Perm& sigma : all_perms(n)) {
        Integer ch = irr_character(lambda, IntPartition(sigma.cycle_type()));
        if (ch == 0) continue;
        out.add_term(sigma, Laurent::of(scale * Rational(ch)));
    }
    return out;
}

CharTable::CharTable(int n) : n_(n) {
    lambdas_ = partitions_of(n + 1);
    classes_ = lambdas_;
    values_.resize(lambdas_.size());
    for (std::size_t i = 0; i < lambdas_.size(); ++i) {
        values_[i].resize(classes_.size());
        for (std::size_t j = 0; j < classes_.size(); ++j)
            values_[i][j] = irr_character(lambdas_[i], classes_[j]);
    }
}

Integer CharTable::class_size(int class_idx) const {
    // (n+1)! / z_μ with z_μ = Π k^{m_k} m_k!
    const auto& mu = classes_[class_idx].parts();
    std::map<int, int> mult;
    for (int p : mu) ++mult[p];
    Integer z = 1;
    for (const auto& [k, m] : mult) {
        for (int t = 0; t < m; ++t) z *= k;
        z *= factorial(m);
    }
    return factorial(n_ + 1) / z;
}

std::string CharTable::to_tsv() const {
    std::ostringstream out;
    out << "lambda\\class";
    for (const auto& c : classes_) out << '\t' << c.to_string();
    out << '\n';
    for (std::size_t i = 0; i < lambdas_.size(); ++i) {
        out << lambdas_[i].to_string();
        for (std::size_t j = 0; j < classes_.size(); ++j) out << '\t' << values_[i][j].get_str();
        out << '\n';
    }
    return out.str();
}

}  // namespace htp
