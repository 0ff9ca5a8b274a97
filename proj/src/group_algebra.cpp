#include "htp/group_algebra.hpp"

#include <stdexcept>

namespace htp {

GAElement GAElement::delta(const Perm& p, Laurent c) {
    GAElement e(p.degree());
    e.add_term(p, c);
    return e;
}

Laurent GAElement::coefficient(const Perm& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Laurent() : it->second;
}

void GAElement::add_term(const Perm& p, const Laurent& c) {
    if (p.degree() != degree_) throw std::invalid_argument("ga: degree mismatch");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GAElement& GAElement::operator+=(const GAElement& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("ga: degree mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

GAElement& GAElement::operator-=(const GAElement& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("ga: degree mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

GAElement GAElement::operator+(const GAElement& o) const {
    GAElement r = *this;
    r += o;
    return r;
}

GAElement GAElement::operator-(const GAElement& o) const {
    GAElement r = *this;
    r -= o;
    return r;
}

GAElement GAElement::scaled(const Laurent& c) const {
    GAElement r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [p, k] : terms_) r.add_term(p, k * c);
    return r;
}

GAElement GAElement::mul(const GAElement& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("ga: degree mismatch");
    GAElement r(degree_);
    for (const auto& [p, c] : terms_)
        for (const auto& [p2, c2] : o.terms_) r.add_term(p.compose(p2), c * c2);
    return r;
}

GAElement GAElement::star() const {
    GAElement r(degree_);
    for (const auto& [p, c] : terms_) r.add_term(p.inverse(), c);
    return r;
}

Laurent GAElement::chi_q() const {
    Laurent acc;
    for (const auto& [p, c] : terms_) acc += c.shifted(p.length());
    return acc;
}

ContractionResult contract_perm(const Matching& pi, const Perm& alpha) {
    int n = alpha.degree();
    Perm pa = pi.as_perm(n).compose(alpha);
    std::vector<int> support = pi.paired_support();
    Perm reduced = restrict_relabel(pa, support);
    int ell = pi.pair_count();
    int exp = reduced.cyc0() - pa.cyc0() + ell;
    return {exp, std::move(reduced)};
}

ContractionResult contract_perm_tilde(const Matching& pi, const Perm& alpha) {
    ContractionResult r = contract_perm(pi, alpha);
    // q^{cyc₀(α) − cyc₀((πα)|_c)} · C_π(α)
    int shift = alpha.cyc0() - r.reduced.cyc0();
    r.weight_exp += shift;
    return r;
}

GradedGA to_graded(const GAElement& x) {
    GradedGA g;
    if (!x.is_zero()) g.emplace(x.degree(), x);
    return g;
}

bool graded_equal(const GradedGA& a, const GradedGA& b) {
    auto nonzero = [](const GradedGA& g) {
        GradedGA out;
        for (const auto& [d, e] : g)
            if (!e.is_zero()) out.emplace(d, e);
        return out;
    };
    return nonzero(a) == nonzero(b);
}

namespace {

void graded_add(GradedGA& acc, int degree, const Perm& p, const Laurent& c) {
    auto it = acc.find(degree);
    if (it == acc.end()) it = acc.emplace(degree, GAElement(degree)).first;
    it->second.add_term(p, c);
}

}  // namespace

GradedGA laplacian_exp(LaplacianMode mode, const GradedGA& x) {
    GradedGA out;
    for (const auto& [n, elem] : x) {
        if (elem.is_zero()) continue;
        if (mode == LaplacianMode::L) {
            for (const auto& [p, c] : elem.terms()) {
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        Matching tau(n, {{i, j}}, {});
                        ContractionResult r = contract_perm(tau, p);
                        graded_add(out, n - 2, r.reduced, c.shifted(r.weight_exp));
                    }
            }
        } else {
            bool negate = (mode == LaplacianMode::ExpNegL);
            for (const auto& [p, c] : elem.terms()) {
                for_each_matching(n, true, {}, [&](const Matching& pi) {
                    ContractionResult r = contract_perm(pi, p);
                    Laurent w = c.shifted(r.weight_exp);
                    if (negate && pi.pair_count() % 2 == 1) w = -w;
                    graded_add(out, n - 2 * pi.pair_count(), r.reduced, w);
                });
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

GAElement laplacian_inhom(int n, int k, const GAElement& x) {
    if (x.degree() != n + k) throw std::invalid_argument("laplacian_inhom: degree must be n+k");
    GAElement out(std::max(n + k - 2, 0));
    for (const auto& [p, c] : x.terms())
        for (int i = 1; i <= n; ++i)
            for (int j = n + 1; j <= n + k; ++j) {
                Matching tau(n + k, {{i, j}}, {});
                ContractionResult r = contract_perm(tau, p);
                out.add_term(r.reduced, c.shifted(r.weight_exp));
            }
    return out;
}

GAElement laplacian_inhom_level(int n, int k, int level, const GAElement& x) {
    if (x.degree() != n + k) throw std::invalid_argument("laplacian_inhom_level: degree must be n+k");
    if (level < 0) throw std::invalid_argument("laplacian_inhom_level: negative level");
    GAElement out(std::max(n + k - 2 * level, 0));
    Rational fact(factorial(level));
    for (const auto& [p, c] : x.terms()) {
        for_each_matching(n + k, true, {n, k}, [&](const Matching& pi) {
            if (pi.pair_count() != level) return;
            ContractionResult r = contract_perm(pi, p);
            out.add_term(r.reduced, c.shifted(r.weight_exp).scaled(fact));
        });
    }
    return out;
}

GAElement kernel_generator(const PartialPerm& p, KernelSign sign) {
    GAElement out(p.degree());
    int N = p.linear_orbit_count();
    for (const Perm& sigma : all_perms(N - 1)) {
        Perm closed = close_partial(p, sigma);
        Laurent c = Laurent::one();
        if (sign == KernelSign::Alternating && sigma.length() % 2 == 1) c = -c;
        out.add_term(closed, c);
    }
    return out;
}

GAElement jucys_murphy(int n) {
    GAElement out(n);
    for (int k = 1; k <= n; ++k) out.add_term(Perm::transposition(n, 0, k), Laurent::one());
    return out;
}

ExactMatrix chi_q_gram(int n, const Rational& q0) {
    std::vector<Perm> perms = all_perms(n);
    int m = static_cast<int>(perms.size());
    // Powers of q₀ up to the maximal length n.
    std::vector<Rational> pw(n + 1);
    pw[0] = 1;
    for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * q0;
    ExactMatrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at(i, j) = pw[perms[i].compose(perms[j].inverse()).length()];
    return g;
}

}  // namespace htp
