#include "htp/trace_algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace htp {

namespace {

bool odd(int v) { return v % 2 != 0; }

Laurent signed_q_power(int exp, bool negate) {
    return Laurent::monomial(exp, Rational(negate ? -1 : 1));
}

const std::vector<Matching>& cached_inhom(int n, int k) {
    static std::map<std::pair<int, int>, std::vector<Matching>> cache;
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, inhom_matchings(n, k)).first;
    return it->second;
}

void check_projection(const ExactMatrix& p, int dim) {
    if (p.rows() != dim || p.cols() != dim)
        throw std::invalid_argument("projection: size mismatch");
    if (!p.is_symmetric()) throw std::invalid_argument("projection: not symmetric");
    if (!(p * p == p)) throw std::invalid_argument("projection: not idempotent");
}

}  // namespace

Rational dot(const RatVec& f, const RatVec& g) {
    if (f.size() != g.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
    return s;
}

const std::vector<Matching>& cached_matchings(int n) {
    static std::map<int, std::vector<Matching>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_matchings(n)).first;
    return it->second;
}

const std::vector<Matching>& cached_pair_matchings(int n) {
    static std::map<int, std::vector<Matching>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, pair_matchings(n)).first;
    return it->second;
}

const std::vector<Perm>& cached_perms_fixing_0(int n) {
    static std::map<int, std::vector<Perm>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_perms_fixing_0(n)).first;
    return it->second;
}

TraceElement TraceElement::unit(Basis basis, int dim) {
    TraceElement u(basis, dim);
    u.add_term(TraceKey{Perm(0), {}}, Laurent::one());
    return u;
}

int TraceElement::max_degree() const {
    int m = 0;
    for (const auto& [key, c] : terms_) m = std::max(m, key.degree());
    return m;
}

Laurent TraceElement::coefficient(const TraceKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Laurent() : it->second;
}

void TraceElement::add_term(const TraceKey& key, const Laurent& c) {
    if (static_cast<int>(key.word.size()) != key.degree())
        throw std::invalid_argument("trace element: word length != permutation degree");
    for (int letter : key.word)
        if (letter < 1 || letter > dim_)
            throw std::invalid_argument("trace element: word letter out of range");
    if (c.is_zero()) return;
    Laurent& slot = terms_[key];
    slot += c;
    if (slot.is_zero()) terms_.erase(key);
}

void TraceElement::add_term(const Perm& alpha, const Word& w, const Laurent& c) {
    add_term(TraceKey{alpha, w}, c);
}

TraceElement& TraceElement::operator+=(const TraceElement& other) {
    if (basis_ != other.basis_ || dim_ != other.dim_)
        throw std::invalid_argument("trace element: basis/dim mismatch in sum");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

TraceElement& TraceElement::operator-=(const TraceElement& other) {
    if (basis_ != other.basis_ || dim_ != other.dim_)
        throw std::invalid_argument("trace element: basis/dim mismatch in sum");
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

TraceElement TraceElement::operator+(const TraceElement& other) const {
    TraceElement out = *this;
    out += other;
    return out;
}

TraceElement TraceElement::operator-(const TraceElement& other) const {
    TraceElement out = *this;
    out -= other;
    return out;
}

TraceElement TraceElement::operator-() const {
    TraceElement out(basis_, dim_);
    out.symmetrized_ = symmetrized_;
    for (const auto& [key, c] : terms_) out.add_term(key, -c);
    return out;
}

TraceElement TraceElement::scaled(const Laurent& c) const {
    TraceElement out(basis_, dim_);
    out.symmetrized_ = symmetrized_;
    if (c.is_zero()) return out;
    for (const auto& [key, cc] : terms_) out.add_term(key, cc * c);
    return out;
}

TraceElement make_word_element(Basis basis, int dim, const Perm& alpha, const Word& w) {
    TraceElement out(basis, dim);
    out.add_term(alpha, w, Laurent::one());
    return out;
}

TraceElement make_element(Basis basis, int dim, const Perm& alpha,
                          const std::vector<RatVec>& vectors) {
    if (static_cast<int>(vectors.size()) != alpha.degree())
        throw std::invalid_argument("make_element: slot count != permutation degree");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("make_element: vector dimension mismatch");
    TraceElement out(basis, dim);
    int n = alpha.degree();
    Word w(n, 1);
    std::function<void(int, const Rational&)> rec = [&](int slot, const Rational& acc) {
        if (slot == n) {
            out.add_term(alpha, w, Laurent::of(acc));
            return;
        }
        for (int b = 1; b <= dim; ++b) {
            const Rational& coord = vectors[slot][b - 1];
            if (coord == 0) continue;
            w[slot] = b;
            Rational next = acc * coord;
            rec(slot + 1, next);
        }
    };
    rec(0, Rational(1));
    return out;
}

std::optional<std::pair<int, TraceKey>> coupled_contract(const Matching& pi,
                                                         const TraceKey& key,
                                                         bool tilde) {
    const Word& w = key.word;
    for (auto [i, j] : pi.pairs())
        if (w[i - 1] != w[j - 1]) return std::nullopt;
    ContractionResult cr =
        tilde ? contract_perm_tilde(pi, key.perm) : contract_perm(pi, key.perm);
    std::vector<char> drop(w.size() + 1, 0);
    for (auto [i, j] : pi.pairs()) {
        drop[i] = 1;
        drop[j] = 1;
    }
    Word rest;
    rest.reserve(w.size() - 2 * pi.pairs().size());
    for (int s = 1; s <= static_cast<int>(w.size()); ++s)
        if (!drop[s]) rest.push_back(w[s - 1]);
    return std::make_pair(cr.weight_exp, TraceKey{cr.reduced, std::move(rest)});
}

TraceElement convert(const TraceElement& x, Basis target, bool neg_q, bool tilde) {
    if (x.basis() == target) return x;
    const bool signs = (x.basis() == Basis::I);
    TraceElement out(target, x.dim());
    out.set_symmetrized(x.symmetrized());
    for (const auto& [key, c] : x.terms()) {
        for (const Matching& pi : cached_matchings(key.degree())) {
            auto ct = coupled_contract(pi, key, tilde);
            if (!ct) continue;
            bool neg = false;
            if (signs && odd(pi.pair_count())) neg = !neg;
            if (neg_q && odd(ct->first)) neg = !neg;
            out.add_term(ct->second, c * signed_q_power(ct->first, neg));
        }
    }
    return out;
}

TraceElement hermite_transform(HermiteDirection dir, const TraceElement& x) {
    const Basis src = dir == HermiteDirection::ToI ? Basis::I : Basis::T;
    const Basis dst = dir == HermiteDirection::ToI ? Basis::T : Basis::I;
    TraceElement forced(src, x.dim());
    forced.set_symmetrized(x.symmetrized());
    for (const auto& [key, c] : x.terms()) forced.add_term(key, c);
    return convert(forced, dst);
}

TraceElement symmetrize(const TraceElement& x) {
    TraceElement out(x.basis(), x.dim());
    for (const auto& [key, c] : x.terms()) {
        int n = key.degree();
        Rational inv = Rational(1) / Rational(factorial(n));
        Laurent cc = c.scaled(inv);
        for (const Perm& s : cached_perms_fixing_0(n)) {
            Perm sinv = s.inverse();
            Word w(n);
            for (int i = 1; i <= n; ++i) w[i - 1] = key.word[sinv(i) - 1];
            out.add_term(key.perm.conjugated_by(s), w, cc);
        }
    }
    out.set_symmetrized(true);
    return out;
}

TraceElement star(const TraceElement& x) {
    TraceElement out(x.basis(), x.dim());
    out.set_symmetrized(x.symmetrized());
    for (const auto& [key, c] : x.terms()) out.add_term(key.perm.inverse(), key.word, c);
    return out;
}

TraceElement multiply(const TraceElement& x0, const TraceElement& y0, bool neg_q) {
    if (x0.dim() != y0.dim())
        throw std::invalid_argument("multiply: dimension mismatch");
    TraceElement x = convert(x0, Basis::I, neg_q);
    TraceElement y = convert(y0, Basis::I, neg_q);
    TraceElement out(Basis::I, x.dim());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            int n = kx.degree();
            int k = ky.degree();
            Word w = kx.word;
            w.insert(w.end(), ky.word.begin(), ky.word.end());
            TraceKey big{union_perm(kx.perm, ky.perm), std::move(w)};
            Laurent cc = cx * cy;
            for (const Matching& pi : cached_inhom(n, k)) {
                auto ct = coupled_contract(pi, big);
                if (!ct) continue;
                bool neg = neg_q && odd(ct->first);
                out.add_term(ct->second, cc * signed_q_power(ct->first, neg));
            }
        }
    }
    return out;
}

TraceElement multiply_via_T(const TraceElement& x0, const TraceElement& y0, bool neg_q) {
    if (x0.dim() != y0.dim())
        throw std::invalid_argument("multiply: dimension mismatch");
    TraceElement x = convert(x0, Basis::T, neg_q);
    TraceElement y = convert(y0, Basis::T, neg_q);
    TraceElement prod(Basis::T, x.dim());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            Word w = kx.word;
            w.insert(w.end(), ky.word.begin(), ky.word.end());
            prod.add_term(union_perm(kx.perm, ky.perm), w, cx * cy);
        }
    }
    return convert(prod, Basis::I, neg_q);
}

Laurent state_phi(const TraceElement& x, bool neg_q) {
    if (x.basis() == Basis::I) return x.coefficient(TraceKey{Perm(0), {}});
    Laurent out;
    for (const auto& [key, c] : x.terms()) {
        int n = key.degree();
        if (odd(n)) continue;
        for (const Matching& pi : cached_pair_matchings(n)) {
            bool match = true;
            for (auto [i, j] : pi.pairs())
                if (key.word[i - 1] != key.word[j - 1]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            Perm pa = pi.as_perm(n).compose(key.perm);
            int e = n / 2 - pa.cyc0();
            out += c * signed_q_power(e, neg_q && odd(e));
        }
    }
    return out;
}

Laurent inner_product_q(const TraceElement& x0, const TraceElement& y0, bool neg_q) {
    if (x0.dim() != y0.dim())
        throw std::invalid_argument("inner product: dimension mismatch");
    TraceElement x = convert(x0, Basis::I, neg_q);
    TraceElement y = convert(y0, Basis::I, neg_q);
    Laurent out;
    for (const auto& [kx, cx] : x.terms()) {
        Word sx = kx.word;
        std::sort(sx.begin(), sx.end());
        for (const auto& [ky, cy] : y.terms()) {
            int n = kx.degree();
            if (n != ky.degree()) continue;
            Word sy = ky.word;
            std::sort(sy.begin(), sy.end());
            if (sx != sy) continue;
            Perm binv = ky.perm.inverse();
            Laurent cc = cx * cy;
            for (const Perm& s : cached_perms_fixing_0(n)) {
                Perm sinv = s.inverse();
                bool match = true;
                for (int i = 1; i <= n && match; ++i)
                    match = kx.word[i - 1] == ky.word[sinv(i) - 1];
                if (!match) continue;
                int e = kx.perm.compose(s).compose(binv).compose(sinv).length();
                out += cc * signed_q_power(e, neg_q && odd(e));
            }
        }
    }
    return out;
}

TraceElement conditional_expectation(const TraceElement& x0, const ExactMatrix& p) {
    check_projection(p, x0.dim());
    TraceElement x = convert(x0, Basis::I);
    int d = x.dim();
    TraceElement out(Basis::I, d);
    for (const auto& [key, c] : x.terms()) {
        int n = key.degree();
        Word u(n, 1);
        std::function<void(int, const Rational&)> rec = [&](int slot, const Rational& acc) {
            if (slot == n) {
                out.add_term(key.perm, u, c.scaled(acc));
                return;
            }
            for (int b = 1; b <= d; ++b) {
                const Rational& f = p.at(b - 1, key.word[slot] - 1);
                if (f == 0) continue;
                u[slot] = b;
                Rational next = acc * f;
                rec(slot + 1, next);
            }
        };
        rec(0, Rational(1));
    }
    return out;
}

TraceElement single_vector_projection(const Perm& alpha, const RatVec& h,
                                      const ExactMatrix& p, int dim) {
    check_projection(p, dim);
    if (static_cast<int>(h.size()) != dim)
        throw std::invalid_argument("single_vector_projection: vector dimension mismatch");
    RatVec ph(dim, Rational(0));
    for (int b = 0; b < dim; ++b)
        for (int a = 0; a < dim; ++a) ph[b] += p.at(b, a) * h[a];
    RatVec perp(dim);
    for (int b = 0; b < dim; ++b) perp[b] = h[b] - ph[b];
    Rational w2 = dot(perp, perp);
    int n = alpha.degree();
    TraceElement out(Basis::T, dim);
    for (const Matching& pi : cached_matchings(n)) {
        int l = pi.pair_count();
        Rational coeff(1);
        for (int t = 0; t < l; ++t) coeff *= w2;
        if (coeff == 0) continue;
        ContractionResult cr = contract_perm(pi, alpha);
        std::vector<RatVec> slots(n - 2 * l, ph);
        TraceElement piece = make_element(Basis::T, dim, cr.reduced, slots);
        out += piece.scaled(Laurent::monomial(cr.weight_exp, coeff));
    }
    return out;
}

TraceElement apply_euler_laplacian(EulerMode mode, const TraceElement& x) {
    switch (mode) {
        case EulerMode::L: {
            TraceElement out(x.basis(), x.dim());
            for (const auto& [key, c] : x.terms()) {
                int n = key.degree();
                for (int i = 1; i <= n; ++i) {
                    for (int j = i + 1; j <= n; ++j) {
                        auto ct = coupled_contract(Matching(n, {{i, j}}, {}), key);
                        if (!ct) continue;
                        out.add_term(ct->second, c * Laurent::q_power(ct->first));
                    }
                }
            }
            return out;
        }
        case EulerMode::E: {
            TraceElement t = convert(x, Basis::T);
            TraceElement scaled_t(Basis::T, x.dim());
            for (const auto& [key, c] : t.terms())
                scaled_t.add_term(key, c.scaled(Rational(key.degree())));
            return convert(scaled_t, x.basis());
        }
        case EulerMode::EMinus2L: {
            TraceElement e = apply_euler_laplacian(EulerMode::E, x);
            TraceElement l = apply_euler_laplacian(EulerMode::L, x);
            return e - l.scaled(Laurent::of_int(2));
        }
    }
    throw std::logic_error("apply_euler_laplacian: unreachable");
}

Laurent linearized_moments(const std::vector<std::pair<Perm, Word>>& factors, bool neg_q) {
    std::vector<int> blocks;
    Perm u(0);
    Word w;
    for (const auto& [p, word] : factors) {
        if (static_cast<int>(word.size()) != p.degree())
            throw std::invalid_argument("linearized_moments: word length mismatch");
        u = union_perm(u, p);
        w.insert(w.end(), word.begin(), word.end());
        blocks.push_back(p.degree());
    }
    int total = static_cast<int>(w.size());
    Laurent out;
    if (odd(total)) return out;
    for (const Matching& pi : inhom_pair_matchings(blocks)) {
        bool match = true;
        for (auto [i, j] : pi.pairs())
            if (w[i - 1] != w[j - 1]) {
                match = false;
                break;
            }
        if (!match) continue;
        Perm pa = pi.as_perm(total).compose(u);
        int e = total / 2 - pa.cyc0();
        out += signed_q_power(e, neg_q && odd(e));
    }
    return out;
}

TraceElement r_map(const TraceElement& x0) {
    TraceElement x = convert(x0, Basis::I);
    TraceElement out(Basis::I, x.dim());
    for (const auto& [key, c] : x.terms())
        out.add_term(key, odd(key.perm.length()) ? -c : c);
    return out;
}

TraceElement tilde_convert(const TraceElement& x, Basis target) {
    return convert(x, target, false, true);
}

TraceElement tilde_multiply(const TraceElement& x0, const TraceElement& y0) {
    if (x0.dim() != y0.dim())
        throw std::invalid_argument("multiply: dimension mismatch");
    TraceElement x = tilde_convert(x0, Basis::T);
    TraceElement y = tilde_convert(y0, Basis::T);
    TraceElement prod(Basis::T, x.dim());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            Word w = kx.word;
            w.insert(w.end(), ky.word.begin(), ky.word.end());
            prod.add_term(union_perm(kx.perm, ky.perm), w, cx * cy);
        }
    }
    return tilde_convert(prod, Basis::I);
}

Laurent tilde_state(const TraceElement& x) {
    if (x.basis() == Basis::I) return x.coefficient(TraceKey{Perm(0), {}});
    Laurent out;
    for (const auto& [key, c] : x.terms()) {
        int n = key.degree();
        if (odd(n)) continue;
        for (const Matching& pi : cached_pair_matchings(n)) {
            auto ct = coupled_contract(pi, key, true);
            if (!ct) continue;
            out += c * Laurent::q_power(ct->first);
        }
    }
    return out;
}

Laurent tilde_inner(const TraceElement& x, const TraceElement& y) {
    return tilde_state(tilde_multiply(star(y), x));
}

}  // namespace htp
