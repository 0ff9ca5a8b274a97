#include "htp/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace htp {

namespace {

Word drop_slot(const Word& w, int k) {
    Word out;
    out.reserve(w.size() - 1);
    for (int i = 1; i <= static_cast<int>(w.size()); ++i)
        if (i != k) out.push_back(w[i - 1]);
    return out;
}

void check_vec(const RatVec& h, int dim, const char* who) {
    if (static_cast<int>(h.size()) != dim)
        throw std::invalid_argument(std::string(who) + ": vector/dim mismatch");
}

}  // namespace

FockBasis FockBasis::full(int degree, int dim) {
    if (degree < 0 || dim < 1) throw std::invalid_argument("FockBasis: bad degree/dim");
    FockBasis b;
    b.degree = degree;
    b.dim = dim;
    for (const Perm& p : all_perms(degree)) {
        Word w(degree, 1);
        while (true) {
            b.labels.push_back(TraceKey{p, w});
            int i = degree - 1;
            while (i >= 0 && w[i] == dim) w[i--] = 1;
            if (i < 0) break;
            ++w[i];
        }
    }
    return b;
}

int FockBasis::index_of(const TraceKey& key) const {
    auto it = std::find(labels.begin(), labels.end(), key);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

Rational key_inner_q(const TraceKey& a, const TraceKey& b, const Rational& q0) {
    int n = a.degree();
    if (b.degree() != n) return Rational(0);
    // Cheap reject: the sigma sum permutes word letters, so multisets must agree.
    Word sa = a.word, sb = b.word;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return Rational(0);

    std::vector<Rational> qpow(n + 2);
    qpow[0] = 1;
    for (int i = 1; i <= n + 1; ++i) qpow[i] = qpow[i - 1] * q0;

    Rational acc(0);
    const Perm binv = b.perm.inverse();
    for (const Perm& sigma : all_perms_fixing_0(n)) {
        const Perm sinv = sigma.inverse();
        bool match = true;
        for (int i = 1; i <= n && match; ++i)
            if (a.word[i - 1] != b.word[sinv(i) - 1]) match = false;
        if (!match) continue;
        Perm gamma = a.perm.compose(sigma).compose(binv).compose(sinv);
        acc += qpow[gamma.length()];
    }
    return acc;
}

Rational inner_at(const TraceElement& x, const TraceKey& key, const Rational& q0) {
    const TraceElement xi = x.basis() == Basis::I ? x : convert(x, Basis::I);
    Rational acc(0);
    for (const auto& [k, c] : xi.terms()) acc += c.eval(q0) * key_inner_q(k, key, q0);
    return acc;
}

ExactMatrix gram_matrix(const FockBasis& basis, const Rational& q0) {
    const int m = static_cast<int>(basis.labels.size());
    ExactMatrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Rational v = key_inner_q(basis.labels[j], basis.labels[i], q0);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    return g;
}

TraceElement create_op(FieldFlavor flavor, const RatVec& h, const TraceKey& x, int dim) {
    check_vec(h, dim, "create_op");
    const int n = x.degree();
    Perm target = x.perm.embedded(n + 1);
    if (flavor == FieldFlavor::Gue)
        target = Perm::transposition(n + 1, 0, n + 1).compose(target);
    TraceElement out(Basis::I, dim);
    for (int b = 1; b <= dim; ++b) {
        if (h[b - 1] == 0) continue;
        Word w = x.word;
        w.push_back(b);
        out.add_term(TraceKey{target, w}, Laurent::of(h[b - 1]));
    }
    return out;
}

TraceElement annihilate_op(FieldFlavor flavor, const RatVec& h, const TraceKey& x, int dim) {
    check_vec(h, dim, "annihilate_op");
    const int n = x.degree();
    TraceElement out(Basis::I, dim);
    if (flavor == FieldFlavor::Gaussian) {
        for (int k = 1; k <= n; ++k) {
            const Rational& hk = h[x.word[k - 1] - 1];
            if (hk == 0) continue;
            Perm red = restrict_relabel(x.perm, {k});
            out.add_term(TraceKey{red, drop_slot(x.word, k)},
                         Laurent::monomial(x.perm.fixes(k) ? 0 : 1, hk));
        }
        return out;
    }
    const int k0 = x.perm.inverse()(0);  // 0 when the marked point is fixed
    for (int k = 1; k <= n; ++k) {
        const Rational& hk = h[x.word[k - 1] - 1];
        if (hk == 0) continue;
        Word w = drop_slot(x.word, k);
        if (k == k0) {
            out.add_term(TraceKey{restrict_relabel(x.perm, {k}), w}, Laurent::of(hk));
        } else {
            Perm moved = Perm::transposition(n, 0, k).compose(x.perm);
            out.add_term(TraceKey{restrict_relabel(moved, {k}), w}, Laurent::monomial(1, hk));
        }
    }
    return out;
}

TraceElement dgamma(const ExactMatrix& a, const TraceKey& x, int dim) {
    if (a.rows() != dim || a.cols() != dim)
        throw std::invalid_argument("dgamma: matrix/dim mismatch");
    const int n = x.degree();
    TraceElement out(Basis::I, dim);
    for (int i = 1; i <= n; ++i) {
        Perm moved = Perm::transposition(n, 0, i).compose(x.perm);
        for (int b = 1; b <= dim; ++b) {
            const Rational& f = a.at(b - 1, x.word[i - 1] - 1);
            if (f == 0) continue;
            Word w = x.word;
            w[i - 1] = b;
            out.add_term(TraceKey{moved, w}, Laurent::of(f));
        }
    }
    return out;
}

ExactMatrix operator_matrix(const std::function<TraceElement(const TraceKey&)>& op,
                            const FockBasis& domain, const FockBasis& codomain,
                            const Rational& q0) {
    ExactMatrix m(static_cast<int>(codomain.labels.size()),
                  static_cast<int>(domain.labels.size()));
    for (int j = 0; j < static_cast<int>(domain.labels.size()); ++j) {
        TraceElement img = op(domain.labels[j]);
        if (img.basis() != Basis::I) img = convert(img, Basis::I);
        for (const auto& [key, c] : img.terms()) {
            int i = codomain.index_of(key);
            if (i < 0)
                throw std::invalid_argument("operator_matrix: image term " + key.perm.to_string() +
                                            " leaves the codomain");
            m.at(i, j) = m.at(i, j) + c.eval(q0);
        }
    }
    return m;
}

ExactMatrix pairing_matrix(const std::function<TraceElement(const TraceKey&)>& op,
                           const FockBasis& domain, const FockBasis& codomain,
                           const Rational& q0) {
    ExactMatrix m(static_cast<int>(codomain.labels.size()),
                  static_cast<int>(domain.labels.size()));
    for (int j = 0; j < static_cast<int>(domain.labels.size()); ++j) {
        TraceElement img = op(domain.labels[j]);
        for (int i = 0; i < static_cast<int>(codomain.labels.size()); ++i)
            m.at(i, j) = inner_at(img, codomain.labels[i], q0);
    }
    return m;
}

}  // namespace htp
