#include "htp/verify.hpp"

#include <random>
#include <sstream>

#include "htp/char_theory.hpp"
#include "htp/fock.hpp"
#include "htp/group_algebra.hpp"
#include "htp/gue.hpp"
#include "htp/io.hpp"
#include "htp/trace_algebra.hpp"

namespace htp {

namespace {

using Checks = std::vector<CheckResult>;

void put(Checks& out, std::string name, bool pass, std::string detail = "") {
    out.push_back({std::move(name), pass, std::move(detail)});
}

int rnd_int(std::mt19937_64& g, int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

Perm rnd_perm(std::mt19937_64& g, int n) {
    std::vector<int> im(n + 1);
    for (int i = 0; i <= n; ++i) im[i] = i;
    for (int i = n; i > 0; --i) std::swap(im[i], im[rnd_int(g, 0, i)]);
    return Perm(im);
}

Word rnd_word(std::mt19937_64& g, int n, int d) {
    Word w(n);
    for (int& x : w) x = rnd_int(g, 1, d);
    return w;
}

RatVec rnd_vec(std::mt19937_64& g, int d) {
    RatVec v(d);
    for (auto& x : v) x = Rational(rnd_int(g, -2, 2)) / Rational(rnd_int(g, 1, 2));
    return v;
}

Laurent rnd_coeff(std::mt19937_64& g) {
    int num = rnd_int(g, -3, 3);
    if (num == 0) num = 1;
    return Laurent::monomial(rnd_int(g, -1, 2), Rational(num) / Rational(rnd_int(g, 1, 2)));
}

TraceElement rnd_element(std::mt19937_64& g, Basis basis, int dim, int max_deg, int nterms) {
    TraceElement x(basis, dim);
    for (int t = 0; t < nterms; ++t) {
        int n = rnd_int(g, 0, max_deg);
        x.add_term(rnd_perm(g, n), rnd_word(g, n, dim), rnd_coeff(g));
    }
    return x;
}

TraceElement rnd_pure(std::mt19937_64& g, Basis basis, int dim, int deg, int nterms) {
    TraceElement x(basis, dim);
    for (int t = 0; t < nterms; ++t)
        x.add_term(rnd_perm(g, deg), rnd_word(g, deg, dim), rnd_coeff(g));
    return x;
}

// β lifted to symbols {0, n+1, ..., n+k}, fixing 1..n.
Perm shift_up(const Perm& b, int n) {
    int k = b.degree();
    std::vector<int> im(n + k + 1);
    for (int i = 0; i <= n + k; ++i) im[i] = i;
    auto lift = [&](int x) { return x == 0 ? 0 : x + n; };
    for (int x = 0; x <= k; ++x) im[lift(x)] = lift(b(x));
    return Perm(im);
}

ExactMatrix ketbra(const RatVec& g, const RatVec& f) {
    int d = static_cast<int>(g.size());
    ExactMatrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a.at(i, j) = g[i] * f[j];
    return a;
}

ExactMatrix diag_proj(int d, int ones) {
    ExactMatrix p(d, d);
    for (int i = 0; i < ones; ++i) p.at(i, i) = Rational(1);
    return p;
}

std::string show(const TraceElement& x) { return format_trace_element(x); }

}  // namespace

Checks verify_perm(const VerifyOptions&) {
    Checks out;

    bool conj = true, lens = true;
    std::string bad;
    for (int n = 0; n <= 3 && conj; ++n)
        for (int k = 0; k <= 3 && conj; ++k)
            for (const Perm& a : all_perms(n))
                for (const Perm& b : all_perms(k)) {
                    Perm u = union_perm(a, b);
                    if (u != shift_up(b, n).compose(a.embedded(n + k))) {
                        conj = false;
                        bad = a.to_string() + " ∪ " + b.to_string();
                        break;
                    }
                    if (u.length() != a.length() + b.length()) lens = false;
                }
    put(out, "union-as-composition", conj, bad);
    put(out, "union-length-additive", lens);

    Perm big = Perm::from_cycles(5, {{1, 3, 5, 2, 4}});
    put(out, "restrict-relabel-orbit",
        restrict_relabel(big, {2, 5}) == Perm::from_cycles(3, {{1, 2, 3}}));
    put(out, "restrict-identity", restrict_relabel(Perm(4), {2}) == Perm(3));

    std::vector<int> inv = {1, 1, 2, 4, 10, 26, 76};
    bool counts = true;
    for (int n = 0; n <= 6; ++n)
        if (static_cast<int>(all_matchings(n).size()) != inv[n]) counts = false;
    if (pair_matchings(4).size() != 3 || pair_matchings(6).size() != 15 ||
        pair_matchings(3).size() != 0 || pair_matchings(0).size() != 1)
        counts = false;
    if (inhom_matchings(2, 2).size() != 7) counts = false;
    put(out, "matching-counts", counts);

    bool invol = true;
    for (const Matching& m : all_matchings(4)) {
        Perm p = m.as_perm(4);
        if (p.compose(p) != Perm(4) || !p.fixes(0)) invol = false;
        for (int s : m.singletons())
            if (!p.fixes(s)) invol = false;
    }
    put(out, "matching-as-involution", invol);

    auto perms3 = all_perms(3);
    bool ordered = perms3.size() == 24;
    for (std::size_t i = 1; i < perms3.size(); ++i)
        if (!(perms3[i - 1] < perms3[i])) ordered = false;
    put(out, "perm-enumeration", ordered && all_perms_fixing_0(3).size() == 6);

    // Cutting the arc into 0 leaves one linear orbit; the trivial closure
    // restores the permutation.
    bool closure = true;
    for (const Perm& a : all_perms(3)) {
        std::vector<int> arcs(a.images());
        arcs[a.inverse()(0)] = -1;
        PartialPerm cut(3, arcs);
        if (cut.linear_orbit_count() != 1 || close_partial(cut, Perm(0)) != a) closure = false;
    }
    put(out, "close-partial-cut", closure);

    return out;
}

Checks verify_algebra(const VerifyOptions& opts) {
    Checks out;
    std::mt19937_64 g(opts.seed);
    const int d = 2;
    const int cap = std::max(2, opts.max_degree);

    {
        bool ok = true;
        std::string bad;
        for (int t = 0; t < 40 && ok; ++t) {
            int n = rnd_int(g, 0, cap - 1);
            int k = rnd_int(g, 0, cap - n);
            TraceElement x = rnd_pure(g, Basis::I, d, n, 2);
            TraceElement y = rnd_pure(g, Basis::I, d, k, 2);
            if (multiply(x, y) != multiply_via_T(x, y)) {
                ok = false;
                bad = show(x) + "  |  " + show(y);
            }
        }
        put(out, "product-dual-route", ok, bad);
    }

    {
        TraceElement u = TraceElement::unit(Basis::I, d);
        TraceElement x = rnd_element(g, Basis::I, d, cap, 3);
        put(out, "product-unit", multiply(u, x) == x && multiply(x, u) == x);
    }

    {
        bool ok = true;
        for (int t = 0; t < 25 && ok; ++t) {
            TraceElement x = rnd_element(g, Basis::I, d, cap, 2);
            TraceElement y = rnd_element(g, Basis::I, d, cap, 2);
            if (state_phi(multiply(x, y)) != state_phi(multiply(y, x))) ok = false;
            if (inner_product_q(x, y) != state_phi(multiply(star(y), x))) ok = false;
        }
        put(out, "trace-state-and-inner", ok);
    }

    {
        bool ok = true;
        for (int n = 0; n <= 3 && ok; ++n)
            for (int k = 0; k <= 3 && ok; ++k) {
                if (n == k) continue;
                TraceElement x = rnd_pure(g, Basis::I, d, n, 2);
                TraceElement y = rnd_pure(g, Basis::I, d, k, 2);
                if (!inner_product_q(x, y).is_zero()) ok = false;
            }
        put(out, "chaos-degree-orthogonal", ok);
    }

    {
        bool ok = true;
        for (int t = 0; t < 40 && ok; ++t) {
            TraceElement x = rnd_element(g, Basis::I, d, cap, 3);
            if (hermite_transform(HermiteDirection::ToT, hermite_transform(HermiteDirection::ToI, x)) != x)
                ok = false;
            if (convert(convert(x, Basis::T), Basis::I) != x) ok = false;
        }
        put(out, "hermite-round-trip", ok);
    }

    {
        // H2-style expansion: the I-object labelled (0 1 2)[1,1] in raw terms.
        TraceElement in = make_word_element(Basis::T, 1, Perm::from_cycles(2, {{0, 1, 2}}), {1, 1});
        TraceElement want(Basis::T, 1);
        want.add_term(Perm::from_cycles(2, {{0, 1, 2}}), {1, 1}, Laurent::one());
        want.add_term(Perm(0), {}, -Laurent::one());
        put(out, "expand-minus-one", hermite_transform(HermiteDirection::ToI, in) == want,
            show(hermite_transform(HermiteDirection::ToI, in)));
    }

    {
        TraceElement x = make_word_element(Basis::T, 1, Perm::from_cycles(2, {{1, 2}}), {1, 1});
        put(out, "state-example", state_phi(x) == Laurent::q_power(-1), state_phi(x).to_string());
    }

    {
        bool ok = true;
        for (int t = 0; t < 30 && ok; ++t) {
            int n = rnd_int(g, 0, cap);
            TraceElement x = rnd_pure(g, Basis::I, d, n, 2);
            TraceElement want(Basis::I, d);
            for (const auto& [key, c] : x.terms()) want.add_term(key, c.scaled(Rational(n)));
            if (apply_euler_laplacian(EulerMode::EMinus2L, x) != want) ok = false;
        }
        put(out, "euler-eigenrelation", ok);
    }

    {
        Perm gen = Perm::from_cycles(1, {{0, 1}});
        Laurent two = linearized_moments({{gen, {1}}, {gen, {1}}}, false);
        Laurent quad = linearized_moments({{Perm::from_cycles(1, {{0, 1}}), {1}},
                                           {Perm::from_cycles(1, {{0, 1}}), {1}},
                                           {Perm::from_cycles(1, {{0, 1}}), {1}},
                                           {Perm::from_cycles(1, {{0, 1}}), {1}}},
                                          false);
        Laurent want = Laurent::of_int(2) + Laurent::q_power(2);
        bool ok = two == Laurent::one() && quad == want;
        // Against the product route: mixed chaos moments.
        for (int t = 0; t < 15 && ok; ++t) {
            int m = rnd_int(g, 2, 3);
            std::vector<std::pair<Perm, Word>> factors;
            TraceElement prod = TraceElement::unit(Basis::I, d);
            for (int i = 0; i < m; ++i) {
                int n = rnd_int(g, 0, 2);
                Perm p = rnd_perm(g, n);
                Word w = rnd_word(g, n, d);
                factors.push_back({p, w});
                prod = multiply(prod, make_word_element(Basis::I, d, p, w));
            }
            if (linearized_moments(factors, false) != state_phi(prod)) ok = false;
        }
        put(out, "linearized-moments", ok, quad.to_string());
    }

    {
        bool ok = true;
        // the negation map is linear over numeric scalars, so draw q-free coefficients
        auto rat_elem = [&g, d]() {
            TraceElement x(Basis::I, d);
            for (int t = 0; t < 2; ++t) {
                int n = rnd_int(g, 0, 3);
                x.add_term(rnd_perm(g, n), rnd_word(g, n, d),
                           Laurent::of(Rational(rnd_int(g, -3, 3))));
            }
            return x;
        };
        for (int t = 0; t < 20 && ok; ++t) {
            TraceElement x = rat_elem();
            TraceElement y = rat_elem();
            if (r_map(multiply(x, y)) != multiply(r_map(x), r_map(y), true)) ok = false;
            if (r_map(r_map(x)) != convert(x, Basis::I)) ok = false;
            if (state_phi(r_map(x), true) != state_phi(x).negated_q()) ok = false;
            if (inner_product_q(r_map(x), r_map(y), true) != inner_product_q(x, y)) ok = false;
        }
        put(out, "negation-map", ok);
    }

    {
        // Free-case moments: full cycles give Catalan numbers at q = 0.
        std::vector<long> catalan = {1, 1, 2, 5, 14};
        bool ok = true;
        for (int m = 1; m <= 3 && ok; ++m) {
            std::vector<std::vector<int>> cyc = {{}};
            cyc[0].resize(2 * m + 1);
            for (int i = 0; i <= 2 * m; ++i) cyc[0][i] = i;
            TraceElement x = make_word_element(Basis::T, 1, Perm::from_cycles(2 * m, cyc),
                                               Word(2 * m, 1));
            Laurent mom = tilde_state(x);
            if (mom.coefficient(0) != catalan[m]) ok = false;
        }
        // A 0-free 2-cycle has vanishing norm in the normalized picture.
        TraceElement z = make_word_element(Basis::I, 1, Perm::from_cycles(2, {{1, 2}}), {1, 1});
        if (!(tilde_inner(z, z).coefficient(0) == 0)) ok = false;
        put(out, "tilde-free-case", ok);
    }

    {
        ExactMatrix p = diag_proj(d, 1);
        bool ok = true;
        for (int t = 0; t < 15 && ok; ++t) {
            TraceElement x = rnd_element(g, Basis::I, d, 3, 2);
            TraceElement cx = conditional_expectation(x, p);
            if (conditional_expectation(cx, p) != cx) ok = false;
            if (state_phi(cx) != state_phi(x)) ok = false;
        }
        RatVec h = {Rational(1), Rational(1)};
        TraceElement lhs = single_vector_projection(Perm::from_cycles(2, {{0, 1, 2}}), h, p, d);
        TraceElement want(Basis::T, d);
        want.add_term(Perm::from_cycles(2, {{0, 1, 2}}), {1, 1}, Laurent::one());
        want.add_term(Perm(0), {}, Laurent::one());
        if (lhs != want) ok = false;
        put(out, "conditional-expectation", ok);
    }

    return out;
}

Checks verify_characters(const VerifyOptions&) {
    Checks out;

    {
        // S(3) table against hand values.
        CharTable t(2);
        bool ok = t.lambdas().size() == 3 && t.classes().size() == 3;
        auto val = [&](const std::vector<int>& l, const std::vector<int>& c) {
            int li = -1, ci = -1;
            for (std::size_t i = 0; i < t.lambdas().size(); ++i)
                if (t.lambdas()[i] == IntPartition(l)) li = static_cast<int>(i);
            for (std::size_t i = 0; i < t.classes().size(); ++i)
                if (t.classes()[i] == IntPartition(c)) ci = static_cast<int>(i);
            return t.value(li, ci);
        };
        ok = ok && val({3}, {1, 1, 1}) == 1 && val({3}, {2, 1}) == 1 && val({3}, {3}) == 1;
        ok = ok && val({2, 1}, {1, 1, 1}) == 2 && val({2, 1}, {2, 1}) == 0 &&
             val({2, 1}, {3}) == -1;
        ok = ok && val({1, 1, 1}, {1, 1, 1}) == 1 && val({1, 1, 1}, {2, 1}) == -1 &&
             val({1, 1, 1}, {3}) == 1;
        put(out, "table-s3", ok);
    }

    {
        bool ok = true;
        for (int n = 2; n <= 4 && ok; ++n) {
            CharTable t(n);
            Integer order = factorial(n + 1);
            // Row orthogonality with class sizes.
            for (std::size_t a = 0; a < t.lambdas().size() && ok; ++a)
                for (std::size_t b = 0; b < t.lambdas().size() && ok; ++b) {
                    Integer acc = 0;
                    for (std::size_t c = 0; c < t.classes().size(); ++c)
                        acc += t.class_size(static_cast<int>(c)) *
                               t.value(static_cast<int>(a), static_cast<int>(c)) *
                               t.value(static_cast<int>(b), static_cast<int>(c));
                    if (acc != (a == b ? order : Integer(0))) ok = false;
                }
        }
        put(out, "row-orthogonality", ok);
    }

    {
        bool ok = true;
        for (int m = 1; m <= 6 && ok; ++m) {
            Integer sq = 0;
            for (const IntPartition& l : partitions_of(m)) {
                if (dim_hook(l) != irr_character(l, IntPartition(std::vector<int>(m, 1))))
                    ok = false;
                sq += dim_hook(l) * dim_hook(l);
            }
            if (sq != factorial(m)) ok = false;
        }
        put(out, "hook-dimensions", ok);
    }

    {
        bool ok = ssyt_count(IntPartition({2, 1}), 2) == 2 &&
                  ssyt_count(IntPartition({2}), 2) == 3 &&
                  ssyt_count(IntPartition({1, 1}), 2) == 1 &&
                  ssyt_count(IntPartition({3}), 2) == 4 &&
                  ssyt_count(IntPartition({1, 1, 1}), 2) == 0;
        put(out, "ssyt-counts", ok);
    }

    {
        bool ok = true;
        std::string bad;
        for (int n = 1; n <= 4 && ok; ++n)
            for (int N = 1; N <= 3 && ok; ++N) {
                auto coeffs = chi_q_decompose(n, N);
                for (const Perm& a : all_perms(n)) {
                    Rational want = Rational(1);
                    for (int i = 0; i < a.length(); ++i) want /= N;
                    Rational got(0);
                    for (const auto& [l, c] : coeffs)
                        got += c * irr_character(l, IntPartition(a.cycle_type()));
                    if (got != want) {
                        ok = false;
                        bad = "n=" + std::to_string(n) + " N=" + std::to_string(N) + " at " +
                              a.to_string();
                        break;
                    }
                }
            }
        put(out, "chi-q-decomposition", ok, bad);
    }

    {
        bool ok = true;
        int n = 3;
        auto parts = partitions_of(n + 1);
        std::vector<GAElement> projs;
        for (const auto& l : parts) projs.push_back(central_projection(l, n));
        GAElement sum(n);
        for (std::size_t i = 0; i < projs.size(); ++i) {
            if (projs[i].mul(projs[i]) != projs[i]) ok = false;
            for (std::size_t j = i + 1; j < projs.size(); ++j)
                if (!projs[i].mul(projs[j]).is_zero()) ok = false;
            sum += projs[i];
        }
        if (sum != GAElement::delta(Perm(n))) ok = false;
        put(out, "central-projections", ok);
    }

    {
        bool ok = true;
        for (int n = 2; n <= 3 && ok; ++n)
            for (int N = 1; N <= 2 && ok; ++N) {
                ExactMatrix gram = chi_q_gram(n, Rational(1, N));
                Integer want = 0;
                for (const IntPartition& l : partitions_of(n + 1))
                    if (l.rows() <= N) want += dim_hook(l) * dim_hook(l);
                auto rp = gram.sym_rank_psd();
                if (!rp.psd || Integer(rp.rank) != want) ok = false;
            }
        put(out, "gram-rank-psd", ok);
    }

    {
        // Alternating closures over partial perms with N+1 linear orbits lie in
        // the Gram radical at q = 1/N.
        bool ok = true;
        int n = 2, N = 1;
        ExactMatrix gram = chi_q_gram(n, Rational(1, N));
        auto perms = all_perms(n);
        for (const PartialPerm& p : all_partial_perms(n)) {
            if (p.linear_orbit_count() != N + 1) continue;
            GAElement gen = kernel_generator(p, KernelSign::Alternating);
            std::vector<Rational> coords(perms.size(), Rational(0));
            for (std::size_t i = 0; i < perms.size(); ++i)
                if (!gen.coefficient(perms[i]).is_zero())
                    coords[i] = gen.coefficient(perms[i]).coefficient(0);
            for (int r = 0; r < gram.rows(); ++r) {
                Rational acc(0);
                for (int c = 0; c < gram.cols(); ++c) acc += gram.at(r, c) * coords[c];
                if (acc != 0) ok = false;
            }
        }
        put(out, "kernel-generators", ok);
    }

    {
        // Restricted characters: British values at the identity, d_λ'-trace split.
        bool ok = true;
        for (int n = 2; n <= 3 && ok; ++n)
            for (const IntPartition& lp : partitions_of(n + 1)) {
                Rational total(0);
                for (const IntPartition& l : partitions_of(n)) {
                    Rational v = restricted_character(lp, l, Perm(n));
                    if (lp.contains(l)) {
                        if (v != Rational(dim_hook(l))) ok = false;
                    } else if (v != 0) {
                        ok = false;
                    }
                    total += v;
                }
                if (total != Rational(dim_hook(lp))) ok = false;
            }
        put(out, "restricted-characters", ok);
    }

    return out;
}

Checks verify_fock(const VerifyOptions& opts) {
    Checks out;
    std::mt19937_64 g(opts.seed + 1);
    const int d = 2;

    {
        bool ok = true;
        std::string bad;
        for (int n = 0; n <= 2 && ok; ++n) {
            FockBasis basis = FockBasis::full(n, d);
            for (const TraceKey& key : basis.labels) {
                for (int hv = 0; hv < 2 && ok; ++hv) {
                    RatVec h = hv == 0 ? RatVec{Rational(1), Rational(0)}
                                       : RatVec{Rational(1), Rational(2)};
                    for (FieldFlavor fl : {FieldFlavor::Gaussian, FieldFlavor::Gue}) {
                        Perm gen = fl == FieldFlavor::Gaussian ? Perm(1)
                                                               : Perm::from_cycles(1, {{0, 1}});
                        TraceElement lhs = create_op(fl, h, key, d) + annihilate_op(fl, h, key, d);
                        TraceElement rhs = multiply(make_word_element(Basis::I, d, key.perm, key.word),
                                                    make_element(Basis::I, d, gen, {h}));
                        if (lhs != rhs) {
                            ok = false;
                            bad = format_trace_key(key);
                        }
                    }
                }
            }
        }
        put(out, "field-splits-product", ok, bad);
    }

    {
        bool ok = true;
        Rational q0(1, 2);
        FockBasis dom = FockBasis::full(1, d), cod = FockBasis::full(2, d);
        ExactMatrix gd = gram_matrix(dom, q0), gc = gram_matrix(cod, q0);
        RatVec h = {Rational(1), Rational(-1, 2)};
        for (FieldFlavor fl : {FieldFlavor::Gaussian, FieldFlavor::Gue}) {
            auto up = [&](const TraceKey& k) { return create_op(fl, h, k, d); };
            auto down = [&](const TraceKey& k) { return annihilate_op(fl, h, k, d); };
            ExactMatrix mu = operator_matrix(up, dom, cod, q0);
            ExactMatrix md = operator_matrix(down, cod, dom, q0);
            if (!((gc * mu) == (gd * md).transposed())) ok = false;
        }
        put(out, "adjoint-pairs", ok);
    }

    {
        bool ok = true;
        RatVec f = {Rational(1), Rational(2)};
        RatVec gv = {Rational(1, 2), Rational(-1)};
        Rational fg = dot(f, gv);
        ExactMatrix a = ketbra(gv, f);
        for (FieldFlavor fl : {FieldFlavor::Gaussian, FieldFlavor::Gue}) {
            for (int n = 0; n <= 2 && ok; ++n) {
                FockBasis basis = FockBasis::full(n, d);
                for (const TraceKey& key : basis.labels) {
                    TraceElement up = create_op(fl, gv, key, d);
                    TraceElement lhs(Basis::I, d);
                    for (const auto& [k2, c] : up.terms())
                        lhs += annihilate_op(fl, f, k2, d).scaled(c);
                    TraceElement rhs(Basis::I, d);
                    if (fl == FieldFlavor::Gue) {
                        // deformed relation a⁻(f)a⁺(g) = <f,g> + q dΓ(|g><f|)
                        rhs = make_word_element(Basis::I, d, key.perm, key.word)
                                  .scaled(Laurent::of(fg));
                        rhs += dgamma(a, key, d).scaled(Laurent::q_power(1));
                        if (symmetrize(lhs) != symmetrize(rhs)) ok = false;
                    } else {
                        // scalar flavor keeps the undeformed relation
                        TraceElement down = annihilate_op(fl, f, key, d);
                        rhs = make_word_element(Basis::I, d, key.perm, key.word)
                                  .scaled(Laurent::of(fg));
                        for (const auto& [k2, c] : down.terms())
                            rhs += create_op(fl, gv, k2, d).scaled(c);
                        if (lhs != rhs) ok = false;
                    }
                }
            }
        }
        put(out, "commutation-relation", ok);
    }

    {
        bool ok = true;
        int n = 2;
        FockBasis basis = FockBasis::full(n, d);
        GAElement jm = jucys_murphy(n);
        for (const TraceKey& key : basis.labels) {
            TraceElement want(Basis::I, d);
            for (const auto& [tau, c] : jm.terms())
                want.add_term(tau.compose(key.perm), key.word, c);
            ExactMatrix id = ExactMatrix::identity(d);
            if (dgamma(id, key, d) != want) ok = false;
        }
        put(out, "dgamma-identity-jm", ok);
    }

    {
        bool ok = true;
        Rational q0(1, 2);
        RatVec gv = {Rational(2), Rational(1)};
        RatVec f = {Rational(1), Rational(-1)};
        ExactMatrix a = ketbra(gv, f);
        FockBasis basis = FockBasis::full(2, d);
        ExactMatrix gram = gram_matrix(basis, q0);
        auto da = [&](const TraceKey& k) { return dgamma(a, k, d); };
        auto dat = [&](const TraceKey& k) { return dgamma(a.transposed(), k, d); };
        ExactMatrix ma = pairing_matrix(da, basis, basis, q0);
        ExactMatrix mt = pairing_matrix(dat, basis, basis, q0);
        // ⟨dΓ(A)x, y⟩ = ⟨x, dΓ(Aᵀ)y⟩.
        if (!(ma == mt.transposed())) ok = false;
        put(out, "dgamma-adjoint", ok);
    }

    {
        bool ok = true;
        for (const Rational& q0 : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1),
                                   Rational(-1)}) {
            FockBasis basis = FockBasis::full(2, d);
            if (!gram_matrix(basis, q0).sym_rank_psd().psd) ok = false;
        }
        put(out, "gram-psd", ok);
    }

    {
        // Gram rank on degree n at q = 1/N is the dimension of the fixed-point
        // space of the joint action (conjugation on the group block cut to at
        // most N rows, slot permutation on words): Burnside with block traces
        // chi^lambda(sigma)^2 and word factor d^{cycles(sigma)}.
        bool ok = true;
        for (int N = 1; N <= 2 && ok; ++N) {
            int n = 2;
            FockBasis basis = FockBasis::full(n, d);
            auto rp = gram_matrix(basis, Rational(1, N)).sym_rank_psd();
            Integer total = 0;
            for (const Perm& s : all_perms_fixing_0(n)) {
                IntPartition type(s.cycle_type());
                Integer blocks = 0;
                for (const auto& l : partitions_of(n + 1)) {
                    if (l.rows() > N) continue;
                    Integer ch = irr_character(l, type);
                    blocks += ch * ch;
                }
                Integer words = 1;
                for (int i = 0; i < s.cyc0(); ++i) words *= d;
                total += blocks * words;
            }
            if (!rp.psd || Integer(rp.rank) * factorial(n) != total) ok = false;
        }
        put(out, "gram-kernel-rank", ok);
    }

    return out;
}

Checks verify_oracle(const VerifyOptions& opts) {
    Checks out;
    std::mt19937_64 g(opts.seed + 2);
    const int d = 2;
    const int N = std::max(1, opts.big_n);

    {
        bool ok = true;
        std::string bad;
        int cap = std::min(4, opts.max_degree);
        for (int n = 0; n <= cap && ok; ++n)
            for (const Perm& a : all_perms(n)) {
                std::vector<RatVec> vecs;
                for (int i = 0; i < n; ++i) vecs.push_back(rnd_vec(g, d));
                Rational want = wick_moment(a, vecs, N);
                Laurent st = state_phi(make_element(Basis::T, d, a, vecs));
                if (st.eval(Rational(1, N)) != want) {
                    ok = false;
                    bad = a.to_string();
                    break;
                }
            }
        put(out, "wick-equals-state", ok, bad);
    }

    {
        // Marked-cycle orientation: (0 1 2) reads x₁ then x₂.
        SquareMat<RatComplex> a(2), b(2);
        a.at(0, 1) = RatComplex(Rational(1));
        b.at(1, 0) = RatComplex(Rational(1));
        std::vector<SquareMat<RatComplex>> mats = {a, b};
        auto tm = evaluate_trace_monomial(Perm::from_cycles(2, {{0, 1, 2}}), mats);
        SquareMat<RatComplex> ab = a * b;
        bool ok = tm.matrix_part == ab && tm.scalar == RatComplex(Rational(1, 2));
        put(out, "trace-monomial-orientation", ok);
    }

    {
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            int n = rnd_int(g, 1, 3), k = rnd_int(g, 1, 3);
            Perm a = rnd_perm(g, n), b = rnd_perm(g, k);
            std::vector<SquareMat<RatComplex>> xs;
            for (int i = 0; i < n + k; ++i) {
                SquareMat<RatComplex> m(2);
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c)
                        m.at(r, c) = RatComplex(Rational(rnd_int(g, -2, 2)));
                xs.push_back(m);
            }
            std::vector<SquareMat<RatComplex>> x1(xs.begin(), xs.begin() + n);
            std::vector<SquareMat<RatComplex>> x2(xs.begin() + n, xs.end());
            auto whole = evaluate_trace_monomial(union_perm(a, b), xs);
            auto left = evaluate_trace_monomial(a, x1);
            auto right = evaluate_trace_monomial(b, x2);
            if (!(whole.matrix_part == left.matrix_part * right.matrix_part)) ok = false;
        }
        put(out, "trace-monomial-union", ok);
    }

    {
        bool ok = true;
        for (const Perm& a : all_perms(2)) {
            std::vector<RatVec> vecs = {rnd_vec(g, d), rnd_vec(g, d)};
            std::vector<SquareMat<RatComplex>> ds(3, SquareMat<RatComplex>::identity(N));
            auto m = wick_matrix_moment(a, vecs, ds, N);
            Rational want = wick_moment(a, vecs, N);
            RatComplex tr = m.trace() / RatComplex(Rational(N));
            if (!(tr == RatComplex(want))) ok = false;
        }
        put(out, "matrix-moment-reduction", ok);
    }

    return out;
}

Checks verify_mc(const VerifyOptions& opts) {
    Checks out;
    struct Case {
        Perm alpha;
        std::vector<RatVec> vecs;
    };
    RatVec e1 = {Rational(1), Rational(0)};
    RatVec e2 = {Rational(0), Rational(1)};
    RatVec mix = {Rational(1, 2), Rational(1)};
    std::vector<Case> cases = {
        {Perm::from_cycles(2, {{0, 1, 2}}), {e1, e1}},
        {Perm::from_cycles(2, {{1, 2}}), {mix, mix}},
        {Perm::from_cycles(4, {{0, 1, 2, 3, 4}}), {e1, e1, e2, e2}},
        {Perm::from_cycles(4, {{0, 1}, {2, 3}}), {mix, e1, e1, mix}},
    };
    int within = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        int N = (i % 2 == 0) ? 2 : 3;
        Rational oracle = wick_moment(cases[i].alpha, cases[i].vecs, N);
        McResult r = mc_check(cases[i].alpha, cases[i].vecs, N, opts.samples, opts.seed + i);
        double dev = std::abs(r.estimate - oracle.get_d());
        double sig = r.stderr_real > 0 ? dev / r.stderr_real : (dev == 0 ? 0 : 1e9);
        bool pass = sig <= 4.0;
        within += pass ? 1 : 0;
        std::ostringstream os;
        os << "estimate=" << r.estimate << " oracle=" << oracle.get_d() << " sigmas=" << sig;
        put(out, "mc-case-" + std::to_string(i), pass, os.str());
    }
    put(out, "mc-aggregate", within + 1 >= static_cast<int>(cases.size()),
        std::to_string(within) + "/" + std::to_string(cases.size()) + " within 4 sigma");
    return out;
}

Checks verify_suite(const std::string& suite, const VerifyOptions& opts) {
    if (suite == "perm") return verify_perm(opts);
    if (suite == "algebra") return verify_algebra(opts);
    if (suite == "characters") return verify_characters(opts);
    if (suite == "fock") return verify_fock(opts);
    if (suite == "oracle") return verify_oracle(opts);
    if (suite == "mc") return verify_mc(opts);
    if (suite == "all") {
        Checks all;
        for (const char* s : {"perm", "algebra", "characters", "fock", "oracle", "mc"}) {
            Checks part = verify_suite(s, opts);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace htp
