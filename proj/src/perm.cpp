#include "htp/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace htp {

Perm::Perm(int n) {
    if (n < 0) throw std::invalid_argument("perm: negative degree");
    images_.resize(n + 1);
    std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("perm: empty image list");
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("perm: image list is not a permutation");
        seen[v] = 1;
    }
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p(n);
    if (a < 0 || b < 0 || a > n || b > n) throw std::invalid_argument("transposition: out of range");
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p(n);
    std::vector<char> seen(n + 1, 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int x = cyc[i], y = cyc[(i + 1) % cyc.size()];
            if (x < 0 || x > n) throw std::invalid_argument("from_cycles: symbol out of range");
            if (seen[x]) throw std::invalid_argument("from_cycles: repeated symbol");
            seen[x] = 1;
            p.images_[x] = y;
        }
    }
    // Validate injectivity of the result.
    return Perm(p.images_);
}

Perm Perm::compose(const Perm& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = images_[other.images_[x]];
    return Perm(std::move(im));
}

Perm Perm::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<int>(x);
    return Perm(std::move(im));
}

Perm Perm::conjugated_by(const Perm& s) const { return s.compose(*this).compose(s.inverse()); }

Perm Perm::embedded(int m) const {
    if (m < degree()) throw std::invalid_argument("embedded: target degree too small");
    std::vector<int> im(m + 1);
    std::iota(im.begin(), im.end(), 0);
    std::copy(images_.begin(), images_.end(), im.begin());
    return Perm(std::move(im));
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x)) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        int x = static_cast<int>(s);
        do {
            cyc.push_back(x);
            seen[x] = 1;
            x = images_[x];
        } while (x != static_cast<int>(s));
        out.push_back(std::move(cyc));
    }
    return out;  // each starts at its min; sorted by min because s ascends
}

int Perm::cycle_count() const {
    int c = 0;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        ++c;
        int x = static_cast<int>(s);
        while (!seen[x]) {
            seen[x] = 1;
            x = images_[x];
        }
    }
    return c;
}

int Perm::cyc0() const { return cycle_count() - 1; }

int Perm::length() const { return size() - cycle_count(); }

std::vector<int> Perm::cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::vector<int> Perm::marked_cycle() const {
    std::vector<int> cyc;
    int x = 0;
    do {
        cyc.push_back(x);
        x = images_[x];
    } while (x != 0);
    return cyc;
}

int Perm::marked_cycle_length() const { return static_cast<int>(marked_cycle().size()); }

std::string Perm::to_string() const {
    std::ostringstream out;
    for (const auto& cyc : cycles()) {
        if (cyc.size() == 1 && cyc[0] != 0) continue;  // fixed points omitted, 0-cycle kept
        out << "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out << " ";
            out << cyc[i];
        }
        out << ")";
    }
    return out.str();
}

Perm union_perm(const Perm& a, const Perm& b) {
    int n = a.degree(), k = b.degree();
    std::vector<int> im(n + k + 1);
    // α's non-marked structure stays; β's cycles shift by n; the marked cycles
    // concatenate: 0-cycle of α runs into the shifted 0-cycle of β.
    for (int x = 1; x <= n; ++x) {
        int y = a(x);
        im[x] = (y == 0) ? (b(0) == 0 ? 0 : b(0) + n) : y;
    }
    for (int x = 1; x <= k; ++x) {
        int y = b(x);
        im[x + n] = (y == 0) ? 0 : y + n;
    }
    if (a(0) != 0)
        im[0] = a(0);
    else
        im[0] = (b(0) == 0) ? 0 : b(0) + n;
    return Perm(std::move(im));
}

Perm restrict_relabel(const Perm& a, const std::vector<int>& S) {
    int n = a.degree();
    std::vector<char> removed(n + 1, 0);
    for (int s : S) {
        if (s <= 0 || s > n) throw std::invalid_argument("restrict: S must lie in {1..n}");
        if (removed[s]) throw std::invalid_argument("restrict: repeated element in S");
        removed[s] = 1;
    }
    // Order-preserving relabel of the kept symbols onto {0..n−|S|}.
    std::vector<int> label(n + 1, -1);
    int next = 0;
    for (int x = 0; x <= n; ++x)
        if (!removed[x]) label[x] = next++;
    std::vector<int> im(next);
    for (int x = 0; x <= n; ++x) {
        if (removed[x]) continue;
        int y = a(x);
        while (removed[y]) y = a(y);
        im[label[x]] = label[y];
    }
    return Perm(std::move(im));
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> im(n + 1);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Perm> out;
    do out.emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Perm> all_perms_fixing_0(int n) {
    std::vector<int> rest(n);
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<Perm> out;
    do {
        std::vector<int> im(n + 1);
        im[0] = 0;
        std::copy(rest.begin(), rest.end(), im.begin() + 1);
        out.emplace_back(std::move(im));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// ---------------------------------------------------------------------------

Matching::Matching(int n, std::vector<std::pair<int, int>> pairs, std::vector<int> singletons)
    : n_(n), pairs_(std::move(pairs)), singletons_(std::move(singletons)) {
    std::vector<char> seen(n + 1, 0);
    auto touch = [&](int x) {
        if (x < 1 || x > n_) throw std::invalid_argument("matching: element out of range");
        if (seen[x]) throw std::invalid_argument("matching: element repeated");
        seen[x] = 1;
    };
    for (auto& [i, j] : pairs_) {
        if (i > j) std::swap(i, j);
        if (i == j) throw std::invalid_argument("matching: degenerate pair");
        touch(i);
        touch(j);
    }
    for (int s : singletons_) touch(s);
    std::sort(pairs_.begin(), pairs_.end());
    std::sort(singletons_.begin(), singletons_.end());
}

std::vector<int> Matching::paired_support() const {
    std::vector<int> s;
    for (const auto& [i, j] : pairs_) {
        s.push_back(i);
        s.push_back(j);
    }
    std::sort(s.begin(), s.end());
    return s;
}

Perm Matching::as_perm(int degree) const {
    if (degree < n_) throw std::invalid_argument("matching: degree too small");
    Perm p(degree);
    std::vector<int> im = p.images();
    for (const auto& [i, j] : pairs_) {
        im[i] = j;
        im[j] = i;
    }
    return Perm(std::move(im));
}

namespace {

void enumerate_rec(int n, bool allow_singletons, const std::vector<int>& block_of,
                   std::vector<int>& image, std::vector<char>& used, int from,
                   std::vector<std::pair<int, int>>& pairs, std::vector<int>& singles,
                   const std::function<void(const Matching&)>& fn) {
    int i = from;
    while (i <= n && used[i]) ++i;
    if (i > n) {
        fn(Matching(n, pairs, singles));
        return;
    }
    used[i] = 1;
    if (allow_singletons) {  // image i ↦ i comes first in lex order
        singles.push_back(i);
        enumerate_rec(n, allow_singletons, block_of, image, used, i + 1, pairs, singles, fn);
        singles.pop_back();
    }
    for (int j = i + 1; j <= n; ++j) {
        if (used[j]) continue;
        if (!block_of.empty() && block_of[i] == block_of[j]) continue;
        used[j] = 1;
        pairs.emplace_back(i, j);
        enumerate_rec(n, allow_singletons, block_of, image, used, i + 1, pairs, singles, fn);
        pairs.pop_back();
        used[j] = 0;
    }
    used[i] = 0;
}

}  // namespace

void for_each_matching(int n, bool allow_singletons, const std::vector<int>& block_sizes,
                       const std::function<void(const Matching&)>& fn) {
    if (n < 0) throw std::invalid_argument("matchings: negative n");
    std::vector<int> block_of;
    if (!block_sizes.empty()) {
        block_of.assign(n + 1, -1);
        int x = 1, b = 0;
        for (int sz : block_sizes) {
            for (int t = 0; t < sz; ++t) {
                if (x > n) throw std::invalid_argument("matchings: block sizes exceed n");
                block_of[x++] = b;
            }
            ++b;
        }
        if (x != n + 1) throw std::invalid_argument("matchings: block sizes must sum to n");
    }
    std::vector<int> image;
    std::vector<char> used(n + 1, 0);
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> singles;
    enumerate_rec(n, allow_singletons, block_of, image, used, 1, pairs, singles, fn);
}

std::vector<Matching> all_matchings(int n) {
    std::vector<Matching> out;
    for_each_matching(n, true, {}, [&](const Matching& m) { out.push_back(m); });
    return out;
}

std::vector<Matching> pair_matchings(int n) {
    std::vector<Matching> out;
    for_each_matching(n, false, {}, [&](const Matching& m) { out.push_back(m); });
    return out;
}

std::vector<Matching> inhom_matchings(int n, int k) {
    std::vector<Matching> out;
    for_each_matching(n + k, true, {n, k}, [&](const Matching& m) { out.push_back(m); });
    return out;
}

std::vector<Matching> inhom_pair_matchings(const std::vector<int>& block_sizes) {
    int n = 0;
    for (int b : block_sizes) n += b;
    std::vector<Matching> out;
    for_each_matching(n, false, block_sizes, [&](const Matching& m) { out.push_back(m); });
    return out;
}

// ---------------------------------------------------------------------------

PartialPerm::PartialPerm(int n, std::vector<int> arcs) : arcs_(std::move(arcs)) {
    if (n < 0 || static_cast<int>(arcs_.size()) != n + 1)
        throw std::invalid_argument("partial perm: arc list must have n+1 entries");
    std::vector<int> preimage(n + 1, -1);
    for (int x = 0; x <= n; ++x) {
        int y = arcs_[x];
        if (y == -1) continue;
        if (y < 0 || y > n) throw std::invalid_argument("partial perm: image out of range");
        if (preimage[y] != -1) throw std::invalid_argument("partial perm: not injective");
        preimage[y] = x;
    }
    // Orbit decomposition. Linear orbits start at elements with no preimage.
    std::vector<char> seen(n + 1, 0);
    for (int s = 0; s <= n; ++s) {
        if (seen[s] || preimage[s] != -1) continue;
        std::vector<int> chain;
        int x = s;
        while (true) {
            chain.push_back(x);
            seen[x] = 1;
            if (arcs_[x] == -1) break;
            x = arcs_[x];
        }
        linear_.push_back(std::move(chain));
    }
    for (int s = 0; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        int x = s;
        do {
            cyc.push_back(x);
            seen[x] = 1;
            x = arcs_[x];
        } while (x != s);
        cyclic_.push_back(std::move(cyc));
    }
    auto contains0 = [](const std::vector<int>& v) {
        return std::find(v.begin(), v.end(), 0) != v.end();
    };
    for (const auto& c : cyclic_)
        if (contains0(c)) throw std::invalid_argument("partial perm: 0 must lie in a linear orbit");
    std::stable_sort(linear_.begin(), linear_.end(),
                     [&](const auto& a, const auto& b) {
                         bool a0 = contains0(a), b0 = contains0(b);
                         if (a0 != b0) return a0;
                         return a.front() < b.front();
                     });
}

Perm close_partial(const PartialPerm& p, const Perm& sigma) {
    const auto& orbits = p.linear_orbits();
    int N = static_cast<int>(orbits.size());
    if (sigma.degree() != N - 1)
        throw std::invalid_argument("close_partial: sigma must permute the linear orbit indices");
    std::vector<int> im(p.degree() + 1, -1);
    for (int x = 0; x <= p.degree(); ++x)
        if (p.defined(x)) im[x] = p.arc(x);
    for (int i = 0; i < N; ++i) {
        int b = orbits[i].back();
        int a = orbits[sigma(i)].front();
        im[b] = a;
    }
    for (int x = 0; x <= p.degree(); ++x)
        if (im[x] == -1) throw std::logic_error("close_partial: incomplete closure");
    return Perm(std::move(im));
}

std::vector<PartialPerm> all_partial_perms(int n) {
    std::vector<PartialPerm> out;
    std::vector<int> arcs(n + 1, -1);
    std::vector<char> taken(n + 1, 0);
    std::function<void(int)> rec = [&](int x) {
        if (x > n) {
            try {
                out.emplace_back(n, arcs);
            } catch (const std::invalid_argument&) {
                // 0 in a cyclic orbit — skip
            }
            return;
        }
        arcs[x] = -1;
        rec(x + 1);
        for (int y = 0; y <= n; ++y) {
            if (taken[y]) continue;
            arcs[x] = y;
            taken[y] = 1;
            rec(x + 1);
            taken[y] = 0;
        }
        arcs[x] = -1;
    };
    rec(0);
    return out;
}

}  // namespace htp
