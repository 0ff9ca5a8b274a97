#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace htp {

// Permutation of {0, 1, ..., n}. Degree n means n+1 symbols; the symbol 0 is
// the marked point used throughout (the "0-cycle" is the cycle containing it).
// Composition convention: (a.compose(b))(x) = a(b(x)).
class Perm {
  public:
    explicit Perm(int n);  // identity on {0..n}
    explicit Perm(std::vector<int> images);

    static Perm identity(int n) { return Perm(n); }
    static Perm transposition(int n, int a, int b);
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()) - 1; }
    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Perm compose(const Perm& other) const;  // this ∘ other
    Perm inverse() const;
    Perm conjugated_by(const Perm& s) const;  // s ∘ this ∘ s⁻¹

    // Natural inclusion into {0..m}, new symbols fixed.
    Perm embedded(int m) const;

    bool is_identity() const;
    bool fixes(int x) const { return images_[x] == x; }

    // Cycles in canonical form: each cycle starts at its minimum, cycles
    // sorted by minimum, fixed points included.
    std::vector<std::vector<int>> cycles() const;

    int cycle_count() const;          // cyc(α), fixed points included
    int cyc0() const;                 // cycles not containing 0
    int length() const;               // |α| = (n+1) − cyc(α)
    std::vector<int> cycle_type() const;  // partition of n+1, decreasing
    int marked_cycle_length() const;      // length of the 0-cycle
    std::vector<int> marked_cycle() const;  // the 0-cycle, starting at 0

    // Cycle notation; fixed points other than 0 are omitted.
    std::string to_string() const;

    auto operator<=>(const Perm& o) const = default;

  private:
    std::vector<int> images_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};

// α ∪ β: merge the 0-cycles, keep α's other cycles, shift β's support by
// deg(α). Degree adds; the marked cycle concatenates as
// (0, α(0), ..., α⁻¹(0), β(0)+n, ..., β⁻¹(0)+n).
Perm union_perm(const Perm& a, const Perm& b);

// α restricted to the complement of S (0 ∉ S): follow the α-orbit until it
// leaves S, then relabel [0,n]∖S order-preservingly onto [0, n−|S|].
Perm restrict_relabel(const Perm& a, const std::vector<int>& S);

// All permutations of {0..n} in lexicographic image order.
std::vector<Perm> all_perms(int n);

// Permutations of {0..n} fixing 0 (copy of S(n)).
std::vector<Perm> all_perms_fixing_0(int n);

// ---------------------------------------------------------------------------

// Partition of a subset of {1..n} into pairs and singletons; elements of
// {1..n} not in the support are simply not part of the matching. Treated as
// the involution that swaps each pair (never moves 0).
class Matching {
  public:
    Matching(int n, std::vector<std::pair<int, int>> pairs,
             std::vector<int> singletons);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<int>& singletons() const { return singletons_; }
    int pair_count() const { return static_cast<int>(pairs_.size()); }

    // Support = all paired elements, sorted ascending.
    std::vector<int> paired_support() const;

    // Involution in S₀(degree) swapping each pair (degree ≥ n).
    Perm as_perm(int degree) const;

    // Number of blocks (pairs + singletons); |π| in partition notation.
    int block_count() const { return static_cast<int>(pairs_.size() + singletons_.size()); }

    auto operator<=>(const Matching& o) const = default;

  private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;   // (i, j) with i < j, sorted by i
    std::vector<int> singletons_;              // ascending
};

// Enumeration is lexicographic over the involution image sequence
// (π(1), ..., π(n)); the callback form streams without materializing.
// Pair/singleton placement constraints:
//   all_matchings       — Part₁,₂(n): pairs + singletons, no constraint
//   pair_matchings      — Part₂(n): complete pairings (empty for odd n)
//   inhom_matchings     — Part₁,₂(n,k) on [n+k]: every pair crosses the cut
//                         (i ≤ n < j); singletons free
//   inhom_pair_matchings— Part₂(n₁,…,n_r): complete pairings of [Σnᵢ] with no
//                         pair inside a block
void for_each_matching(int n, bool allow_singletons,
                       const std::vector<int>& block_sizes,  // empty = one block, no crossing rule
                       const std::function<void(const Matching&)>& fn);

std::vector<Matching> all_matchings(int n);
std::vector<Matching> pair_matchings(int n);
std::vector<Matching> inhom_matchings(int n, int k);
std::vector<Matching> inhom_pair_matchings(const std::vector<int>& block_sizes);

// ---------------------------------------------------------------------------

// Partial permutation (partial injection) of {0..n}. Orbits split into cyclic
// orbits and linear orbits (maximal chains a → ... → b); the orbit of 0 must
// be linear and is listed first.
class PartialPerm {
  public:
    // arcs[x] = image of x, or -1 if undefined.
    PartialPerm(int n, std::vector<int> arcs);

    int degree() const { return static_cast<int>(arcs_.size()) - 1; }
    int arc(int x) const { return arcs_[x]; }
    bool defined(int x) const { return arcs_[x] >= 0; }
    const std::vector<int>& arcs() const { return arcs_; }

    // Linear orbits as chains (a_i, ..., b_i); 0-orbit first, the rest ordered
    // by initial element.
    const std::vector<std::vector<int>>& linear_orbits() const { return linear_; }
    const std::vector<std::vector<int>>& cyclic_orbits() const { return cyclic_; }
    int linear_orbit_count() const { return static_cast<int>(linear_.size()); }

    auto operator<=>(const PartialPerm& o) const { return arcs_ <=> o.arcs_; }
    bool operator==(const PartialPerm& o) const { return arcs_ == o.arcs_; }

  private:
    std::vector<int> arcs_;
    std::vector<std::vector<int>> linear_;
    std::vector<std::vector<int>> cyclic_;
};

// Close the linear orbits into a full permutation: with linear orbits
// (a_i, ..., b_i) indexed 0..N−1 (0-orbit first) and σ a permutation of the
// index set, the closure sends b_i ↦ a_{σ(i)} and keeps all arcs.
Perm close_partial(const PartialPerm& p, const Perm& sigma);

// All partial permutations of {0..n} whose 0-orbit is linear.
std::vector<PartialPerm> all_partial_perms(int n);

}  // namespace htp
