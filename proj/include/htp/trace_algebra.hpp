#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "htp/exact_matrix.hpp"
#include "htp/group_algebra.hpp"
#include "htp/laurent.hpp"
#include "htp/perm.hpp"
#include "htp/rational.hpp"

namespace htp {

// Tensor word over the standard basis of Q^d; letters are 1-based indices.
using Word = std::vector<int>;

// Rational coordinate vector in Q^d.
using RatVec = std::vector<Rational>;

Rational dot(const RatVec& f, const RatVec& g);

struct TraceKey {
    Perm perm;
    Word word;

    int degree() const { return perm.degree(); }
    auto operator<=>(const TraceKey&) const = default;
};

enum class Basis { T, I };

// Element of the graded algebra of trace polynomials: a finite Laurent-coefficient
// combination of (permutation, word) keys, interpreted in the tagged basis.
// Degree-0 scalars sit on the key ((0), empty word).
class TraceElement {
public:
    TraceElement(Basis basis, int dim) : basis_(basis), dim_(dim) {}

    static TraceElement unit(Basis basis, int dim);

    Basis basis() const { return basis_; }
    int dim() const { return dim_; }
    bool symmetrized() const { return symmetrized_; }
    void set_symmetrized(bool s) { symmetrized_ = s; }

    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;
    const std::map<TraceKey, Laurent>& terms() const { return terms_; }
    Laurent coefficient(const TraceKey& key) const;

    void add_term(const TraceKey& key, const Laurent& c);
    void add_term(const Perm& alpha, const Word& w, const Laurent& c);

    TraceElement& operator+=(const TraceElement& other);
    TraceElement& operator-=(const TraceElement& other);
    TraceElement operator+(const TraceElement& other) const;
    TraceElement operator-(const TraceElement& other) const;
    TraceElement operator-() const;
    TraceElement scaled(const Laurent& c) const;

    friend bool operator==(const TraceElement& a, const TraceElement& b) {
        return a.basis_ == b.basis_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    Basis basis_;
    int dim_;
    bool symmetrized_ = false;
    std::map<TraceKey, Laurent> terms_;
};

// Single basis-word key as an element.
TraceElement make_word_element(Basis basis, int dim, const Perm& alpha, const Word& w);
// General rational vectors in the tensor slots, expanded multilinearly into words.
TraceElement make_element(Basis basis, int dim, const Perm& alpha,
                          const std::vector<RatVec>& vectors);

// Coupled contraction of a (perm, word) key by a matching on its slots: paired
// word letters must agree (orthonormal basis) or the term vanishes; the weight
// exponent comes from contract_perm / contract_perm_tilde.
std::optional<std::pair<int, TraceKey>> coupled_contract(const Matching& pi,
                                                         const TraceKey& key,
                                                         bool tilde = false);

// Basis conversion on coordinates: T-coords -> I-coords is the sign-free matching
// sum, I-coords -> T-coords carries (-1)^{pairs}. neg_q uses structure weights at -q;
// tilde uses the normalized contraction exponent.
TraceElement convert(const TraceElement& x, Basis target, bool neg_q = false,
                     bool tilde = false);

enum class HermiteDirection { ToI, ToT };

// ToI rewrites the input's keys as I-labels and returns the equivalent T-tagged
// coordinates (alternating-sign corrections); ToT is the inverse rewrite.
TraceElement hermite_transform(HermiteDirection dir, const TraceElement& x);

// Averages over simultaneous conjugation of the permutation and slot permutation
// of the word; basis tag preserved, symmetrized flag set.
TraceElement symmetrize(const TraceElement& x);

// Termwise inverse permutation, word fixed.
TraceElement star(const TraceElement& x);

// Product via the inhomogeneous-matching sum in the I basis.
TraceElement multiply(const TraceElement& x, const TraceElement& y, bool neg_q = false);
// Independent route: convert to T, concatenate via the union product, convert back.
TraceElement multiply_via_T(const TraceElement& x, const TraceElement& y,
                            bool neg_q = false);

// The vacuum state: degree-0 coefficient in the I basis; on T-tagged input the
// pair-matching sum with weight q^{n/2 - cyc0(pi alpha)} per degree-n term.
Laurent state_phi(const TraceElement& x, bool neg_q = false);

// <x, y>_q = sum over sigma in S(n) of chi_q(alpha sigma beta^-1 sigma^-1) <F, U_sigma G>,
// extended bilinearly; degree-orthogonal. Inputs are converted to the I basis.
Laurent inner_product_q(const TraceElement& x, const TraceElement& y, bool neg_q = false);

// Slotwise action of an orthogonal projection P in the I basis.
TraceElement conditional_expectation(const TraceElement& x, const ExactMatrix& p);

// Closed form for the projection of a single-vector T-element: sum over matchings of
// ||P^perp h||^{2 pairs} times the contracted T-key on words in Ph.
TraceElement single_vector_projection(const Perm& alpha, const RatVec& h,
                                      const ExactMatrix& p, int dim);

enum class EulerMode { E, L, EMinus2L };

// E scales degree-n T-components by n; L is the contraction Laplacian, acting
// identically on T and I coordinates.
TraceElement apply_euler_laplacian(EulerMode mode, const TraceElement& x);

// phi of a product of I-basis factors, computed directly over inhomogeneous pair
// matchings (no pair inside a factor); equals state_phi of the multiplied chain.
Laurent linearized_moments(const std::vector<std::pair<Perm, Word>>& factors,
                           bool neg_q = false);

// Coordinate flip by (-1)^{|alpha|} in the I basis; the image is read in the -q
// structure (use the neg_q variants of multiply/state/inner on it).
TraceElement r_map(const TraceElement& x);

// Normalized q=0 variants: the T-route product is plain union-concatenation and the
// contraction exponent is nonnegative, so q=0 evaluation is total.
TraceElement tilde_convert(const TraceElement& x, Basis target);
TraceElement tilde_multiply(const TraceElement& x, const TraceElement& y);
Laurent tilde_state(const TraceElement& x);
Laurent tilde_inner(const TraceElement& x, const TraceElement& y);

// Shared enumeration caches.
const std::vector<Matching>& cached_matchings(int n);
const std::vector<Matching>& cached_pair_matchings(int n);
const std::vector<Perm>& cached_perms_fixing_0(int n);

}  // namespace htp
