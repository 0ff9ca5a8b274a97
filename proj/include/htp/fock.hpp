#pragma once

#include <functional>
#include <string>
#include <vector>

#include "htp/exact_matrix.hpp"
#include "htp/trace_algebra.hpp"

namespace htp {

// One graded component of the chaos decomposition, truncated to words over a
// d-dimensional real space with the standard basis: every (perm, word) label
// of the given degree, in a fixed deterministic order.
struct FockBasis {
    int degree = 0;
    int dim = 1;
    std::vector<TraceKey> labels;

    static FockBasis full(int degree, int dim);
    // Index of a label, -1 if absent.
    int index_of(const TraceKey& key) const;
};

// <a, b>_q at q0, both keys read as I-elements of the same degree.
Rational key_inner_q(const TraceKey& a, const TraceKey& b, const Rational& q0);

// <x, label>_q at q0.
Rational inner_at(const TraceElement& x, const TraceKey& key, const Rational& q0);

// G[i][j] = <label_j, label_i> at q0 (symmetric since everything is real).
ExactMatrix gram_matrix(const FockBasis& basis, const Rational& q0);

enum class FieldFlavor { Gaussian, Gue };

// Creation: append h in a fresh slot.  Gaussian keeps the cycle structure
// (new slot is a fixed point); the matrix flavor splices the new slot into
// the marked cycle next to 0.
TraceElement create_op(FieldFlavor flavor, const RatVec& h, const TraceKey& x, int dim);

// Annihilation: remove one slot.  Gaussian pays q unless the slot was a fixed
// point; the matrix flavor pays nothing only on the slot mapping to 0 and
// reroutes the marked cycle through every other slot at cost q.
TraceElement annihilate_op(FieldFlavor flavor, const RatVec& h, const TraceKey& x, int dim);

// Differential second quantisation: apply a one-particle map in each slot and
// splice that slot into the marked cycle.
TraceElement dgamma(const ExactMatrix& a, const TraceKey& x, int dim);

// Coefficient matrix of op between graded components, coefficients evaluated
// at q0.  Throws std::invalid_argument if some image term is not a codomain
// label.
ExactMatrix operator_matrix(const std::function<TraceElement(const TraceKey&)>& op,
                            const FockBasis& domain, const FockBasis& codomain,
                            const Rational& q0);

// M[i][j] = <op(domain_j), codomain_i> at q0; unlike raw coefficients this is
// well defined on the GNS quotient.
ExactMatrix pairing_matrix(const std::function<TraceElement(const TraceKey&)>& op,
                           const FockBasis& domain, const FockBasis& codomain,
                           const Rational& q0);

}  // namespace htp
