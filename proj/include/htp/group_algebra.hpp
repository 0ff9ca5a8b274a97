#pragma once

#include <map>
#include <vector>

#include "htp/exact_matrix.hpp"
#include "htp/laurent.hpp"
#include "htp/perm.hpp"

namespace htp {

// Element of the group algebra of S₀(n) with Laurent coefficients.
class GAElement {
  public:
    explicit GAElement(int degree) : degree_(degree) {}
    static GAElement delta(const Perm& p, Laurent c = Laurent::one());

    int degree() const { return degree_; }
    const std::map<Perm, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Laurent coefficient(const Perm& p) const;

    void add_term(const Perm& p, const Laurent& c);
    GAElement& operator+=(const GAElement& o);
    GAElement& operator-=(const GAElement& o);
    GAElement operator+(const GAElement& o) const;
    GAElement operator-(const GAElement& o) const;
    GAElement scaled(const Laurent& c) const;
    bool operator==(const GAElement& o) const = default;

    // Convolution product: δ_α · δ_β = δ_{αβ} under (αβ)(x) = α(β(x)).
    GAElement mul(const GAElement& o) const;

    // Star: reverses permutations; rational Laurent coefficients are their own
    // conjugates.
    GAElement star() const;

    // χ_q(Σ c_α α) = Σ c_α q^{|α|}.
    Laurent chi_q() const;

  private:
    int degree_;
    std::map<Perm, Laurent> terms_;
};

// Result of applying a contraction to a permutation: C_π(α) is a single
// Laurent monomial q^weight_exp times the reduced permutation.
struct ContractionResult {
    int weight_exp;
    Perm reduced;
};

// C_π(α) = q^{cyc₀((πα)|_c) − cyc₀(πα) + ℓ} · relabel((πα)|_c), where the
// restriction removes the paired support of π and ℓ is the pair count.
ContractionResult contract_perm(const Matching& pi, const Perm& alpha);

// Normalized variant C̃_π(α): weight exponent shifts by cyc₀(α) − cyc₀((πα)|_c),
// giving q^{cyc₀(α) − cyc₀(πα) + ℓ}; always ≥ 0, so evaluation at q = 0 is total.
ContractionResult contract_perm_tilde(const Matching& pi, const Perm& alpha);

// Degree-graded group-algebra element (the Laplacian lowers degree by 2 per
// contraction, so exponentials live in the graded direct sum).
using GradedGA = std::map<int, GAElement>;

GradedGA to_graded(const GAElement& x);
bool graded_equal(const GradedGA& a, const GradedGA& b);

enum class LaplacianMode { L, ExpL, ExpNegL };

// ℒ = Σ_τ C_τ over transpositions of {1..n} (never moving 0) on each graded
// component; ExpL / ExpNegL are the terminating exponential series, computed
// matching-wise: e^{±ℒ}(η) = Σ_π (±1)^{ℓ(π)} C_π(η).
GradedGA laplacian_exp(LaplacianMode mode, const GradedGA& x);

// Inhomogeneous Laplacian ℒ_{n,k} = Σ C_{(ij)}, i ≤ n < j, on degree n+k.
GAElement laplacian_inhom(int n, int k, const GAElement& x);

// ℓ-th level: ℒ_{n,k}^{(ℓ)} = ℓ! · Σ_{π ∈ Part₁,₂(n,k), ℓ pairs} C_π.
GAElement laplacian_inhom_level(int n, int k, int level, const GAElement& x);

enum class KernelSign { Alternating, Plain };

// Σ_σ (±1)^{|σ|} close_partial(π, σ) over all permutations σ of the linear
// orbit index set. With π carrying N+1 linear orbits, the alternating sums
// generate the Gram radical of χ_{1/N} and the plain sums that of χ_{−1/N}.
GAElement kernel_generator(const PartialPerm& p, KernelSign sign);

// (01) + (02) + ... + (0n); commutes with the copy of S(n) fixing 0.
GAElement jucys_murphy(int n);

// Gram matrix of χ_q on ℂ[S₀(n)] at a fixed rational q₀, indexed by
// all_perms(n) order: G[α][β] = q₀^{|αβ⁻¹|}.
ExactMatrix chi_q_gram(int n, const Rational& q0);

}  // namespace htp
