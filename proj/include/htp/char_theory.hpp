#pragma once

#include <map>
#include <string>
#include <vector>

#include "htp/group_algebra.hpp"
#include "htp/rational.hpp"

namespace htp {

// Integer partition in decreasing order, no zero parts.
class IntPartition {
  public:
    IntPartition() = default;
    explicit IntPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;                  // sum of parts
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_[0]; }
    IntPartition transposed() const;

    // Partitions of weight+1 obtained by adding one box (the covers in Young's
    // lattice); used for branching S(n) ⊂ S(n+1).
    std::vector<IntPartition> covers() const;
    bool contains(const IntPartition& mu) const;

    std::string to_string() const;  // e.g. "[3,1,1]"
    auto operator<=>(const IntPartition& o) const = default;

  private:
    std::vector<int> parts_;
};

std::vector<IntPartition> partitions_of(int n);

// Irreducible character χ^λ evaluated on the class of cycle type μ
// (Murnaghan–Nakayama, memoized). |λ| must equal |μ|.
Integer irr_character(const IntPartition& lambda, const IntPartition& mu);

// Dimension d_λ by the hook length formula.
Integer dim_hook(const IntPartition& lambda);

// Number of semistandard Young tableaux with entries ≤ N (hook content
// formula); zero iff λ has more than N rows.
Integer ssyt_count(const IntPartition& lambda, int N);

// Decomposition coefficients of χ_q as a combination of irreducible characters
// of S₀(n): for q = 1/N (N ≥ 1), n_λ = |SS_N(λ)| / N^{n+1}; for N = 0 the
// q = 0 character, n_λ = d_λ / (n+1)!. Keys are partitions of n+1.
std::map<IntPartition, Rational> chi_q_decompose(int n, int N);

// Restricted character χ^{λ':λ}(α) = (d_λ/n!) Σ_{σ ∈ S(n)} χ^λ(σ) χ^{λ'}(σ⁻¹α)
// for λ ⊢ n, λ' ⊢ n+1, α ∈ S₀(n): the trace of ρ_{λ'}(α) compressed to the
// λ-isotypic component of the restriction to S(n).
Rational restricted_character(const IntPartition& lambda_prime, const IntPartition& lambda,
                              const Perm& alpha);

// Central projection p_λ = (d_λ/(n+1)!) Σ_{σ ∈ S₀(n)} χ^λ(σ) δ_σ, λ ⊢ n+1.
GAElement central_projection(const IntPartition& lambda, int n);

// Full character table of S₀(n): values χ^λ(class) for λ, class ⊢ n+1.
class CharTable {
  public:
    explicit CharTable(int n);

    int n() const { return n_; }
    const std::vector<IntPartition>& lambdas() const { return lambdas_; }
    const std::vector<IntPartition>& classes() const { return classes_; }
    const Integer& value(int lambda_idx, int class_idx) const {
        return values_[lambda_idx][class_idx];
    }
    Integer class_size(int class_idx) const;

    std::string to_tsv() const;

  private:
    int n_;
    std::vector<IntPartition> lambdas_;
    std::vector<IntPartition> classes_;
    std::vector<std::vector<Integer>> values_;
};

}  // namespace htp
