#pragma once

#include <optional>

#include "homlie/alpha_cohomology.hpp"

// One-parameter formal deformations (ν_t, α_t) of a Hom-Lie algebra truncated
// at order N: deformation-equation residuals, the obstruction cochains
// (R¹ₙ, R²ₙ), cocycle verification, greedy order-by-order extension and the
// equivalence-step solver. A degree-2 cochain (νₙ, αₙ) is carried as an
// AlphaCochain, so ∂ is the total differential of the adjoint complex.

namespace homlie {

struct TruncatedDeformation {
    HomLieAlgebra base;
    int order = 0;               // N: terms 1..N are stored
    std::vector<Mat> nu_terms;     // dim × C(dim,2) each
    std::vector<Mat> alpha_terms;  // dim × dim each

    const Mat& nu_at(int i) const;     // i = 0 gives the base bracket
    const Mat& alpha_at(int i) const;  // i = 0 gives the base structure map

    static TruncatedDeformation trivial(const HomLieAlgebra& g, int order);
};

/// Order-n coefficient of the cyclic Hom-Jacobi expansion of (ν_t, α_t);
/// zero iff the n-th Hom-Jacobi deformation equation holds.
Mat residual_jacobi(const TruncatedDeformation& d, int n);

/// Order-n coefficient of α_t∘ν_t − ν_t∘(α_t ⊗ α_t).
Mat residual_mult(const TruncatedDeformation& d, int n);

bool valid_to_order(const TruncatedDeformation& d, int upto);

struct Obstruction {
    Mat r1;  // dim × C(dim,3)
    Mat r2;  // dim × C(dim,2)
};

/// The right-hand sides (R¹ₙ, R²ₙ), built only from terms of order ≤ n−1.
/// The rearrangement identity
///   residual_jacobi(d,n) = [∂(νₙ,αₙ)]_ν − R¹ₙ,
///   residual_mult(d,n)   = [∂(νₙ,αₙ)]_α − R²ₙ
/// holds for arbitrary term families, so order-n validity ⇔ ∂(νₙ,αₙ) = (R¹ₙ,R²ₙ).
Obstruction obstruction_terms(const TruncatedDeformation& d, int n);

/// Checked variant: requires d valid to order n−1 (the obstruction is only
/// meaningful there).
Obstruction obstruction(const TruncatedDeformation& d, int n);

AlphaCochain obstruction_cochain(const HomLieAlgebra& g, const Obstruction& ob);
AlphaCochain order_cochain(const TruncatedDeformation& d, int n);  // (νₙ, αₙ) ∈ C̃²

struct CocycleTheoremReport {
    bool first_order_cocycle = false;       // ∂(ν₁,α₁) = 0
    bool order_identity = false;            // ∂(νₙ,αₙ) = (R¹ₙ,R²ₙ) ⇔ order-n equations
    bool obstruction_is_cocycle = false;    // ∂(R¹ₙ,R²ₙ) = 0
};

CocycleTheoremReport verify_cocycle_theorem(const TruncatedDeformation& d, int n);

/// Solves ∂(Sₙ, 0) = (νₙ − ν′ₙ, αₙ − α′ₙ) for two deformations agreeing to
/// order n−1. Returns the dim×dim matrix Sₙ, or nullopt when the difference
/// class in H̃² obstructs; transporting d′ through id − tⁿSₙ then matches d
/// to order n. Throws when the inputs disagree below order n or the
/// difference is not a 2-cocycle.
std::optional<Mat> equivalence_step(const TruncatedDeformation& d, const TruncatedDeformation& d_prime,
                                    int n);

/// d′ seen through the formal morphism S(t) = Σ Sᵢtⁱ (S₀ must be invertible):
/// ν_t = S∘ν′_t∘(S⁻¹⊗S⁻¹), α_t = S∘α′_t∘S⁻¹, truncated at d′.order.
TruncatedDeformation transport(const TruncatedDeformation& d_prime, const std::vector<Mat>& s_family);

struct ExtensionResult {
    bool extended = false;
    int failed_order = 0;  // set when a linear system had no solution
    TruncatedDeformation deformation;
};

/// Greedy order-by-order extension of a first-order 2-cocycle (ν₁, α₁) to a
/// deformation valid up to order N; always succeeds when H̃³(g,g) = 0.
ExtensionResult extend_deformation(const HomLieAlgebra& g, const Mat& nu1, const Mat& alpha1, int order);

}  // namespace homlie
