#pragma once

#include "homlie/alpha_cohomology.hpp"

// The explicitly listed low-degree brackets of the L∞ structure whose
// Maurer-Cartan elements are Hom-Lie algebra structures, together with the
// Maurer-Cartan expansion and the bracket-built differential on C̃² and C̃³.
// Arguments are MultiMaps in the stated components: ν-type degree-k cochains
// are k→1 maps, α-type degree-k cochains are (k−1)→1 maps.

namespace homlie {

// degree-1 brackets
MultiMap l3_nu(const MultiMap& nu1, const MultiMap& nu2, const MultiMap& a);        // [ν₁,ν₂,α]_ν
MultiMap l2_alpha(const MultiMap& nu, const MultiMap& a);                           // [ν,α]_α = αν
MultiMap l3_alpha(const MultiMap& nu, const MultiMap& a1, const MultiMap& a2);      // [ν,α₁,α₂]_α

// degree-2 brackets
MultiMap l4_nu_phi(const MultiMap& phi3, const MultiMap& nu, const MultiMap& a1, const MultiMap& a2);
MultiMap l5_nu_psi(const MultiMap& psi3, const MultiMap& nu1, const MultiMap& nu2, const MultiMap& a1,
                   const MultiMap& a2);
MultiMap l2_alpha_phi(const MultiMap& phi3, const MultiMap& a);
MultiMap l4_alpha_phi(const MultiMap& phi3, const MultiMap& a1, const MultiMap& a2, const MultiMap& a3);
MultiMap l3_alpha_psi(const MultiMap& psi3, const MultiMap& nu, const MultiMap& a);
MultiMap l4_alpha_psi(const MultiMap& psi3, const MultiMap& nu, const MultiMap& a1, const MultiMap& a2);

struct McExpansion {
    Mat jacobi;  // ν-component: ½[ν,ν,α]_ν — the Hom-Jacobi residual
    Mat mult;    // α-component: [ν,α]_α + ½[ν,α,α]_α — the multiplicativity residual
    bool maurer_cartan = false;
};

/// MC equation of the L∞ structure for a candidate pair (ν, α).
McExpansion mc_expansion(int n, const Mat& nu, const Mat& alpha);

/// The differential coming from the brackets with Maurer-Cartan insertions,
/// on C̃ⁿ for n ∈ {2, 3}. Matches total_differential exactly. The relative
/// signs of the insertion sum are pinned by that agreement: the listed
/// brackets determine them only up to the total-antisymmetrization rule.
Mat bracket_differential(const HomLieAlgebra& g, int n);

/// Exact agreement of bracket_differential with total_differential on C̃²
/// and C̃³ (the consistency statement fixing all sign conventions).
bool differential_consistency(const HomLieAlgebra& g, int n);

}  // namespace homlie
