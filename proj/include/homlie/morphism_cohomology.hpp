#pragma once

#include "homlie/alpha_cohomology.hpp"

// The cohomology of a Lie algebra endomorphism: Cⁿ(γ) = Hom(Λⁿg,g) ⊕
// Hom(Λⁿ⁻¹g,g) with δ(φ,ψ) = (∂_CE φ, −∂_CE ψ + ∂_γ φ), the comparison map
// Φ into the α-type complex of the Yau twist g_γ, the Lie-as-Hom-Lie
// decomposition, and Whitehead data. On the second summand the module is g
// with the action x·m = [γ(x), m]; with the plain adjoint action δ would not
// square to zero. The classical Chevalley-Eilenberg differential here is an
// independent implementation (it serves as the oracle for the decomposition
// theorem).

namespace homlie {

using MorphismCochain = AlphaCochain;  // same carrier and flattening

/// Classical CE differential with adjoint coefficients on arity-k maps.
Mat classical_ce(const HomLieAlgebra& g, const Mat& part, int k);

struct CeRow {
    int degree = 0;
    Index dim_c = 0;
    Index dim_im = 0;
    Index dim_ker = 0;
    Index dim_h = 0;  // degree 1 computes Der(g); no Λ⁰ term in the complex
};

/// Ordinary CE cohomology (adjoint coefficients) for degrees 1..max_degree,
/// with the complex starting at Hom(g,g): degree one is Der(g).
std::vector<CeRow> classical_ce_cohomology(const HomLieAlgebra& g, int max_degree);

void require_lie(const HomLieAlgebra& g);

Index morphism_cochain_dim(const HomLieAlgebra& g, int n);

/// δ: Cⁿ(γ) → Cⁿ⁺¹(γ) in the flattened coordinates of MorphismCochain.
Mat morphism_differential(const HomLieAlgebra& g, const Mat& gamma, int n);

/// (ψ∘ν)(x_1..x_n) = Σ_{i<j} (-1)^{i+j-1} ψ([x_i,x_j], x_1,..x̂_i..x̂_j.., x_n).
Mat psi_circ_nu(const HomLieAlgebra& g, const Mat& psi, int n);

/// Φ(φ,ψ) = (γ^{n-1}φ + γ^{n-2}(ψ∘ν), γ^{n-2}ψ); chain map into C̃(g_γ).
MorphismCochain phi_comparison(const HomLieAlgebra& g, const Mat& gamma, const MorphismCochain& c);

/// Matrix of Φ in flattened coordinates.
Mat phi_matrix(const HomLieAlgebra& g, const Mat& gamma, int n);

struct MorphismRow {
    int degree = 0;
    Index dim_c = 0;
    Index dim_im = 0;
    Index dim_ker = 0;
    Index dim_h = 0;
};

std::vector<MorphismRow> morphism_cohomology_dims(const HomLieAlgebra& g, const Mat& gamma,
                                                  int max_degree);

struct DecompositionRow {
    int degree = 0;
    Index classical_adjusted = 0;  // H^n_CE with degree 1 ↦ Der(g), degree 0 ↦ 0
    Index alpha_type = 0;          // dim H̃ⁿ(g,g)
    bool matches = false;          // alpha_type == adjusted[n] + adjusted[n-1]
};

/// Checks H̃ⁿ = Hⁿ_CE ⊕ Hⁿ⁻¹_CE (with the Der substitution) for a Lie algebra.
std::vector<DecompositionRow> lie_as_homlie(const HomLieAlgebra& g, int max_degree);

struct WhiteheadData {
    Index dim_der_gamma = 0;  // H¹(γ) = Der_γ(g)
    Index dim_quotient = 0;   // H²(γ) = γ(Der)/∂_γ(Der)
};

/// Whitehead-theorem data for an invertible γ. The quotient requires
/// ∂_γ(Der) ⊆ γ(Der) (holds when γ is an automorphism).
WhiteheadData whitehead_data(const HomLieAlgebra& g, const Mat& gamma);

}  // namespace homlie
