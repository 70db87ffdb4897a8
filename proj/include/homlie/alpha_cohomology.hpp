#pragma once

#include "homlie/structures.hpp"

// The α-type Chevalley-Eilenberg complex C̃ⁿ(g,M) = Hom(Λⁿg,M) ⊕ Hom(Λⁿ⁻¹g,M)
// with C¹ = Hom(g,M) ⊕ 0, its four differential components, the total
// differential and full cohomology computation with representatives.
//
// Formula conventions (signs from the permutation of the arguments, 1-based):
//   (∂νν φ)(x_1..x_{n+1}) = Σ_i (-1)^{i+1} α^{n-1}(x_i)·φ(..x̂_i..)
//                         + Σ_{i<j} (-1)^{i+j} φ([x_i,x_j], α(x_1),..x̂_i..x̂_j.., α(x_{n+1}))
//   (∂αα ψ) identical with ψ of arity n-1 and the same exponent n-1,
//   (∂να φ) = β∘φ − φ∘Λα^{⊗n},
//   (∂αν ψ)(x_1..x_{n+1}) = Σ_{i<j} (-1)^{i+j-1} [α^{n-2}(x_i),α^{n-2}(x_j)]·ψ(..x̂_i..x̂_j..),
//   ∂(φ,ψ) = (∂νν φ − ∂αν ψ, ∂να φ − ∂αα ψ).

namespace homlie {

struct AlphaCochain {
    int degree = 1;  // n ≥ 1
    Mat nu_part;     // dim M × C(dim g, n)
    Mat alpha_part;  // dim M × C(dim g, n-1); zero columns at n = 1 (C¹_α = {0})
};

Index cochain_dim(const HomLieAlgebra& g, const Representation& m, int n);
AlphaCochain zero_cochain(const HomLieAlgebra& g, const Representation& m, int n);
Vec flatten(const AlphaCochain& c);
AlphaCochain unflatten(const HomLieAlgebra& g, const Representation& m, int n, const Vec& v);

Mat apply_dnn(const HomLieAlgebra& g, const Representation& m, const Mat& phi, int n);
Mat apply_daa(const HomLieAlgebra& g, const Representation& m, const Mat& psi, int n);
Mat apply_dna(const HomLieAlgebra& g, const Representation& m, const Mat& phi, int n);
Mat apply_dan(const HomLieAlgebra& g, const Representation& m, const Mat& psi, int n);

/// Independent second code path: the totally symmetrized forms of the
/// differentials, one orbit-normalized term per permutation.
Mat apply_dnn_symmetrized(const HomLieAlgebra& g, const Representation& m, const Mat& phi, int n);
Mat apply_daa_symmetrized(const HomLieAlgebra& g, const Representation& m, const Mat& psi, int n);
Mat apply_dan_symmetrized(const HomLieAlgebra& g, const Representation& m, const Mat& psi, int n);

AlphaCochain apply_total(const HomLieAlgebra& g, const Representation& m, const AlphaCochain& c);

/// Matrix of ∂: C̃ⁿ → C̃ⁿ⁺¹ in flattened coordinates (nu block then alpha
/// block, each column-major).
Mat total_differential(const HomLieAlgebra& g, const Representation& m, int n);

struct CohomologyRow {
    int degree = 0;
    Index dim_c = 0;
    Index dim_im = 0;   // rank of ∂ⁿ (out of degree n)
    Index dim_ker = 0;  // nullity of ∂ⁿ
    Index dim_h = 0;    // dim ker ∂ⁿ − dim im ∂ⁿ⁻¹
};

struct CohomologyReport {
    std::vector<CohomologyRow> rows;                      // degrees 1..max_degree
    std::vector<std::vector<AlphaCochain>> representatives;  // cocycle basis of H̃ per degree
};

CohomologyReport cohomology(const HomLieAlgebra& g, const Representation& m, int max_degree);
std::vector<AlphaCochain> representative_cocycles(const HomLieAlgebra& g, const Representation& m, int n);

/// Does the class of c lie in the span of the given representative classes
/// (modulo coboundaries)? Requires c to be a cocycle.
bool in_cohomology_span(const HomLieAlgebra& g, const Representation& m,
                        const std::vector<AlphaCochain>& reps, const AlphaCochain& c);

struct SubcomplexRow {
    int degree = 0;
    Index dim_c = 0;
    Index dim_im = 0;
    Index dim_ker = 0;
    Index dim_h = 0;
};

/// Cohomology of the classical subcomplex {φ | α∘φ = φ∘α^{⊗n}} under ∂νν
/// alone (adjoint coefficients).
std::vector<SubcomplexRow> classical_subcomplex_cohomology(const HomLieAlgebra& g, int max_degree);

}  // namespace homlie
