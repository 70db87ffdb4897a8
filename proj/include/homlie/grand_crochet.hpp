#pragma once

#include <map>

#include "homlie/structures.hpp"

// The height-tracked circle product and grand crochet on Hom(Λ•g, Λ•g):
//   ψ∘φ = μ (ψ ⊗ α^ψ) (μ ⊗ id) (id ⊗ pr ⊗ id) (id ⊗ Δ) (α^φ ⊗ φ) Δ,
//   ⟦φ,ψ⟧ = φ∘ψ − (−1)^{deg φ · deg ψ} ψ∘φ,
// with α^φ = α^{h_α}β^{h_β} for the height of φ and deg the shifted degree
// (parity of src+tgt). Negative height powers are rejected unless the
// context explicitly allows inverting the structure maps.

namespace homlie {

/// Commuting structure maps α, β extended to Λ•g, with cached powers.
class StructureContext {
  public:
    StructureContext(int n, Mat alpha, Mat beta, bool allow_negative_heights = false);

    static StructureContext for_algebra(const HomLieAlgebra& g, bool allow_negative = false);
    static StructureContext for_bialgebra(const HomLieBialgebra& b, bool allow_negative = false);

    int dim() const { return n_; }
    const Mat& alpha() const { return alpha_; }
    const Mat& beta() const { return beta_; }

    /// Λ^k(α^{h.a} β^{h.b}); throws on negative heights without the opt-in
    /// (or when the map to invert is singular).
    const Mat& ext_height_power(int k, Height h) const;

  private:
    Mat base_power(Height h) const;

    int n_;
    Mat alpha_;
    Mat beta_;
    bool allow_negative_;
    mutable std::map<std::pair<long, long>, Mat> base_cache_;
    mutable std::map<std::tuple<int, long, long>, Mat> ext_cache_;
};

/// outer ∘ inner in the sense above (inner acts first).
MultiMap circle(const StructureContext& ctx, const MultiMap& outer, const MultiMap& inner);

int shifted_degree(const MultiMap& f);  // parity representative of src+tgt−2

MultiMap grand_bracket(const StructureContext& ctx, const MultiMap& f, const MultiMap& g);

/// ∂να f = α∘f − f∘α (α extended to the exterior powers); raises the
/// α-height by one.
MultiMap dna_operator(const StructureContext& ctx, const MultiMap& f);

/// Graded Jacobiator ⟦f,⟦g,h⟧⟧ − ⟦⟦f,g⟧,h⟧ − (−1)^{deg f deg g} ⟦g,⟦f,h⟧⟧.
MultiMap graded_jacobiator(const StructureContext& ctx, const MultiMap& f, const MultiMap& g,
                           const MultiMap& h);

/// The corrected explicit sum formula for outer∘inner on Hom(Λ•g, g):
/// (1/(l!(k−1)!)) Σ_σ sign(σ) outer(inner(x_{σ(1..l)}), α^{|inner|}(x_{σ(l+1..)})).
/// Agrees with the categorical definition (tested, not assumed).
MultiMap circle_sum_formula(const StructureContext& ctx, const MultiMap& outer, const MultiMap& inner);

/// Membership in B^{i,j} = Hom_α(Λ^i g, Λ^j g): commutes with α^⊗ and β^⊗.
bool b_compatible(const StructureContext& ctx, const MultiMap& f);

/// Basis of B^{i,j} as flattened (column-major) maps.
Mat b_basis(const StructureContext& ctx, int i, int j);

/// ν as a height-(1,0) MultiMap and δ as a height-(0,1) MultiMap.
MultiMap nu_map(const HomLieAlgebra& g);
MultiMap delta_map(const HomLieCoalgebra& c);

struct McVerdict {
    bool holds = false;
    Mat jacobi_component;  // target slot (3,1)
    Mat mixed_component;   // target slot (2,2)
    Mat cojacobi_component;  // target slot (1,3)
};

/// ⟦ν,ν⟧ = 0 for ν ∈ B^{2,1} (throws if ν is not compatible).
bool mc_check_homlie(const StructureContext& ctx, const MultiMap& nu);

/// ⟦ν+δ, ν+δ⟧ = 0 componentwise for ν ∈ B^{2,1}, δ ∈ B^{1,2}.
McVerdict mc_check_bialgebra(const StructureContext& ctx, const MultiMap& nu, const MultiMap& delta);

struct BComplexRow {
    int degree = 0;
    Index dim_b = 0;
    Index dim_im = 0;
    Index dim_ker = 0;
    Index dim_h = 0;
};

/// Cohomology of (B•, ⟦ν+δ, ·⟧) for a valid Hom-Lie bialgebra, where
/// Bⁱ = ⊕_j B^{j,i−j}.
std::vector<BComplexRow> bialg_cohomology_fixed_maps(const HomLieBialgebra& b, int max_total_degree);

}  // namespace homlie
