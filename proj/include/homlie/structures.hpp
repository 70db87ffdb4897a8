#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/exterior.hpp"

namespace homlie {

/// A Hom-Lie algebra (g, ν, α): skew bracket as a 2→1 exterior map (so
/// skew-symmetry is structural) plus the structure map α. Multiplicativity
/// α∘ν = ν∘(α⊗α) is always part of validity.
struct HomLieAlgebra {
    int dim = 0;
    MultiMap bracket;  // 2 → 1, height (1,0)
    MultiMap alpha;    // 1 → 1, height (1,0)
    std::vector<std::string> basis;

    static HomLieAlgebra make(int n, const Mat& bracket_matrix, const Mat& alpha_matrix,
                              std::vector<std::string> labels = {});

    Vec bracket_vec(const Vec& u, const Vec& v) const;
    Mat ad(int i) const;            // matrix of [e_i, ·]
    Mat ad_vec(const Vec& u) const; // matrix of [u, ·]
};

struct HomLieCoalgebra {
    int dim = 0;
    MultiMap cobracket;  // 1 → 2, height (0,1)
    MultiMap beta;       // 1 → 1, height (0,1)

    static HomLieCoalgebra make(int n, const Mat& cobracket_matrix, const Mat& beta_matrix);
};

struct HomLieBialgebra {
    HomLieAlgebra algebra;
    HomLieCoalgebra coalgebra;
};

/// Raw bilinear multiplication μ stored as left-multiplication matrices:
/// mul[i] is the matrix of μ(e_i, ·).
struct HomAssociativeAlgebra {
    int dim = 0;
    std::vector<Mat> mul;
    Mat alpha;

    Vec mul_vec(const Vec& u, const Vec& v) const;
};

/// A Hom-Lie module (M, ρ, β): action[i] is the matrix of e_i · (·).
struct Representation {
    int algebra_dim = 0;
    int dim = 0;
    std::vector<Mat> action;
    Mat beta;

    Mat action_vec(const Vec& u) const;  // matrix of u · (·)
};

struct HomBimodule {
    int algebra_dim = 0;
    int dim = 0;
    std::vector<Mat> left;   // left[i]: e_i · m
    std::vector<Mat> right;  // right[i]: m · e_i
    Mat beta;
};

struct AxiomCheck {
    std::string axiom;
    bool pass = false;
    Rat max_residual = 0;
    std::vector<int> witness;  // 0-based basis indices, empty when passing
};

struct ValidationReport {
    bool ok = false;
    std::vector<AxiomCheck> checks;

    const AxiomCheck* find(const std::string& axiom) const;
};

Rat max_abs(const Mat& m);

ValidationReport validate_hom_lie(const HomLieAlgebra& g);
ValidationReport validate_hom_associative(const HomAssociativeAlgebra& a);
ValidationReport validate_representation(const HomLieAlgebra& g, const Representation& m);
ValidationReport validate_coalgebra(const HomLieCoalgebra& c);
ValidationReport validate_bimodule(const HomAssociativeAlgebra& a, const HomBimodule& m);
ValidationReport validate_bialgebra(const HomLieBialgebra& b);

/// The coalgebra seen as an algebra on the dual space (matrices transposed);
/// co-axioms are exactly the axioms of this dual.
HomLieAlgebra dual_algebra(const HomLieCoalgebra& c);

Representation adjoint_representation(const HomLieAlgebra& g);
Representation trivial_representation(const HomLieAlgebra& g, int dim, const Mat& beta);

/// Is γ an endomorphism of g? Returns the first offending basis pair if not.
std::optional<std::vector<int>> endomorphism_witness(const HomLieAlgebra& g, const Mat& gamma);

/// Yau twist (g, γ∘ν, γ∘α). Throws std::invalid_argument (with witness pair
/// in the message) when γ is not an endomorphism.
HomLieAlgebra yau_twist(const HomLieAlgebra& g, const Mat& gamma);

/// Commutator Hom-Lie algebra A_L of a Hom-associative algebra.
HomLieAlgebra commutator_lie(const HomAssociativeAlgebra& a);

/// Lie module structure a ·_L m = a·m − m·a on a bimodule over A, as a
/// representation of A_L.
Representation bimodule_to_lie_module(const HomAssociativeAlgebra& a, const HomBimodule& m);

/// Basis of Der(g): ψ[x,y] = [ψx,y] + [x,ψy]. Columns are column-major
/// flattened n×n matrices.
Mat derivations(const HomLieAlgebra& g);
/// Basis of α-Der(g): ψ[x,y] = [ψx,αy] + [αx,ψy].
Mat alpha_derivations(const HomLieAlgebra& g);

struct LieTypeObstruction {
    bool certified_not_lie_type = false;
    Vec witness;  // a vector in Im ν but not in Im α (when certified)
};

/// Sound, incomplete test: if Im ν ⊄ Im α the algebra cannot be a Yau twist
/// of a Lie algebra, and a witness vector is produced. Otherwise inconclusive.
LieTypeObstruction lie_type_obstruction(const HomLieAlgebra& g);

/// Extended adjoint action of u on Λ^j g:
/// ad_u(y_1∧…∧y_j) = Σ_t α(y_1)∧…∧[u,y_t]∧…∧α(y_j).
Mat extended_adjoint(const HomLieAlgebra& g, const Vec& u, int j);

enum class TwistMode { Bracket, Cobracket, Both };

std::optional<std::vector<int>> bialgebra_endomorphism_witness(const HomLieBialgebra& b, const Mat& gamma);

/// Twisted bialgebra (γν, δ, γα, β), (ν, δγ, α, γβ) or (γν, δγ, γα, γβ).
HomLieBialgebra bialgebra_yau_twist(const HomLieBialgebra& b, const Mat& gamma, TwistMode mode);

}  // namespace homlie
