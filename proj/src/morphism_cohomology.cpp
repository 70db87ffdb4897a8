#include "homlie/morphism_cohomology.hpp"

namespace homlie {

namespace {

Vec unit(int n, int i) {
    Vec e = Vec::Zero(n);
    e(i) = 1;
    return e;
}

int pm(long k) { return (k % 2 == 0) ? 1 : -1; }

Mat mat_pow(const Mat& a, int k) {
    Mat out = Mat::Identity(a.rows(), a.cols());
    for (int i = 0; i < k; ++i) out = out * a;
    return out;
}

Vec flatten_map(const Mat& f) {
    Vec v(f.size());
    for (Index c = 0; c < f.cols(); ++c)
        for (Index r = 0; r < f.rows(); ++r) v(c * f.rows() + r) = f(r, c);
    return v;
}

}  // namespace

void require_lie(const HomLieAlgebra& g) {
    if (!is_zero(Mat(g.alpha.m - Mat::Identity(g.dim, g.dim))))
        throw std::invalid_argument("expected a Lie algebra (alpha = id)");
    if (!validate_hom_lie(g).ok) throw std::invalid_argument("expected a valid Lie algebra");
}

// Classical CE differential where x acts through [t(x), ·] for a twist t.
static Mat classical_ce_twisted(const HomLieAlgebra& g, const Mat& twist, const Mat& part, int k) {
    const int n = g.dim;
    const auto out_sets = subsets(n, k + 1);
    Mat out = Mat::Zero(n, binom(n, k + 1));
    for (std::size_t c = 0; c < out_sets.size(); ++c) {
        const Subset& s = out_sets[c];
        Vec col = Vec::Zero(n);
        for (int i = 0; i < k + 1; ++i) {
            Subset rest;
            for (int t = 0; t < k + 1; ++t)
                if (t != i) rest.push_back(s[static_cast<std::size_t>(t)]);
            col += Rat(pm(i)) * g.bracket_vec(Vec(twist * unit(n, s[static_cast<std::size_t>(i)])),
                                              Vec(part.col(subset_rank(n, rest))));
        }
        for (int i = 0; i < k + 1; ++i)
            for (int j = i + 1; j < k + 1; ++j) {
                Subset rest;
                for (int t = 0; t < k + 1; ++t)
                    if (t != i && t != j) rest.push_back(s[static_cast<std::size_t>(t)]);
                Vec w = g.bracket_vec(unit(n, s[static_cast<std::size_t>(i)]), unit(n, s[static_cast<std::size_t>(j)]));
                Vec rest_e = Vec::Zero(binom(n, k - 1));
                rest_e(subset_rank(n, rest)) = 1;
                col += Rat(pm(i + j)) * (part * wedge_coords(n, 1, k - 1, w, rest_e));
            }
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

Mat classical_ce(const HomLieAlgebra& g, const Mat& part, int k) {
    return classical_ce_twisted(g, Mat::Identity(g.dim, g.dim), part, k);
}

namespace {

// Operator matrix of the classical CE differential on flattened arity-k maps.
Mat classical_ce_matrix(const HomLieAlgebra& g, int k) {
    const int n = g.dim;
    const Index cols = binom(n, k);
    Mat d(n * binom(n, k + 1), n * cols);
    for (Index j = 0; j < n * cols; ++j) {
        Mat part = Mat::Zero(n, cols);
        part(j % n, j / n) = 1;
        d.col(j) = flatten_map(classical_ce(g, part, k));
    }
    return d;
}

}  // namespace

std::vector<CeRow> classical_ce_cohomology(const HomLieAlgebra& g, int max_degree) {
    require_lie(g);
    std::vector<CeRow> rows;
    Mat prev;
    for (int k = 1; k <= max_degree; ++k) {
        Mat d = classical_ce_matrix(g, k);
        CeRow row;
        row.degree = k;
        row.dim_c = d.cols();
        row.dim_im = rank(d);
        row.dim_ker = row.dim_c - row.dim_im;
        row.dim_h = row.dim_ker - ((k == 1) ? 0 : rank(prev));
        rows.push_back(row);
        prev = std::move(d);
    }
    return rows;
}

Index morphism_cochain_dim(const HomLieAlgebra& g, int n) {
    return g.dim * (binom(g.dim, n) + ((n >= 2) ? binom(g.dim, n - 1) : 0));
}

Mat morphism_differential(const HomLieAlgebra& g, const Mat& gamma, int n) {
    require_lie(g);
    if (endomorphism_witness(g, gamma))
        throw std::invalid_argument("morphism_differential: gamma is not an endomorphism");
    const int ng = g.dim;
    const Index phi_cols = ng * binom(ng, n);
    const Index psi_cols = (n >= 2) ? ng * binom(ng, n - 1) : 0;
    const Index out_phi = ng * binom(ng, n + 1);
    const Index out_psi = ng * binom(ng, n);
    Mat d = Mat::Zero(out_phi + out_psi, phi_cols + psi_cols);
    // φ-columns: (∂_CE φ, ∂_γ φ)
    for (Index j = 0; j < phi_cols; ++j) {
        Mat phi = Mat::Zero(ng, binom(ng, n));
        phi(j % ng, j / ng) = 1;
        d.block(0, j, out_phi, 1) = flatten_map(classical_ce(g, phi, n));
        Mat dg = gamma * phi - phi * ext_power(ng, n, gamma);
        d.block(out_phi, j, out_psi, 1) = flatten_map(dg);
    }
    // ψ-columns: (0, −∂_CE ψ) where the ψ-side action is x·m = [γ(x), m]
    for (Index j = 0; j < psi_cols; ++j) {
        Mat psi = Mat::Zero(ng, binom(ng, n - 1));
        psi(j % ng, j / ng) = 1;
        d.block(out_phi, phi_cols + j, out_psi, 1) =
            -flatten_map(classical_ce_twisted(g, gamma, psi, n - 1));
    }
    return d;
}

Mat psi_circ_nu(const HomLieAlgebra& g, const Mat& psi, int n) {
    const int ng = g.dim;
    const auto out_sets = subsets(ng, n);
    Mat out = Mat::Zero(ng, binom(ng, n));
    for (std::size_t c = 0; c < out_sets.size(); ++c) {
        const Subset& s = out_sets[c];
        Vec col = Vec::Zero(ng);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Subset rest;
                for (int t = 0; t < n; ++t)
                    if (t != i && t != j) rest.push_back(s[static_cast<std::size_t>(t)]);
                Vec w = g.bracket_vec(unit(ng, s[static_cast<std::size_t>(i)]), unit(ng, s[static_cast<std::size_t>(j)]));
                Vec rest_e = Vec::Zero(binom(ng, n - 2));
                rest_e(subset_rank(ng, rest)) = 1;
                col += Rat(pm(i + j + 1)) * (psi * wedge_coords(ng, 1, n - 2, w, rest_e));
            }
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

MorphismCochain phi_comparison(const HomLieAlgebra& g, const Mat& gamma, const MorphismCochain& c) {
    const int n = c.degree;
    MorphismCochain out;
    out.degree = n;
    if (n == 1) {
        out.nu_part = c.nu_part;
        out.alpha_part = c.alpha_part;  // zero columns
        return out;
    }
    Mat gn1 = mat_pow(gamma, n - 1);
    Mat gn2 = mat_pow(gamma, n - 2);
    out.nu_part = gn1 * c.nu_part + gn2 * psi_circ_nu(g, c.alpha_part, n);
    out.alpha_part = gn2 * c.alpha_part;
    return out;
}

Mat phi_matrix(const HomLieAlgebra& g, const Mat& gamma, int n) {
    const Index dim = morphism_cochain_dim(g, n);
    Mat out(dim, dim);
    Representation adj = adjoint_representation(g);  // shapes only
    for (Index j = 0; j < dim; ++j) {
        Vec e = Vec::Zero(dim);
        e(j) = 1;
        out.col(j) = flatten(phi_comparison(g, gamma, unflatten(g, adj, n, e)));
    }
    return out;
}

std::vector<MorphismRow> morphism_cohomology_dims(const HomLieAlgebra& g, const Mat& gamma,
                                                  int max_degree) {
    std::vector<MorphismRow> rows;
    Mat prev;
    for (int n = 1; n <= max_degree; ++n) {
        Mat d = morphism_differential(g, gamma, n);
        MorphismRow row;
        row.degree = n;
        row.dim_c = d.cols();
        row.dim_im = rank(d);
        row.dim_ker = row.dim_c - row.dim_im;
        row.dim_h = row.dim_ker - ((n == 1) ? 0 : rank(prev));
        rows.push_back(row);
        prev = std::move(d);
    }
    return rows;
}

std::vector<DecompositionRow> lie_as_homlie(const HomLieAlgebra& g, int max_degree) {
    require_lie(g);
    std::vector<CeRow> ce = classical_ce_cohomology(g, max_degree);
    Representation adj = adjoint_representation(g);
    CohomologyReport at = cohomology(g, adj, max_degree);
    std::vector<DecompositionRow> rows;
    for (int n = 1; n <= max_degree; ++n) {
        DecompositionRow row;
        row.degree = n;
        row.classical_adjusted = ce[static_cast<std::size_t>(n - 1)].dim_h;
        row.alpha_type = at.rows[static_cast<std::size_t>(n - 1)].dim_h;
        Index below = (n == 1) ? 0 : ce[static_cast<std::size_t>(n - 2)].dim_h;
        row.matches = (row.alpha_type == row.classical_adjusted + below);
        rows.push_back(row);
    }
    return rows;
}

WhiteheadData whitehead_data(const HomLieAlgebra& g, const Mat& gamma) {
    require_lie(g);
    if (!inverse(gamma)) throw std::invalid_argument("whitehead_data: gamma must be invertible");
    const int n = g.dim;
    Mat der = derivations(g);  // n² × d
    const Index d = der.cols();

    auto as_matrix = [&](Index j) {
        Mat m(n, n);
        for (Index c = 0; c < n; ++c)
            for (Index r = 0; r < n; ++r) m(r, c) = der(c * n + r, j);
        return m;
    };

    Mat commute(static_cast<Index>(n) * n, d);   // γD − Dγ per derivation
    Mat gamma_der(static_cast<Index>(n) * n, d);  // γD
    for (Index j = 0; j < d; ++j) {
        Mat dm = as_matrix(j);
        commute.col(j) = flatten_map(Mat(gamma * dm - dm * gamma));
        gamma_der.col(j) = flatten_map(Mat(gamma * dm));
    }
    WhiteheadData out;
    out.dim_der_gamma = kernel_basis(commute).cols();
    out.dim_quotient = quotient_dim(gamma_der, commute);
    return out;
}

}  // namespace homlie
