#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homlie/morphism_cohomology.hpp"
#include "fixtures.hpp"

using namespace homlie;
using namespace homlie::fixtures;

namespace {

Vec flatten_map(const Mat& f) {
    Vec v(f.size());
    for (Index c = 0; c < f.cols(); ++c)
        for (Index r = 0; r < f.rows(); ++r) v(c * f.rows() + r) = f(r, c);
    return v;
}

}  // namespace

TEST_CASE("morphism differential squares to zero") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 15; ++t) {
        LiePair lp = random_lie_with_endo(rng);
        for (int n = 1; n <= lp.g.dim; ++n) {
            Mat d1 = morphism_differential(lp.g, lp.endo, n);
            Mat d2 = morphism_differential(lp.g, lp.endo, n + 1);
            CHECK(is_zero(Mat(d2 * d1)));
        }
    }
    // §5 Lie algebra with its γ, explicitly
    HomLieAlgebra g = example_lie();
    for (int n = 1; n <= 3; ++n)
        CHECK(is_zero(Mat(morphism_differential(g, example_gamma(), n + 1) *
                          morphism_differential(g, example_gamma(), n))));
}

TEST_CASE("gamma = id and gamma = 0 degenerate correctly") {
    HomLieAlgebra g = example_lie();
    // γ = id: ∂_γ = 0, the complex is two shifted copies of classical CE
    auto rows = morphism_cohomology_dims(g, Mat(Mat::Identity(3, 3)), 4);
    auto ce = classical_ce_cohomology(g, 4);
    for (int n = 1; n <= 4; ++n) {
        Index below = (n == 1) ? 0 : ce[static_cast<std::size_t>(n - 2)].dim_h;
        CHECK(rows[static_cast<std::size_t>(n - 1)].dim_h ==
              ce[static_cast<std::size_t>(n - 1)].dim_h + below);
    }
    // γ = 0: both ∂_γ terms contain γ, so the γ-block vanishes
    for (int n = 1; n <= 3; ++n) {
        Mat d = morphism_differential(g, Mat(Mat::Zero(3, 3)), n);
        const Index phi_cols = 3 * binom(3, n);
        const Index out_phi = 3 * binom(3, n + 1);
        CHECK(is_zero(Mat(d.block(out_phi, 0, d.rows() - out_phi, phi_cols))));
    }
}

TEST_CASE("Phi is a chain map, also for singular gamma") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 15; ++t) {
        LiePair lp = random_lie_with_endo(rng);
        HomLieAlgebra tw = yau_twist(lp.g, lp.endo);
        Representation adj = adjoint_representation(tw);
        for (int n = 1; n <= lp.g.dim; ++n) {
            Mat lhs = phi_matrix(lp.g, lp.endo, n + 1) * morphism_differential(lp.g, lp.endo, n);
            Mat rhs = total_differential(tw, adj, n) * phi_matrix(lp.g, lp.endo, n);
            CHECK(is_zero(Mat(lhs - rhs)));
        }
    }
    HomLieAlgebra g = example_lie();
    HomLieAlgebra tw = example_twisted();
    Representation adj = adjoint_representation(tw);
    for (int n = 1; n <= 4; ++n) {
        Mat lhs = phi_matrix(g, example_gamma(), n + 1) * morphism_differential(g, example_gamma(), n);
        Mat rhs = total_differential(tw, adj, n) * phi_matrix(g, example_gamma(), n);
        CHECK(is_zero(Mat(lhs - rhs)));
    }
}

TEST_CASE("Phi identity case") {
    HomLieAlgebra g = sl2();
    Representation adj = adjoint_representation(g);
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 3; ++n) {
        Vec e = random_matrix(rng, static_cast<int>(morphism_cochain_dim(g, n)), 1);
        MorphismCochain c = unflatten(g, adj, n, e);
        c.alpha_part.setZero();
        MorphismCochain img = phi_comparison(g, Mat(Mat::Identity(3, 3)), c);
        CHECK(is_zero(Mat(img.nu_part - c.nu_part)));
        CHECK(is_zero(img.alpha_part));
    }
}

TEST_CASE("invertible gamma: Phi bijective, cohomologies agree") {
    std::mt19937_64 rng(303);
    int done = 0;
    while (done < 8) {
        LiePair lp = random_lie_with_endo(rng);
        if (determinant(lp.endo) == 0) continue;
        ++done;
        HomLieAlgebra tw = yau_twist(lp.g, lp.endo);
        Representation adj = adjoint_representation(tw);
        auto mrows = morphism_cohomology_dims(lp.g, lp.endo, lp.g.dim + 1);
        CohomologyReport arep = cohomology(tw, adj, lp.g.dim + 1);
        for (std::size_t i = 0; i < mrows.size(); ++i) {
            Mat phi = phi_matrix(lp.g, lp.endo, static_cast<int>(i) + 1);
            CHECK(rank(phi) == phi.cols());
            CHECK(mrows[i].dim_h == arep.rows[i].dim_h);
        }
    }
}

TEST_CASE("twisted example: high-degree cocycles of g die or miss under Phi") {
    // degree ≥ 2 classical cocycles of g are either not γ-compatible or their
    // Φ-images are coboundaries of g_γ: they contribute nothing to H̃(g_γ)
    HomLieAlgebra g = example_lie();
    Mat gamma = example_gamma();
    HomLieAlgebra tw = example_twisted();
    Representation adj = adjoint_representation(tw);
    const int ng = 3;
    for (int n = 2; n <= 3; ++n) {
        const Index cols = binom(ng, n);
        Mat d(ng * binom(ng, n + 1), ng * cols);
        Mat compat(ng * cols, ng * cols);
        for (Index j = 0; j < ng * cols; ++j) {
            Mat phi = Mat::Zero(ng, cols);
            phi(j % ng, j / ng) = 1;
            d.col(j) = flatten_map(classical_ce(g, phi, n));
            compat.col(j) = flatten_map(Mat(gamma * phi - phi * ext_power(ng, n, gamma)));
        }
        Mat z = kernel_basis(d);
        Mat v = z * kernel_basis(Mat(compat * z));  // γ-compatible cocycles
        CHECK(v.cols() > 0);
        Mat b = total_differential(tw, adj, n - 1);
        Mat gp = Mat::Identity(ng, ng);
        for (int i = 0; i < n - 1; ++i) gp = gp * gamma;
        Mat joint(b.rows(), b.cols() + v.cols());
        joint.leftCols(b.cols()) = b;
        for (Index j = 0; j < v.cols(); ++j) {
            AlphaCochain c = zero_cochain(tw, adj, n);
            for (Index t = 0; t < v.rows(); ++t) c.nu_part(t % ng, t / ng) = v(t, j);
            c.nu_part = gp * c.nu_part;
            CHECK(is_zero(Mat(flatten(apply_total(tw, adj, c)))));
            joint.col(b.cols() + j) = flatten(c);
        }
        CHECK(rank(joint) == rank(b));
    }
}

TEST_CASE("Lie-as-Hom-Lie decomposition") {
    // worked Lie example: H̃ = (6, 9=3+6, 3=0+3, 0)
    auto rows = lie_as_homlie(example_lie(), 4);
    std::vector<Index> expected_ce = {6, 3, 0, 0};
    std::vector<Index> expected_alpha = {6, 9, 3, 0};
    for (int i = 0; i < 4; ++i) {
        CHECK(rows[static_cast<std::size_t>(i)].classical_adjusted == expected_ce[static_cast<std::size_t>(i)]);
        CHECK(rows[static_cast<std::size_t>(i)].alpha_type == expected_alpha[static_cast<std::size_t>(i)]);
        CHECK(rows[static_cast<std::size_t>(i)].matches);
    }

    // sl2: H̃ dims (3,3,0,0), Der(sl2) = 3, Whitehead vanishing above
    auto srows = lie_as_homlie(sl2(), 4);
    std::vector<Index> sexpected = {3, 3, 0, 0};
    for (int i = 0; i < 4; ++i) {
        CHECK(srows[static_cast<std::size_t>(i)].alpha_type == sexpected[static_cast<std::size_t>(i)]);
        CHECK(srows[static_cast<std::size_t>(i)].matches);
    }

    // abelian dim 1: H̃¹ = Hom(g,g) = 1
    auto arows = lie_as_homlie(abelian(1), 2);
    CHECK(arows[0].alpha_type == 1);
    CHECK(arows[0].matches);

    std::mt19937_64 rng(404);
    for (int t = 0; t < 5; ++t) {
        HomLieAlgebra g = conjugate(heisenberg(), random_invertible(rng, 3));
        for (const auto& row : lie_as_homlie(g, 4)) CHECK(row.matches);
    }
}

TEST_CASE("whitehead data") {
    CHECK(whitehead_data(sl2(), Mat(Mat::Identity(3, 3))).dim_der_gamma == 3);
    CHECK(whitehead_data(sl2(), Mat(Mat::Identity(3, 3))).dim_quotient == 3);

    HomLieAlgebra ab = abelian(3);
    WhiteheadData wa = whitehead_data(ab, Mat(Mat::Identity(3, 3)));
    CHECK(wa.dim_der_gamma == 9);
    CHECK(wa.dim_quotient == 9);

    // diagonal automorphism of sl2: Der_γ is the Cartan line
    Mat diag = Mat::Zero(3, 3);
    diag(0, 0) = 4;
    diag(1, 1) = Rat(1, 4);
    diag(2, 2) = 1;
    WhiteheadData wd = whitehead_data(sl2(), diag);
    CHECK(wd.dim_der_gamma == 1);
    CHECK(wd.dim_quotient == 1);

    // the morphism cohomology agrees: H¹ = Der_γ, H² = quotient, 0 above
    auto rows = morphism_cohomology_dims(sl2(), diag, 4);
    CHECK(rows[0].dim_h == wd.dim_der_gamma);
    CHECK(rows[1].dim_h == wd.dim_quotient);
    CHECK(rows[2].dim_h == 0);
    CHECK(rows[3].dim_h == 0);

    auto idrows = morphism_cohomology_dims(sl2(), Mat(Mat::Identity(3, 3)), 4);
    CHECK(idrows[0].dim_h == 3);
    CHECK(idrows[1].dim_h == 3);
    CHECK(idrows[2].dim_h == 0);
    CHECK(idrows[3].dim_h == 0);

    CHECK_THROWS_AS(whitehead_data(sl2(), Mat(Mat::Zero(3, 3))), std::invalid_argument);
}
