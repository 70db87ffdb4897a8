#pragma once

#include <array>
#include <random>
#include <vector>

#include "homlie/structures.hpp"

// Shared test algebras and deterministic random generators. Random sampling
// always goes through std::mt19937_64 with caller-fixed seeds.

namespace homlie::fixtures {

inline Mat mat3(std::initializer_list<std::initializer_list<int>> rows) {
    Mat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (int v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

/// Builds a bracket matrix from [e_i,e_j] coefficients: triples (i, j, k, c)
/// meaning [e_i,e_j] += c e_k, 0-based, i < j.
inline Mat bracket_matrix(int n, const std::vector<std::array<int, 4>>& entries) {
    Mat b = Mat::Zero(n, binom(n, 2));
    for (const auto& e : entries) b(e[2], subset_rank(n, {e[0], e[1]})) += e[3];
    return b;
}

/// First example of the worked computations: α = diag(1,1,0),
/// [x,y] = x, [y,z] = z, [x,z] = z. Not of Lie type.
inline HomLieAlgebra example_non_lie_type() {
    Mat b = bracket_matrix(3, {{0, 1, 0, 1}, {1, 2, 2, 1}, {0, 2, 2, 1}});
    Mat a = mat3({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    return HomLieAlgebra::make(3, b, a, {"x", "y", "z"});
}

/// The solvable Lie algebra [x,y] = x, [x,z] = x, [y,z] = y − z, α = id.
inline HomLieAlgebra example_lie() {
    Mat b = bracket_matrix(3, {{0, 1, 0, 1}, {0, 2, 0, 1}, {1, 2, 1, 1}, {1, 2, 2, -1}});
    return HomLieAlgebra::make(3, b, Mat::Identity(3, 3), {"x", "y", "z"});
}

/// γ(x) = 0, γ(y) = y, γ(z) = z: the endomorphism of example_lie used for its
/// Yau twist.
inline Mat example_gamma() { return mat3({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

inline HomLieAlgebra example_twisted() { return yau_twist(example_lie(), example_gamma()); }

/// sl2 over the rationals, basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = −2f.
inline HomLieAlgebra sl2() {
    Mat b = bracket_matrix(3, {{0, 1, 2, 1}, {0, 2, 0, -2}, {1, 2, 1, 2}});
    return HomLieAlgebra::make(3, b, Mat::Identity(3, 3), {"e", "f", "h"});
}

inline HomLieAlgebra heisenberg() {
    Mat b = bracket_matrix(3, {{0, 1, 2, 1}});
    return HomLieAlgebra::make(3, b, Mat::Identity(3, 3), {"x", "y", "z"});
}

inline HomLieAlgebra abelian(int n) {
    return HomLieAlgebra::make(n, Mat::Zero(n, binom(n, 2)), Mat::Identity(n, n));
}

/// dim 4, [e_i, e_4] = e_i for i = 1..3.
inline HomLieAlgebra solvable4() {
    Mat b = bracket_matrix(4, {{0, 3, 0, 1}, {1, 3, 1, 1}, {2, 3, 2, 1}});
    return HomLieAlgebra::make(4, b, Mat::Identity(4, 4));
}

/// dim 4 filiform nilpotent: [e_1,e_2] = e_3, [e_1,e_3] = e_4.
inline HomLieAlgebra nilpotent4() {
    Mat b = bracket_matrix(4, {{0, 1, 2, 1}, {0, 2, 3, 1}});
    return HomLieAlgebra::make(4, b, Mat::Identity(4, 4));
}

inline int rnd_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Mat random_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -2, int hi = 2) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rnd_int(rng, lo, hi);
    return m;
}

inline Mat random_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        Mat m = random_matrix(rng, n, n);
        if (determinant(m) != 0) return m;
    }
}

/// Transport of structure along a basis change: [u,v]' = P⁻¹[Pu, Pv],
/// α' = P⁻¹αP. Keeps every axiom intact.
inline HomLieAlgebra conjugate(const HomLieAlgebra& g, const Mat& p) {
    Mat pinv = *inverse(p);
    Mat b = pinv * g.bracket.m * ext_power(g.dim, 2, p);
    Mat a = pinv * g.alpha.m * p;
    return HomLieAlgebra::make(g.dim, b, a);
}

/// A Lie algebra from the catalog together with a nontrivial endomorphism,
/// both conjugated by a random basis change.
struct LiePair {
    HomLieAlgebra g;
    Mat endo;
};

inline LiePair random_lie_with_endo(std::mt19937_64& rng) {
    const int which = rnd_int(rng, 0, 5);
    HomLieAlgebra g = abelian(3);
    Mat endo;
    switch (which) {
        case 0: {
            g = abelian(rnd_int(rng, 2, 4));
            endo = random_matrix(rng, g.dim, g.dim);
            break;
        }
        case 1: {
            g = heisenberg();
            // γ(x), γ(y) free modulo the z-line; γ(z) forced to (ae−db)z
            int a = rnd_int(rng, -2, 2), d = rnd_int(rng, -2, 2), gg = rnd_int(rng, -2, 2);
            int b = rnd_int(rng, -2, 2), e = rnd_int(rng, -2, 2), h = rnd_int(rng, -2, 2);
            endo = mat3({{a, b, 0}, {d, e, 0}, {gg, h, a * e - d * b}});
            break;
        }
        case 2: {
            g = sl2();
            // unipotent automorphisms exp(ad_e), exp(ad_f) and a diagonal one
            Mat exp_e = mat3({{1, -1, -2}, {0, 1, 0}, {0, 1, 1}});
            Mat exp_f = mat3({{1, 0, 0}, {-1, 1, 2}, {-1, 0, 1}});
            Mat diag = Mat::Zero(3, 3);
            diag(0, 0) = 4;
            diag(1, 1) = Rat(1, 4);
            diag(2, 2) = 1;
            endo = Mat::Identity(3, 3);
            for (int k = rnd_int(rng, 1, 3); k > 0; --k) {
                int pick = rnd_int(rng, 0, 2);
                endo = endo * (pick == 0 ? exp_e : pick == 1 ? exp_f : diag);
            }
            break;
        }
        case 3: {
            g = example_lie();
            endo = rnd_int(rng, 0, 1) ? example_gamma() : Mat::Identity(3, 3);
            break;
        }
        case 4: {
            g = solvable4();
            endo = Mat::Zero(4, 4);
            endo(0, 0) = rnd_int(rng, -2, 2);
            endo(1, 1) = rnd_int(rng, -2, 2);
            endo(2, 2) = rnd_int(rng, -2, 2);
            endo(3, 3) = 1;
            break;
        }
        default: {
            g = nilpotent4();
            int a = rnd_int(rng, -2, 2), b = rnd_int(rng, -2, 2);
            endo = Mat::Zero(4, 4);
            endo(0, 0) = a;
            endo(1, 1) = b;
            endo(2, 2) = Rat(a) * b;
            endo(3, 3) = Rat(a) * a * b;
            break;
        }
    }
    Mat p = random_invertible(rng, g.dim);
    Mat pinv = *inverse(p);
    LiePair out{conjugate(g, p), pinv * endo * p};
    return out;
}

/// Random Hom-Lie algebra: Yau twist of a random catalog Lie algebra by a
/// random endomorphism.
inline HomLieAlgebra random_hom_lie(std::mt19937_64& rng) {
    LiePair lp = random_lie_with_endo(rng);
    return yau_twist(lp.g, lp.endo);
}

}  // namespace homlie::fixtures
