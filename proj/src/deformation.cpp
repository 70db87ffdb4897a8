#include "homlie/deformation.hpp"

namespace homlie {

namespace {

Vec unit(int n, int i) {
    Vec e = Vec::Zero(n);
    e(i) = 1;
    return e;
}

Vec apply_bracket(const HomLieAlgebra& g, const Mat& nu, const Vec& u, const Vec& v) {
    return nu * wedge_coords(g.dim, 1, 1, u, v);
}

}  // namespace

const Mat& TruncatedDeformation::nu_at(int i) const {
    if (i == 0) return base.bracket.m;
    return nu_terms[static_cast<std::size_t>(i - 1)];
}

const Mat& TruncatedDeformation::alpha_at(int i) const {
    if (i == 0) return base.alpha.m;
    return alpha_terms[static_cast<std::size_t>(i - 1)];
}

TruncatedDeformation TruncatedDeformation::trivial(const HomLieAlgebra& g, int order) {
    TruncatedDeformation d;
    d.base = g;
    d.order = order;
    d.nu_terms.assign(static_cast<std::size_t>(order), Mat::Zero(g.dim, binom(g.dim, 2)));
    d.alpha_terms.assign(static_cast<std::size_t>(order), Mat::Zero(g.dim, g.dim));
    return d;
}

Mat residual_jacobi(const TruncatedDeformation& d, int n) {
    if (n > d.order) throw std::invalid_argument("residual_jacobi: order beyond truncation");
    const int ng = d.base.dim;
    const auto triples = subsets(ng, 3);
    Mat out = Mat::Zero(ng, binom(ng, 3));
    for (std::size_t c = 0; c < triples.size(); ++c) {
        Vec x = unit(ng, triples[c][0]), y = unit(ng, triples[c][1]), z = unit(ng, triples[c][2]);
        Vec col = Vec::Zero(ng);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                int k = n - i - j;
                const Mat& ni = d.nu_at(i);
                const Mat& aj = d.alpha_at(j);
                const Mat& nk = d.nu_at(k);
                col += apply_bracket(d.base, ni, aj * x, apply_bracket(d.base, nk, y, z));
                col += apply_bracket(d.base, ni, aj * y, apply_bracket(d.base, nk, z, x));
                col += apply_bracket(d.base, ni, aj * z, apply_bracket(d.base, nk, x, y));
            }
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

Mat residual_mult(const TruncatedDeformation& d, int n) {
    if (n > d.order) throw std::invalid_argument("residual_mult: order beyond truncation");
    const int ng = d.base.dim;
    const auto pairs = subsets(ng, 2);
    Mat out = Mat::Zero(ng, binom(ng, 2));
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        Vec x = unit(ng, pairs[c][0]), y = unit(ng, pairs[c][1]);
        Vec col = Vec::Zero(ng);
        for (int i = 0; i <= n; ++i) col += d.alpha_at(i) * apply_bracket(d.base, d.nu_at(n - i), x, y);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                int k = n - i - j;
                col -= apply_bracket(d.base, d.nu_at(i), Vec(d.alpha_at(j) * x), Vec(d.alpha_at(k) * y));
            }
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

bool valid_to_order(const TruncatedDeformation& d, int upto) {
    for (int n = 0; n <= upto; ++n)
        if (!is_zero(residual_jacobi(d, n)) || !is_zero(residual_mult(d, n))) return false;
    return true;
}

Obstruction obstruction_terms(const TruncatedDeformation& d, int n) {
    const int ng = d.base.dim;
    Obstruction ob;
    ob.r1 = Mat::Zero(ng, binom(ng, 3));
    ob.r2 = Mat::Zero(ng, binom(ng, 2));

    const auto triples = subsets(ng, 3);
    for (std::size_t c = 0; c < triples.size(); ++c) {
        Vec x = unit(ng, triples[c][0]), y = unit(ng, triples[c][1]), z = unit(ng, triples[c][2]);
        Vec col = Vec::Zero(ng);
        for (int i = 0; i <= n - 1; ++i)
            for (int j = 0; i + j <= n; ++j) {
                int k = n - i - j;
                if (j > n - 1 || k > n - 1) continue;
                col += apply_bracket(d.base, d.nu_at(i), Vec(d.alpha_at(j) * x),
                                     apply_bracket(d.base, d.nu_at(k), y, z));
                col += apply_bracket(d.base, d.nu_at(i), Vec(d.alpha_at(j) * y),
                                     apply_bracket(d.base, d.nu_at(k), z, x));
                col += apply_bracket(d.base, d.nu_at(i), Vec(d.alpha_at(j) * z),
                                     apply_bracket(d.base, d.nu_at(k), x, y));
            }
        ob.r1.col(static_cast<Index>(c)) = -col;
    }

    const auto pairs = subsets(ng, 2);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        Vec x = unit(ng, pairs[c][0]), y = unit(ng, pairs[c][1]);
        Vec col = Vec::Zero(ng);
        for (int i = 1; i <= n - 1; ++i)
            col -= d.alpha_at(i) * apply_bracket(d.base, d.nu_at(n - i), x, y);
        for (int i = 0; i <= n - 1; ++i)
            for (int j = 0; i + j <= n; ++j) {
                int k = n - i - j;
                if (j > n - 1 || k > n - 1) continue;
                col += apply_bracket(d.base, d.nu_at(i), Vec(d.alpha_at(j) * x), Vec(d.alpha_at(k) * y));
            }
        ob.r2.col(static_cast<Index>(c)) = col;
    }
    return ob;
}

Obstruction obstruction(const TruncatedDeformation& d, int n) {
    if (!valid_to_order(d, n - 1))
        throw std::invalid_argument("obstruction: deformation not valid to order n-1");
    return obstruction_terms(d, n);
}

AlphaCochain obstruction_cochain(const HomLieAlgebra& g, const Obstruction& ob) {
    AlphaCochain c;
    c.degree = 3;
    c.nu_part = ob.r1;
    c.alpha_part = ob.r2;
    return c;
}

AlphaCochain order_cochain(const TruncatedDeformation& d, int n) {
    AlphaCochain c;
    c.degree = 2;
    c.nu_part = d.nu_at(n);
    c.alpha_part = d.alpha_at(n);
    return c;
}

CocycleTheoremReport verify_cocycle_theorem(const TruncatedDeformation& d, int n) {
    if (!valid_to_order(d, n - 1))
        throw std::invalid_argument("verify_cocycle_theorem: deformation not valid to order n-1");
    Representation adj = adjoint_representation(d.base);
    CocycleTheoremReport rep;

    AlphaCochain first = order_cochain(d, 1);
    rep.first_order_cocycle = n >= 2 || is_zero(Mat(flatten(apply_total(d.base, adj, first))));

    Obstruction ob = obstruction_terms(d, n);
    AlphaCochain dn = apply_total(d.base, adj, order_cochain(d, n));
    bool identity_holds =
        is_zero(Mat(dn.nu_part - ob.r1 - residual_jacobi(d, n))) &&
        is_zero(Mat(dn.alpha_part - ob.r2 - residual_mult(d, n)));
    rep.order_identity = identity_holds;

    AlphaCochain obc = obstruction_cochain(d.base, ob);
    rep.obstruction_is_cocycle = is_zero(Mat(flatten(apply_total(d.base, adj, obc))));
    return rep;
}

std::optional<Mat> equivalence_step(const TruncatedDeformation& d, const TruncatedDeformation& d_prime,
                                    int n) {
    const int ng = d.base.dim;
    if (n > d.order || n > d_prime.order)
        throw std::invalid_argument("equivalence_step: order beyond truncation");
    if (!is_zero(Mat(d.base.bracket.m - d_prime.base.bracket.m)) ||
        !is_zero(Mat(d.base.alpha.m - d_prime.base.alpha.m)))
        throw std::invalid_argument("equivalence_step: different base algebras");
    for (int i = 1; i < n; ++i)
        if (!is_zero(Mat(d.nu_at(i) - d_prime.nu_at(i))) ||
            !is_zero(Mat(d.alpha_at(i) - d_prime.alpha_at(i))))
            throw std::invalid_argument("equivalence_step: deformations disagree below order n");

    AlphaCochain diff;
    diff.degree = 2;
    diff.nu_part = d.nu_at(n) - d_prime.nu_at(n);
    diff.alpha_part = d.alpha_at(n) - d_prime.alpha_at(n);
    Representation adj = adjoint_representation(d.base);
    if (!is_zero(Mat(flatten(apply_total(d.base, adj, diff)))))
        throw std::invalid_argument("equivalence_step: difference is not a 2-cocycle");

    auto x = solve(total_differential(d.base, adj, 1), flatten(diff));
    if (!x) return std::nullopt;
    Mat s(ng, ng);
    for (Index c = 0; c < ng; ++c)
        for (Index r = 0; r < ng; ++r) s(r, c) = (*x)(c * ng + r);
    return s;
}

TruncatedDeformation transport(const TruncatedDeformation& d_prime, const std::vector<Mat>& s_family) {
    const int ng = d_prime.base.dim;
    const int order = d_prime.order;
    if (s_family.empty() || !inverse(s_family[0]))
        throw std::invalid_argument("transport: S_0 must be invertible");
    auto s_at = [&](int i) -> Mat {
        return (i < static_cast<int>(s_family.size())) ? s_family[static_cast<std::size_t>(i)]
                                                       : Mat(Mat::Zero(ng, ng));
    };
    // T = S⁻¹ as a truncated series
    std::vector<Mat> t(static_cast<std::size_t>(order) + 1);
    t[0] = *inverse(s_family[0]);
    for (int k = 1; k <= order; ++k) {
        Mat acc = Mat::Zero(ng, ng);
        for (int i = 1; i <= k; ++i) acc += s_at(i) * t[static_cast<std::size_t>(k - i)];
        t[static_cast<std::size_t>(k)] = -t[0] * acc;
    }

    TruncatedDeformation out = TruncatedDeformation::trivial(d_prime.base, order);
    const auto pairs = subsets(ng, 2);
    for (int k = 1; k <= order; ++k) {
        // ν_k = Σ_{a+b+c+d=k} S_a ν'_b (T_c ⊗ T_d), α_k = Σ S_a α'_b T_c
        Mat nu_k = Mat::Zero(ng, binom(ng, 2));
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                for (int c = 0; a + b + c <= k; ++c) {
                    int dd = k - a - b - c;
                    for (std::size_t p = 0; p < pairs.size(); ++p) {
                        Vec u = t[static_cast<std::size_t>(c)] * unit(ng, pairs[p][0]);
                        Vec v = t[static_cast<std::size_t>(dd)] * unit(ng, pairs[p][1]);
                        nu_k.col(static_cast<Index>(p)) +=
                            s_at(a) * apply_bracket(d_prime.base, d_prime.nu_at(b), u, v);
                    }
                }
        Mat al_k = Mat::Zero(ng, ng);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b) al_k += s_at(a) * d_prime.alpha_at(b) * t[static_cast<std::size_t>(k - a - b)];
        out.nu_terms[static_cast<std::size_t>(k - 1)] = nu_k;
        out.alpha_terms[static_cast<std::size_t>(k - 1)] = al_k;
    }
    // order-zero sanity: the base is reproduced
    Mat nu0 = Mat::Zero(ng, binom(ng, 2));
    for (std::size_t p = 0; p < pairs.size(); ++p)
        nu0.col(static_cast<Index>(p)) = s_family[0] * apply_bracket(d_prime.base, d_prime.nu_at(0),
                                                                     Vec(t[0] * unit(ng, pairs[p][0])),
                                                                     Vec(t[0] * unit(ng, pairs[p][1])));
    if (!is_zero(Mat(nu0 - d_prime.base.bracket.m)) ||
        !is_zero(Mat(s_family[0] * d_prime.base.alpha.m * t[0] - d_prime.base.alpha.m)))
        throw std::invalid_argument("transport: S_0 does not fix the base structure");
    return out;
}

ExtensionResult extend_deformation(const HomLieAlgebra& g, const Mat& nu1, const Mat& alpha1, int order) {
    ExtensionResult res;
    res.deformation = TruncatedDeformation::trivial(g, order);
    res.deformation.nu_terms[0] = nu1;
    res.deformation.alpha_terms[0] = alpha1;
    Representation adj = adjoint_representation(g);
    AlphaCochain first = order_cochain(res.deformation, 1);
    if (!is_zero(Mat(flatten(apply_total(g, adj, first)))))
        throw std::invalid_argument("extend_deformation: (nu1, alpha1) is not a 2-cocycle");
    Mat d2 = total_differential(g, adj, 2);
    for (int k = 2; k <= order; ++k) {
        Obstruction ob = obstruction_terms(res.deformation, k);
        auto x = solve(d2, flatten(obstruction_cochain(g, ob)));
        if (!x) {
            res.failed_order = k;
            return res;
        }
        AlphaCochain c = unflatten(g, adj, 2, *x);
        res.deformation.nu_terms[static_cast<std::size_t>(k - 1)] = c.nu_part;
        res.deformation.alpha_terms[static_cast<std::size_t>(k - 1)] = c.alpha_part;
    }
    res.extended = valid_to_order(res.deformation, order);
    return res;
}

}  // namespace homlie
