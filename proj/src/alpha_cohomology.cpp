#include "homlie/alpha_cohomology.hpp"

#include <algorithm>

namespace homlie {

namespace {

Mat mat_pow(const Mat& a, int k) {
    Mat out = Mat::Identity(a.rows(), a.cols());
    for (int i = 0; i < k; ++i) out = out * a;
    return out;
}

Vec unit(int n, int i) {
    Vec e = Vec::Zero(n);
    e(i) = 1;
    return e;
}

int pm(long k) { return (k % 2 == 0) ? 1 : -1; }

// Evaluate a part matrix (dim M × C(n, arity)) on an arbitrary tuple of basis
// indices, resolving the permutation sign.
Vec eval_on_tuple(const Mat& part, int n, const std::vector<int>& tuple) {
    auto [sign, sorted] = sort_sign(tuple);
    if (sign == 0) return Vec::Zero(part.rows());
    return Rat(sign) * part.col(subset_rank(n, sorted));
}

// Shared shape of ∂νν and ∂αα: Chevalley-Eilenberg-type differential with
// α^exponent in the action term and α on the surviving bracket-term slots.
Mat ce_like(const HomLieAlgebra& g, const Representation& m, const Mat& part, int arity, int exponent) {
    const int n = g.dim;
    Mat ae = mat_pow(g.alpha.m, exponent);
    Mat lam = ext_power(n, arity - 1, g.alpha.m);
    const auto out_sets = subsets(n, arity + 1);
    Mat out = Mat::Zero(m.dim, binom(n, arity + 1));
    for (std::size_t c = 0; c < out_sets.size(); ++c) {
        const Subset& s = out_sets[c];
        Vec col = Vec::Zero(m.dim);
        for (int i = 0; i < arity + 1; ++i) {
            Subset rest;
            for (int t = 0; t < arity + 1; ++t)
                if (t != i) rest.push_back(s[static_cast<std::size_t>(t)]);
            col += Rat(pm(i)) * (m.action_vec(ae * unit(n, s[static_cast<std::size_t>(i)])) *
                                 part.col(subset_rank(n, rest)));
        }
        for (int i = 0; i < arity + 1; ++i)
            for (int j = i + 1; j < arity + 1; ++j) {
                Subset rest;
                for (int t = 0; t < arity + 1; ++t)
                    if (t != i && t != j) rest.push_back(s[static_cast<std::size_t>(t)]);
                Vec w = g.bracket_vec(unit(n, s[static_cast<std::size_t>(i)]), unit(n, s[static_cast<std::size_t>(j)]));
                Vec arg = wedge_coords(n, 1, arity - 1, w, lam.col(subset_rank(n, rest)));
                col += Rat(pm(i + j)) * (part * arg);
            }
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

}  // namespace

Index cochain_dim(const HomLieAlgebra& g, const Representation& m, int n) {
    Index nu = binom(g.dim, n);
    Index al = (n >= 2) ? binom(g.dim, n - 1) : 0;
    return m.dim * (nu + al);
}

AlphaCochain zero_cochain(const HomLieAlgebra& g, const Representation& m, int n) {
    AlphaCochain c;
    c.degree = n;
    c.nu_part = Mat::Zero(m.dim, binom(g.dim, n));
    c.alpha_part = Mat::Zero(m.dim, (n >= 2) ? binom(g.dim, n - 1) : 0);
    return c;
}

Vec flatten(const AlphaCochain& c) {
    Vec v(c.nu_part.size() + c.alpha_part.size());
    Index k = 0;
    for (Index col = 0; col < c.nu_part.cols(); ++col)
        for (Index r = 0; r < c.nu_part.rows(); ++r) v(k++) = c.nu_part(r, col);
    for (Index col = 0; col < c.alpha_part.cols(); ++col)
        for (Index r = 0; r < c.alpha_part.rows(); ++r) v(k++) = c.alpha_part(r, col);
    return v;
}

AlphaCochain unflatten(const HomLieAlgebra& g, const Representation& m, int n, const Vec& v) {
    AlphaCochain c = zero_cochain(g, m, n);
    if (v.size() != c.nu_part.size() + c.alpha_part.size())
        throw std::invalid_argument("unflatten: coordinate length mismatch");
    Index k = 0;
    for (Index col = 0; col < c.nu_part.cols(); ++col)
        for (Index r = 0; r < c.nu_part.rows(); ++r) c.nu_part(r, col) = v(k++);
    for (Index col = 0; col < c.alpha_part.cols(); ++col)
        for (Index r = 0; r < c.alpha_part.rows(); ++r) c.alpha_part(r, col) = v(k++);
    return c;
}

Mat apply_dnn(const HomLieAlgebra& g, const Representation& m, const Mat& phi, int n) {
    if (n < 1) throw std::invalid_argument("apply_dnn: degree must be >= 1");
    return ce_like(g, m, phi, n, n - 1);
}

Mat apply_daa(const HomLieAlgebra& g, const Representation& m, const Mat& psi, int n) {
    if (n < 2) throw std::invalid_argument("apply_daa: degree must be >= 2");
    return ce_like(g, m, psi, n - 1, n - 1);
}

Mat apply_dna(const HomLieAlgebra& g, const Representation& m, const Mat& phi, int n) {
    if (n < 1) throw std::invalid_argument("apply_dna: degree must be >= 1");
    return m.beta * phi - phi * ext_power(g.dim, n, g.alpha.m);
}

Mat apply_dan(const HomLieAlgebra& g, const Representation& m, const Mat& psi, int n) {
    if (n < 2) throw std::invalid_argument("apply_dan: degree must be >= 2");
    const int ng = g.dim;
    Mat ae = mat_pow(g.alpha.m, n - 2);
    const auto out_sets = subsets(ng, n + 1);
    Mat out = Mat::Zero(m.dim, binom(ng, n + 1));
    for (std::size_t c = 0; c < out_sets.size(); ++c) {
        const Subset& s = out_sets[c];
        Vec col = Vec::Zero(m.dim);
        for (int i = 0; i < n + 1; ++i)
            for (int j = i + 1; j < n + 1; ++j) {
                Subset rest;
                for (int t = 0; t < n + 1; ++t)
                    if (t != i && t != j) rest.push_back(s[static_cast<std::size_t>(t)]);
                Vec w = g.bracket_vec(ae * unit(ng, s[static_cast<std::size_t>(i)]),
                                      ae * unit(ng, s[static_cast<std::size_t>(j)]));
                col += Rat(pm(i + j + 1)) * (m.action_vec(w) * psi.col(subset_rank(ng, rest)));
            }
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

namespace {

// Iterate all permutations of the argument tuple for a given output subset.
template <typename F>
void for_permutations(const Subset& s, F&& f) {
    std::vector<int> perm = s;
    std::sort(perm.begin(), perm.end());
    do {
        f(perm, sort_sign(perm).first);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Rat factorial(int k) {
    Rat r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

Mat apply_dnn_symmetrized(const HomLieAlgebra& g, const Representation& m, const Mat& phi, int n) {
    const int ng = g.dim;
    Mat ae = mat_pow(g.alpha.m, n - 1);
    const auto out_sets = subsets(ng, n + 1);
    Mat out = Mat::Zero(m.dim, binom(ng, n + 1));
    const Rat act_norm = 1 / factorial(n);
    const Rat br_norm = 1 / (2 * factorial(n - 1));
    for (std::size_t c = 0; c < out_sets.size(); ++c) {
        Vec col = Vec::Zero(m.dim);
        for_permutations(out_sets[c], [&](const std::vector<int>& p, int sign) {
            std::vector<int> rest(p.begin() + 1, p.end());
            col += Rat(sign) * act_norm *
                   (m.action_vec(ae * unit(ng, p[0])) * eval_on_tuple(phi, ng, rest));
            Vec w = g.bracket_vec(unit(ng, p[0]), unit(ng, p[1]));
            Vec tail = Vec::Ones(1);
            for (std::size_t t = 2; t < p.size(); ++t)
                tail = wedge_coords(ng, static_cast<int>(t) - 2, 1, tail, Vec(g.alpha.m * unit(ng, p[t])));
            col -= Rat(sign) * br_norm * (phi * wedge_coords(ng, 1, n - 1, w, tail));
        });
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

Mat apply_daa_symmetrized(const HomLieAlgebra& g, const Representation& m, const Mat& psi, int n) {
    const int ng = g.dim;
    Mat ae = mat_pow(g.alpha.m, n - 1);
    const auto out_sets = subsets(ng, n);
    Mat out = Mat::Zero(m.dim, binom(ng, n));
    const Rat act_norm = 1 / factorial(n - 1);
    const Rat br_norm = 1 / (2 * factorial(n - 2));
    for (std::size_t c = 0; c < out_sets.size(); ++c) {
        Vec col = Vec::Zero(m.dim);
        for_permutations(out_sets[c], [&](const std::vector<int>& p, int sign) {
            std::vector<int> rest(p.begin() + 1, p.end());
            col += Rat(sign) * act_norm *
                   (m.action_vec(ae * unit(ng, p[0])) * eval_on_tuple(psi, ng, rest));
            Vec w = g.bracket_vec(unit(ng, p[0]), unit(ng, p[1]));
            Vec tail = Vec::Ones(1);
            for (std::size_t t = 2; t < p.size(); ++t)
                tail = wedge_coords(ng, static_cast<int>(t) - 2, 1, tail, Vec(g.alpha.m * unit(ng, p[t])));
            col -= Rat(sign) * br_norm * (psi * wedge_coords(ng, 1, n - 2, w, tail));
        });
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

Mat apply_dan_symmetrized(const HomLieAlgebra& g, const Representation& m, const Mat& psi, int n) {
    const int ng = g.dim;
    Mat ae = mat_pow(g.alpha.m, n - 2);
    const auto out_sets = subsets(ng, n + 1);
    Mat out = Mat::Zero(m.dim, binom(ng, n + 1));
    const Rat norm = 1 / (2 * factorial(n - 1));
    for (std::size_t c = 0; c < out_sets.size(); ++c) {
        Vec col = Vec::Zero(m.dim);
        for_permutations(out_sets[c], [&](const std::vector<int>& p, int sign) {
            std::vector<int> rest(p.begin() + 2, p.end());
            Vec w = ae * g.bracket_vec(unit(ng, p[0]), unit(ng, p[1]));
            col += Rat(sign) * norm * (m.action_vec(w) * eval_on_tuple(psi, ng, rest));
        });
        out.col(static_cast<Index>(c)) = col;
    }
    return out;
}

AlphaCochain apply_total(const HomLieAlgebra& g, const Representation& m, const AlphaCochain& c) {
    const int n = c.degree;
    AlphaCochain out = zero_cochain(g, m, n + 1);
    out.nu_part = apply_dnn(g, m, c.nu_part, n);
    if (n >= 2) out.nu_part -= apply_dan(g, m, c.alpha_part, n);
    out.alpha_part = apply_dna(g, m, c.nu_part, n);
    if (n >= 2) out.alpha_part -= apply_daa(g, m, c.alpha_part, n);
    return out;
}

Mat total_differential(const HomLieAlgebra& g, const Representation& m, int n) {
    const Index dom = cochain_dim(g, m, n);
    const Index cod = cochain_dim(g, m, n + 1);
    Mat d(cod, dom);
    for (Index k = 0; k < dom; ++k) {
        Vec e = Vec::Zero(dom);
        e(k) = 1;
        d.col(k) = flatten(apply_total(g, m, unflatten(g, m, n, e)));
    }
    return d;
}

namespace {

// Columns of `candidates` whose classes extend span(image) to a basis,
// chosen by left-to-right pivoting: deterministic representatives.
std::vector<Index> extending_columns(const Mat& image, const Mat& candidates) {
    Mat joint(image.rows(), image.cols() + candidates.cols());
    joint.leftCols(image.cols()) = image;
    joint.rightCols(candidates.cols()) = candidates;
    auto re = rref(joint);
    std::vector<Index> out;
    for (Index p : re.pivot_cols)
        if (p >= image.cols()) out.push_back(p - image.cols());
    return out;
}

}  // namespace

CohomologyReport cohomology(const HomLieAlgebra& g, const Representation& m, int max_degree) {
    CohomologyReport rep;
    Mat prev_d;  // ∂ⁿ⁻¹
    for (int n = 1; n <= max_degree; ++n) {
        Mat d = total_differential(g, m, n);
        CohomologyRow row;
        row.degree = n;
        row.dim_c = d.cols();
        row.dim_im = rank(d);
        row.dim_ker = row.dim_c - row.dim_im;
        Index im_prev = (n == 1) ? 0 : rank(prev_d);
        row.dim_h = row.dim_ker - im_prev;
        rep.rows.push_back(row);

        Mat ker = kernel_basis(d);
        Mat image = (n == 1) ? Mat::Zero(d.cols(), 0) : Mat(column_space_basis(prev_d));
        std::vector<AlphaCochain> reps;
        for (Index c : extending_columns(image, ker)) reps.push_back(unflatten(g, m, n, ker.col(c)));
        rep.representatives.push_back(std::move(reps));
        prev_d = std::move(d);
    }
    return rep;
}

std::vector<AlphaCochain> representative_cocycles(const HomLieAlgebra& g, const Representation& m, int n) {
    CohomologyReport rep = cohomology(g, m, n);
    return rep.representatives.back();
}

bool in_cohomology_span(const HomLieAlgebra& g, const Representation& m,
                        const std::vector<AlphaCochain>& reps, const AlphaCochain& c) {
    if (!is_zero(Mat(flatten(apply_total(g, m, c)))))
        throw std::invalid_argument("in_cohomology_span: input is not a cocycle");
    const int n = c.degree;
    Mat image = (n == 1) ? Mat::Zero(cochain_dim(g, m, n), 0)
                         : Mat(total_differential(g, m, n - 1));
    Mat span(cochain_dim(g, m, n), image.cols() + static_cast<Index>(reps.size()));
    span.leftCols(image.cols()) = image;
    for (std::size_t i = 0; i < reps.size(); ++i)
        span.col(image.cols() + static_cast<Index>(i)) = flatten(reps[i]);
    return in_column_space(span, flatten(c));
}

std::vector<SubcomplexRow> classical_subcomplex_cohomology(const HomLieAlgebra& g, int max_degree) {
    const int n = g.dim;
    Representation adj = adjoint_representation(g);

    // basis of {φ : Λⁿ g → g | α φ = φ α^{∧n}} per degree, flattened column-major
    std::vector<Mat> bases;
    for (int k = 1; k <= max_degree + 1; ++k) {
        Index cols = binom(n, k);
        Mat sys(n * cols, n * cols);
        for (Index j = 0; j < n * cols; ++j) {
            Mat phi = Mat::Zero(n, cols);
            phi(j % n, j / n) = 1;
            Mat res = g.alpha.m * phi - phi * ext_power(n, k, g.alpha.m);
            for (Index col = 0; col < cols; ++col)
                for (Index r = 0; r < n; ++r) sys(col * n + r, j) = res(r, col);
        }
        bases.push_back(kernel_basis(sys));
    }

    // ∂νν in subspace coordinates
    std::vector<Mat> diff;
    for (int k = 1; k <= max_degree; ++k) {
        const Mat& src = bases[static_cast<std::size_t>(k - 1)];
        const Mat& dst = bases[static_cast<std::size_t>(k)];
        Mat d(dst.cols(), src.cols());
        for (Index j = 0; j < src.cols(); ++j) {
            Mat phi = Mat::Zero(n, binom(n, k));
            for (Index t = 0; t < src.rows(); ++t) phi(t % n, t / n) = src(t, j);
            Mat img = apply_dnn(g, adj, phi, k);
            Vec flat(img.size());
            for (Index col = 0; col < img.cols(); ++col)
                for (Index r = 0; r < n; ++r) flat(col * n + r) = img(r, col);
            auto x = solve(dst, flat);
            if (!x) throw std::logic_error("classical subcomplex not closed under dnn");
            d.col(j) = *x;
        }
        diff.push_back(std::move(d));
    }

    std::vector<SubcomplexRow> rows;
    for (int k = 1; k <= max_degree; ++k) {
        SubcomplexRow row;
        row.degree = k;
        row.dim_c = diff[static_cast<std::size_t>(k - 1)].cols();
        row.dim_im = rank(diff[static_cast<std::size_t>(k - 1)]);
        row.dim_ker = row.dim_c - row.dim_im;
        row.dim_h = row.dim_ker - ((k == 1) ? 0 : rank(diff[static_cast<std::size_t>(k - 2)]));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace homlie
