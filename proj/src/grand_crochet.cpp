#include "homlie/grand_crochet.hpp"

#include <algorithm>

namespace homlie {

namespace {

int pm(long k) { return (k % 2 == 0) ? 1 : -1; }

Rat factorial(int k) {
    Rat r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

Vec eval_on_tuple(const Mat& part, int n, const std::vector<int>& tuple) {
    auto [sign, sorted] = sort_sign(tuple);
    if (sign == 0) return Vec::Zero(part.rows());
    return Rat(sign) * part.col(subset_rank(n, sorted));
}

}  // namespace

StructureContext::StructureContext(int n, Mat alpha, Mat beta, bool allow_negative_heights)
    : n_(n), alpha_(std::move(alpha)), beta_(std::move(beta)), allow_negative_(allow_negative_heights) {
    if (!is_zero(Mat(alpha_ * beta_ - beta_ * alpha_)))
        throw std::invalid_argument("StructureContext: alpha and beta must commute");
}

StructureContext StructureContext::for_algebra(const HomLieAlgebra& g, bool allow_negative) {
    return StructureContext(g.dim, g.alpha.m, g.alpha.m, allow_negative);
}

StructureContext StructureContext::for_bialgebra(const HomLieBialgebra& b, bool allow_negative) {
    return StructureContext(b.algebra.dim, b.algebra.alpha.m, b.coalgebra.beta.m, allow_negative);
}

Mat StructureContext::base_power(Height h) const {
    auto it = base_cache_.find({h.a, h.b});
    if (it != base_cache_.end()) return it->second;
    auto pow_of = [&](const Mat& m, long e, const char* name) {
        Mat out = Mat::Identity(n_, n_);
        Mat base = m;
        long k = e;
        if (k < 0) {
            if (!allow_negative_)
                throw std::invalid_argument(std::string("negative ") + name +
                                            "-height requires the invertible-structure-map opt-in");
            auto inv = inverse(m);
            if (!inv)
                throw std::invalid_argument(std::string(name) + " is singular; negative height impossible");
            base = *inv;
            k = -k;
        }
        for (long i = 0; i < k; ++i) out = out * base;
        return out;
    };
    Mat result = pow_of(alpha_, h.a, "alpha") * pow_of(beta_, h.b, "beta");
    base_cache_.emplace(std::make_pair(h.a, h.b), result);
    return result;
}

const Mat& StructureContext::ext_height_power(int k, Height h) const {
    auto key = std::make_tuple(k, h.a, h.b);
    auto it = ext_cache_.find(key);
    if (it == ext_cache_.end()) it = ext_cache_.emplace(key, ext_power(n_, k, base_power(h))).first;
    return it->second;
}

int shifted_degree(const MultiMap& f) { return f.src + f.tgt; }

MultiMap circle(const StructureContext& ctx, const MultiMap& outer, const MultiMap& inner) {
    if (outer.n != inner.n) throw std::invalid_argument("circle: ambient dimension mismatch");
    const int n = outer.n;
    MultiMap out = MultiMap::zero(n, outer.src + inner.src - 1, outer.tgt + inner.tgt - 1,
                                  outer.h + inner.h);
    if (out.src < 0 || out.tgt < 0 || out.m.size() == 0) return out;

    const int spec_in = outer.src - 1;   // degree of the Δ-spectator fed to outer
    const int spec_out = inner.tgt - 1;  // degree of the leftover legs of inner's output
    if (spec_in < 0) return out;
    const Mat& alpha_inner = ctx.ext_height_power(spec_in, inner.h);
    const Mat& alpha_outer = ctx.ext_height_power(spec_out, outer.h);
    // Koszul sign from (α^φ ⊗ φ)Δ: inner jumps over the degree-(src-1) left leg
    const int koszul = pm(static_cast<long>(inner.map_degree()) * spec_in);

    const auto src_sets = subsets(n, out.src);
    const auto mid_sets = subsets(n, inner.tgt);
    for (std::size_t c = 0; c < src_sets.size(); ++c) {
        Vec acc = Vec::Zero(out.m.rows());
        for (const auto& sp : splits_of(src_sets[c], spec_in)) {
            Vec left = Vec::Zero(binom(n, spec_in));
            left(subset_rank(n, sp.left)) = 1;
            Vec w = alpha_inner * left;
            Vec v = inner.m.col(subset_rank(n, sp.right));
            for (Index t = 0; t < v.size(); ++t) {
                if (v(t) == 0) continue;
                const Subset& mid = mid_sets[static_cast<std::size_t>(t)];
                for (const auto& ps : splits_of(mid, 1)) {
                    Vec leg = Vec::Zero(n);
                    leg(ps.left[0]) = 1;
                    Vec arg = wedge_coords(n, spec_in, 1, w, leg);
                    Vec through = outer.m * arg;
                    Vec rest = Vec::Zero(binom(n, spec_out));
                    rest(subset_rank(n, ps.right)) = 1;
                    acc += Rat(sp.sign * ps.sign * koszul) * v(t) *
                           wedge_coords(n, outer.tgt, spec_out, through, Vec(alpha_outer * rest));
                }
            }
        }
        out.m.col(static_cast<Index>(c)) = acc;
    }
    return out;
}

MultiMap grand_bracket(const StructureContext& ctx, const MultiMap& f, const MultiMap& g) {
    MultiMap fg = circle(ctx, f, g);
    MultiMap gf = circle(ctx, g, f);
    int sign = pm(static_cast<long>(shifted_degree(f)) * shifted_degree(g));
    return fg - Rat(sign) * gf;
}

MultiMap dna_operator(const StructureContext& ctx, const MultiMap& f) {
    MultiMap out = f;
    out.h = f.h + Height{1, 0};
    out.m = ctx.ext_height_power(f.tgt, Height{1, 0}) * f.m -
            f.m * ctx.ext_height_power(f.src, Height{1, 0});
    return out;
}

MultiMap graded_jacobiator(const StructureContext& ctx, const MultiMap& f, const MultiMap& g,
                           const MultiMap& h) {
    MultiMap lhs = grand_bracket(ctx, f, grand_bracket(ctx, g, h));
    MultiMap rhs1 = grand_bracket(ctx, grand_bracket(ctx, f, g), h);
    MultiMap rhs2 = grand_bracket(ctx, g, grand_bracket(ctx, f, h));
    int sign = pm(static_cast<long>(shifted_degree(f)) * shifted_degree(g));
    return lhs - rhs1 - Rat(sign) * rhs2;
}

MultiMap circle_sum_formula(const StructureContext& ctx, const MultiMap& outer, const MultiMap& inner) {
    if (outer.tgt != 1 || inner.tgt != 1)
        throw std::invalid_argument("circle_sum_formula: defined for maps into g");
    const int n = outer.n;
    const int k = outer.src, l = inner.src;
    MultiMap out = MultiMap::zero(n, k + l - 1, 1, outer.h + inner.h);
    const Mat& ae = ctx.ext_height_power(1, inner.h);
    const Rat norm = 1 / (factorial(l) * factorial(k - 1));
    const auto src_sets = subsets(n, k + l - 1);
    for (std::size_t c = 0; c < src_sets.size(); ++c) {
        Vec acc = Vec::Zero(n);
        std::vector<int> perm = src_sets[c];
        std::sort(perm.begin(), perm.end());
        do {
            int sign = sort_sign(perm).first;
            std::vector<int> head(perm.begin(), perm.begin() + l);
            Vec inner_val = eval_on_tuple(inner.m, n, head);
            Vec arg = inner_val;
            int deg = 1;
            for (int t = l; t < k + l - 1; ++t) {
                Vec e = Vec::Zero(n);
                e(perm[static_cast<std::size_t>(t)]) = 1;
                arg = wedge_coords(n, deg, 1, arg, Vec(ae * e));
                ++deg;
            }
            acc += Rat(sign) * norm * (outer.m * arg);
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.m.col(static_cast<Index>(c)) = acc;
    }
    return out;
}

bool b_compatible(const StructureContext& ctx, const MultiMap& f) {
    const Mat la = ext_power(ctx.dim(), f.tgt, ctx.alpha());
    const Mat ra = ext_power(ctx.dim(), f.src, ctx.alpha());
    const Mat lb = ext_power(ctx.dim(), f.tgt, ctx.beta());
    const Mat rb = ext_power(ctx.dim(), f.src, ctx.beta());
    return is_zero(Mat(la * f.m - f.m * ra)) && is_zero(Mat(lb * f.m - f.m * rb));
}

Mat b_basis(const StructureContext& ctx, int i, int j) {
    const int n = ctx.dim();
    const Index rows = binom(n, j), cols = binom(n, i);
    const Index dim = rows * cols;
    Mat la = ext_power(n, j, ctx.alpha()), ra = ext_power(n, i, ctx.alpha());
    Mat lb = ext_power(n, j, ctx.beta()), rb = ext_power(n, i, ctx.beta());
    Mat sys(2 * dim, dim);
    for (Index t = 0; t < dim; ++t) {
        Mat f = Mat::Zero(rows, cols);
        f(t % rows, t / rows) = 1;
        Mat r1 = la * f - f * ra;
        Mat r2 = lb * f - f * rb;
        for (Index c = 0; c < cols; ++c)
            for (Index r = 0; r < rows; ++r) {
                sys(c * rows + r, t) = r1(r, c);
                sys(dim + c * rows + r, t) = r2(r, c);
            }
    }
    return kernel_basis(sys);
}

MultiMap nu_map(const HomLieAlgebra& g) { return g.bracket; }

MultiMap delta_map(const HomLieCoalgebra& c) { return c.cobracket; }

bool mc_check_homlie(const StructureContext& ctx, const MultiMap& nu) {
    if (nu.src != 2 || nu.tgt != 1) throw std::invalid_argument("mc_check_homlie: nu must be 2 -> 1");
    if (!b_compatible(ctx, nu))
        throw std::invalid_argument("mc_check_homlie: nu is not compatible with the structure maps");
    return grand_bracket(ctx, nu, nu).zero_map();
}

McVerdict mc_check_bialgebra(const StructureContext& ctx, const MultiMap& nu, const MultiMap& delta) {
    if (nu.src != 2 || nu.tgt != 1 || delta.src != 1 || delta.tgt != 2)
        throw std::invalid_argument("mc_check_bialgebra: expected nu: 2->1 and delta: 1->2");
    if (!b_compatible(ctx, nu) || !b_compatible(ctx, delta))
        throw std::invalid_argument("mc_check_bialgebra: inputs not compatible with the structure maps");
    McVerdict v;
    v.jacobi_component = grand_bracket(ctx, nu, nu).m;
    MultiMap nd = circle(ctx, nu, delta);
    MultiMap dn = circle(ctx, delta, nu);
    // both summands are odd: ⟦ν,δ⟧ + ⟦δ,ν⟧ = 2(ν∘δ + δ∘ν)
    v.mixed_component = 2 * (nd.m + dn.m);
    v.cojacobi_component = grand_bracket(ctx, delta, delta).m;
    v.holds = is_zero(v.jacobi_component) && is_zero(v.mixed_component) && is_zero(v.cojacobi_component);
    return v;
}

std::vector<BComplexRow> bialg_cohomology_fixed_maps(const HomLieBialgebra& b, int max_total_degree) {
    ValidationReport rep = validate_bialgebra(b);
    if (!rep.ok) throw std::invalid_argument("bialg_cohomology_fixed_maps: input is not a Hom-Lie bialgebra");
    StructureContext ctx = StructureContext::for_bialgebra(b);
    const int n = b.algebra.dim;
    MultiMap nu = nu_map(b.algebra);
    MultiMap delta = delta_map(b.coalgebra);

    // per total degree: block bases of B^{j, deg-j} and the bracket matrices
    struct Block {
        int i, j;
        Mat basis;  // flattened maps
    };
    auto blocks_of = [&](int total) {
        std::vector<Block> blocks;
        for (int i = 1; i < total; ++i) {
            int j = total - i;
            if (i > n || j > n || j < 1) continue;
            blocks.push_back({i, j, b_basis(ctx, i, j)});
        }
        return blocks;
    };
    auto total_dim = [&](const std::vector<Block>& blocks) {
        Index d = 0;
        for (const auto& blk : blocks) d += blk.basis.cols();
        return d;
    };

    auto differential = [&](const std::vector<Block>& src, const std::vector<Block>& dst) {
        Index rows = 0, cols = 0;
        for (const auto& blk : dst) rows += blk.basis.cols();
        for (const auto& blk : src) cols += blk.basis.cols();
        Mat d = Mat::Zero(rows, cols);
        Index col0 = 0;
        for (const auto& sb : src) {
            const Index r_b = binom(n, sb.j), c_b = binom(n, sb.i);
            for (Index jc = 0; jc < sb.basis.cols(); ++jc) {
                MultiMap f = MultiMap::zero(n, sb.i, sb.j, Height{sb.i - 1, sb.j - 1});
                for (Index t = 0; t < sb.basis.rows(); ++t) f.m(t % r_b, t / r_b) = sb.basis(t, jc);
                MultiMap dn = grand_bracket(ctx, nu, f);     // lands in (i+1, j)
                MultiMap dd = grand_bracket(ctx, delta, f);  // lands in (i, j+1)
                Index row0 = 0;
                for (const auto& db : dst) {
                    const MultiMap* part = nullptr;
                    if (db.i == sb.i + 1 && db.j == sb.j) part = &dn;
                    if (db.i == sb.i && db.j == sb.j + 1) part = &dd;
                    if (part) {
                        Vec flat(part->m.size());
                        for (Index c = 0; c < part->m.cols(); ++c)
                            for (Index r = 0; r < part->m.rows(); ++r)
                                flat(c * part->m.rows() + r) = (*part).m(r, c);
                        auto x = solve(db.basis, flat);
                        if (!x)
                            throw std::logic_error(
                                "bialg_cohomology_fixed_maps: bracket image leaves the compatible subspace");
                        d.block(row0, col0 + jc, db.basis.cols(), 1) = *x;
                    }
                    row0 += db.basis.cols();
                }
            }
            col0 += sb.basis.cols();
        }
        return d;
    };

    std::vector<BComplexRow> rows;
    std::vector<Block> cur = blocks_of(2);
    Mat prev_d;
    for (int total = 2; total <= max_total_degree; ++total) {
        std::vector<Block> nxt = blocks_of(total + 1);
        Mat d = differential(cur, nxt);
        BComplexRow row;
        row.degree = total;
        row.dim_b = total_dim(cur);
        row.dim_im = rank(d);
        row.dim_ker = row.dim_b - row.dim_im;
        row.dim_h = row.dim_ker - ((total == 2) ? 0 : rank(prev_d));
        rows.push_back(row);
        cur = std::move(nxt);
        prev_d = std::move(d);
    }
    return rows;
}

}  // namespace homlie
