#include "homlie/structures.hpp"

#include <utility>

namespace homlie {

namespace {

Vec unit(int n, int i) {
    Vec e = Vec::Zero(n);
    e(i) = 1;
    return e;
}

void record(ValidationReport& rep, std::string axiom, const Rat& residual, std::vector<int> witness) {
    AxiomCheck c;
    c.axiom = std::move(axiom);
    c.pass = residual == 0;
    c.max_residual = abs(residual);
    if (!c.pass) c.witness = std::move(witness);
    rep.checks.push_back(std::move(c));
}

// Tracks the worst residual over all tuples for one axiom.
struct AxiomScan {
    Rat worst = 0;
    std::vector<int> witness;

    void feed(const Mat& residual, std::vector<int> tuple) {
        Rat r = max_abs(residual);
        if (r > worst) {
            worst = r;
            witness = std::move(tuple);
        }
    }
    void finish(ValidationReport& rep, std::string axiom) {
        record(rep, std::move(axiom), worst, std::move(witness));
    }
};

}  // namespace

Rat max_abs(const Mat& m) {
    Rat r = 0;
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (abs(m(i, j)) > r) r = abs(m(i, j));
    return r;
}

const AxiomCheck* ValidationReport::find(const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return &c;
    return nullptr;
}

HomLieAlgebra HomLieAlgebra::make(int n, const Mat& bracket_matrix, const Mat& alpha_matrix,
                                  std::vector<std::string> labels) {
    HomLieAlgebra g;
    g.dim = n;
    g.bracket = MultiMap{n, 2, 1, bracket_matrix, Height{1, 0}};
    g.alpha = MultiMap{n, 1, 1, alpha_matrix, Height{1, 0}};
    g.basis = std::move(labels);
    check_shape(g.bracket);
    check_shape(g.alpha);
    return g;
}

Vec HomLieAlgebra::bracket_vec(const Vec& u, const Vec& v) const {
    return bracket.m * wedge_coords(dim, 1, 1, u, v);
}

Mat HomLieAlgebra::ad(int i) const {
    Mat out(dim, dim);
    for (int j = 0; j < dim; ++j) out.col(j) = bracket_vec(unit(dim, i), unit(dim, j));
    return out;
}

Mat HomLieAlgebra::ad_vec(const Vec& u) const {
    Mat out = Mat::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        if (u(i) != 0) out += u(i) * ad(i);
    return out;
}

HomLieCoalgebra HomLieCoalgebra::make(int n, const Mat& cobracket_matrix, const Mat& beta_matrix) {
    HomLieCoalgebra c;
    c.dim = n;
    c.cobracket = MultiMap{n, 1, 2, cobracket_matrix, Height{0, 1}};
    c.beta = MultiMap{n, 1, 1, beta_matrix, Height{0, 1}};
    check_shape(c.cobracket);
    check_shape(c.beta);
    return c;
}

Vec HomAssociativeAlgebra::mul_vec(const Vec& u, const Vec& v) const {
    Vec out = Vec::Zero(dim);
    for (int i = 0; i < dim; ++i)
        if (u(i) != 0) out += u(i) * (mul[static_cast<std::size_t>(i)] * v);
    return out;
}

Mat Representation::action_vec(const Vec& u) const {
    Mat out = Mat::Zero(dim, dim);
    for (int i = 0; i < algebra_dim; ++i)
        if (u(i) != 0) out += u(i) * action[static_cast<std::size_t>(i)];
    return out;
}

ValidationReport validate_hom_lie(const HomLieAlgebra& g) {
    ValidationReport rep;
    const int n = g.dim;
    const Mat& a = g.alpha.m;

    AxiomScan jacobi;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
                Vec t = g.bracket_vec(g.bracket_vec(x, y), a * z) +
                        g.bracket_vec(g.bracket_vec(y, z), a * x) +
                        g.bracket_vec(g.bracket_vec(z, x), a * y);
                jacobi.feed(t, {i, j, k});
            }
    jacobi.finish(rep, "hom-jacobi");

    AxiomScan mult;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec x = unit(n, i), y = unit(n, j);
            Vec t = a * g.bracket_vec(x, y) - g.bracket_vec(a * x, a * y);
            mult.feed(t, {i, j});
        }
    mult.finish(rep, "multiplicativity");

    rep.ok = true;
    for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
    return rep;
}

ValidationReport validate_hom_associative(const HomAssociativeAlgebra& a) {
    ValidationReport rep;
    const int n = a.dim;

    AxiomScan assoc;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
                Vec t = a.mul_vec(a.alpha * x, a.mul_vec(y, z)) - a.mul_vec(a.mul_vec(x, y), a.alpha * z);
                assoc.feed(t, {i, j, k});
            }
    assoc.finish(rep, "hom-associativity");

    AxiomScan mult;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec x = unit(n, i), y = unit(n, j);
            mult.feed(a.alpha * a.mul_vec(x, y) - a.mul_vec(a.alpha * x, a.alpha * y), {i, j});
        }
    mult.finish(rep, "multiplicativity");

    rep.ok = true;
    for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
    return rep;
}

ValidationReport validate_representation(const HomLieAlgebra& g, const Representation& m) {
    ValidationReport rep;
    const int n = g.dim;
    if (m.algebra_dim != n || static_cast<int>(m.action.size()) != n)
        throw std::invalid_argument("validate_representation: shape mismatch");

    AxiomScan mod;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec x = unit(n, i), y = unit(n, j);
            Mat lhs = m.action_vec(g.bracket_vec(x, y)) * m.beta;
            Mat rhs = m.action_vec(g.alpha.m * x) * m.action_vec(y) - m.action_vec(g.alpha.m * y) * m.action_vec(x);
            mod.feed(lhs - rhs, {i, j});
        }
    mod.finish(rep, "module-axiom");

    AxiomScan mult;
    for (int i = 0; i < n; ++i) {
        Vec x = unit(n, i);
        mult.feed(m.beta * m.action_vec(x) - m.action_vec(g.alpha.m * x) * m.beta, {i});
    }
    mult.finish(rep, "module-multiplicativity");

    rep.ok = true;
    for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
    return rep;
}

HomLieAlgebra dual_algebra(const HomLieCoalgebra& c) {
    return HomLieAlgebra::make(c.dim, c.cobracket.m.transpose(), c.beta.m.transpose());
}

ValidationReport validate_coalgebra(const HomLieCoalgebra& c) {
    ValidationReport rep = validate_hom_lie(dual_algebra(c));
    for (auto& chk : rep.checks) chk.axiom = "co-" + chk.axiom;
    return rep;
}

ValidationReport validate_bimodule(const HomAssociativeAlgebra& a, const HomBimodule& m) {
    ValidationReport rep;
    const int n = a.dim;
    auto left = [&](const Vec& u) {
        Mat out = Mat::Zero(m.dim, m.dim);
        for (int i = 0; i < n; ++i)
            if (u(i) != 0) out += u(i) * m.left[static_cast<std::size_t>(i)];
        return out;
    };
    auto right = [&](const Vec& u) {
        Mat out = Mat::Zero(m.dim, m.dim);
        for (int i = 0; i < n; ++i)
            if (u(i) != 0) out += u(i) * m.right[static_cast<std::size_t>(i)];
        return out;
    };

    AxiomScan lax, rax, exch;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec x = unit(n, i), y = unit(n, j);
            Vec xy = a.mul_vec(x, y);
            lax.feed(left(xy) * m.beta - left(a.alpha * x) * left(y), {i, j});
            rax.feed(right(xy) * m.beta - right(a.alpha * y) * right(x), {i, j});
            exch.feed(left(a.alpha * x) * right(y) - right(a.alpha * y) * left(x), {i, j});
        }
    lax.finish(rep, "left-module");
    rax.finish(rep, "right-module");
    exch.finish(rep, "bimodule-exchange");

    AxiomScan lm, rm;
    for (int i = 0; i < n; ++i) {
        Vec x = unit(n, i);
        lm.feed(m.beta * left(x) - left(a.alpha * x) * m.beta, {i});
        rm.feed(m.beta * right(x) - right(a.alpha * x) * m.beta, {i});
    }
    lm.finish(rep, "left-multiplicativity");
    rm.finish(rep, "right-multiplicativity");

    rep.ok = true;
    for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
    return rep;
}

Representation adjoint_representation(const HomLieAlgebra& g) {
    Representation r;
    r.algebra_dim = g.dim;
    r.dim = g.dim;
    for (int i = 0; i < g.dim; ++i) r.action.push_back(g.ad(i));
    r.beta = g.alpha.m;
    return r;
}

Representation trivial_representation(const HomLieAlgebra& g, int dim, const Mat& beta) {
    Representation r;
    r.algebra_dim = g.dim;
    r.dim = dim;
    r.action.assign(static_cast<std::size_t>(g.dim), Mat::Zero(dim, dim));
    r.beta = beta;
    return r;
}

std::optional<std::vector<int>> endomorphism_witness(const HomLieAlgebra& g, const Mat& gamma) {
    const int n = g.dim;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec x = unit(n, i), y = unit(n, j);
            if (!is_zero(Mat(gamma * g.bracket_vec(x, y) - g.bracket_vec(gamma * x, gamma * y))))
                return std::vector<int>{i, j};
        }
    if (!is_zero(Mat(gamma * g.alpha.m - g.alpha.m * gamma))) return std::vector<int>{};
    return std::nullopt;
}

HomLieAlgebra yau_twist(const HomLieAlgebra& g, const Mat& gamma) {
    if (auto w = endomorphism_witness(g, gamma)) {
        std::string msg = "yau_twist: gamma is not an endomorphism";
        if (w->size() == 2)
            msg += " (bracket mismatch at basis pair " + std::to_string((*w)[0] + 1) + "," +
                   std::to_string((*w)[1] + 1) + ")";
        else
            msg += " (does not commute with alpha)";
        throw std::invalid_argument(msg);
    }
    return HomLieAlgebra::make(g.dim, gamma * g.bracket.m, gamma * g.alpha.m, g.basis);
}

HomLieAlgebra commutator_lie(const HomAssociativeAlgebra& a) {
    ValidationReport v = validate_hom_associative(a);
    if (!v.ok) throw std::invalid_argument("commutator_lie: input is not Hom-associative");
    const int n = a.dim;
    const auto pairs = subsets(n, 2);
    Mat bracket(n, binom(n, 2));
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        Vec x = unit(n, pairs[c][0]), y = unit(n, pairs[c][1]);
        bracket.col(static_cast<Index>(c)) = a.mul_vec(x, y) - a.mul_vec(y, x);
    }
    return HomLieAlgebra::make(n, bracket, a.alpha);
}

Representation bimodule_to_lie_module(const HomAssociativeAlgebra& a, const HomBimodule& m) {
    ValidationReport v = validate_bimodule(a, m);
    if (!v.ok) {
        std::string msg = "bimodule_to_lie_module: bimodule axioms fail";
        for (const auto& c : v.checks)
            if (!c.pass) {
                msg += " [" + c.axiom + "]";
                break;
            }
        throw std::invalid_argument(msg);
    }
    Representation r;
    r.algebra_dim = a.dim;
    r.dim = m.dim;
    for (int i = 0; i < a.dim; ++i)
        r.action.push_back(m.left[static_cast<std::size_t>(i)] - m.right[static_cast<std::size_t>(i)]);
    r.beta = m.beta;
    return r;
}

namespace {

// Kernel of the linear conditions D[x,y] = [Dx, t(y)] + [t(x), Dy] on
// Hom(g,g), D flattened column-major.
Mat derivation_kernel(const HomLieAlgebra& g, const Mat& twist) {
    const int n = g.dim;
    const auto pairs = subsets(n, 2);
    Mat sys = Mat::Zero(static_cast<Index>(pairs.size()) * n, static_cast<Index>(n) * n);
    std::vector<Mat> ad_t(static_cast<std::size_t>(n));  // ad_t[j] = [t(e_j), ·]
    for (int j = 0; j < n; ++j) ad_t[static_cast<std::size_t>(j)] = g.ad_vec(twist * unit(n, j));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const int i = pairs[p][0], j = pairs[p][1];
        Vec w = g.bracket_vec(unit(n, i), unit(n, j));
        // rows for: D·w + ad_{t(e_j)}·D.col(i) − ad_{t(e_i)}·D.col(j) = 0
        for (int r = 0; r < n; ++r) {
            Index row = static_cast<Index>(p) * n + r;
            for (int col = 0; col < n; ++col)
                if (w(col) != 0) sys(row, static_cast<Index>(col) * n + r) += w(col);
            sys.block(row, static_cast<Index>(i) * n, 1, n) += ad_t[static_cast<std::size_t>(j)].row(r);
            sys.block(row, static_cast<Index>(j) * n, 1, n) -= ad_t[static_cast<std::size_t>(i)].row(r);
        }
    }
    return kernel_basis(sys);
}

}  // namespace

Mat derivations(const HomLieAlgebra& g) {
    return derivation_kernel(g, Mat::Identity(g.dim, g.dim));
}

Mat alpha_derivations(const HomLieAlgebra& g) { return derivation_kernel(g, g.alpha.m); }

LieTypeObstruction lie_type_obstruction(const HomLieAlgebra& g) {
    LieTypeObstruction out;
    Mat im_nu = column_space_basis(g.bracket.m);
    for (Index c = 0; c < im_nu.cols(); ++c) {
        if (!in_column_space(g.alpha.m, im_nu.col(c))) {
            out.certified_not_lie_type = true;
            out.witness = im_nu.col(c);
            return out;
        }
    }
    return out;
}

Mat extended_adjoint(const HomLieAlgebra& g, const Vec& u, int j) {
    const int n = g.dim;
    Mat adu = g.ad_vec(u);
    const auto idx = subsets(n, j);
    Mat out = Mat::Zero(binom(n, j), binom(n, j));
    for (std::size_t c = 0; c < idx.size(); ++c) {
        for (int slot = 0; slot < j; ++slot) {
            Vec acc = Vec::Ones(1);  // Λ^0 component "1"
            int deg = 0;
            for (int t = 0; t < j; ++t) {
                Vec factor = (t == slot) ? Vec(adu * unit(n, idx[c][static_cast<std::size_t>(t)]))
                                         : Vec(g.alpha.m * unit(n, idx[c][static_cast<std::size_t>(t)]));
                acc = wedge_coords(n, deg, 1, acc, factor);
                ++deg;
            }
            out.col(static_cast<Index>(c)) += acc;
        }
    }
    return out;
}

namespace {

Vec compat_residual(const HomLieBialgebra& b, int i, int j) {
    const HomLieAlgebra& g = b.algebra;
    const int n = g.dim;
    Vec x = unit(n, i), y = unit(n, j);
    Mat ad_bx = extended_adjoint(g, Vec(b.coalgebra.beta.m * x), 2);
    Mat ad_by = extended_adjoint(g, Vec(b.coalgebra.beta.m * y), 2);
    Vec dx = b.coalgebra.cobracket.m * x;
    Vec dy = b.coalgebra.cobracket.m * y;
    return Vec(b.coalgebra.cobracket.m * g.bracket_vec(x, y)) - Vec(ad_bx * dy) + Vec(ad_by * dx);
}

}  // namespace

ValidationReport validate_bialgebra(const HomLieBialgebra& b) {
    ValidationReport rep;
    if (b.algebra.dim != b.coalgebra.dim) throw std::invalid_argument("validate_bialgebra: dim mismatch");
    const int n = b.algebra.dim;

    ValidationReport alg = validate_hom_lie(b.algebra);
    rep.checks.insert(rep.checks.end(), alg.checks.begin(), alg.checks.end());
    ValidationReport coalg = validate_coalgebra(b.coalgebra);
    rep.checks.insert(rep.checks.end(), coalg.checks.begin(), coalg.checks.end());

    const Mat& a = b.algebra.alpha.m;
    const Mat& bt = b.coalgebra.beta.m;
    const Mat& d = b.coalgebra.cobracket.m;

    AxiomScan bmult;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec x = unit(n, i), y = unit(n, j);
            bmult.feed(Vec(bt * b.algebra.bracket_vec(x, y)) - b.algebra.bracket_vec(bt * x, bt * y), {i, j});
        }
    bmult.finish(rep, "beta-bracket-compatibility");

    record(rep, "alpha-cobracket-compatibility", max_abs(d * a - ext_power(n, 2, a) * d), {});
    record(rep, "alpha-beta-commute", max_abs(a * bt - bt * a), {});

    AxiomScan compat;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) compat.feed(compat_residual(b, i, j), {i, j});
    compat.finish(rep, "bialgebra-compatibility");

    rep.ok = true;
    for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
    return rep;
}

std::optional<std::vector<int>> bialgebra_endomorphism_witness(const HomLieBialgebra& b, const Mat& gamma) {
    if (auto w = endomorphism_witness(b.algebra, gamma)) return w;
    // coalgebra morphism: (γ⊗γ)δ = δγ, γβ = βγ
    if (!is_zero(Mat(ext_power(b.algebra.dim, 2, gamma) * b.coalgebra.cobracket.m -
                     b.coalgebra.cobracket.m * gamma)))
        return std::vector<int>{-1};
    if (!is_zero(Mat(gamma * b.coalgebra.beta.m - b.coalgebra.beta.m * gamma))) return std::vector<int>{-1};
    return std::nullopt;
}

HomLieBialgebra bialgebra_yau_twist(const HomLieBialgebra& b, const Mat& gamma, TwistMode mode) {
    if (bialgebra_endomorphism_witness(b, gamma))
        throw std::invalid_argument("bialgebra_yau_twist: gamma is not a bialgebra endomorphism");
    const int n = b.algebra.dim;
    HomLieBialgebra out = b;
    if (mode == TwistMode::Bracket || mode == TwistMode::Both) {
        out.algebra = HomLieAlgebra::make(n, gamma * b.algebra.bracket.m, gamma * b.algebra.alpha.m,
                                          b.algebra.basis);
    }
    if (mode == TwistMode::Cobracket || mode == TwistMode::Both) {
        out.coalgebra = HomLieCoalgebra::make(n, b.coalgebra.cobracket.m * gamma,
                                              gamma * b.coalgebra.beta.m);
    }
    return out;
}

}  // namespace homlie
