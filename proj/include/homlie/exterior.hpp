#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "homlie/linalg.hpp"

// Combinatorics and Hopf-algebra operations of the Grassmann algebra Λ•g in
// fixed lexicographic bases. Basis indices are 0-based internally; a k-form
// basis element is the strictly increasing k-subset of {0,...,n-1}, ranked
// lexicographically. All signs are computed from explicit sorting
// permutations, never from closed formulas.

namespace homlie {

using Subset = std::vector<int>;

inline Index binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Index r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// All C(n,k) sorted k-subsets of {0..n-1} in lexicographic order.
inline std::vector<Subset> subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// Lexicographic rank of a sorted k-subset among all k-subsets of {0..n-1}.
inline Index subset_rank(int n, const Subset& s) {
    const int k = static_cast<int>(s.size());
    Index r = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < s[i]; ++v) r += binom(n - 1 - v, k - 1 - i);
        prev = s[i];
    }
    return r;
}

/// Sign of the permutation sorting `indices`, together with the sorted subset.
/// Sign 0 when an index repeats (the wedge collapses).
inline std::pair<int, Subset> sort_sign(Subset indices) {
    int sign = 1;
    for (std::size_t i = 1; i < indices.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && indices[j - 1] > indices[j]) {
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && indices[j - 1] == indices[j]) return {0, {}};
    }
    return {sign, indices};
}

/// Parity of the shuffle putting (A, B) back into sorted order; A and B must
/// each be sorted. Used for both the coproduct and products of basis forms.
inline int shuffle_sign(const Subset& a, const Subset& b) {
    int inv = 0;
    for (int x : a)
        for (int y : b)
            if (y < x) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

struct Split {
    Subset left;
    Subset right;
    int sign;
};

/// All splittings S = A ⊔ B with |A| = p, with shuffle signs: the (p, |S|-p)
/// component of Δ(e_S).
inline std::vector<Split> splits_of(const Subset& s, int p) {
    std::vector<Split> out;
    const int k = static_cast<int>(s.size());
    if (p < 0 || p > k) return out;
    std::vector<int> mask(static_cast<std::size_t>(k), 0);
    std::fill(mask.begin(), mask.begin() + p, 1);
    // iterate position-masks in a fixed order (lexicographic over masks)
    std::sort(mask.begin(), mask.end(), std::greater<int>());
    do {
        Split sp;
        for (int i = 0; i < k; ++i) (mask[static_cast<std::size_t>(i)] ? sp.left : sp.right).push_back(s[i]);
        sp.sign = shuffle_sign(sp.left, sp.right);
        out.push_back(std::move(sp));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

/// Coordinates of (u ∧ v) for u ∈ Λ^p, v ∈ Λ^q in the lexicographic bases.
inline Vec wedge_coords(int n, int p, int q, const Vec& u, const Vec& v) {
    Vec out = Vec::Zero(binom(n, p + q));
    if (p + q > n) return out;
    const auto sp = subsets(n, p);
    const auto sq = subsets(n, q);
    for (Index a = 0; a < u.size(); ++a) {
        if (u(a) == 0) continue;
        for (Index b = 0; b < v.size(); ++b) {
            if (v(b) == 0) continue;
            Subset merged = sp[static_cast<std::size_t>(a)];
            merged.insert(merged.end(), sq[static_cast<std::size_t>(b)].begin(), sq[static_cast<std::size_t>(b)].end());
            auto [sign, sorted] = sort_sign(std::move(merged));
            if (sign == 0) continue;
            out(subset_rank(n, sorted)) += Rat(sign) * u(a) * v(b);
        }
    }
    return out;
}

/// Λ^k of an n×n matrix: entry (U, T) is the minor det(a[U, T]).
inline Mat ext_power(int n, int k, const Mat& a) {
    const auto idx = subsets(n, k);
    const Index d = binom(n, k);
    Mat out(d, d);
    for (Index col = 0; col < d; ++col)
        for (Index row = 0; row < d; ++row) {
            Mat sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub(i, j) = a(idx[static_cast<std::size_t>(row)][static_cast<std::size_t>(i)],
                                  idx[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]);
            out(row, col) = determinant(sub);
        }
    return out;
}

/// Height bookkeeping (h_α, h_β): metadata recording how many copies of the
/// structure maps a map absorbs along input-output paths. Never alters the
/// matrix of a map.
struct Height {
    long a = 0;
    long b = 0;

    Height operator+(const Height& o) const { return {a + o.a, b + o.b}; }
    bool operator==(const Height& o) const = default;
};

/// An element of Hom(Λ^src g, Λ^tgt g) as a C(n,tgt) × C(n,src) matrix.
struct MultiMap {
    int n = 0;
    int src = 0;
    int tgt = 0;
    Mat m;
    Height h;

    static MultiMap zero(int n, int src, int tgt, Height h = {}) {
        MultiMap f{n, src, tgt, Mat::Zero(binom(n, tgt), binom(n, src)), h};
        return f;
    }
    static MultiMap identity(int n, int deg, Height h = {}) {
        MultiMap f{n, deg, deg, Mat::Identity(binom(n, deg), binom(n, deg)), h};
        return f;
    }

    /// Degree as a graded map on Λ•g (the Koszul-sign degree).
    int map_degree() const { return tgt - src; }

    bool zero_map() const { return is_zero(m); }
};

inline void check_shape(const MultiMap& f) {
    if (f.m.rows() != binom(f.n, f.tgt) || f.m.cols() != binom(f.n, f.src))
        throw std::invalid_argument("MultiMap: matrix shape inconsistent with degrees");
}

inline MultiMap operator+(const MultiMap& f, const MultiMap& g) {
    if (f.n != g.n || f.src != g.src || f.tgt != g.tgt)
        throw std::invalid_argument("MultiMap sum: degree mismatch");
    if (!(f.h == g.h)) throw std::invalid_argument("MultiMap sum: height mismatch");
    return {f.n, f.src, f.tgt, f.m + g.m, f.h};
}

inline MultiMap operator-(const MultiMap& f, const MultiMap& g) {
    if (f.n != g.n || f.src != g.src || f.tgt != g.tgt)
        throw std::invalid_argument("MultiMap difference: degree mismatch");
    if (!(f.h == g.h)) throw std::invalid_argument("MultiMap difference: height mismatch");
    return {f.n, f.src, f.tgt, f.m - g.m, f.h};
}

inline MultiMap operator*(const Rat& c, const MultiMap& f) { return {f.n, f.src, f.tgt, c * f.m, f.h}; }

/// Plain composition outer ∘ inner (inner.tgt must equal outer.src).
inline MultiMap compose(const MultiMap& outer, const MultiMap& inner) {
    if (outer.n != inner.n || outer.src != inner.tgt)
        throw std::invalid_argument("compose: degree mismatch");
    return {outer.n, inner.src, outer.tgt, outer.m * inner.m, outer.h + inner.h};
}

/// Wedge of maps (f ∧ g) = μ ∘ (f ⊗ g) ∘ Δ with the Koszul sign rule
/// (f ⊗ g)(x ⊗ y) = (-1)^{deg(g)·deg(x)} f(x) ⊗ g(y). Heights add.
inline MultiMap map_wedge(const MultiMap& f, const MultiMap& g) {
    if (f.n != g.n) throw std::invalid_argument("map_wedge: ambient dimension mismatch");
    const int n = f.n;
    MultiMap out = MultiMap::zero(n, f.src + g.src, f.tgt + g.tgt, f.h + g.h);
    if (out.m.size() == 0) return out;
    const int koszul = ((g.map_degree() * f.src) % 2 == 0) ? 1 : -1;
    const auto src_sets = subsets(n, f.src + g.src);
    for (std::size_t c = 0; c < src_sets.size(); ++c) {
        for (const auto& sp : splits_of(src_sets[c], f.src)) {
            Vec fa = f.m.col(subset_rank(n, sp.left));
            Vec gb = g.m.col(subset_rank(n, sp.right));
            out.m.col(static_cast<Index>(c)) +=
                Rat(sp.sign * koszul) * wedge_coords(n, f.tgt, g.tgt, fa, gb);
        }
    }
    return out;
}

/// An inhomogeneous element of Λ•g (component per degree 0..n).
struct GradedElem {
    int n = 0;
    std::vector<Vec> comp;  // comp[k] has C(n,k) coordinates

    static GradedElem zero(int n) {
        GradedElem e;
        e.n = n;
        e.comp.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) e.comp[static_cast<std::size_t>(k)] = Vec::Zero(binom(n, k));
        return e;
    }
};

inline GradedElem wedge(const GradedElem& x, const GradedElem& y) {
    GradedElem out = GradedElem::zero(x.n);
    for (int p = 0; p <= x.n; ++p)
        for (int q = 0; p + q <= x.n; ++q)
            out.comp[static_cast<std::size_t>(p + q)] +=
                wedge_coords(x.n, p, q, x.comp[static_cast<std::size_t>(p)], y.comp[static_cast<std::size_t>(q)]);
    return out;
}

/// pr: Λ•g → g, the degree-1 component.
inline Vec project_deg1(const GradedElem& x) { return x.comp[1]; }

/// Alternating sum over S_arity of a raw multilinear map g^arity → V,
/// expressed on the exterior basis (a C(n,arity)-column matrix over V).
inline Mat antisymmetrize(int n, int arity, Index out_dim,
                          const std::function<Vec(const std::vector<int>&)>& f) {
    const auto idx = subsets(n, arity);
    Mat out = Mat::Zero(out_dim, binom(n, arity));
    for (std::size_t c = 0; c < idx.size(); ++c) {
        std::vector<int> perm = idx[c];
        std::sort(perm.begin(), perm.end());
        do {
            int sign = sort_sign(perm).first;
            out.col(static_cast<Index>(c)) += Rat(sign) * f(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

}  // namespace homlie
