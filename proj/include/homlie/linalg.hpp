#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "homlie/rational.hpp"

// Exact linear algebra over the rationals. Pivoting is always "first nonzero
// in column order", so every result (ranks, kernel bases, solutions,
// representatives derived from them) is deterministic.

namespace homlie {

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) return false;
    return true;
}

template <typename Scalar>
struct RowEchelon {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
    std::vector<Index> pivot_cols;
};

/// Reduced row echelon form with first-nonzero pivoting.
template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    RowEchelon<Scalar> out;
    out.reduced = m;
    auto& r = out.reduced;
    Index row = 0;
    for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
        Index p = -1;
        for (Index i = row; i < r.rows(); ++i)
            if (r(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row) r.row(row).swap(r.row(p));
        Scalar inv = Scalar(1) / r(row, col);
        r.row(row) *= inv;
        for (Index i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col) == 0) continue;
            Scalar f = r(i, col);
            r.row(i) -= f * r.row(row);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    return static_cast<Index>(rref(m).pivot_cols.size());
}

/// Basis of the null space, one column per free variable, pivot-normalized.
/// rank + cols(kernel) == cols(m) by construction.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    auto re = rref(m);
    const Index n = m.cols();
    const Index r = static_cast<Index>(re.pivot_cols.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Index c : re.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    M ker(n, n - r);
    ker.setZero();
    Index k = 0;
    for (Index f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        ker(f, k) = 1;
        for (Index i = 0; i < r; ++i) ker(re.pivot_cols[static_cast<std::size_t>(i)], k) = -re.reduced(i, f);
        ++k;
    }
    return ker;
}

/// Any exact solution of m·x = b, or nullopt when the system is inconsistent.
template <typename Derived, typename VDerived>
std::optional<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>> solve(
    const Eigen::MatrixBase<Derived>& m, const Eigen::MatrixBase<VDerived>& b) {
    using Scalar = typename Derived::Scalar;
    if (b.rows() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    auto re = rref(aug);
    if (!re.pivot_cols.empty() && re.pivot_cols.back() == m.cols()) return std::nullopt;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(m.cols());
    x.setZero();
    for (std::size_t i = 0; i < re.pivot_cols.size(); ++i)
        x(re.pivot_cols[i]) = re.reduced(static_cast<Index>(i), m.cols());
    return x;
}

template <typename Derived>
std::optional<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>> inverse(
    const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (m.rows() != m.cols()) return std::nullopt;
    const Index n = m.rows();
    M aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = M::Identity(n, n);
    auto re = rref(aug);
    if (static_cast<Index>(re.pivot_cols.size()) != n || (n > 0 && re.pivot_cols.back() != n - 1))
        return std::nullopt;
    return M(re.reduced.rightCols(n));
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
    const Index n = a.rows();
    Scalar det = 1;
    for (Index col = 0; col < n; ++col) {
        Index p = -1;
        for (Index i = col; i < n; ++i)
            if (a(i, col) != 0) { p = i; break; }
        if (p < 0) return Scalar(0);
        if (p != col) {
            a.row(col).swap(a.row(p));
            det = -det;
        }
        det *= a(col, col);
        for (Index i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Scalar f = a(i, col) / a(col, col);
            a.row(i) -= f * a.row(col);
        }
    }
    return det;
}

/// Columns of m that form a basis of its column space (left-to-right greedy).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> column_space_basis(
    const Eigen::MatrixBase<Derived>& m) {
    using M = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    auto re = rref(m);
    M basis(m.rows(), static_cast<Index>(re.pivot_cols.size()));
    for (std::size_t i = 0; i < re.pivot_cols.size(); ++i) basis.col(static_cast<Index>(i)) = m.col(re.pivot_cols[i]);
    return basis;
}

template <typename Derived, typename VDerived>
bool in_column_space(const Eigen::MatrixBase<Derived>& m, const Eigen::MatrixBase<VDerived>& v) {
    return solve(m, v).has_value();
}

/// dim(span big / span small); requires span(small) ⊆ span(big).
template <typename DerivedA, typename DerivedB>
Index quotient_dim(const Eigen::MatrixBase<DerivedA>& big, const Eigen::MatrixBase<DerivedB>& small) {
    if (big.rows() != small.rows()) throw std::invalid_argument("quotient_dim: ambient dimension mismatch");
    using M = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    M joint(big.rows(), big.cols() + small.cols());
    joint.leftCols(big.cols()) = big;
    joint.rightCols(small.cols()) = small;
    Index rb = rank(big);
    if (rank(joint) != rb) throw std::logic_error("quotient_dim: small subspace not contained in big");
    return rb - rank(small);
}

}  // namespace homlie
