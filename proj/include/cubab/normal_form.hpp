/**
 * Smith and Hermite normal forms of integer matrices.
 *
 * All routines are templated on the scalar type and require only exact
 * ring operations with truncating division (built-in signed integers,
 * cubab::Integer, boost::multiprecision integers).
 */

#ifndef CUBAB_NORMAL_FORM_HPP
#define CUBAB_NORMAL_FORM_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubab/integer.hpp"

namespace cubab {

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x)
{
    return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar floor_quotient(const Scalar& a, const Scalar& b)
{
    Scalar q = a / b;
    Scalar r = a - q * b;
    if (r != Scalar(0) && ((r < Scalar(0)) != (b < Scalar(0))))
        q -= Scalar(1);
    return q;
}

// row(dst) += q * row(src)
template <typename Scalar>
void add_row_multiple(Matrix<Scalar>& m, Index dst, Index src, const Scalar& q, Index first_col = 0)
{
    for (Index j = first_col; j < m.cols(); ++j)
    {
        if (m(src, j) != Scalar(0))
            m(dst, j) += q * m(src, j);
    }
}

// col(dst) += q * col(src)
template <typename Scalar>
void add_col_multiple(Matrix<Scalar>& m, Index dst, Index src, const Scalar& q, Index first_row = 0)
{
    for (Index i = first_row; i < m.rows(); ++i)
    {
        if (m(i, src) != Scalar(0))
            m(i, dst) += q * m(i, src);
    }
}

}   // namespace detail

/// Exact matrix product, skipping structural zeros.
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions differ");
    Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows(), b.cols());
    for (Index j = 0; j < b.cols(); ++j)
    {
        for (Index k = 0; k < a.cols(); ++k)
        {
            const Scalar& factor = b(k, j);
            if (factor == Scalar(0))
                continue;
            for (Index i = 0; i < a.rows(); ++i)
            {
                if (a(i, k) != Scalar(0))
                    out(i, j) += a(i, k) * factor;
            }
        }
    }
    return out;
}

template <typename Scalar>
Vector<Scalar> multiply(const Matrix<Scalar>& a, const Vector<Scalar>& x)
{
    Matrix<Scalar> column = x;
    return multiply(a, column).col(0);
}

/**
 * Smith decomposition U * M * V = D with U, V unimodular.
 *
 * The inverses of U and V are accumulated alongside, so coordinates can be
 * moved in both directions without recomputation.
 */
template <typename Scalar>
struct SmithForm
{
    Matrix<Scalar> D;
    Matrix<Scalar> U;
    Matrix<Scalar> V;
    Matrix<Scalar> U_inverse;
    Matrix<Scalar> V_inverse;

    /// Positive diagonal entries d1 | d2 | ... | dr; D(k, k) = 0 for k >= r.
    std::vector<Scalar> invariant_factors;

    Index rank() const { return static_cast<Index>(invariant_factors.size()); }
};

template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& M)
{
    using detail::add_col_multiple;
    using detail::add_row_multiple;
    using detail::magnitude;

    const Index m = M.rows();
    const Index n = M.cols();
    const Scalar zero(0);

    SmithForm<Scalar> out;
    Matrix<Scalar>& A = out.D;
    A = M;
    out.U = Matrix<Scalar>::Identity(m, m);
    out.U_inverse = Matrix<Scalar>::Identity(m, m);
    out.V = Matrix<Scalar>::Identity(n, n);
    out.V_inverse = Matrix<Scalar>::Identity(n, n);

    auto swap_rows = [&](Index a, Index b) {
        if (a == b)
            return;
        A.row(a).swap(A.row(b));
        out.U.row(a).swap(out.U.row(b));
        out.U_inverse.col(a).swap(out.U_inverse.col(b));
    };
    auto swap_cols = [&](Index a, Index b) {
        if (a == b)
            return;
        A.col(a).swap(A.col(b));
        out.V.col(a).swap(out.V.col(b));
        out.V_inverse.row(a).swap(out.V_inverse.row(b));
    };
    // row(dst) += q * row(src), mirrored on U and U^-1
    auto row_op = [&](Index dst, Index src, const Scalar& q, Index first_col) {
        add_row_multiple(A, dst, src, q, first_col);
        add_row_multiple(out.U, dst, src, q);
        add_col_multiple(out.U_inverse, src, dst, Scalar(-q));
    };
    // col(dst) += q * col(src), mirrored on V and V^-1
    auto col_op = [&](Index dst, Index src, const Scalar& q, Index first_row) {
        add_col_multiple(A, dst, src, q, first_row);
        add_col_multiple(out.V, dst, src, q);
        add_row_multiple(out.V_inverse, src, dst, Scalar(-q));
    };

    const Index steps = std::min(m, n);
    for (Index t = 0; t < steps; ++t)
    {
        bool found = false;
        while (true)
        {
            // Least-magnitude nonzero entry of the trailing block.
            Index pr = -1;
            Index pc = -1;
            Scalar best;
            for (Index j = t; j < n; ++j)
            {
                for (Index i = t; i < m; ++i)
                {
                    if (A(i, j) == zero)
                        continue;
                    Scalar mag = magnitude(A(i, j));
                    if (pr < 0 || mag < best)
                    {
                        best = std::move(mag);
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr < 0)
                break;
            found = true;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool clean = true;
            for (Index i = t + 1; i < m; ++i)
            {
                if (A(i, t) == zero)
                    continue;
                Scalar q = A(i, t) / A(t, t);
                if (q != zero)
                    row_op(i, t, Scalar(-q), t);
                if (A(i, t) != zero)
                    clean = false;
            }
            for (Index j = t + 1; j < n; ++j)
            {
                if (A(t, j) == zero)
                    continue;
                Scalar q = A(t, j) / A(t, t);
                if (q != zero)
                    col_op(j, t, Scalar(-q), t);
                if (A(t, j) != zero)
                    clean = false;
            }
            if (!clean)
                continue;

            // The pivot must divide the whole trailing block.
            Index bad_row = -1;
            for (Index i = t + 1; i < m && bad_row < 0; ++i)
            {
                for (Index j = t + 1; j < n; ++j)
                {
                    if (A(i, j) != zero && A(i, j) % A(t, t) != zero)
                    {
                        bad_row = i;
                        break;
                    }
                }
            }
            if (bad_row < 0)
                break;
            row_op(t, bad_row, Scalar(1), t);
        }
        if (!found)
            break;
        if (A(t, t) < zero)
        {
            A(t, t) = -A(t, t);
            for (Index i = 0; i < n; ++i)
                out.V(i, t) = -out.V(i, t);
            for (Index j = 0; j < n; ++j)
                out.V_inverse(t, j) = -out.V_inverse(t, j);
        }
        out.invariant_factors.push_back(A(t, t));
    }
    return out;
}

/**
 * Column Hermite form M * V = H.
 *
 * H is in column echelon form: column k has its leading (topmost nonzero)
 * entry in row pivot_rows[k], pivot rows strictly increase, pivots are
 * positive, and entries left of a pivot are reduced into [0, pivot).
 * Columns rank() onward are zero, so the matching columns of V span the
 * integer kernel of M.
 */
template <typename Scalar>
struct HermiteForm
{
    Matrix<Scalar> H;
    Matrix<Scalar> V;
    std::vector<Index> pivot_rows;

    Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};

template <typename Scalar>
HermiteForm<Scalar> hermite_normal_form(const Matrix<Scalar>& M)
{
    using detail::add_col_multiple;
    using detail::magnitude;

    const Index m = M.rows();
    const Index n = M.cols();
    const Scalar zero(0);

    HermiteForm<Scalar> out;
    Matrix<Scalar>& H = out.H;
    H = M;
    out.V = Matrix<Scalar>::Identity(n, n);

    auto col_op = [&](Index dst, Index src, const Scalar& q) {
        add_col_multiple(H, dst, src, q);
        add_col_multiple(out.V, dst, src, q);
    };
    auto swap_cols = [&](Index a, Index b) {
        if (a == b)
            return;
        H.col(a).swap(H.col(b));
        out.V.col(a).swap(out.V.col(b));
    };

    Index c = 0;
    for (Index r = 0; r < m && c < n; ++r)
    {
        bool has_pivot = false;
        while (true)
        {
            Index best = -1;
            for (Index j = c; j < n; ++j)
            {
                if (H(r, j) != zero && (best < 0 || magnitude(H(r, j)) < magnitude(H(r, best))))
                    best = j;
            }
            if (best < 0)
                break;
            has_pivot = true;
            swap_cols(c, best);
            bool done = true;
            for (Index j = c + 1; j < n; ++j)
            {
                if (H(r, j) == zero)
                    continue;
                Scalar q = H(r, j) / H(r, c);
                col_op(j, c, Scalar(-q));
                if (H(r, j) != zero)
                    done = false;
            }
            if (done)
                break;
        }
        if (!has_pivot)
            continue;
        if (H(r, c) < zero)
        {
            for (Index i = 0; i < m; ++i)
                H(i, c) = -H(i, c);
            for (Index i = 0; i < n; ++i)
                out.V(i, c) = -out.V(i, c);
        }
        for (Index k = 0; k < c; ++k)
        {
            Scalar q = detail::floor_quotient(H(r, k), H(r, c));
            if (q != zero)
                col_op(k, c, Scalar(-q));
        }
        out.pivot_rows.push_back(r);
        ++c;
    }
    return out;
}

/**
 * Coefficients z with H * z = b for a Hermite form, or nothing when b is
 * outside the column lattice. Multiply by V to solve the original system.
 */
template <typename Scalar>
std::optional<Vector<Scalar>> solve_echelon(const HermiteForm<Scalar>& form, const Vector<Scalar>& b)
{
    const Matrix<Scalar>& H = form.H;
    if (b.size() != H.rows())
        throw std::invalid_argument("solve_echelon: right-hand side has wrong length");
    const Scalar zero(0);
    Vector<Scalar> rest = b;
    Vector<Scalar> z = Vector<Scalar>::Zero(H.cols());
    Index k = 0;
    for (Index r = 0; r < H.rows(); ++r)
    {
        if (k < form.rank() && form.pivot_rows[k] == r)
        {
            if (rest(r) != zero)
            {
                if (rest(r) % H(r, k) != zero)
                    return std::nullopt;
                Scalar q = rest(r) / H(r, k);
                for (Index i = r; i < H.rows(); ++i)
                {
                    if (H(i, k) != zero)
                        rest(i) -= q * H(i, k);
                }
                z(k) = std::move(q);
            }
            ++k;
        }
        else if (rest(r) != zero)
        {
            return std::nullopt;
        }
    }
    return z;
}

/// x with M * x = b, or nothing when b is not in the column lattice of M.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_membership(const HermiteForm<Scalar>& form, const Vector<Scalar>& b)
{
    auto z = solve_echelon(form, b);
    if (!z)
        return std::nullopt;
    return multiply(form.V, *z);
}

template <typename Scalar>
std::optional<Vector<Scalar>> solve_membership(const Matrix<Scalar>& M, const Vector<Scalar>& b)
{
    if (b.size() != M.rows())
        throw std::invalid_argument("solve_membership: right-hand side has wrong length");
    return solve_membership(hermite_normal_form(M), b);
}

/// Basis (as columns) of the saturated lattice {x : M x = 0}.
template <typename Scalar>
Matrix<Scalar> integer_kernel(const Matrix<Scalar>& M)
{
    HermiteForm<Scalar> form = hermite_normal_form(M);
    return form.V.rightCols(M.cols() - form.rank());
}

/// Basis (as columns) of the lattice spanned by the columns of M.
template <typename Scalar>
Matrix<Scalar> lattice_basis(const Matrix<Scalar>& M)
{
    HermiteForm<Scalar> form = hermite_normal_form(M);
    return form.H.leftCols(form.rank());
}

}   // namespace cubab

#endif
