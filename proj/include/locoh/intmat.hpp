#pragma once

/// @file intmat.hpp
/// Exact integer matrices: arbitrary-precision entries, Bareiss
/// determinants and Smith normal form with unimodular transforms. The
/// transforms of a Smith reduction routinely outgrow any fixed width even
/// for small inputs, so everything here computes in cpp_int; the mod-p^n
/// fast paths elsewhere stay on machine integers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "locoh/errors.hpp"

namespace locoh {

using bigint = boost::multiprecision::cpp_int;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw resource_error("integer overflow in exact arithmetic (add)");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw resource_error("integer overflow in exact arithmetic (sub)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw resource_error("integer overflow in exact arithmetic (mul)");
    return r;
}

inline std::int64_t to_int64(const bigint& x, const char* what) {
    if (x > static_cast<std::int64_t>(INT64_MAX) || x < static_cast<std::int64_t>(INT64_MIN))
        throw resource_error(std::string(what) + " exceeds 64-bit range");
    return x.convert_to<std::int64_t>();
}

/// Dense row-major integer matrix with exact arbitrary-precision entries.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<bigint> entries;

    IntMatrix() = default;

    IntMatrix(int r, int c) : rows(r), cols(c) {
        if (r < 1 || c < 1)
            throw value_error("matrix dimensions must be positive");
        entries.assign(static_cast<std::size_t>(r) * c, bigint(0));
    }

    IntMatrix(int r, int c, std::vector<bigint> e) : rows(r), cols(c), entries(std::move(e)) {
        if (r < 1 || c < 1)
            throw value_error("matrix dimensions must be positive");
        if (entries.size() != static_cast<std::size_t>(r) * c)
            throw value_error("matrix entry count does not match dimensions");
    }

    IntMatrix(int r, int c, const std::vector<std::int64_t>& e)
        : IntMatrix(r, c, std::vector<bigint>(e.begin(), e.end())) {}

    IntMatrix(int r, int c, std::initializer_list<std::int64_t> e)
        : IntMatrix(r, c, std::vector<bigint>(e.begin(), e.end())) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bigint& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const bigint& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows)
        throw value_error("matrix product: dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const bigint& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

/// Exact determinant via fraction-free (Bareiss) elimination.
inline bigint integer_det(const IntMatrix& a) {
    if (a.rows != a.cols)
        throw value_error("determinant requires a square matrix");
    const int n = a.rows;
    std::vector<bigint> w(a.entries);
    auto at = [&](int i, int j) -> bigint& { return w[static_cast<std::size_t>(i) * n + j]; };
    bigint prev = 1;
    int sign = 1;
    for (int t = 0; t + 1 < n; ++t) {
        if (at(t, t) == 0) {
            int pr = -1;
            for (int i = t + 1; i < n; ++i)
                if (at(i, t) != 0) { pr = i; break; }
            if (pr < 0) return 0;
            for (int j = t; j < n; ++j) std::swap(at(t, j), at(pr, j));
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i) {
            for (int j = t + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(t, t) - at(i, t) * at(t, j)) / prev; // exact
            at(i, t) = 0;
        }
        prev = at(t, t);
    }
    return sign < 0 ? bigint(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

/// U*A*V = S with U, V unimodular and S diagonal with a divisibility chain.
/// invariant_factors lists the full diagonal of S (nonnegative, units and
/// zeros included).
struct SNFResult {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
    std::vector<bigint> invariant_factors;
    int det_u = 1; // tracked exactly through the row operations
    int det_v = 1;
};

namespace detail {

struct SnfParts {
    IntMatrix s;
    std::optional<IntMatrix> u, v, u_inv;
    int det_u = 1;
    int det_v = 1;
};

/// Core diagonalization. Pivot selection: smallest nonzero absolute value in
/// the trailing submatrix, ties broken by lowest (row, col). Elimination is
/// Euclidean descent with round-to-nearest quotients; a residue re-selects
/// the pivot before the row sweep runs, which keeps residues out of the
/// trailing submatrix.
inline SnfParts snf_engine(IntMatrix a, bool want_u, bool want_v, bool want_u_inv) {
    const int m = a.rows, n = a.cols, k = std::min(m, n);
    SnfParts out;
    if (want_u) out.u = IntMatrix::identity(m);
    if (want_v) out.v = IntMatrix::identity(n);
    if (want_u_inv) out.u_inv = IntMatrix::identity(m);

    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
        if (out.u)
            for (int c = 0; c < m; ++c) std::swap(out.u->at(i, c), out.u->at(j, c));
        if (out.u_inv)
            for (int r = 0; r < m; ++r) std::swap(out.u_inv->at(r, i), out.u_inv->at(r, j));
        out.det_u = -out.det_u;
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
        if (out.v)
            for (int r = 0; r < n; ++r) std::swap(out.v->at(r, i), out.v->at(r, j));
        out.det_v = -out.det_v;
    };
    auto row_axpy = [&](int i, int j, const bigint& c) { // row_i += c * row_j
        if (c == 0) return;
        for (int col = 0; col < n; ++col) a.at(i, col) += c * a.at(j, col);
        if (out.u)
            for (int col = 0; col < m; ++col) out.u->at(i, col) += c * out.u->at(j, col);
        if (out.u_inv) // inverse op on the right: col_j -= c * col_i
            for (int r = 0; r < m; ++r) out.u_inv->at(r, j) -= c * out.u_inv->at(r, i);
    };
    auto col_axpy = [&](int j, int i, const bigint& c) { // col_j += c * col_i
        if (c == 0) return;
        for (int r = 0; r < m; ++r) a.at(r, j) += c * a.at(r, i);
        if (out.v)
            for (int r = 0; r < n; ++r) out.v->at(r, j) += c * out.v->at(r, i);
    };
    auto row_negate = [&](int i) {
        for (int c = 0; c < n; ++c) a.at(i, c) = -a.at(i, c);
        if (out.u)
            for (int c = 0; c < m; ++c) out.u->at(i, c) = -out.u->at(i, c);
        if (out.u_inv)
            for (int r = 0; r < m; ++r) out.u_inv->at(r, i) = -out.u_inv->at(r, i);
        out.det_u = -out.det_u;
    };

    // Round-to-nearest quotient: balanced remainders keep the Euclid descent
    // geometric, which is what keeps the transform entries moderate.
    auto divround = [](const bigint& x, const bigint& y) {
        bigint q = x / y;
        const bigint r = x - q * y;
        if (r != 0 && 2 * abs(r) > abs(y)) q += ((x < 0) == (y < 0)) ? 1 : -1;
        return q;
    };

    for (int t = 0; t < k; ++t) {
        for (;;) {
            int pr = -1, pc = -1;
            bigint best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const bigint& x = a.at(i, j);
                    if (x == 0) continue;
                    bigint mag = abs(x);
                    if (pr < 0 || mag < best) { best = std::move(mag); pr = i; pc = j; }
                }
            if (pr < 0) break; // trailing submatrix is zero
            row_swap(t, pr);
            col_swap(t, pc);

            // Clear the pivot column. Any residue shrinks the global
            // minimum; re-select before sweeping the row, otherwise the row
            // sweep spreads residues through the whole submatrix.
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                row_axpy(i, t, -divround(a.at(i, t), a.at(t, t)));
                if (a.at(i, t) != 0) clean = false;
            }
            if (!clean) continue;
            // With the column clean these column ops only modify row t.
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                col_axpy(j, t, -divround(a.at(t, j), a.at(t, t)));
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot now lone in its row and column: enforce divisibility
            const bigint piv = a.at(t, t);
            int fr = -1;
            for (int i = t + 1; i < m && fr < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a.at(i, j) % piv != 0) { fr = i; break; }
            if (fr < 0) break;
            row_axpy(t, fr, 1);
        }
        if (a.at(t, t) < 0) row_negate(t);
    }

    out.s = std::move(a);
    return out;
}

} // namespace detail

inline SNFResult smith_normal_form(const IntMatrix& a) {
    auto parts = detail::snf_engine(a, true, true, false);
    SNFResult r;
    r.s = std::move(parts.s);
    r.u = std::move(*parts.u);
    r.v = std::move(*parts.v);
    r.det_u = parts.det_u;
    r.det_v = parts.det_v;
    const int k = std::min(r.s.rows, r.s.cols);
    r.invariant_factors.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) r.invariant_factors.push_back(r.s.at(i, i));
    return r;
}

} // namespace locoh
