#pragma once

/// @file modring.hpp
/// Canonical arithmetic over Z/p^nZ for an odd prime p. Entries are always
/// stored as representatives in [0, p^n), so equality of values is equality
/// of representations.

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "locoh/errors.hpp"
#include "locoh/intmat.hpp"

namespace locoh {

inline bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
    x %= m;
    return x < 0 ? x + m : x;
}

inline std::int64_t mod_reduce_big(const bigint& x, std::int64_t m) {
    bigint r = x % m;
    if (r < 0) r += m;
    return r.convert_to<std::int64_t>();
}

/// Inverse of a unit modulo m (extended Euclid).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = mod_reduce(a, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw value_error("mod_inverse: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
    return mod_reduce(t0, m);
}

/// p-adic valuation of a nonzero canonical representative.
inline int p_valuation(std::int64_t x, std::int64_t p) {
    if (x == 0)
        throw value_error("p_valuation of zero is undefined");
    int v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

inline std::int64_t int_pow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

/// The modulus p^n, p an odd prime, n >= 1.
struct Modulus {
    std::int64_t p = 0;
    int n = 0;
    std::int64_t value = 0;

    /// Widest supported modulus; keeps sums of products of canonical
    /// representatives inside 64 bits for every desk-scale dimension.
    static constexpr std::int64_t max_value = std::int64_t{1} << 20;

    Modulus(std::int64_t p_, int n_) : p(p_), n(n_) {
        if (!is_odd_prime(p))
            throw value_error("modulus: p must be an odd prime, got " + std::to_string(p_));
        if (n < 1)
            throw value_error("modulus: exponent must be >= 1");
        value = 1;
        for (int i = 0; i < n; ++i) {
            value *= p;
            if (value > max_value)
                throw value_error("modulus: p^n exceeds the supported integer width");
        }
    }

    Modulus reduced(int j) const {
        if (j < 1 || j > n)
            throw value_error("modulus reduction level out of range");
        return Modulus(p, j);
    }

    friend bool operator==(const Modulus&, const Modulus&) = default;

    std::string to_string() const { return std::to_string(p) + "^" + std::to_string(n); }
};

/// Vector over Z/p^nZ, entries canonical.
struct ModVector {
    Modulus modulus;
    std::vector<std::int64_t> entries;

    ModVector(Modulus m, std::vector<std::int64_t> e) : modulus(m), entries(std::move(e)) {
        if (entries.empty())
            throw value_error("vector must have positive length");
        for (auto& x : entries) x = mod_reduce(x, modulus.value);
    }

    static ModVector zero(Modulus m, int len) {
        return ModVector(m, std::vector<std::int64_t>(static_cast<std::size_t>(len), 0));
    }

    int size() const { return static_cast<int>(entries.size()); }

    bool is_zero() const {
        for (auto x : entries)
            if (x != 0) return false;
        return true;
    }

    std::vector<std::int64_t> lift() const { return entries; }

    friend bool operator==(const ModVector&, const ModVector&) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < entries.size(); ++i)
            os << (i ? ", " : "") << entries[i];
        os << ")";
        return os.str();
    }
};

namespace detail {
inline void require_same(const Modulus& a, const Modulus& b, const char* what) {
    if (!(a == b))
        throw value_error(std::string(what) + ": modulus mismatch (" + a.to_string() + " vs " + b.to_string() + ")");
}
} // namespace detail

inline ModVector operator+(const ModVector& a, const ModVector& b) {
    detail::require_same(a.modulus, b.modulus, "vector sum");
    if (a.size() != b.size())
        throw value_error("vector sum: length mismatch");
    std::vector<std::int64_t> e(a.entries);
    for (int i = 0; i < a.size(); ++i) e[i] = mod_reduce(e[i] + b.entries[i], a.modulus.value);
    return ModVector(a.modulus, std::move(e));
}

inline ModVector operator-(const ModVector& a, const ModVector& b) {
    detail::require_same(a.modulus, b.modulus, "vector difference");
    if (a.size() != b.size())
        throw value_error("vector difference: length mismatch");
    std::vector<std::int64_t> e(a.entries);
    for (int i = 0; i < a.size(); ++i) e[i] = mod_reduce(e[i] - b.entries[i], a.modulus.value);
    return ModVector(a.modulus, std::move(e));
}

inline ModVector operator-(const ModVector& a) {
    std::vector<std::int64_t> e(a.entries);
    for (auto& x : e) x = mod_reduce(-x, a.modulus.value);
    return ModVector(a.modulus, std::move(e));
}

inline ModVector operator*(std::int64_t c, const ModVector& a) {
    c = mod_reduce(c, a.modulus.value);
    std::vector<std::int64_t> e(a.entries);
    for (auto& x : e) x = mod_reduce(x * c, a.modulus.value);
    return ModVector(a.modulus, std::move(e));
}

/// Matrix over Z/p^nZ, row-major, entries canonical.
struct ModMatrix {
    Modulus modulus;
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> entries;

    ModMatrix(Modulus m, int r, int c, std::vector<std::int64_t> e)
        : modulus(m), rows(r), cols(c), entries(std::move(e)) {
        if (r < 1 || c < 1)
            throw value_error("matrix dimensions must be positive");
        if (entries.size() != static_cast<std::size_t>(r) * c)
            throw value_error("matrix entry count does not match dimensions");
        for (auto& x : entries) x = mod_reduce(x, modulus.value);
    }

    ModMatrix(Modulus m, int r, int c) : ModMatrix(m, r, c, std::vector<std::int64_t>(static_cast<std::size_t>(r) * c, 0)) {}

    static ModMatrix identity(Modulus m, int n) {
        ModMatrix a(m, n, n);
        for (int i = 0; i < n; ++i) a.at(i, i) = 1;
        return a;
    }

    static ModMatrix scalar(Modulus m, int n, std::int64_t c) {
        ModMatrix a(m, n, n);
        c = mod_reduce(c, m.value);
        for (int i = 0; i < n; ++i) a.at(i, i) = c;
        return a;
    }

    static ModMatrix from_int(const IntMatrix& a, Modulus m) {
        std::vector<std::int64_t> e;
        e.reserve(a.entries.size());
        for (const auto& x : a.entries) e.push_back(mod_reduce_big(x, m.value));
        return ModMatrix(m, a.rows, a.cols, std::move(e));
    }

    std::int64_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    IntMatrix lift() const { return IntMatrix(rows, cols, entries); }

    ModMatrix reduce_level(int j) const {
        Modulus m = modulus.reduced(j);
        std::vector<std::int64_t> e(entries);
        for (auto& x : e) x = mod_reduce(x, m.value);
        return ModMatrix(m, rows, cols, std::move(e));
    }

    ModMatrix minus_identity() const {
        if (rows != cols)
            throw value_error("minus_identity requires a square matrix");
        ModMatrix a(*this);
        for (int i = 0; i < rows; ++i) a.at(i, i) = mod_reduce(a.at(i, i) - 1, modulus.value);
        return a;
    }

    ModMatrix pow(std::int64_t e) const {
        if (rows != cols)
            throw value_error("matrix power requires a square matrix");
        if (e < 0)
            throw value_error("matrix power: negative exponent");
        ModMatrix r = identity(modulus, rows);
        ModMatrix b(*this);
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

    friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
        detail::require_same(a.modulus, b.modulus, "matrix product");
        if (a.cols != b.rows)
            throw value_error("matrix product: dimension mismatch");
        ModMatrix c(a.modulus, a.rows, b.cols);
        const std::int64_t q = a.modulus.value;
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                const std::int64_t aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols; ++j)
                    c.at(i, j) = (c.at(i, j) + aik * b.at(k, j)) % q;
            }
        return c;
    }

    friend ModVector operator*(const ModMatrix& a, const ModVector& v) {
        detail::require_same(a.modulus, v.modulus, "matrix-vector product");
        if (a.cols != v.size())
            throw value_error("matrix-vector product: dimension mismatch");
        std::vector<std::int64_t> e(static_cast<std::size_t>(a.rows), 0);
        const std::int64_t q = a.modulus.value;
        for (int i = 0; i < a.rows; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < a.cols; ++j) s += a.at(i, j) * v.entries[j] % q;
            e[i] = mod_reduce(s, q);
        }
        return ModVector(a.modulus, std::move(e));
    }

    friend ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
        detail::require_same(a.modulus, b.modulus, "matrix sum");
        if (a.rows != b.rows || a.cols != b.cols)
            throw value_error("matrix sum: dimension mismatch");
        ModMatrix c(a);
        for (std::size_t i = 0; i < c.entries.size(); ++i)
            c.entries[i] = mod_reduce(c.entries[i] + b.entries[i], a.modulus.value);
        return c;
    }

    friend ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
        detail::require_same(a.modulus, b.modulus, "matrix difference");
        if (a.rows != b.rows || a.cols != b.cols)
            throw value_error("matrix difference: dimension mismatch");
        ModMatrix c(a);
        for (std::size_t i = 0; i < c.entries.size(); ++i)
            c.entries[i] = mod_reduce(c.entries[i] - b.entries[i], a.modulus.value);
        return c;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j);
            os << "]";
        }
        os << "]";
        return os.str();
    }
};

/// diag(g, Id_extra) in dimension g.rows + extra.
inline ModMatrix block_diag(const ModMatrix& g, int extra) {
    if (g.rows != g.cols)
        throw value_error("block_diag requires a square matrix");
    if (extra < 0)
        throw value_error("block_diag: extra dimensions must be nonnegative");
    ModMatrix a = ModMatrix::identity(g.modulus, g.rows + extra);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) a.at(i, j) = g.at(i, j);
    return a;
}

/// Invertibility over Z/p^nZ is invertibility of the reduction mod p, i.e.
/// full rank over the field F_p.
inline bool is_invertible(const ModMatrix& m) {
    if (m.rows != m.cols) return false;
    const std::int64_t p = m.modulus.p;
    const int n = m.rows;
    std::vector<std::int64_t> w(m.entries);
    for (auto& x : w) x = mod_reduce(x, p);
    auto at = [&](int i, int j) -> std::int64_t& { return w[static_cast<std::size_t>(i) * n + j]; };
    for (int t = 0; t < n; ++t) {
        int pr = -1;
        for (int i = t; i < n; ++i)
            if (at(i, t) != 0) { pr = i; break; }
        if (pr < 0) return false;
        if (pr != t)
            for (int j = 0; j < n; ++j) std::swap(at(t, j), at(pr, j));
        const std::int64_t inv = mod_inverse(at(t, t), p);
        for (int i = t + 1; i < n; ++i) {
            const std::int64_t f = mod_reduce(at(i, t) * inv, p);
            if (f == 0) continue;
            for (int j = t; j < n; ++j) at(i, j) = mod_reduce(at(i, j) - f * at(t, j), p);
        }
    }
    return true;
}

/// Determinant of the canonical lift, reduced mod p^n.
inline std::int64_t det_mod(const ModMatrix& m) {
    return mod_reduce_big(integer_det(m.lift()), m.modulus.value);
}

} // namespace locoh
