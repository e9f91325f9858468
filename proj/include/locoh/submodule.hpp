#pragma once

/// @file submodule.hpp
/// Subgroups of (Z/p^nZ)^r in a canonical generating form, plus the exact
/// linear algebra built on them: column spans, kernels and solving A*x = b
/// over the ring. Solving lifts to the integers, adjoins the p^n*e_i
/// relation columns and runs Smith normal form, so one mechanism answers
/// every membership question.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locoh/errors.hpp"
#include "locoh/intmat.hpp"
#include "locoh/modring.hpp"

namespace locoh {

namespace detail {

/// Triangularizes vectors over Z/p^n by first nonzero position. Pivots are
/// normalized to exact p-powers. With `shadows` the annihilator multiples
/// p^(n-v) * pivot are folded back in, which closes the family row-wise and
/// makes the final cross-reduced form canonical (Howell form).
struct PEchelon {
    Modulus mod;
    int width;
    bool shadows;
    std::vector<std::vector<std::int64_t>> pivot;
    std::vector<int> pivot_val;
    std::vector<char> has_pivot;

    PEchelon(Modulus m, int w, bool sh)
        : mod(m), width(w), shadows(sh), pivot(static_cast<std::size_t>(w)),
          pivot_val(static_cast<std::size_t>(w), 0), has_pivot(static_cast<std::size_t>(w), 0) {}

    void insert(std::vector<std::int64_t> v) {
        const std::int64_t q = mod.value, p = mod.p;
        std::vector<std::vector<std::int64_t>> stack;
        stack.push_back(std::move(v));
        while (!stack.empty()) {
            std::vector<std::int64_t> cur = std::move(stack.back());
            stack.pop_back();
            for (auto& x : cur) x = mod_reduce(x, q);
            int i = 0;
            while (i < width) {
                if (cur[i] == 0) { ++i; continue; }
                const int vc = p_valuation(cur[i], p);
                if (!has_pivot[i]) {
                    const std::int64_t unit = cur[i] / int_pow(p, vc);
                    const std::int64_t ui = mod_inverse(unit, q);
                    for (auto& x : cur) x = mod_reduce(x * ui % q, q);
                    pivot[i] = std::move(cur);
                    pivot_val[i] = vc;
                    has_pivot[i] = 1;
                    if (shadows && vc > 0) {
                        std::vector<std::int64_t> sh(pivot[i]);
                        const std::int64_t f = q / int_pow(p, vc); // p^(n-v)
                        bool nz = false;
                        for (auto& x : sh) { x = mod_reduce(x * f % q, q); nz |= (x != 0); }
                        if (nz) stack.push_back(std::move(sh));
                    }
                    break;
                }
                const int vp = pivot_val[i];
                if (vc >= vp) {
                    const std::int64_t t = cur[i] / int_pow(p, vp);
                    const auto& pv = pivot[i];
                    for (int c = i; c < width; ++c)
                        cur[c] = mod_reduce(cur[c] - t % q * pv[c] % q, q);
                } else {
                    // incoming vector has the smaller valuation: it becomes the pivot
                    const std::int64_t unit = cur[i] / int_pow(p, vc);
                    const std::int64_t ui = mod_inverse(unit, q);
                    for (auto& x : cur) x = mod_reduce(x * ui % q, q);
                    std::swap(cur, pivot[i]);
                    pivot_val[i] = vc;
                    if (shadows && vc > 0) {
                        std::vector<std::int64_t> sh(pivot[i]);
                        const std::int64_t f = q / int_pow(p, vc);
                        bool nz = false;
                        for (auto& x : sh) { x = mod_reduce(x * f % q, q); nz |= (x != 0); }
                        if (nz) stack.push_back(std::move(sh));
                    }
                    // keep reducing the displaced pivot (now in cur)
                }
            }
        }
    }

    /// Pivot vectors in position order; optionally cross-reduced so every
    /// entry sitting in a pivot position of another vector is reduced modulo
    /// that pivot's p-power.
    std::vector<std::vector<std::int64_t>> finish(bool cross_reduce) {
        const std::int64_t q = mod.value, p = mod.p;
        if (cross_reduce) {
            for (int i = 0; i < width; ++i) {
                if (!has_pivot[i]) continue;
                const std::int64_t pw = int_pow(p, pivot_val[i]);
                for (int j = 0; j < width; ++j) {
                    if (j == i || !has_pivot[j]) continue;
                    const std::int64_t t = pivot[j][i] / pw;
                    if (t == 0) continue;
                    for (int c = i; c < width; ++c)
                        pivot[j][c] = mod_reduce(pivot[j][c] - t % q * pivot[i][c] % q, q);
                }
            }
        }
        std::vector<std::vector<std::int64_t>> out;
        for (int i = 0; i < width; ++i)
            if (has_pivot[i]) out.push_back(pivot[i]);
        return out;
    }
};

} // namespace detail

/// A subgroup of (Z/p^nZ)^rank, held by its canonical generators: column
/// echelon with p-power pivots and entries in pivot positions reduced.
/// Equality of submodules is equality of representations.
class Submodule {
  public:
    Submodule(Modulus mod, int rank, const std::vector<ModVector>& generators)
        : mod_(mod), rank_(rank) {
        if (rank < 1)
            throw value_error("submodule rank must be positive");
        detail::PEchelon ech(mod, rank, /*shadows=*/true);
        for (const auto& g : generators) {
            detail::require_same(g.modulus, mod, "submodule generator");
            if (g.size() != rank)
                throw value_error("submodule generator has wrong length");
            ech.insert(g.entries);
        }
        for (auto& col : ech.finish(/*cross_reduce=*/true))
            gens_.emplace_back(mod, std::move(col));
        recompute_index();
    }

    static Submodule zero(Modulus mod, int rank) { return Submodule(mod, rank, {}); }

    static Submodule full(Modulus mod, int rank) {
        std::vector<ModVector> cols;
        for (int i = 0; i < rank; ++i) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(rank), 0);
            e[static_cast<std::size_t>(i)] = 1;
            cols.emplace_back(mod, std::move(e));
        }
        return Submodule(mod, rank, cols);
    }

    const Modulus& modulus() const { return mod_; }
    int rank() const { return rank_; }
    const std::vector<ModVector>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }

    /// log_p of the index in (Z/p^nZ)^rank.
    int index_exponent() const { return index_exp_; }

    std::int64_t index() const {
        std::int64_t r = 1;
        for (int i = 0; i < index_exp_; ++i) r = checked_mul(r, mod_.p);
        return r;
    }

    /// log_p of the number of elements.
    int size_exponent() const { return mod_.n * rank_ - index_exp_; }

    bool contains(const ModVector& v) const {
        detail::require_same(v.modulus, mod_, "submodule membership");
        if (v.size() != rank_)
            throw value_error("submodule membership: length mismatch");
        const std::int64_t q = mod_.value, p = mod_.p;
        std::vector<std::int64_t> w(v.entries);
        std::size_t gi = 0;
        for (int i = 0; i < rank_; ++i) {
            if (gi < gens_.size() && first_nonzero(gens_[gi].entries) == i) {
                const std::int64_t piv = gens_[gi].entries[static_cast<std::size_t>(i)];
                if (w[static_cast<std::size_t>(i)] != 0) {
                    if (w[static_cast<std::size_t>(i)] % piv != 0) return false;
                    const std::int64_t t = w[static_cast<std::size_t>(i)] / piv;
                    for (int c = i; c < rank_; ++c)
                        w[static_cast<std::size_t>(c)] =
                            mod_reduce(w[static_cast<std::size_t>(c)] - t % q * gens_[gi].entries[static_cast<std::size_t>(c)] % q, q);
                }
                ++gi;
            } else if (w[static_cast<std::size_t>(i)] != 0) {
                return false;
            }
        }
        (void)p;
        return true;
    }

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.mod_ == b.mod_ && a.rank_ == b.rank_ && a.gens_ == b.gens_;
    }

  private:
    static int first_nonzero(const std::vector<std::int64_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    }

    void recompute_index() {
        int size_exp = 0;
        for (const auto& g : gens_) {
            const int row = first_nonzero(g.entries);
            const int v = p_valuation(g.entries[static_cast<std::size_t>(row)], mod_.p);
            size_exp += mod_.n - v;
        }
        index_exp_ = mod_.n * rank_ - size_exp;
    }

    Modulus mod_;
    int rank_;
    std::vector<ModVector> gens_;
    int index_exp_ = 0;
};

inline Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    if (!(a.modulus() == b.modulus()) || a.rank() != b.rank())
        throw value_error("submodule sum: ambient mismatch");
    std::vector<ModVector> gens(a.generators());
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Submodule(a.modulus(), a.rank(), gens);
}

/// Column span of a matrix over Z/p^nZ.
inline Submodule image_submodule(const ModMatrix& a) {
    std::vector<ModVector> cols;
    cols.reserve(static_cast<std::size_t>(a.cols));
    for (int j = 0; j < a.cols; ++j) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(a.rows));
        for (int i = 0; i < a.rows; ++i) e[static_cast<std::size_t>(i)] = a.at(i, j);
        cols.emplace_back(a.modulus, std::move(e));
    }
    return Submodule(a.modulus, a.rows, cols);
}

namespace detail {

/// Kernel generators mod p^n of an integer matrix, through Smith normal
/// form: with U*A*V = S and x = V*y, the system A*x = 0 (mod p^n) becomes
/// s_i*y_i = 0 (mod p^n), solved by y_i in (p^n/gcd(s_i, p^n))*Z.
inline std::vector<std::vector<std::int64_t>> kernel_generators_mod(const IntMatrix& a, const Modulus& mod) {
    auto parts = snf_engine(a, /*u*/ false, /*v*/ true, /*uinv*/ false);
    const IntMatrix& v = *parts.v;
    const IntMatrix& s = parts.s;
    const int k = std::min(s.rows, s.cols);
    const std::int64_t q = mod.value;
    std::vector<std::vector<std::int64_t>> gens;
    for (int j = 0; j < a.cols; ++j) {
        const bigint sj = j < k ? s.at(j, j) : bigint(0);
        const std::int64_t mult = (q / gcd(sj, bigint(q))).convert_to<std::int64_t>();
        std::vector<std::int64_t> g(static_cast<std::size_t>(a.cols));
        bool nz = false;
        for (int i = 0; i < a.cols; ++i) {
            g[static_cast<std::size_t>(i)] = mod_reduce(mod_reduce_big(v.at(i, j), q) * mult % q, q);
            nz |= (g[static_cast<std::size_t>(i)] != 0);
        }
        if (nz) gens.push_back(std::move(g));
    }
    return gens;
}

} // namespace detail

/// Kernel of the map x -> a*x over Z/p^nZ. The rows of a are first
/// echelonized over the ring (the mod-p^n row span, hence the kernel, is
/// unchanged), then the integer lift goes through Smith normal form.
inline Submodule kernel_submodule(const ModMatrix& a) {
    detail::PEchelon ech(a.modulus, a.cols, /*shadows=*/false);
    for (int i = 0; i < a.rows; ++i) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(a.cols));
        for (int j = 0; j < a.cols; ++j) row[static_cast<std::size_t>(j)] = a.at(i, j);
        ech.insert(std::move(row));
    }
    auto rows = ech.finish(/*cross_reduce=*/false);
    if (rows.empty()) return Submodule::full(a.modulus, a.cols);
    IntMatrix e(static_cast<int>(rows.size()), a.cols);
    for (int i = 0; i < e.rows; ++i)
        for (int j = 0; j < e.cols; ++j) e.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::vector<ModVector> gens;
    for (auto& g : detail::kernel_generators_mod(e, a.modulus))
        gens.emplace_back(a.modulus, std::move(g));
    return Submodule(a.modulus, a.cols, gens);
}

inline Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
    if (!(a.modulus() == b.modulus()) || a.rank() != b.rank())
        throw value_error("submodule intersection: ambient mismatch");
    if (a.is_zero() || b.is_zero()) return Submodule::zero(a.modulus(), a.rank());
    const int sa = static_cast<int>(a.generators().size());
    const int sb = static_cast<int>(b.generators().size());
    ModMatrix joint(a.modulus(), a.rank(), sa + sb);
    for (int j = 0; j < sa; ++j)
        for (int i = 0; i < a.rank(); ++i) joint.at(i, j) = a.generators()[static_cast<std::size_t>(j)].entries[static_cast<std::size_t>(i)];
    for (int j = 0; j < sb; ++j)
        for (int i = 0; i < a.rank(); ++i) joint.at(i, sa + j) = mod_reduce(-b.generators()[static_cast<std::size_t>(j)].entries[static_cast<std::size_t>(i)], a.modulus().value);
    Submodule ker = kernel_submodule(joint);
    std::vector<ModVector> gens;
    for (const auto& k : ker.generators()) {
        std::vector<std::int64_t> w(static_cast<std::size_t>(a.rank()), 0);
        for (int j = 0; j < sa; ++j) {
            const std::int64_t c = k.entries[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            for (int i = 0; i < a.rank(); ++i)
                w[static_cast<std::size_t>(i)] = mod_reduce(
                    w[static_cast<std::size_t>(i)] + c * a.generators()[static_cast<std::size_t>(j)].entries[static_cast<std::size_t>(i)] % a.modulus().value,
                    a.modulus().value);
        }
        gens.emplace_back(a.modulus(), std::move(w));
    }
    return Submodule(a.modulus(), a.rank(), gens);
}

/// Result of solving a*x = b over Z/p^nZ: one particular solution when the
/// system is consistent, plus the full kernel of a.
struct LinearSolution {
    std::optional<ModVector> solution;
    Submodule kernel;

    bool solvable() const { return solution.has_value(); }
};

/// Solves a*x = b over Z/p^nZ by lifting to the integers, adjoining the
/// relation columns p^n*e_i and running Smith normal form on [a | p^n*I].
inline LinearSolution solve_linear(const ModMatrix& a, const ModVector& b) {
    detail::require_same(a.modulus, b.modulus, "linear solve");
    if (a.rows != b.size())
        throw value_error("linear solve: shape mismatch");
    const std::int64_t q = a.modulus.value;
    const int m = a.rows, c = a.cols;
    IntMatrix ext(m, c + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < c; ++j) ext.at(i, j) = a.at(i, j);
        ext.at(i, c + i) = q;
    }
    auto parts = detail::snf_engine(ext, /*u*/ true, /*v*/ true, /*uinv*/ false);
    const IntMatrix& u = *parts.u;
    const IntMatrix& v = *parts.v;
    const IntMatrix& s = parts.s;

    // S*t = U*b; the diagonal has full length m and no zeros because of the
    // adjoined relation columns.
    std::vector<bigint> t(static_cast<std::size_t>(c + m), bigint(0));
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
        bigint ub = 0;
        for (int j = 0; j < m; ++j) ub += u.at(i, j) * b.entries[static_cast<std::size_t>(j)];
        const bigint& si = s.at(i, i);
        if (si == 0) {
            ok = (ub == 0);
        } else if (ub % si != 0) {
            ok = false;
        } else {
            t[static_cast<std::size_t>(i)] = ub / si;
        }
    }

    LinearSolution out{std::nullopt, kernel_submodule(a)};
    if (!ok) return out;
    std::vector<std::int64_t> x(static_cast<std::size_t>(c), 0);
    for (int i = 0; i < c; ++i) {
        bigint acc = 0;
        for (int j = 0; j < c + m; ++j) {
            if (t[static_cast<std::size_t>(j)] == 0) continue;
            acc += v.at(i, j) * t[static_cast<std::size_t>(j)];
        }
        x[static_cast<std::size_t>(i)] = mod_reduce_big(acc, q);
    }
    out.solution = ModVector(a.modulus, std::move(x));
    return out;
}

} // namespace locoh
