#pragma once

/// @file cohomology.hpp
/// 1-cocycles of an enumerated matrix group G on the natural module
/// (Z/p^jZ)^r (the action at level j < n is through the reduction of the
/// matrices). Z^1 is cut out over the full element table: the constraint
/// matrix has |G|^2*r rows and |G|*r columns, so nothing depends on finding
/// a presentation of G. H^1 and H^1_loc are reported as invariant-factor
/// lists with basis cocycles and a coordinate oracle.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locoh/caps.hpp"
#include "locoh/errors.hpp"
#include "locoh/matgroup.hpp"
#include "locoh/modring.hpp"
#include "locoh/submodule.hpp"

namespace locoh {

/// A 1-cocycle as a full value table over the group, indexed by element
/// index. Does not own the group; keep the group alive while using it.
struct Cocycle {
    const MatrixGroup* group = nullptr;
    int level = 0;
    std::vector<ModVector> values;

    Modulus value_modulus() const { return group->modulus.reduced(level); }
};

namespace detail {

inline std::vector<ModMatrix> level_actions(const MatrixGroup& g, int level) {
    std::vector<ModMatrix> acts;
    acts.reserve(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) acts.push_back(g.element(i).reduce_level(level));
    return acts;
}

} // namespace detail

inline std::vector<std::int64_t> cocycle_flatten(const Cocycle& z) {
    const int r = z.group->dim;
    std::vector<std::int64_t> flat;
    flat.reserve(static_cast<std::size_t>(z.group->order()) * r);
    for (const auto& v : z.values) flat.insert(flat.end(), v.entries.begin(), v.entries.end());
    return flat;
}

inline Cocycle cocycle_unflatten(const MatrixGroup& g, int level, const std::vector<std::int64_t>& flat) {
    const int r = g.dim;
    const Modulus m = g.modulus.reduced(level);
    if (flat.size() != static_cast<std::size_t>(g.order()) * r)
        throw value_error("cocycle table has wrong length");
    std::vector<ModVector> vals;
    vals.reserve(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        vals.emplace_back(m, std::vector<std::int64_t>(flat.begin() + static_cast<std::ptrdiff_t>(i) * r,
                                                       flat.begin() + static_cast<std::ptrdiff_t>(i + 1) * r));
    return Cocycle{&g, level, std::move(vals)};
}

/// Validating constructor: checks Z_e = 0 and the cocycle identity
/// Z_{gh} = Z_g + g*Z_h over every pair of the multiplication table.
inline Cocycle make_cocycle(const MatrixGroup& g, int level, std::vector<ModVector> values) {
    const Modulus m = g.modulus.reduced(level);
    if (static_cast<int>(values.size()) != g.order())
        throw value_error("cocycle needs one value per group element");
    for (const auto& v : values) {
        detail::require_same(v.modulus, m, "cocycle value");
        if (v.size() != g.dim)
            throw value_error("cocycle value has wrong length");
    }
    if (!values[0].is_zero())
        throw value_error("cocycle value at the identity must be zero");
    const auto acts = detail::level_actions(g, level);
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) {
            const ModVector rhs = values[static_cast<std::size_t>(i)] + acts[static_cast<std::size_t>(i)] * values[static_cast<std::size_t>(j)];
            if (!(values[static_cast<std::size_t>(g.mul_index(i, j))] == rhs))
                throw value_error("cocycle identity fails at pair (" + g.word_string(i) + ", " + g.word_string(j) + ")");
        }
    return Cocycle{&g, level, std::move(values)};
}

inline Cocycle zero_cocycle(const MatrixGroup& g, int level) {
    std::vector<ModVector> vals(static_cast<std::size_t>(g.order()),
                                ModVector::zero(g.modulus.reduced(level), g.dim));
    return Cocycle{&g, level, std::move(vals)};
}

/// The coboundary g -> (g-1)w.
inline Cocycle coboundary(const MatrixGroup& g, int level, const ModVector& w) {
    const Modulus m = g.modulus.reduced(level);
    detail::require_same(w.modulus, m, "coboundary seed");
    if (w.size() != g.dim)
        throw value_error("coboundary seed has wrong length");
    const auto acts = detail::level_actions(g, level);
    std::vector<ModVector> vals;
    vals.reserve(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) vals.push_back(acts[static_cast<std::size_t>(i)] * w - w);
    return Cocycle{&g, level, std::move(vals)};
}

/// B^1 as a submodule of M^{|G|}.
inline Submodule coboundary_space(const MatrixGroup& g, int level) {
    const Modulus m = g.modulus.reduced(level);
    const int r = g.dim;
    const int rows = g.order() * r;
    ModMatrix d(m, rows, r);
    const auto acts = detail::level_actions(g, level);
    for (int i = 0; i < g.order(); ++i)
        for (int t = 0; t < r; ++t)
            for (int s = 0; s < r; ++s) {
                std::int64_t e = acts[static_cast<std::size_t>(i)].at(t, s);
                if (t == s) e -= 1;
                d.at(i * r + t, s) = mod_reduce(e, m.value);
            }
    return image_submodule(d);
}

namespace detail {

inline void check_constraint_cap(const MatrixGroup& g, std::int64_t cap) {
    const std::int64_t n = g.order(), r = g.dim;
    const std::int64_t rows = checked_mul(checked_mul(n, n), r);
    const std::int64_t entries = checked_mul(rows, checked_mul(n, r));
    if (entries > cap)
        throw resource_error("cocycle constraint matrix of " + std::to_string(entries) +
                             " entries exceeds cap of " + std::to_string(cap));
}

/// Streams the |G|^2*r cocycle-identity rows into a ring echelon.
inline void stream_cocycle_rows(const MatrixGroup& g, const std::vector<ModMatrix>& acts, PEchelon& ech) {
    const int n = g.order(), r = g.dim;
    const int m = n * r;
    std::vector<std::int64_t> row(static_cast<std::size_t>(m));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = g.mul_index(a, b);
            for (int t = 0; t < r; ++t) {
                std::fill(row.begin(), row.end(), 0);
                row[static_cast<std::size_t>(ab) * r + t] += 1;
                row[static_cast<std::size_t>(a) * r + t] -= 1;
                for (int s = 0; s < r; ++s)
                    row[static_cast<std::size_t>(b) * r + s] -= acts[static_cast<std::size_t>(a)].at(t, s);
                bool nz = false;
                for (auto x : row) nz |= (x != 0);
                if (nz) ech.insert(row);
            }
        }
}

inline Submodule kernel_of_echelon(PEchelon& ech, const Modulus& m, int width) {
    auto rows = ech.finish(/*cross_reduce=*/false);
    if (rows.empty()) return Submodule::full(m, width);
    IntMatrix e(static_cast<int>(rows.size()), width);
    for (int i = 0; i < e.rows; ++i)
        for (int j = 0; j < e.cols; ++j) e.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::vector<ModVector> gens;
    for (auto& gvec : kernel_generators_mod(e, m)) gens.emplace_back(m, std::move(gvec));
    return Submodule(m, width, gens);
}

} // namespace detail

/// Z^1(G, M) as a submodule of M^{|G|}.
inline Submodule cocycle_space(const MatrixGroup& g, int level,
                               std::int64_t constraint_cap = Caps{}.constraint_entries) {
    detail::check_constraint_cap(g, constraint_cap);
    const Modulus m = g.modulus.reduced(level);
    const auto acts = detail::level_actions(g, level);
    detail::PEchelon ech(m, g.order() * g.dim, /*shadows=*/false);
    detail::stream_cocycle_rows(g, acts, ech);
    return detail::kernel_of_echelon(ech, m, g.order() * g.dim);
}

/// Builds the unique cocycle with the given generator values along the BFS
/// words, then re-derives every table entry from the multiplication table.
/// An assignment that violates a relation of the group is rejected.
inline Cocycle extend_from_generators(const MatrixGroup& g, int level, const std::vector<ModVector>& generator_values) {
    if (generator_values.size() != g.generators.size())
        throw value_error("extend_from_generators: need exactly one value per generator");
    const Modulus m = g.modulus.reduced(level);
    const auto acts = detail::level_actions(g, level);
    std::vector<ModVector> vals;
    vals.reserve(static_cast<std::size_t>(g.order()));
    vals.push_back(ModVector::zero(m, g.dim));
    for (int i = 1; i < g.order(); ++i) {
        const int par = g.parent[static_cast<std::size_t>(i)];
        const int gen = g.via_generator[static_cast<std::size_t>(i)];
        const ModVector& gv = generator_values[static_cast<std::size_t>(gen)];
        detail::require_same(gv.modulus, m, "generator assignment");
        if (gv.size() != g.dim)
            throw value_error("generator assignment has wrong length");
        vals.push_back(vals[static_cast<std::size_t>(par)] + acts[static_cast<std::size_t>(par)] * gv);
    }
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) {
            const ModVector rhs = vals[static_cast<std::size_t>(i)] + acts[static_cast<std::size_t>(i)] * vals[static_cast<std::size_t>(j)];
            const ModVector& lhs = vals[static_cast<std::size_t>(g.mul_index(i, j))];
            if (!(lhs == rhs))
                throw value_error("inconsistent generator assignment: cocycle identity fails at (" +
                                  g.word_string(i) + ", " + g.word_string(j) + "), discrepancy " +
                                  (lhs - rhs).to_string());
        }
    return Cocycle{&g, level, std::move(vals)};
}

struct LocalWitness {
    int generator = 0; // element index of the canonical cyclic generator
    std::optional<ModVector> witness;
};

struct LocalTriviality {
    bool locally_trivial = false;
    std::vector<LocalWitness> witnesses;
};

/// Checks Z_g in Im(g-1) at the canonical generator of every maximal cyclic
/// subgroup, returning the witness W_g where it exists. A witness at a
/// generator serves every power of it, so this decides the local conditions
/// for all of G.
inline LocalTriviality is_locally_trivial(const Cocycle& z) {
    const MatrixGroup& g = *z.group;
    LocalTriviality out{true, {}};
    for (const auto& cyc : cyclic_subgroups(g)) {
        const ModMatrix act = g.element(cyc.generator).reduce_level(z.level);
        LinearSolution sol = solve_linear(act.minus_identity(), z.values[static_cast<std::size_t>(cyc.generator)]);
        out.witnesses.push_back({cyc.generator, sol.solution});
        if (!sol.solvable()) out.locally_trivial = false;
    }
    return out;
}

/// A cohomology group presented by invariant factors with basis cocycles.
/// Like Cocycle, the basis and the coordinate oracle refer to the group the
/// result was computed from; keep that group alive while using them.
class H1Result {
  public:
    const std::vector<std::int64_t>& invariant_factors() const { return impl_->factors; }
    const std::vector<Cocycle>& basis() const { return impl_->basis; }
    bool trivial() const { return impl_->factors.empty(); }

    /// Coordinates of the class of z in the basis, canonical mod the
    /// invariant factors. Throws value_error when z is not in the subgroup
    /// this quotient was built from.
    std::vector<std::int64_t> class_coordinates(const Cocycle& z) const {
        const Impl& im = *impl_;
        if (z.group != im.group || z.level != im.level)
            throw value_error("class_coordinates: cocycle belongs to a different computation");
        const std::vector<std::int64_t> b = cocycle_flatten(z);
        std::vector<bigint> t(static_cast<std::size_t>(im.m), bigint(0));
        for (int i = 0; i < im.m; ++i) {
            bigint ub = 0;
            for (int j = 0; j < im.m; ++j) ub += im.solve_u.at(i, j) * b[static_cast<std::size_t>(j)];
            const bigint& si = im.solve_diag[static_cast<std::size_t>(i)];
            if (ub % si != 0)
                throw value_error("class_coordinates: cocycle is not in the subgroup");
            t[static_cast<std::size_t>(i)] = ub / si;
        }
        std::vector<std::int64_t> coords;
        if (im.alpha == 0) return coords;
        std::vector<bigint> a(static_cast<std::size_t>(im.alpha), bigint(0));
        for (int i = 0; i < im.alpha; ++i) {
            bigint acc = 0;
            for (int j = 0; j < im.m; ++j)
                if (t[static_cast<std::size_t>(j)] != 0) acc += im.solve_v.at(i, j) * t[static_cast<std::size_t>(j)];
            a[static_cast<std::size_t>(i)] = std::move(acc);
        }
        coords.reserve(im.kept.size());
        for (std::size_t kk = 0; kk < im.kept.size(); ++kk) {
            const int j = im.kept[kk];
            bigint c = 0;
            for (int i = 0; i < im.alpha; ++i) c += im.pres_u.at(j, i) * a[static_cast<std::size_t>(i)];
            coords.push_back(mod_reduce_big(c, im.factors[kk]));
        }
        return coords;
    }

    std::int64_t class_order(const Cocycle& z) const {
        const auto coords = class_coordinates(z);
        std::int64_t ord = 1;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            const std::int64_t d = impl_->factors[k];
            ord = std::lcm(ord, d / std::gcd(d, coords[k]));
        }
        return ord;
    }

    /// One cocycle per class; guarded against quotients too large to list.
    std::vector<Cocycle> all_class_representatives() const {
        const Impl& im = *impl_;
        std::int64_t total = 1;
        for (auto f : im.factors) {
            total = checked_mul(total, f);
            if (total > 10000)
                throw resource_error("cohomology group too large to enumerate classwise");
        }
        std::vector<Cocycle> reps;
        std::vector<std::int64_t> c(im.factors.size(), 0);
        for (;;) {
            std::vector<std::int64_t> flat(static_cast<std::size_t>(im.m), 0);
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (c[k] == 0) continue;
                const auto part = cocycle_flatten(im.basis[k]);
                for (int i = 0; i < im.m; ++i)
                    flat[static_cast<std::size_t>(i)] =
                        mod_reduce(flat[static_cast<std::size_t>(i)] + c[k] * part[static_cast<std::size_t>(i)], im.level_value);
            }
            reps.push_back(cocycle_unflatten(*im.group, im.level, flat));
            std::size_t k = 0;
            for (; k < c.size(); ++k) {
                if (++c[k] < im.factors[k]) break;
                c[k] = 0;
            }
            if (k == c.size()) break;
        }
        return reps;
    }

  private:
    struct Impl {
        const MatrixGroup* group = nullptr;
        int level = 0;
        std::int64_t level_value = 0;
        int m = 0;      // ambient dimension |G|*r
        int alpha = 0;  // number of canonical generators of the subspace
        IntMatrix solve_u;                    // from SNF of [Z | B | q*I]
        std::vector<bigint> solve_diag;
        IntMatrix solve_v;                    // only the first alpha rows are read
        IntMatrix pres_u;                     // from SNF of the relation matrix
        std::vector<int> kept;                // presentation positions with factor > 1
        std::vector<std::int64_t> factors;
        std::vector<Cocycle> basis;
    };

    std::shared_ptr<const Impl> impl_;

    friend H1Result h1_quotient(const MatrixGroup&, int, const Submodule&);
};

/// Quotient of a subspace of Z^1 by B^1, presented by invariant factors.
inline H1Result h1_quotient(const MatrixGroup& g, int level, const Submodule& space) {
    const Modulus m = g.modulus.reduced(level);
    const int amb = g.order() * g.dim;
    if (space.rank() != amb || !(space.modulus() == m))
        throw value_error("h1_quotient: subspace has wrong ambient");
    const int alpha = static_cast<int>(space.generators().size());
    const int r = g.dim;
    const std::int64_t q = m.value;
    const auto acts = detail::level_actions(g, level);

    IntMatrix w(amb, alpha + r + amb);
    for (int j = 0; j < alpha; ++j)
        for (int i = 0; i < amb; ++i)
            w.at(i, j) = space.generators()[static_cast<std::size_t>(j)].entries[static_cast<std::size_t>(i)];
    for (int j = 0; j < r; ++j)
        for (int a = 0; a < g.order(); ++a)
            for (int t = 0; t < r; ++t) {
                std::int64_t e = acts[static_cast<std::size_t>(a)].at(t, j);
                if (t == j) e -= 1;
                w.at(a * r + t, alpha + j) = mod_reduce(e, q);
            }
    for (int i = 0; i < amb; ++i) w.at(i, alpha + r + i) = q;

    auto wparts = detail::snf_engine(w, /*u*/ true, /*v*/ true, /*uinv*/ false);
    auto impl = std::make_shared<H1Result::Impl>();
    impl->group = &g;
    impl->level = level;
    impl->level_value = q;
    impl->m = amb;
    impl->alpha = alpha;
    impl->solve_u = std::move(*wparts.u);
    impl->solve_diag.reserve(static_cast<std::size_t>(amb));
    for (int i = 0; i < amb; ++i) {
        if (wparts.s.at(i, i) == 0) throw std::logic_error("h1_quotient: relation columns lost");
        impl->solve_diag.push_back(wparts.s.at(i, i));
    }
    impl->solve_v = std::move(*wparts.v);

    if (alpha > 0) {
        // relations on the alpha generators: first coordinates of the
        // integer kernel of [Z | B | q*I]
        IntMatrix rel(alpha, alpha + r);
        for (int k = 0; k < alpha + r; ++k)
            for (int i = 0; i < alpha; ++i) rel.at(i, k) = impl->solve_v.at(i, amb + k);
        auto rparts = detail::snf_engine(rel, /*u*/ true, /*v*/ false, /*uinv*/ true);
        impl->pres_u = std::move(*rparts.u);
        for (int i = 0; i < alpha; ++i) {
            const bigint& d = rparts.s.at(i, i);
            if (d <= 0) throw std::logic_error("h1_quotient: quotient is not finite");
            if (d > 1) {
                if (q % d != 0) throw std::logic_error("h1_quotient: factor does not divide p^n");
                impl->kept.push_back(i);
                impl->factors.push_back(d.convert_to<std::int64_t>());
            }
        }
        for (std::size_t kk = 0; kk < impl->kept.size(); ++kk) {
            const int j = impl->kept[kk];
            std::vector<std::int64_t> flat(static_cast<std::size_t>(amb), 0);
            for (int i = 0; i < alpha; ++i) {
                const std::int64_t c = mod_reduce_big(rparts.u_inv->at(i, j), q);
                if (c == 0) continue;
                const auto& zi = space.generators()[static_cast<std::size_t>(i)].entries;
                for (int t = 0; t < amb; ++t)
                    flat[static_cast<std::size_t>(t)] =
                        mod_reduce(flat[static_cast<std::size_t>(t)] + c * zi[static_cast<std::size_t>(t)] % q, q);
            }
            impl->basis.push_back(cocycle_unflatten(g, level, flat));
        }
    }

    H1Result res;
    res.impl_ = std::move(impl);
    return res;
}

/// H^1(G, M) = Z^1 / B^1.
inline H1Result h1(const MatrixGroup& g, int level, std::int64_t constraint_cap = Caps{}.constraint_entries) {
    return h1_quotient(g, level, cocycle_space(g, level, constraint_cap));
}

inline H1Result h1(const MatrixGroup& g) { return h1(g, g.modulus.n); }

namespace detail {

/// Rows expressing "block g of the table lies in Im(act_g - 1)": from the
/// Smith form of [C | q*I] with C = act_g - 1, membership of x is
/// (U*x)_i = 0 mod s_i, i.e. (q/s_i)*(U row i) annihilates x mod q.
inline void stream_local_condition_rows(const MatrixGroup& g, const std::vector<ModMatrix>& acts,
                                        PEchelon& ech) {
    const int r = g.dim;
    const std::int64_t q = acts[0].modulus.value;
    const int m = g.order() * r;
    for (const auto& cyc : cyclic_subgroups(g)) {
        const int gi = cyc.generator;
        IntMatrix d(r, 2 * r);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                std::int64_t e = acts[static_cast<std::size_t>(gi)].at(i, j);
                if (i == j) e -= 1;
                d.at(i, j) = mod_reduce(e, q);
            }
            d.at(i, r + i) = q;
        }
        auto parts = snf_engine(d, /*u*/ true, /*v*/ false, /*uinv*/ false);
        for (int i = 0; i < r; ++i) {
            const bigint& si = parts.s.at(i, i);
            if (si == 0) throw std::logic_error("local condition: relation columns lost");
            if (q % si != 0) throw std::logic_error("local condition: invariant factor does not divide q");
            const std::int64_t f = (q / si).convert_to<std::int64_t>() % q;
            if (f == 0) continue; // vacuous row
            std::vector<std::int64_t> row(static_cast<std::size_t>(m), 0);
            bool nz = false;
            for (int j = 0; j < r; ++j) {
                const std::int64_t e = mod_reduce(mod_reduce_big(parts.u->at(i, j), q) * f % q, q);
                row[static_cast<std::size_t>(gi) * r + j] = e;
                nz |= (e != 0);
            }
            if (nz) ech.insert(std::move(row));
        }
    }
}

} // namespace detail

/// The local-conditions subspace of Z^1: tables with Z_g in Im(g-1) at the
/// canonical generator of every maximal cyclic subgroup.
inline Submodule local_cocycle_space(const MatrixGroup& g, int level,
                                     std::int64_t constraint_cap = Caps{}.constraint_entries) {
    detail::check_constraint_cap(g, constraint_cap);
    const Modulus m = g.modulus.reduced(level);
    const auto acts = detail::level_actions(g, level);
    detail::PEchelon ech(m, g.order() * g.dim, /*shadows=*/false);
    detail::stream_cocycle_rows(g, acts, ech);
    detail::stream_local_condition_rows(g, acts, ech);
    return detail::kernel_of_echelon(ech, m, g.order() * g.dim);
}

/// H^1_loc(G, M): locally trivial classes.
inline H1Result h1_loc(const MatrixGroup& g, int level, std::int64_t constraint_cap = Caps{}.constraint_entries) {
    return h1_quotient(g, level, local_cocycle_space(g, level, constraint_cap));
}

inline H1Result h1_loc(const MatrixGroup& g) { return h1_loc(g, g.modulus.n); }

/// The maps between torsion levels induced by 1 -> T[p] -> T[p^n] -> T[p^(n-1)] -> 1:
/// iota multiplies level-1 tables by p^(n-1), eps reduces level-n tables mod
/// p^(n-1). Both send locally trivial cocycles to locally trivial cocycles.
class LevelMaps {
  public:
    LevelMaps(const MatrixGroup& g, std::int64_t constraint_cap = Caps{}.constraint_entries)
        : group_(&require_n2(g)), n_(g.modulus.n),
          bottom_(h1_loc(g, 1, constraint_cap)),
          middle_(h1_loc(g, g.modulus.n, constraint_cap)),
          top_(g.modulus.n - 1 == 1 ? bottom_ : h1_loc(g, g.modulus.n - 1, constraint_cap)) {}

    const H1Result& bottom() const { return bottom_; } // level 1
    const H1Result& middle() const { return middle_; } // level n
    const H1Result& top() const { return top_; }       // level n-1

    Cocycle iota(const Cocycle& z) const {
        if (z.group != group_ || z.level != 1)
            throw value_error("iota expects a level-1 cocycle of the same group");
        std::int64_t f = 1;
        for (int i = 0; i < n_ - 1; ++i) f *= group_->modulus.p;
        std::vector<std::int64_t> flat = cocycle_flatten(z);
        for (auto& x : flat) x *= f;
        return make_cocycle(*group_, n_, cocycle_unflatten(*group_, n_, flat).values);
    }

    Cocycle eps(const Cocycle& z) const {
        if (z.group != group_ || z.level != n_)
            throw value_error("eps expects a level-n cocycle of the same group");
        return make_cocycle(*group_, n_ - 1, cocycle_unflatten(*group_, n_ - 1, cocycle_flatten(z)).values);
    }

    /// eps_* after iota_* kills every class (multiplying by p^(n-1) then
    /// reducing mod p^(n-1) is zero on the nose).
    bool composition_is_zero() const {
        for (const auto& z : bottom_.all_class_representatives()) {
            const auto coords = top_.class_coordinates(eps(iota(z)));
            for (auto c : coords)
                if (c != 0) return false;
        }
        return true;
    }

    /// ker(eps_*) = im(iota_*) inside H^1_loc(G, T[p^n]), decided by listing
    /// both subgroups classwise.
    bool exact_at_middle() const {
        std::set<std::vector<std::int64_t>> image;
        for (const auto& z : bottom_.all_class_representatives())
            image.insert(middle_.class_coordinates(iota(z)));
        std::set<std::vector<std::int64_t>> kernel;
        for (const auto& w : middle_.all_class_representatives()) {
            const auto coords = top_.class_coordinates(eps(w));
            bool zero = true;
            for (auto c : coords) zero &= (c == 0);
            if (zero) kernel.insert(middle_.class_coordinates(w));
        }
        return image == kernel;
    }

  private:
    static const MatrixGroup& require_n2(const MatrixGroup& g) {
        if (g.modulus.n < 2)
            throw value_error("level maps need modulus exponent n >= 2");
        return g;
    }

    const MatrixGroup* group_;
    int n_;
    H1Result bottom_, middle_, top_;
};

inline LevelMaps level_maps(const MatrixGroup& g, std::int64_t constraint_cap = Caps{}.constraint_entries) {
    return LevelMaps(g, constraint_cap);
}

} // namespace locoh
