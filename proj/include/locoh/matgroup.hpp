#pragma once

/// @file matgroup.hpp
/// Finite subgroups of GL_r(Z/p^nZ) enumerated from generators. Discovery is
/// breadth-first over generator application in generator order, so element
/// indices, words and every downstream table are deterministic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "locoh/caps.hpp"
#include "locoh/errors.hpp"
#include "locoh/modring.hpp"

namespace locoh {

namespace detail {

inline std::uint64_t hash_entries(const std::vector<std::int64_t>& e) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : e) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace detail

class MatrixGroup {
  public:
    Modulus modulus;
    int dim = 0;
    std::vector<ModMatrix> generators;
    std::vector<ModMatrix> elements;          // index 0 is the identity
    std::vector<std::vector<int>> words;      // BFS normal form, generator indices
    std::vector<int> parent;                  // BFS predecessor, -1 for identity
    std::vector<int> via_generator;           // generator applied from the parent

    MatrixGroup(Modulus m, int d) : modulus(m), dim(d) {}

    int order() const { return static_cast<int>(elements.size()); }

    int mul_index(int i, int j) const { return mul_[static_cast<std::size_t>(i) * elements.size() + j]; }
    int inverse_index(int i) const { return inv_[static_cast<std::size_t>(i)]; }

    const ModMatrix& element(int i) const { return elements[static_cast<std::size_t>(i)]; }

    /// Element index of a matrix, or -1.
    int index_of(const ModMatrix& m) const {
        if (m.rows != dim || m.cols != dim || !(m.modulus == modulus)) return -1;
        auto it = lookup_.find(detail::hash_entries(m.entries));
        if (it == lookup_.end()) return -1;
        for (int idx : it->second)
            if (elements[static_cast<std::size_t>(idx)].entries == m.entries) return idx;
        return -1;
    }

    std::string word_string(int i) const {
        if (words[static_cast<std::size_t>(i)].empty()) return "e";
        std::string s;
        for (int g : words[static_cast<std::size_t>(i)]) {
            if (!s.empty()) s += "*";
            s += "g" + std::to_string(g + 1);
        }
        return s;
    }

    friend MatrixGroup enumerate(Modulus m, int dim, std::vector<ModMatrix> gens, std::int64_t cap);

  private:
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::unordered_map<std::uint64_t, std::vector<int>> lookup_;

    void add_element(ModMatrix m, int par, int gen) {
        lookup_[detail::hash_entries(m.entries)].push_back(order());
        if (par < 0) {
            words.emplace_back();
        } else {
            std::vector<int> w = words[static_cast<std::size_t>(par)];
            w.push_back(gen);
            words.push_back(std::move(w));
        }
        parent.push_back(par);
        via_generator.push_back(gen);
        elements.push_back(std::move(m));
    }

    void build_tables() {
        const int n = order();
        mul_.assign(static_cast<std::size_t>(n) * n, -1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int k = index_of(elements[static_cast<std::size_t>(i)] * elements[static_cast<std::size_t>(j)]);
                if (k < 0) throw std::logic_error("group closure violated");
                mul_[static_cast<std::size_t>(i) * n + j] = k;
            }
        inv_.assign(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mul_index(i, j) == 0) { inv_[static_cast<std::size_t>(i)] = j; break; }
    }
};

/// Enumerates the subgroup generated by `gens` inside GL_dim(Z/p^nZ).
inline MatrixGroup enumerate(Modulus m, int dim, std::vector<ModMatrix> gens, std::int64_t cap = Caps{}.group_order) {
    if (dim < 1)
        throw value_error("group dimension must be positive");
    if (cap < 1)
        throw value_error("group cap must be positive");
    for (const auto& g : gens) {
        detail::require_same(g.modulus, m, "group generator");
        if (g.rows != dim || g.cols != dim)
            throw value_error("group generator has wrong dimensions");
        if (!is_invertible(g))
            throw value_error("group generator is not invertible: " + g.to_string());
    }
    MatrixGroup grp(m, dim);
    grp.generators = std::move(gens);
    grp.add_element(ModMatrix::identity(m, dim), -1, -1);
    for (std::size_t head = 0; head < grp.elements.size(); ++head) {
        for (std::size_t gi = 0; gi < grp.generators.size(); ++gi) {
            ModMatrix prod = grp.elements[head] * grp.generators[gi];
            if (grp.index_of(prod) >= 0) continue;
            if (grp.order() + 1 > cap)
                throw resource_error("group enumeration exceeded cap of " + std::to_string(cap) + " elements");
            grp.add_element(std::move(prod), static_cast<int>(head), static_cast<int>(gi));
        }
    }
    grp.build_tables();
    return grp;
}

/// Least m >= 1 with g^m = identity (by index in an enumerated group).
inline int element_order(const MatrixGroup& g, int idx) {
    int cur = idx, ord = 1;
    while (cur != 0) {
        cur = g.mul_index(cur, idx);
        ++ord;
    }
    return ord;
}

struct CyclicSubgroup {
    int generator = 0; // element index, lowest index generating the subgroup
    int order = 0;
    std::vector<int> element_indices; // sorted
};

/// Maximal cyclic subgroups, deduplicated by element set. The trivial
/// subgroup is never reported, so the trivial group yields an empty list.
inline std::vector<CyclicSubgroup> cyclic_subgroups(const MatrixGroup& g) {
    std::map<std::vector<int>, int> first_gen;
    for (int i = 1; i < g.order(); ++i) {
        std::vector<int> elems{0};
        int cur = i;
        while (cur != 0) {
            elems.push_back(cur);
            cur = g.mul_index(cur, i);
        }
        std::sort(elems.begin(), elems.end());
        first_gen.try_emplace(std::move(elems), i);
    }
    std::vector<CyclicSubgroup> all;
    for (const auto& [elems, gen] : first_gen)
        all.push_back({gen, static_cast<int>(elems.size()), elems});
    std::vector<CyclicSubgroup> maximal;
    for (const auto& c : all) {
        bool contained = false;
        for (const auto& d : all) {
            if (d.order <= c.order || c.element_indices == d.element_indices) continue;
            if (std::includes(d.element_indices.begin(), d.element_indices.end(),
                              c.element_indices.begin(), c.element_indices.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const CyclicSubgroup& a, const CyclicSubgroup& b) { return a.generator < b.generator; });
    return maximal;
}

/// Closure of a set of element indices under the group multiplication.
inline std::vector<int> subgroup_closure(const MatrixGroup& g, const std::vector<int>& gens) {
    std::set<int> seen{0};
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int gi : gens) {
            const int nxt = g.mul_index(queue[head], gi);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    return std::vector<int>(seen.begin(), seen.end());
}

/// The p-Sylow subgroup, for groups whose p-power-order elements close to a
/// p-subgroup (the Sylow is then unique and normal). A closure that outgrows
/// p^a is reported as an error, not silently repaired.
inline MatrixGroup sylow_p(const MatrixGroup& g, std::int64_t cap = Caps{}.group_order) {
    const std::int64_t p = g.modulus.p;
    std::int64_t pa = 1;
    {
        std::int64_t rest = g.order();
        while (rest % p == 0) { rest /= p; pa *= p; }
    }
    std::vector<int> chosen;
    std::vector<int> closure{0};
    if (pa > 1) {
        for (int i = 1; i < g.order(); ++i) {
            const int ord = element_order(g, i);
            std::int64_t o = ord;
            while (o % p == 0) o /= p;
            if (o != 1) continue; // not of p-power order
            if (std::binary_search(closure.begin(), closure.end(), i)) continue;
            chosen.push_back(i);
            closure = subgroup_closure(g, chosen);
            if (static_cast<std::int64_t>(closure.size()) > pa)
                throw value_error("sylow_p: p-power-order elements do not close to a p-group "
                                  "(non-normal Sylow subgroup)");
        }
        if (static_cast<std::int64_t>(closure.size()) != pa)
            throw std::logic_error("sylow_p: closure smaller than the Sylow order");
    }
    std::vector<ModMatrix> gens;
    gens.reserve(chosen.size());
    for (int i : chosen) gens.push_back(g.element(i));
    return enumerate(g.modulus, g.dim, std::move(gens), cap);
}

struct ReductionResult {
    MatrixGroup image;                 // subgroup of GL_r(Z/p^jZ)
    std::vector<int> projection;       // element index map, verified homomorphism
    std::vector<int> kernel_indices;   // H^(j), sorted
};

/// Reduction modulo p^j of every element; the image group is re-enumerated
/// from the reduced generators and the projection is checked to be a
/// homomorphism over the full multiplication table.
inline ReductionResult reduce_mod(const MatrixGroup& g, int j) {
    if (j < 1 || j > g.modulus.n)
        throw value_error("reduce_mod: level must be between 1 and n");
    std::vector<ModMatrix> gens;
    gens.reserve(g.generators.size());
    for (const auto& gen : g.generators) gens.push_back(gen.reduce_level(j));
    MatrixGroup image = enumerate(g.modulus.reduced(j), g.dim, std::move(gens),
                                  static_cast<std::int64_t>(g.order()));
    std::vector<int> proj(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> kernel;
    for (int i = 0; i < g.order(); ++i) {
        const int img = image.index_of(g.element(i).reduce_level(j));
        if (img < 0) throw std::logic_error("reduce_mod: element missing from image group");
        proj[static_cast<std::size_t>(i)] = img;
        if (img == 0) kernel.push_back(i);
    }
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (proj[static_cast<std::size_t>(g.mul_index(a, b))] !=
                image.mul_index(proj[static_cast<std::size_t>(a)], proj[static_cast<std::size_t>(b)]))
                throw std::logic_error("reduce_mod: projection is not a homomorphism");
    return ReductionResult{std::move(image), std::move(proj), std::move(kernel)};
}

/// b such that G is isomorphic to (Z/pZ)^b: abelian with every non-identity
/// element of order p. Absent otherwise.
inline std::optional<int> elementary_abelian_profile(const MatrixGroup& g) {
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.mul_index(i, j) != g.mul_index(j, i)) return std::nullopt;
    for (int i = 1; i < n; ++i)
        if (element_order(g, i) != g.modulus.p) return std::nullopt;
    int b = 0;
    std::int64_t size = 1;
    while (size < n) { size *= g.modulus.p; ++b; }
    if (size != n) return std::nullopt;
    return b;
}

/// Replaces every generator g by diag(g, Id_s): the same group acting
/// trivially on s extra coordinates.
inline MatrixGroup block_sum(const MatrixGroup& g, int s, std::int64_t cap = Caps{}.group_order) {
    if (s < 0)
        throw value_error("block_sum: extra dimensions must be nonnegative");
    std::vector<ModMatrix> gens;
    gens.reserve(g.generators.size());
    for (const auto& gen : g.generators) gens.push_back(block_diag(gen, s));
    return enumerate(g.modulus, g.dim + s, std::move(gens), cap);
}

/// Exact enumeration of a finite subgroup of GL_r(Z) given by integer
/// generators. Unbounded growth hits the cap and raises resource_error.
inline std::vector<IntMatrix> enumerate_integer_group(const std::vector<IntMatrix>& gens, std::int64_t cap) {
    if (cap < 1)
        throw value_error("group cap must be positive");
    int dim = -1;
    for (const auto& g : gens) {
        if (g.rows != g.cols)
            throw value_error("integer group generator must be square");
        if (dim < 0) dim = g.rows;
        if (g.rows != dim)
            throw value_error("integer group generators have mismatched dimensions");
    }
    if (dim < 0) dim = 1;
    std::vector<IntMatrix> elems{IntMatrix::identity(dim)};
    std::map<std::vector<bigint>, int> lookup;
    lookup.emplace(elems[0].entries, 0);
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (const auto& g : gens) {
            IntMatrix prod = elems[head] * g;
            if (lookup.contains(prod.entries)) continue;
            if (static_cast<std::int64_t>(elems.size()) + 1 > cap)
                throw resource_error("integer group did not close within cap of " + std::to_string(cap));
            lookup.emplace(prod.entries, static_cast<int>(elems.size()));
            elems.push_back(std::move(prod));
        }
    return elems;
}

} // namespace locoh
