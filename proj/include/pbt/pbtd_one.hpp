#pragma once

// Symmetric-difference (flip) transforms and decision procedures for
// PBTD = 1 and PBTD+ = 1, including the singleton-extension
// classification.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "pbt/core.hpp"
#include "pbt/errors.hpp"
#include "pbt/finite_dims.hpp"

namespace pbt {

// --- flip transforms -------------------------------------------------------

/// M + L = (L \ M) u (M \ L), as bitvectors.
inline Concept flip_concept(const Concept& mask, const Concept& l) {
    if (mask.universe_size() != l.universe_size())
        throw argument_error("flip: universe size mismatch");
    std::vector<bool> bits;
    bits.reserve(l.universe_size());
    for (std::size_t i = 0; i < l.universe_size(); ++i)
        bits.push_back(mask.contains(i) != l.contains(i));
    return Concept(std::move(bits));
}

/// Labels of examples inside the mask are inverted.
inline Sample flip_sample(const Concept& mask, const Sample& t) {
    std::vector<LabeledExample> out;
    for (const auto& ex : t.examples()) {
        if (ex.element >= mask.universe_size())
            throw argument_error("flip: example outside the universe");
        out.push_back({ex.element, mask.contains(ex.element) ? flip(ex.sign) : ex.sign});
    }
    return Sample(std::move(out));
}

inline FiniteClass flip_class(const Concept& mask, const FiniteClass& cls) {
    FiniteClass out(cls.universe(), {});
    for (std::size_t i = 0; i < cls.size(); ++i)
        out.add(cls.name_at(i), flip_concept(mask, cls.concept_at(i)));
    return out;
}

// --- lower-triangularizability (PBTD+ = 1) ---------------------------------

namespace detail {

/// Topological order of a digraph where an edge u -> v means u must
/// precede v; empty result if cyclic. Deterministic (smallest index
/// first).
inline std::optional<std::vector<std::size_t>> topo_order(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> indeg(n, 0);
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        ++indeg[v];
    }
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.insert(i);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t u = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(u);
        for (auto v : adj[u])
            if (--indeg[v] == 0) ready.insert(v);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

/// Finds a directed cycle, if any, returned as a vertex sequence.
inline std::optional<std::vector<std::size_t>> find_cycle(
    std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::size_t> stack;
    std::optional<std::vector<std::size_t>> cycle;
    std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
        state[u] = 1;
        stack.push_back(u);
        for (auto v : adj[u]) {
            if (state[v] == 1) {
                auto it = std::find(stack.begin(), stack.end(), v);
                cycle = std::vector<std::size_t>(it, stack.end());
                return true;
            }
            if (state[v] == 0 && dfs(v)) return true;
        }
        stack.pop_back();
        state[u] = 2;
        return false;
    };
    for (std::size_t u = 0; u < n; ++u)
        if (state[u] == 0 && dfs(u)) return cycle;
    return std::nullopt;
}

}  // namespace detail

constexpr std::size_t no_element = static_cast<std::size_t>(-1);

/// Witness that A(L,L') = L'(x_L) is lower-triangular: a linear order
/// on concept indices (least preferred first; for every L before L'
/// in it, L'(x_L) = 0) plus the chooser (no_element for the empty
/// concept, which goes most preferred).
struct TriangularWitness {
    std::vector<std::size_t> order;
    std::vector<std::size_t> chooser;
};

struct TriangularResult {
    std::optional<TriangularWitness> witness;
    std::vector<std::size_t> cycle;  // offending concept indices when not triangular
};

/// Checks one concrete chooser. Edge L' -> L whenever L'(x_L) = 1
/// (L' must be less preferred than L); triangular iff acyclic.
inline TriangularResult is_lower_triangularizable(const FiniteClass& cls,
                                                  const std::vector<std::size_t>& chooser) {
    const std::size_t n = cls.size();
    if (chooser.size() != n) throw argument_error("chooser size mismatch");
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t l = 0; l < n; ++l) {
        if (chooser[l] == no_element) {
            if (cls.concept_at(l).cardinality() != 0)
                throw argument_error("missing chooser for a non-empty concept");
            continue;
        }
        if (!cls.concept_at(l).contains(chooser[l]))
            throw argument_error("chooser element not in its concept");
        for (std::size_t l2 = 0; l2 < n; ++l2) {
            if (l2 == l || chooser[l2] == no_element) continue;
            if (cls.concept_at(l2).contains(chooser[l])) {
                adj[l2].push_back(l);
                edges.push_back({l2, l});
            }
        }
    }
    if (auto cycle = detail::find_cycle(n, adj)) return {std::nullopt, *cycle};
    auto order = detail::topo_order(n, edges);
    // the empty concept (chooser-less) sorts last = most preferred by
    // stable partition
    std::stable_partition(order->begin(), order->end(),
                          [&](std::size_t i) { return chooser[i] != no_element; });
    return {TriangularWitness{*order, chooser}, {}};
}

/// Backtracking over chooser assignments x_L in L (concepts ascending
/// by cardinality, elements ascending), with incremental acyclicity.
/// nullopt = certified NO.
inline std::optional<TriangularWitness> decide_pbtd_plus_1(const FiniteClass& cls,
                                                           std::size_t max_nodes = 2'000'000) {
    const std::size_t n = cls.size();
    std::vector<std::size_t> concept_order(n);
    for (std::size_t i = 0; i < n; ++i) concept_order[i] = i;
    std::stable_sort(concept_order.begin(), concept_order.end(), [&](std::size_t a, std::size_t b) {
        return cls.concept_at(a).cardinality() < cls.concept_at(b).cardinality();
    });

    std::vector<std::size_t> chooser(n, no_element);
    std::size_t nodes = 0;

    // adjacency over chosen part only; rebuilt checks are cheap at
    // these sizes
    auto acyclic_so_far = [&]() {
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t l = 0; l < n; ++l) {
            if (chooser[l] == no_element) continue;
            for (std::size_t l2 = 0; l2 < n; ++l2)
                if (l2 != l && cls.concept_at(l2).contains(chooser[l])) adj[l2].push_back(l);
        }
        return !detail::find_cycle(n, adj).has_value();
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
        if (++nodes > max_nodes) throw resource_error("decide_pbtd_plus_1: budget exceeded");
        if (pos == n) return true;
        std::size_t l = concept_order[pos];
        if (cls.concept_at(l).cardinality() == 0) return assign(pos + 1);  // the empty concept
        for (std::size_t x : cls.concept_at(l).members()) {
            chooser[l] = x;
            if (acyclic_so_far() && assign(pos + 1)) return true;
            chooser[l] = no_element;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return is_lower_triangularizable(cls, chooser).witness;
}

// --- PBTD = 1 --------------------------------------------------------------

/// YES-witness: a teaching map with samples of size at most 1 whose
/// induced relation has an asymmetric transitive closure, plus a
/// linear order (least preferred first) extending it.
struct Pbtd1Witness {
    TeachingMap tm;
    std::vector<std::size_t> order;
};

/// Backtracking over single-example (or empty) sample assignments with
/// incremental acyclicity of the induced loser -> winner digraph.
/// nullopt = certified NO.
inline std::optional<Pbtd1Witness> decide_pbtd_1(const FiniteClass& cls,
                                                 std::size_t max_nodes = 4'000'000) {
    const std::size_t n = cls.size();
    const std::size_t u = cls.universe().size();
    std::vector<std::size_t> concept_order(n);
    for (std::size_t i = 0; i < n; ++i) concept_order[i] = i;
    std::stable_sort(concept_order.begin(), concept_order.end(), [&](std::size_t a, std::size_t b) {
        return cls.concept_at(a).cardinality() < cls.concept_at(b).cardinality();
    });

    // candidate samples per concept: empty, (x,1) for x in L, (x,0)
    // for x not in L — all consistent with L by construction
    std::vector<std::optional<LabeledExample>> assigned(n);
    std::vector<bool> has_sample(n, false);
    std::size_t nodes = 0;

    auto acyclic_so_far = [&]() {
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t w = 0; w < n; ++w) {  // w = winner (owner of the sample)
            if (!has_sample[w]) continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (l == w) continue;
                bool consistent =
                    !assigned[w] ||
                    (cls.concept_at(l).contains(assigned[w]->element) ==
                     (assigned[w]->sign == Sign::positive));
                if (consistent) adj[l].push_back(w);  // loser -> winner
            }
        }
        return !detail::find_cycle(n, adj).has_value();
    };

    // duplicate samples force a 2-cycle, so prune them
    auto duplicate = [&](const std::optional<LabeledExample>& cand) {
        for (std::size_t i = 0; i < n; ++i)
            if (has_sample[i] && assigned[i] == cand) return true;
        return false;
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
        if (++nodes > max_nodes) throw resource_error("decide_pbtd_1: budget exceeded");
        if (pos == n) return true;
        std::size_t l = concept_order[pos];
        std::vector<std::optional<LabeledExample>> candidates;
        candidates.push_back(std::nullopt);  // the empty sample
        for (std::size_t x = 0; x < u; ++x)
            if (cls.concept_at(l).contains(x)) candidates.push_back(LabeledExample{x, Sign::positive});
        for (std::size_t x = 0; x < u; ++x)
            if (!cls.concept_at(l).contains(x)) candidates.push_back(LabeledExample{x, Sign::negative});
        for (const auto& cand : candidates) {
            if (duplicate(cand)) continue;
            assigned[l] = cand;
            has_sample[l] = true;
            if (acyclic_so_far() && assign(pos + 1)) return true;
            has_sample[l] = false;
            assigned[l] = std::nullopt;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;

    std::vector<Sample> samples(n);
    for (std::size_t i = 0; i < n; ++i)
        if (assigned[i]) samples[i] = Sample({*assigned[i]});
    TeachingMap tm{samples};
    auto adm = check_admissible(tm, cls);
    if (!adm.admissible)
        throw error("internal: accepted assignment failed the admissibility check");
    return Pbtd1Witness{tm, adm.order};
}

// --- singleton-extension classification ------------------------------------

enum class SingletonExtension {
    pure_singletons,
    plus_empty,
    plus_pair,
    not_pbtd1,
    not_applicable,
};

struct SingletonExtensionResult {
    SingletonExtension kind = SingletonExtension::not_applicable;
    std::pair<std::size_t, std::size_t> pair_elements{no_element, no_element};
};

/// Structural case analysis for classes containing all singletons:
/// PBTD = 1 iff the class is the singletons alone or adds exactly one
/// concept, which is empty or of size 2.
inline SingletonExtensionResult classify_singleton_extension(const FiniteClass& cls) {
    const std::size_t u = cls.universe().size();
    std::vector<bool> singleton_seen(u, false);
    std::vector<std::size_t> extras;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const Concept& c = cls.concept_at(i);
        if (c.cardinality() == 1)
            singleton_seen[c.members().front()] = true;
        else
            extras.push_back(i);
    }
    if (!std::all_of(singleton_seen.begin(), singleton_seen.end(), [](bool b) { return b; }))
        return {SingletonExtension::not_applicable, {no_element, no_element}};
    if (extras.empty()) return {SingletonExtension::pure_singletons, {no_element, no_element}};
    if (extras.size() > 1) return {SingletonExtension::not_pbtd1, {no_element, no_element}};
    const Concept& e = cls.concept_at(extras.front());
    if (e.cardinality() == 0) return {SingletonExtension::plus_empty, {no_element, no_element}};
    if (e.cardinality() == 2) {
        auto m = e.members();
        return {SingletonExtension::plus_pair, {m[0], m[1]}};
    }
    return {SingletonExtension::not_pbtd1, {no_element, no_element}};
}

}  // namespace pbt
