#pragma once

// Exact teaching-dimension solvers for finite classes: TD, TD_min, RTD,
// RTD+, PBTD, PBTD+ (by exhaustive order search), admissible-mapping
// machinery, and the gallery of finite gadget classes.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pbt/core.hpp"
#include "pbt/errors.hpp"

namespace pbt {

/// A dimension value: a natural number or INFINITE. INFINITE is an
/// explicit state, never a sentinel integer.
class Dim {
public:
    Dim() : finite_(true), value_(0) {}
    explicit Dim(std::size_t v) : finite_(true), value_(v) {}
    static Dim infinite() {
        Dim d;
        d.finite_ = false;
        return d;
    }

    bool is_infinite() const { return !finite_; }
    std::size_t value() const {
        if (!finite_) throw argument_error("Dim::value() on INFINITE");
        return value_;
    }

    bool operator==(const Dim& o) const {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    bool operator<(const Dim& o) const {
        if (!finite_) return false;
        if (!o.finite_) return true;
        return value_ < o.value_;
    }
    bool operator<=(const Dim& o) const { return *this < o || *this == o; }

    std::string str() const { return finite_ ? std::to_string(value_) : "INFINITE"; }

private:
    bool finite_;
    std::size_t value_;
};

/// Budgets guarding the exponential searches. These are configuration,
/// not constants.
struct SearchBudget {
    std::size_t max_concepts_order = 9;     // order enumeration (PBTD)
    std::size_t max_concepts_sequence = 6;  // teaching-sequence enumeration
};

/// Assignment concept index -> sample. Injective on distinct concepts.
class TeachingMap {
public:
    TeachingMap() = default;
    explicit TeachingMap(std::vector<Sample> assignment) : samples_(std::move(assignment)) {}

    std::size_t size() const { return samples_.size(); }
    const Sample& at(std::size_t i) const { return samples_.at(i); }
    void set(std::size_t i, Sample s) {
        if (i >= samples_.size()) samples_.resize(i + 1);
        samples_[i] = std::move(s);
    }

    bool injective() const {
        for (std::size_t i = 0; i < samples_.size(); ++i)
            for (std::size_t j = i + 1; j < samples_.size(); ++j)
                if (samples_[i] == samples_[j]) return false;
        return true;
    }

private:
    std::vector<Sample> samples_;
};

/// Strict partial order on concept indices, stored as its reachability
/// closure. preferred(w, l) means w is strictly preferred over l.
class PreferenceRelation {
public:
    PreferenceRelation() = default;

    /// Build from edges (loser, winner): winner is preferred over loser.
    /// Throws if the transitive closure would contain a cycle.
    static PreferenceRelation from_edges(std::size_t n,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& loser_winner) {
        PreferenceRelation p;
        p.n_ = n;
        std::vector<std::vector<std::size_t>> up(n);  // loser -> winners
        for (auto [l, w] : loser_winner) {
            if (l >= n || w >= n) throw argument_error("preference edge index out of range");
            if (l == w) throw argument_error("preference relation must be irreflexive");
            up[l].push_back(w);
        }
        p.above_.assign(n, std::vector<bool>(n, false));
        for (std::size_t s = 0; s < n; ++s) {
            // BFS reachability: everything preferred over s.
            std::vector<std::size_t> stack{s};
            std::vector<bool> seen(n, false);
            while (!stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : up[v])
                    if (!seen[w]) {
                        seen[w] = true;
                        p.above_[s][w] = true;
                        stack.push_back(w);
                    }
            }
            if (p.above_[s][s]) throw argument_error("preference relation contains a cycle");
        }
        return p;
    }

    /// The empty relation (all concepts incomparable).
    static PreferenceRelation empty(std::size_t n) { return from_edges(n, {}); }

    /// Extension of proper-superset: proper subsets are preferred over
    /// their supersets.
    static PreferenceRelation subset_preferred(const FiniteClass& cls) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = 0; j < cls.size(); ++j)
                if (i != j && cls.concept_at(j).subset_of(cls.concept_at(i)))
                    edges.emplace_back(i, j);  // superset i loses to subset j
        return from_edges(cls.size(), edges);
    }

    std::size_t size() const { return n_; }
    bool preferred(std::size_t winner, std::size_t loser) const {
        return above_.at(loser).at(winner);
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<bool>> above_;  // above_[l][w]: w preferred over l
};

namespace detail {

/// Minimum hitting set by iterative-deepening DFS, branching on the
/// first uncovered set with candidates tried in ascending element
/// order. Deterministic. Returns nullopt when some set is empty.
inline std::optional<std::vector<std::size_t>> min_hitting_set(
    const std::vector<std::vector<std::size_t>>& sets) {
    for (const auto& s : sets)
        if (s.empty()) return std::nullopt;
    if (sets.empty()) return std::vector<std::size_t>{};

    auto hits = [](const std::vector<std::size_t>& set, std::size_t x) {
        return std::binary_search(set.begin(), set.end(), x);
    };

    std::vector<std::size_t> chosen;
    std::vector<std::size_t> result;

    std::function<bool(std::size_t)> dfs = [&](std::size_t slots) -> bool {
        // first uncovered set
        const std::vector<std::size_t>* target = nullptr;
        std::size_t uncovered = 0;
        for (const auto& s : sets) {
            bool cov = false;
            for (auto x : chosen)
                if (hits(s, x)) {
                    cov = true;
                    break;
                }
            if (!cov) {
                ++uncovered;
                if (!target) target = &s;
            }
        }
        if (uncovered == 0) {
            result = chosen;
            return true;
        }
        if (slots == 0) return false;
        for (auto x : *target) {
            chosen.push_back(x);
            if (dfs(slots - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t k = 0;; ++k) {
        chosen.clear();
        if (dfs(k)) return result;
    }
}

}  // namespace detail

/// Minimum teaching set for concept `target` w.r.t. the sub-class given
/// by `active` (indices into cls, must contain target).
inline Sample min_teaching_set(const FiniteClass& cls, std::size_t target,
                               const std::vector<std::size_t>& active) {
    std::vector<std::vector<std::size_t>> sets;
    const Concept& l = cls.concept_at(target);
    for (auto j : active) {
        if (j == target) continue;
        std::vector<std::size_t> diff;
        const Concept& l2 = cls.concept_at(j);
        for (std::size_t x = 0; x < l.universe_size(); ++x)
            if (l.contains(x) != l2.contains(x)) diff.push_back(x);
        sets.push_back(std::move(diff));
    }
    auto hit = detail::min_hitting_set(sets);
    // Concepts are pairwise distinct, so every difference set is non-empty.
    Sample t;
    for (auto x : *hit) t.add({x, l.contains(x) ? Sign::positive : Sign::negative});
    return t;
}

/// Minimum positive teaching set, or nullopt when a proper superset of
/// the target exists among the active concepts.
inline std::optional<Sample> min_positive_teaching_set(const FiniteClass& cls, std::size_t target,
                                                       const std::vector<std::size_t>& active) {
    const Concept& l = cls.concept_at(target);
    std::vector<std::vector<std::size_t>> sets;
    for (auto j : active) {
        if (j == target) continue;
        const Concept& l2 = cls.concept_at(j);
        std::vector<std::size_t> inl_not_in2;
        for (std::size_t x = 0; x < l.universe_size(); ++x)
            if (l.contains(x) && !l2.contains(x)) inl_not_in2.push_back(x);
        if (inl_not_in2.empty()) return std::nullopt;  // l is a subset of l2
        sets.push_back(std::move(inl_not_in2));
    }
    auto hit = detail::min_hitting_set(sets);
    Sample t;
    for (auto x : *hit) t.add({x, Sign::positive});
    return t;
}

inline std::vector<std::size_t> all_indices(const FiniteClass& cls) {
    std::vector<std::size_t> v(cls.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

/// TD(l, cls): smallest teaching set size for l w.r.t. the whole class.
inline std::size_t teaching_dimension(const Concept& l, const FiniteClass& cls) {
    auto idx = cls.index_of(l);
    if (!idx) throw argument_error("teaching_dimension: concept not in class");
    return min_teaching_set(cls, *idx, all_indices(cls)).size();
}

inline std::size_t td_min(const FiniteClass& cls) {
    if (cls.size() == 0) throw argument_error("td_min: empty class");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    auto all = all_indices(cls);
    for (std::size_t i = 0; i < cls.size(); ++i)
        best = std::min(best, min_teaching_set(cls, i, all).size());
    return best;
}

inline std::size_t td(const FiniteClass& cls) {
    if (cls.size() == 0) throw argument_error("td: empty class");
    std::size_t worst = 0;
    auto all = all_indices(cls);
    for (std::size_t i = 0; i < cls.size(); ++i)
        worst = std::max(worst, min_teaching_set(cls, i, all).size());
    return worst;
}

inline Dim positive_teaching_dimension(const Concept& l, const FiniteClass& cls) {
    auto idx = cls.index_of(l);
    if (!idx) throw argument_error("positive_teaching_dimension: concept not in class");
    auto t = min_positive_teaching_set(cls, *idx, all_indices(cls));
    return t ? Dim(t->size()) : Dim::infinite();
}

/// One layer of a teaching sequence: the concepts removed in this round
/// and the round's dimension.
struct TeachingRound {
    std::vector<std::size_t> concepts;
    Dim dimension;
    std::vector<Sample> teaching_sets;  // parallel to `concepts`
};

/// Witness structures attached to a DimensionReport.
struct SequenceWitness {
    std::vector<TeachingRound> rounds;
};

struct OrderWitness {
    // Linear order from least preferred to most preferred.
    std::vector<std::size_t> order;
    TeachingMap map;
};

struct DimensionReport {
    Dim value;
    std::string method;
    std::variant<std::monostate, SequenceWitness, OrderWitness> witness;
};

namespace detail {

template <typename TdFn>
DimensionReport greedy_teaching_sequence(const FiniteClass& cls, TdFn per_concept_td,
                                         const std::string& method) {
    if (cls.size() == 0) throw argument_error("rtd: empty class");
    std::vector<std::size_t> remaining = all_indices(cls);
    SequenceWitness witness;
    Dim order(0);
    while (!remaining.empty()) {
        std::vector<std::pair<Dim, std::optional<Sample>>> tds;
        Dim round_min = Dim::infinite();
        for (auto i : remaining) {
            auto [d, s] = per_concept_td(i, remaining);
            tds.emplace_back(d, s);
            if (d < round_min) round_min = d;
        }
        if (round_min.is_infinite())
            return {Dim::infinite(), method, std::move(witness)};
        TeachingRound round;
        round.dimension = round_min;
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            if (tds[k].first == round_min) {
                round.concepts.push_back(remaining[k]);
                round.teaching_sets.push_back(*tds[k].second);
            } else {
                next.push_back(remaining[k]);
            }
        }
        if (order < round_min) order = round_min;
        witness.rounds.push_back(std::move(round));
        remaining = std::move(next);
    }
    return {order, method, std::move(witness)};
}

}  // namespace detail

/// RTD via the canonical greedy teaching sequence: each round removes
/// every concept achieving the minimum TD w.r.t. the remaining class.
inline DimensionReport rtd(const FiniteClass& cls) {
    return detail::greedy_teaching_sequence(
        cls,
        [&](std::size_t i, const std::vector<std::size_t>& rem)
            -> std::pair<Dim, std::optional<Sample>> {
            Sample s = min_teaching_set(cls, i, rem);
            return {Dim(s.size()), std::move(s)};
        },
        "greedy-sequence");
}

/// RTD+ (positive examples only); INFINITE when some round's minimum is
/// INFINITE.
inline DimensionReport rtd_plus(const FiniteClass& cls) {
    return detail::greedy_teaching_sequence(
        cls,
        [&](std::size_t i, const std::vector<std::size_t>& rem)
            -> std::pair<Dim, std::optional<Sample>> {
            auto s = min_positive_teaching_set(cls, i, rem);
            if (!s) return {Dim::infinite(), std::nullopt};
            return {Dim(s->size()), std::move(s)};
        },
        "greedy-sequence-positive");
}

namespace detail {

// PBTD over linear orders by subset DP: the least preferred concept of
// a sub-class S must be taught w.r.t. all of S.
template <typename TdFn>
DimensionReport pbtd_subset_dp(const FiniteClass& cls, TdFn td_of, const SearchBudget& budget,
                               const std::string& method, bool positive) {
    const std::size_t n = cls.size();
    if (n == 0) throw argument_error("pbtd: empty class");
    if (n > budget.max_concepts_order)
        throw resource_error("pbtd_bruteforce: class has " + std::to_string(n) +
                             " concepts, budget is " + std::to_string(budget.max_concepts_order) +
                             "; use rtd instead (equal on finite classes)");

    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    std::vector<Dim> memo(full + 1, Dim(0));
    std::vector<std::uint8_t> pick(full + 1, 0);

    auto members = [&](std::uint32_t mask) {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(i);
        return v;
    };

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        auto mem = members(mask);
        Dim best = Dim::infinite();
        std::size_t best_i = 0;
        bool found = false;
        for (auto i : mem) {
            Dim here = td_of(i, mem);
            Dim rest = memo[mask & ~(1u << i)];
            Dim val = here < rest ? rest : here;
            if (!found || val < best) {
                best = val;
                best_i = i;
                found = true;
            }
        }
        memo[mask] = best;
        pick[mask] = (std::uint8_t)best_i;
    }

    // Reconstruct an optimal order (least preferred first) and its map.
    OrderWitness witness;
    TeachingMap map;
    std::uint32_t mask = full;
    while (mask) {
        std::size_t i = pick[mask];
        witness.order.push_back(i);
        auto mem = members(mask);
        if (positive) {
            if (auto s = min_positive_teaching_set(cls, i, mem)) map.set(i, *s);
        } else {
            map.set(i, min_teaching_set(cls, i, mem));
        }
        mask &= ~(1u << i);
    }
    witness.map = std::move(map);
    return {memo[full], method, std::move(witness)};
}

}  // namespace detail

/// PBTD by exhaustive minimization over linear orders of the concepts
/// (via subset DP, which searches the same space).
inline DimensionReport pbtd_bruteforce(const FiniteClass& cls, const SearchBudget& budget = {}) {
    return detail::pbtd_subset_dp(
        cls,
        [&](std::size_t i, const std::vector<std::size_t>& mem) {
            return Dim(min_teaching_set(cls, i, mem).size());
        },
        budget, "order-search", /*positive=*/false);
}

inline DimensionReport pbtd_plus_bruteforce(const FiniteClass& cls,
                                            const SearchBudget& budget = {}) {
    return detail::pbtd_subset_dp(
        cls,
        [&](std::size_t i, const std::vector<std::size_t>& mem) {
            auto s = min_positive_teaching_set(cls, i, mem);
            return s ? Dim(s->size()) : Dim::infinite();
        },
        budget, "order-search-positive", /*positive=*/true);
}

/// R_T = {(L, L') : L != L' and L is consistent with T(L')}.
inline std::vector<std::pair<std::size_t, std::size_t>> build_relation(const TeachingMap& tm,
                                                                       const FiniteClass& cls) {
    if (tm.size() < cls.size()) throw argument_error("build_relation: map does not cover class");
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t l = 0; l < cls.size(); ++l)
        for (std::size_t l2 = 0; l2 < cls.size(); ++l2)
            if (l != l2 && is_consistent(cls.concept_at(l), tm.at(l2))) rel.emplace_back(l, l2);
    return rel;
}

struct AdmissibilityResult {
    bool admissible = false;
    /// On success: concepts from least preferred to most preferred
    /// (a linear extension of the induced strict partial order).
    std::vector<std::size_t> order;
    /// On failure: a cycle in R_T (first == last), or
    std::vector<std::size_t> cycle;
    /// ... the concept whose own sample it contradicts.
    std::optional<std::pair<std::size_t, LabeledExample>> self_inconsistency;
};

/// Definition of admissibility: every concept consistent with its own
/// sample, and trcl(R_T) asymmetric (no cycle in the R_T digraph).
inline AdmissibilityResult check_admissible(const TeachingMap& tm, const FiniteClass& cls) {
    AdmissibilityResult res;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (const auto& ex : tm.at(i).examples()) {
            bool in = cls.concept_at(i).contains(ex.element);
            if (in != (ex.sign == Sign::positive)) {
                res.self_inconsistency = {i, ex};
                return res;
            }
        }
    }
    auto rel = build_relation(tm, cls);
    const std::size_t n = cls.size();
    std::vector<std::vector<std::size_t>> adj(n);  // edge L -> L' for (L, L') in R_T
    for (auto [l, l2] : rel) adj[l].push_back(l2);

    // DFS cycle detection with path reconstruction.
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::size_t> path;
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) -> bool {
        state[v] = 1;
        path.push_back(v);
        for (auto w : adj[v]) {
            if (state[w] == 1) {
                auto it = std::find(path.begin(), path.end(), w);
                res.cycle.assign(it, path.end());
                res.cycle.push_back(w);
                return true;
            }
            if (state[w] == 0 && dfs(w)) return true;
        }
        state[v] = 2;
        path.pop_back();
        return false;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (state[v] == 0 && dfs(v)) return res;

    // Acyclic: topological order of the reverse graph gives
    // least-preferred-first. (L, L') in R_T forces L below L'.
    std::vector<std::size_t> indeg(n, 0);
    for (auto [l, l2] : rel) (void)l2, ++indeg[l];
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::vector<std::size_t> topo;
    std::vector<std::vector<std::size_t>> radj(n);
    for (auto [l, l2] : rel) radj[l2].push_back(l);
    while (!queue.empty()) {
        std::sort(queue.begin(), queue.end(), std::greater<>());
        auto v = queue.back();
        queue.pop_back();
        topo.push_back(v);
        for (auto u : radj[v])
            if (--indeg[u] == 0) queue.push_back(u);
    }
    std::reverse(topo.begin(), topo.end());
    res.admissible = true;
    res.order = std::move(topo);
    return res;
}

/// The induced preference relation of an admissible mapping.
inline PreferenceRelation induced_preference(const TeachingMap& tm, const FiniteClass& cls) {
    auto check = check_admissible(tm, cls);
    if (!check.admissible) throw argument_error("induced_preference: mapping is not admissible");
    // (L, L') in R_T means T(L') can only teach L' if L' is preferred
    // over the consistent competitor L.
    return PreferenceRelation::from_edges(cls.size(), build_relation(tm, cls));
}

/// True iff l is consistent with t and every other consistent concept
/// is one over which l is strictly preferred.
inline bool verify_teaching_set(const Concept& l, const FiniteClass& cls,
                                const PreferenceRelation& pref, const Sample& t) {
    auto idx = cls.index_of(l);
    if (!idx) throw argument_error("verify_teaching_set: concept not in class");
    if (!is_consistent(l, t)) return false;
    for (std::size_t j = 0; j < cls.size(); ++j) {
        if (j == *idx) continue;
        if (is_consistent(cls.concept_at(j), t) && !pref.preferred(*idx, j)) return false;
    }
    return true;
}

// --- gallery ---------------------------------------------------------------

namespace detail {

inline std::string subset_name(const std::vector<std::string>& labels, std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += labels[i];
            first = false;
        }
    return s + "}";
}

inline FiniteClass subsets_class(const Universe& u, std::optional<std::size_t> exact_size) {
    if (u.size() >= 31) throw argument_error("gallery: universe too large");
    FiniteClass cls(u, {});
    for (std::uint32_t mask = 0; mask < (1u << u.size()); ++mask) {
        std::size_t card = (std::size_t)std::popcount(mask);
        if (exact_size && card != *exact_size) continue;
        std::vector<bool> bits(u.size(), false);
        for (std::size_t i = 0; i < u.size(); ++i)
            if (mask & (1u << i)) bits[i] = true;
        cls.add(subset_name(u.labels(), mask), Concept(std::move(bits)));
    }
    return cls;
}

}  // namespace detail

/// 2^[k] over universe {1..k}.
inline FiniteClass powerset_class(std::size_t k) {
    return detail::subsets_class(Universe::numeric(k), std::nullopt);
}

/// ([k] choose l) over universe {1..k}.
inline FiniteClass k_choose_l_class(std::size_t k, std::size_t l) {
    if (l > k) throw argument_error("k_choose_l: l > k");
    return detail::subsets_class(Universe::numeric(k), l);
}

/// The window gadget class: concepts L_{k,S} for S a subset of
/// {k+1,...,2k-1}, restricted to the effective universe (the only
/// examples distinguishing distinct concepts lie in that interval).
inline FiniteClass lk_window_class(std::size_t k) {
    if (k < 1) throw argument_error("Lk_window: k must be >= 1");
    return detail::subsets_class(Universe::numeric(k - 1, (long long)k + 1), std::nullopt);
}

/// Same window restricted to |S| = l.
inline FiniteClass lkl_window_class(std::size_t k, std::size_t l) {
    if (k < 1) throw argument_error("Lkl_window: k must be >= 1");
    if (l > k - 1) throw argument_error("Lkl_window: l > k-1");
    return detail::subsets_class(Universe::numeric(k - 1, (long long)k + 1), l);
}

}  // namespace pbt
