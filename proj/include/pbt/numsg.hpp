#pragma once

// Numerical semigroups and linear sets over the naturals: membership,
// Frobenius numbers, independence and canonical generator sets, Apery
// residues, (k,N)-special sets, and enumerators for the gadget classes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "pbt/errors.hpp"

namespace pbt::numsg {

using Int = long long;

/// Sorted set of distinct positive integers, size >= 1.
class GeneratorSet {
public:
    GeneratorSet() = default;

    explicit GeneratorSet(std::vector<Int> gens) : gens_(std::move(gens)) {
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        if (gens_.empty()) throw argument_error("generator set must be non-empty");
        if (gens_.front() <= 0) throw argument_error("generators must be positive");
    }

    const std::vector<Int>& values() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    Int min() const { return gens_.front(); }
    Int max() const { return gens_.back(); }
    Int sum() const { return std::accumulate(gens_.begin(), gens_.end(), (Int)0); }
    Int gcd() const {
        Int g = 0;
        for (Int v : gens_) g = std::gcd(g, v);
        return g;
    }
    bool contains(Int v) const { return std::binary_search(gens_.begin(), gens_.end(), v); }

    auto operator<=>(const GeneratorSet&) const = default;

private:
    std::vector<Int> gens_;
};

/// x in <G> = {sum a_i g_i : a_i >= 0}? DP over 0..x.
inline bool span_member(const GeneratorSet& g, Int x) {
    if (x < 0) throw argument_error("span_member: x must be non-negative");
    std::vector<bool> reach((std::size_t)x + 1, false);
    reach[0] = true;
    for (Int v = 1; v <= x; ++v)
        for (Int gi : g.values()) {
            if (gi > v) break;
            if (reach[(std::size_t)(v - gi)]) {
                reach[(std::size_t)v] = true;
                break;
            }
        }
    return reach[(std::size_t)x];
}

/// Largest natural not in <P>; requires gcd(P) = 1 (co-finiteness).
inline Int frobenius(const GeneratorSet& p) {
    if (p.gcd() != 1) throw argument_error("frobenius: gcd != 1, span is not co-finite");
    if (p.min() == 1) return -1;  // every natural is a member
    const Int a = p.min();
    // Scan with DP until a run of `a` consecutive members; everything
    // beyond is then a member. The two-generator bound pq-p-q caps the
    // scan in all cases that arise here.
    std::vector<bool> reach{true};
    Int last_gap = 0;
    Int run = 1;  // 0 is a member
    for (Int v = 1; run < a; ++v) {
        bool m = false;
        for (Int gi : p.values()) {
            if (gi > v) break;
            if (reach[(std::size_t)(v - gi)]) {
                m = true;
                break;
            }
        }
        reach.push_back(m);
        if (m) {
            ++run;
        } else {
            run = 0;
            last_gap = v;
        }
    }
    return last_gap;
}

/// Independent: no element is a non-negative combination of the others.
inline bool is_independent(const GeneratorSet& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<Int> rest;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (j != i) rest.push_back(p.values()[j]);
        if (rest.empty()) continue;
        if (span_member(GeneratorSet(rest), p.values()[i])) return false;
    }
    return true;
}

/// Removes every generator lying in the span of the smaller ones,
/// scanning ascending. Since any combination involving a larger
/// generator overshoots, the result is the unique independent set
/// generating <G>. Returns (G*, tupleg(G)) with the tuple ordered.
inline std::pair<GeneratorSet, std::vector<Int>> reduce_prefix(const GeneratorSet& g) {
    std::vector<Int> kept;
    for (Int v : g.values()) {
        if (kept.empty() || !span_member(GeneratorSet(kept), v)) kept.push_back(v);
    }
    return {GeneratorSet(kept), kept};
}

/// Apery values: t_r = min {s in <P> : s = r mod a}, a = min P, via
/// shortest paths over residue classes with the generators as arcs.
struct AperyTable {
    std::vector<Int> t;  // indexed by residue 0..a-1
    Int t_max = 0;
};

inline AperyTable apery(const GeneratorSet& p) {
    const Int a = p.min();
    const Int INF = std::numeric_limits<Int>::max();
    std::vector<Int> dist((std::size_t)a, INF);
    dist[0] = 0;
    using Node = std::pair<Int, Int>;  // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [d, r] = pq.top();
        pq.pop();
        if (d > dist[(std::size_t)r]) continue;
        for (Int gi : p.values()) {
            Int nd = d + gi;
            Int nr = nd % a;
            if (nd < dist[(std::size_t)nr]) {
                dist[(std::size_t)nr] = nd;
                pq.push({nd, nr});
            }
        }
    }
    AperyTable out;
    for (Int r = 0; r < a; ++r) {
        if (dist[(std::size_t)r] == INF)
            throw argument_error("apery: residue " + std::to_string(r) +
                                 " unreachable (gcd != 1)");
        out.t.push_back(dist[(std::size_t)r]);
        out.t_max = std::max(out.t_max, dist[(std::size_t)r]);
    }
    return out;
}

inline bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// q(P): smallest prime greater than F(P) and greater than max P.
inline Int q_of(const GeneratorSet& p) {
    Int lo = std::max(frobenius(p), p.max());
    Int q = lo + 1;
    while (!is_prime(q)) ++q;
    return q;
}

struct SpecialSetCertificate {
    std::size_t k = 0;
    Int N = 0;
    GeneratorSet P;
    Int a = 0;
    AperyTable apery;
    Int frobenius = 0;
    Int q = 0;
    bool passed = false;
    std::string failure;  // first failed condition, empty when passed
};

/// Checks the (k,N)-special-set conditions: P independent of size k with
/// prime minimum, N >= k(a + t_max) and N >= q(P) + sum(P minus {a}).
inline SpecialSetCertificate is_special(std::size_t k, Int N, const GeneratorSet& p) {
    SpecialSetCertificate cert;
    cert.k = k;
    cert.N = N;
    cert.P = p;
    cert.a = p.min();
    if (k < 2 || p.size() != k) {
        cert.failure = "P must have cardinality k >= 2";
        return cert;
    }
    if (!is_prime(p.min())) {
        cert.failure = "min P is not prime";
        return cert;
    }
    if (!is_independent(p)) {
        cert.failure = "P is not independent";
        return cert;
    }
    // prime minimum + independence force gcd 1 (co-finite)
    cert.frobenius = frobenius(p);
    cert.apery = apery(p);
    cert.q = q_of(p);
    if (N < (Int)k * (cert.a + cert.apery.t_max)) {
        cert.failure = "N < k(a + t_max)";
        return cert;
    }
    Int tail = p.sum() - cert.a;
    if (N < cert.q + tail) {
        cert.failure = "N < q(P) + sum(P \\ {a})";
        return cert;
    }
    cert.passed = true;
    return cert;
}

/// N(k) = k^2 + (k-1-floor((k-1)/2))k + (k-1)k/2.
inline Int n_of_k(Int k) {
    if (k < 1) throw argument_error("n_of_k: k must be >= 1");
    return k * k + (k - 1 - (k - 1) / 2) * k + (k - 1) * k / 2;
}

enum class Variant { erasing, non_erasing };

/// Canonical representation of c + <G> or c + <G>+ via the unique
/// independent generator set. For the non-erasing variant the
/// represented set is shift + ne_sum + <gstar> with ne_sum = sumg(G).
class LinearSetRep {
public:
    LinearSetRep() = default;

    static LinearSetRep linset(const GeneratorSet& g, Int shift = 0) {
        LinearSetRep r;
        r.variant_ = Variant::erasing;
        r.shift_ = shift;
        r.gstar_ = reduce_prefix(g).first;
        r.ne_sum_ = 0;
        return r;
    }

    static LinearSetRep nelinset(const GeneratorSet& g, Int shift = 0) {
        LinearSetRep r;
        r.variant_ = Variant::non_erasing;
        r.shift_ = shift;
        r.gstar_ = reduce_prefix(g).first;
        r.ne_sum_ = g.sum();
        return r;
    }

    Variant variant() const { return variant_; }
    Int shift() const { return shift_; }
    Int ne_sum() const { return ne_sum_; }
    const GeneratorSet& gstar() const { return gstar_; }

    /// Total offset: min element of the represented set.
    Int offset() const { return shift_ + ne_sum_; }

    /// Total membership oracle. Queries beyond the periodicity
    /// threshold are answered by divisibility.
    bool member(Int x) const {
        if (x < offset()) return false;
        Int y = x - offset();
        Int g = gstar_.gcd();
        if (y % g != 0) return false;
        std::vector<Int> scaled;
        for (Int v : gstar_.values()) scaled.push_back(v / g);
        GeneratorSet base(scaled);
        Int yy = y / g;
        Int f = frobenius(base);
        if (yy > f) return true;
        return span_member(base, yy);
    }

    /// Past this value, membership in the represented set is periodic
    /// with period gcd(gstar).
    Int periodicity_threshold() const {
        Int g = gstar_.gcd();
        std::vector<Int> scaled;
        for (Int v : gstar_.values()) scaled.push_back(v / g);
        Int f = frobenius(GeneratorSet(scaled));
        return offset() + (f + 1) * g;
    }

    /// Canonical equality: same offset and same independent generator
    /// set. The variant tag does not matter: <G>+ = sumg(G) + <G>.
    bool operator==(const LinearSetRep& o) const {
        return offset() == o.offset() && gstar_ == o.gstar_;
    }

    /// Deterministic ordering for enumeration output.
    bool operator<(const LinearSetRep& o) const {
        if (offset() != o.offset()) return offset() < o.offset();
        return gstar_.values() < o.gstar_.values();
    }

private:
    Variant variant_ = Variant::erasing;
    Int shift_ = 0;
    Int ne_sum_ = 0;
    GeneratorSet gstar_;
};

inline bool linset_equal(const LinearSetRep& l1, const LinearSetRep& l2) { return l1 == l2; }

/// A bound below which any membership difference between the two sets
/// must show up (both are eventually periodic).
inline Int comparison_bound(const LinearSetRep& l1, const LinearSetRep& l2) {
    Int m = std::max(l1.periodicity_threshold(), l2.periodicity_threshold());
    Int lcm = std::lcm(l1.gstar().gcd(), l2.gstar().gcd());
    return m + lcm;
}

/// Exact subset test via bounded pointwise comparison plus periodicity.
inline bool linset_subset(const LinearSetRep& l1, const LinearSetRep& l2) {
    Int bound = comparison_bound(l1, l2);
    for (Int x = 0; x <= bound; ++x)
        if (l1.member(x) && !l2.member(x)) return false;
    return true;
}

enum class ClassVariant { LINSET, CFLINSET, NELINSET, NECFLINSET };

struct EnumerateOptions {
    std::size_t k = 1;
    Int bound = 1;          // generators range over [1..bound]
    bool shifted = false;   // the shift-extension (primed) class
    std::optional<Int> fixed_shift;  // the [N]-indexed family: shift forced to N,
                                     // generator sums bounded by N
    std::size_t max_candidates = 2'000'000;
};

/// All distinct concepts of the requested family with generators up to
/// the bound, canonicalized and deduplicated.
inline std::vector<LinearSetRep> enumerate_class(ClassVariant variant,
                                                 const EnumerateOptions& opt) {
    bool cofinite = variant == ClassVariant::CFLINSET || variant == ClassVariant::NECFLINSET;
    bool non_erasing = variant == ClassVariant::NELINSET || variant == ClassVariant::NECFLINSET;

    std::vector<std::vector<Int>> gensets;
    std::vector<Int> current;
    std::function<void(Int)> gen = [&](Int next) {
        if (!current.empty()) gensets.push_back(current);
        if (gensets.size() > opt.max_candidates)
            throw resource_error("enumerate_class: candidate budget exceeded");
        if (current.size() == opt.k) return;
        for (Int v = next; v <= opt.bound; ++v) {
            current.push_back(v);
            gen(v + 1);
            current.pop_back();
        }
    };
    gen(1);

    std::set<LinearSetRep> out;
    for (const auto& gs : gensets) {
        GeneratorSet g(gs);
        if (cofinite && g.gcd() != 1) continue;
        if (opt.fixed_shift) {
            // N + <P> with sum(P) <= N; the non-erasing reading is the
            // same family rewritten, so enumerate the erasing form.
            if (g.sum() > *opt.fixed_shift) continue;
            out.insert(LinearSetRep::linset(g, *opt.fixed_shift));
        } else if (!opt.shifted) {
            out.insert(non_erasing ? LinearSetRep::nelinset(g) : LinearSetRep::linset(g));
        } else {
            for (Int c = 0; c <= opt.bound; ++c)
                out.insert(non_erasing ? LinearSetRep::nelinset(g, c)
                                       : LinearSetRep::linset(g, c));
        }
    }
    return {out.begin(), out.end()};
}

/// S is a weak spanning set of l w.r.t. the class iff S is a subset of
/// l contained in no proper subset of l occurring in the class.
inline bool is_weak_spanning(const std::vector<Int>& s, const LinearSetRep& l,
                             const std::vector<LinearSetRep>& cls) {
    for (Int x : s)
        if (!l.member(x)) return false;
    for (const auto& other : cls) {
        if (other == l) continue;
        if (!linset_subset(other, l)) continue;  // proper subsets only
        bool contains_all = true;
        for (Int x : s)
            if (!other.member(x)) {
                contains_all = false;
                break;
            }
        if (contains_all) return false;
    }
    return true;
}

/// True iff NO subset of l intersected with [0..window] of the given
/// size is a weak spanning set of l w.r.t. the class (brute force).
inline bool weak_spanning_floor(const LinearSetRep& l, const std::vector<LinearSetRep>& cls,
                                std::size_t size, Int window,
                                std::size_t max_subsets = 5'000'000) {
    std::vector<Int> pool;
    for (Int x = 0; x <= window; ++x)
        if (l.member(x)) pool.push_back(x);
    if (size > pool.size()) return true;

    std::size_t count = 0;
    std::vector<Int> chosen;
    std::function<bool(std::size_t)> any_spans = [&](std::size_t start) -> bool {
        if (chosen.size() == size) {
            if (++count > max_subsets)
                throw resource_error("weak_spanning_floor: subset budget exceeded");
            return is_weak_spanning(chosen, l, cls);
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            if (any_spans(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return !any_spans(0);
}

}  // namespace pbt::numsg
