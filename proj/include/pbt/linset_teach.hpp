#pragma once

// Teacher/student protocols for linear-set classes (erasing and
// non-erasing), their shift extensions, and half-intervals.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pbt/errors.hpp"
#include "pbt/numsg.hpp"

namespace pbt::linset {

using numsg::GeneratorSet;
using numsg::Int;
using numsg::LinearSetRep;

/// Sorted distinct non-negative values, all taught as positive examples.
using LinsetSample = std::vector<Int>;

inline LinsetSample make_sample(std::vector<Int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (!values.empty() && values.front() < 0)
        throw argument_error("sample values must be non-negative");
    return values;
}

// --- erasing linear sets ---------------------------------------------------

/// Emits the independent generators of <g> as positive examples.
inline LinsetSample teach_linset(const GeneratorSet& g, std::size_t k) {
    auto gstar = numsg::reduce_prefix(g).first;
    if (gstar.size() > k)
        throw argument_error("more than k independent generators");
    return gstar.values();
}

/// Returns <s> in canonical form: the subset-minimal consistent span.
inline LinearSetRep student_linset(const LinsetSample& s, std::size_t /*k*/) {
    std::vector<Int> gens;
    for (Int v : s)
        if (v > 0) gens.push_back(v);  // 0 generates nothing
    if (gens.empty()) throw decode_error("student_linset: no positive generators in sample");
    return LinearSetRep::linset(GeneratorSet(gens));
}

// --- non-erasing linear sets -----------------------------------------------

/// Preference key of a generator set: total sum of G together with the
/// ordered tuple of its independent generators.
struct NePreferenceKey {
    Int sumg = 0;
    std::vector<Int> tupleg;
};

inline NePreferenceKey ne_key(const GeneratorSet& g) {
    return {g.sum(), numsg::reduce_prefix(g).second};
}

enum class Prefer { first, second, equal_key };

/// Preference over generator sets for the non-erasing student:
///   1. larger total sum wins;
///   2. on equal sums, the lexicographically greater tuple wins,
///      unless the other tuple is a prefix of it;
///   3. on equal sums, a proper prefix beats its extension.
inline Prefer ne_prefer(const GeneratorSet& g1, const GeneratorSet& g2) {
    NePreferenceKey a = ne_key(g1), b = ne_key(g2);
    if (a.sumg != b.sumg) return a.sumg > b.sumg ? Prefer::first : Prefer::second;
    const auto& t1 = a.tupleg;
    const auto& t2 = b.tupleg;
    std::size_t n = std::min(t1.size(), t2.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (t1[i] != t2[i]) return t1[i] > t2[i] ? Prefer::first : Prefer::second;
    }
    // one tuple is a prefix of the other: the shorter is preferred
    if (t1.size() == t2.size()) return Prefer::equal_key;
    return t1.size() < t2.size() ? Prefer::first : Prefer::second;
}

/// S = {g, g+g*_1, ..., g+g*_h} with g = sumg(G) and
/// h = l*-1 if G* = G else l* (l* = |G*|).
inline LinsetSample teach_nelinset(const GeneratorSet& g) {
    auto gstar = numsg::reduce_prefix(g).first;
    Int total = g.sum();
    std::size_t h = gstar.size() - (gstar == g ? 1 : 0);
    std::vector<Int> out{total};
    for (std::size_t i = 0; i < h; ++i) out.push_back(total + gstar.values()[i]);
    return make_sample(std::move(out));
}

/// Enumerates candidate generator sets bounded by the minimum sample
/// value (larger sums are inconsistent with it) and returns the
/// ne_prefer-maximal consistent candidate's concept. Key ties break by
/// lexicographically smallest full generator set; the decoded concept
/// is invariant under that choice.
inline LinearSetRep student_nelinset(const LinsetSample& s, std::size_t k) {
    if (s.empty()) throw decode_error("student_nelinset: empty sample");
    const Int g = s.front();
    std::optional<GeneratorSet> best;
    std::optional<LinearSetRep> best_rep;

    std::vector<Int> current;
    std::function<void(Int, Int)> walk = [&](Int next, Int sum) {
        if (!current.empty()) {
            GeneratorSet cand(current);
            LinearSetRep rep = LinearSetRep::nelinset(cand);
            bool consistent = true;
            for (Int x : s)
                if (!rep.member(x)) {
                    consistent = false;
                    break;
                }
            if (consistent) {
                if (!best) {
                    best = cand;
                    best_rep = rep;
                } else {
                    Prefer p = ne_prefer(cand, *best);
                    if (p == Prefer::first ||
                        (p == Prefer::equal_key && cand.values() < best->values())) {
                        best = cand;
                        best_rep = rep;
                    }
                }
            }
        }
        if (current.size() == k) return;
        for (Int v = next; v <= g && sum + v <= g; ++v) {
            current.push_back(v);
            walk(v + 1, sum + v);
            current.pop_back();
        }
    };
    walk(1, 0);

    if (!best_rep) throw decode_error("student_nelinset: no consistent candidate");
    return *best_rep;
}

// --- shift extension -------------------------------------------------------

/// T'(c+L) = {(c,+)} union {(c+x,+) : x in T(L)}. Valid only when the
/// inner concept contains 0, so that (c,+) marks the shift.
inline LinsetSample shift_teach(Int c, const LinsetSample& inner,
                                const std::function<bool(Int)>& inner_member) {
    if (c < 0) throw argument_error("shift must be non-negative");
    if (!inner_member(0)) throw argument_error("shift protocol requires 0 in the inner concept");
    std::vector<Int> out{c};
    for (Int x : inner) out.push_back(c + x);
    return make_sample(std::move(out));
}

inline LinsetSample teach_shifted_linset(const GeneratorSet& g, Int c, std::size_t k) {
    return shift_teach(c, teach_linset(g, k), [](Int) { return true; });  // 0 in every <G>
}

/// Reads c as the minimum sample value, unshifts, and delegates to the
/// erasing-span student. The unshifted (0,+) is dropped harmlessly.
inline LinearSetRep student_shifted_linset(const LinsetSample& s, std::size_t k) {
    if (s.empty()) throw decode_error("student_shifted_linset: empty sample");
    Int c = s.front();
    std::vector<Int> inner;
    for (Int x : s) inner.push_back(x - c);
    auto rep = student_linset(make_sample(std::move(inner)), k);
    return LinearSetRep::linset(rep.gstar(), c);
}

/// Shifted non-erasing concepts are taught through the rewrite
/// c + <G>+ = N + <G> with N = c + sumg(G), giving at most
/// 1 + |G*| <= k+1 examples.
inline LinsetSample teach_shifted_nelinset(const GeneratorSet& g, Int c, std::size_t k) {
    return teach_shifted_linset(g, c + g.sum(), k);
}

inline LinearSetRep student_shifted_nelinset(const LinsetSample& s, std::size_t k) {
    return student_shifted_linset(s, k);
}

// --- half-intervals over [0,1) ---------------------------------------------

using Rational = boost::multiprecision::cpp_rational;

/// Teaches [0,a] by the single example (a,+).
inline std::vector<Rational> teach_halfinterval(const Rational& a) {
    if (a < 0 || a >= 1) throw argument_error("half-interval endpoint must lie in [0,1)");
    return {a};
}

/// Smallest consistent interval: the maximum positive example.
inline Rational student_halfinterval(const std::vector<Rational>& positives) {
    if (positives.empty()) throw decode_error("student_halfinterval: empty sample");
    Rational m = positives.front();
    for (const auto& v : positives) {
        if (v < 0 || v >= 1) throw argument_error("half-interval example outside [0,1)");
        if (v > m) m = v;
    }
    return m;
}

}  // namespace pbt::linset
