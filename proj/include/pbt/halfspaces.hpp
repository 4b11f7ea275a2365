#pragma once

// Exact-rational teaching protocols for homogeneous and general
// halfspaces, the classical d+1 teaching set for the e1 ray, the
// finite sign class F, and the R^d / empty-set extension.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pbt/core.hpp"
#include "pbt/errors.hpp"

namespace pbt::hs {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using QVec = std::vector<Rational>;

struct SignedExample {
    QVec x;
    int label = 1;  // +1 or -1; boundary points carry +1
    bool operator==(const SignedExample&) const = default;
};

/// H_{w,b} = {x : w.x + b >= 0}; equality up to positive scaling.
struct Halfspace {
    QVec w;
    Rational b = 0;
};

inline bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

inline Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw argument_error("dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Scales (w,b) by the positive rational making all entries integers
/// with gcd 1; the sign pattern is preserved.
inline Halfspace canonical(const Halfspace& h) {
    if (is_zero(h.w)) throw argument_error("halfspace weight vector must be non-zero");
    BigInt l = 1;
    auto fold = [&](const Rational& r) { l = lcm(l, denominator(r)); };
    for (const auto& r : h.w) fold(r);
    fold(h.b);
    BigInt g = 0;
    auto fold2 = [&](const Rational& r) {
        g = gcd(g, abs(numerator(r) * (l / denominator(r))));
    };
    for (const auto& r : h.w) fold2(r);
    fold2(h.b);
    Rational scale(l, g);
    Halfspace out;
    for (const auto& r : h.w) out.w.push_back(r * scale);
    out.b = h.b * scale;
    return out;
}

inline bool same_halfspace(const Halfspace& a, const Halfspace& b) {
    if (a.w.size() != b.w.size()) return false;
    Halfspace ca = canonical(a), cb = canonical(b);
    return ca.w == cb.w && ca.b == cb.b;
}

inline int hs_label(const Halfspace& h, const QVec& x) {
    return dot(h.w, x) + h.b >= 0 ? 1 : -1;
}

inline std::size_t trailing_zeros(const QVec& v) {
    std::size_t s = 0;
    for (std::size_t i = v.size(); i-- > 0 && v[i] == 0;) ++s;
    return s;
}

inline int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// True iff p = t*q for some rational t > 0.
inline bool positively_proportional(const QVec& p, const QVec& q) {
    if (p.size() != q.size() || is_zero(p) || is_zero(q)) return false;
    std::optional<Rational> t;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if ((p[i] == 0) != (q[i] == 0)) return false;
        if (q[i] == 0) continue;
        Rational r = p[i] / q[i];
        if (r <= 0) return false;
        if (t && *t != r) return false;
        t = r;
    }
    return t.has_value();
}

/// u = w_d * (w_1,...,w_{d-1},0) - (sum_{i<d} w_i^2) * e_d: a rational
/// vector orthogonal to w whose halfspace H_u isolates the direction
/// of w as the argmax of w_d (for w_d > 0), replacing the proof's
/// rotation argument.
inline QVec tangent_vector(const QVec& wstar) {
    std::size_t d = wstar.size();
    if (d < 2 || is_zero(wstar)) throw argument_error("tangent_vector: need d >= 2, w != 0");
    Rational head_sq = 0;
    for (std::size_t i = 0; i + 1 < d; ++i) head_sq += wstar[i] * wstar[i];
    if (head_sq == 0) throw argument_error("tangent_vector: w parallel to e_d");
    QVec u(d, 0);
    for (std::size_t i = 0; i + 1 < d; ++i) u[i] = wstar[d - 1] * wstar[i];
    u[d - 1] = -head_sq;
    return u;
}

/// Closed-form argmax of w_d over the unit sphere intersected with
/// H_u: e_d if u_d >= 0, else the boundary direction |u|^2 e_d - u_d u.
inline QVec wd_argmax_direction(const QVec& u) {
    std::size_t d = u.size();
    QVec ed(d, 0);
    ed[d - 1] = 1;
    if (u[d - 1] >= 0) return ed;
    Rational norm_sq = dot(u, u);
    QVec m(d, 0);
    for (std::size_t i = 0; i < d; ++i) m[i] = -u[d - 1] * u[i];
    m[d - 1] += norm_sq;
    return m;
}

/// Checks Eq. good-choice computationally: w* must be the unique
/// maximizer of the last coordinate among northern-hemisphere vectors
/// of H_u. All comparisons are rational (squared quantities).
inline bool verify_good_choice(const QVec& wstar, const QVec& u) {
    if (wstar.size() != u.size()) throw argument_error("dimension mismatch");
    if (wstar.back() <= 0) throw argument_error("verify_good_choice: requires w_d > 0");
    if (dot(u, wstar) != 0) return false;  // w* must lie on the boundary of H_u
    return positively_proportional(wd_argmax_direction(u), wstar);
}

namespace detail {

inline QVec embed(const QVec& reduced, std::size_t d) {
    QVec full = reduced;
    full.resize(d, Rational(0));
    return full;
}

inline QVec axis(std::size_t d, std::size_t i, const Rational& value) {
    QVec v(d, 0);
    v[i] = value;
    return v;
}

}  // namespace detail

/// At most two examples: a sign example fixing the last nonzero
/// coordinate, plus a tangent example pinning the direction. Targets
/// proportional to a unit vector need only the sign example.
inline std::vector<SignedExample> teach_homogeneous(const QVec& wstar) {
    std::size_t d = wstar.size();
    if (d == 0 || is_zero(wstar)) throw argument_error("teach_homogeneous: w must be non-zero");
    std::size_t s = trailing_zeros(wstar);
    std::size_t dr = d - s;
    QVec wr(wstar.begin(), wstar.begin() + dr);
    int sigma = sgn(wr[dr - 1]);

    std::vector<SignedExample> out;
    out.push_back({detail::axis(d, dr - 1, Rational(-sigma)), -1});
    Rational head_sq = 0;
    for (std::size_t i = 0; i + 1 < dr; ++i) head_sq += wr[i] * wr[i];
    if (dr == 1 || head_sq == 0) return out;  // sign example alone suffices

    QVec v = wr;
    for (auto& c : v) c *= sigma;  // v_dr > 0
    QVec u = tangent_vector(v);
    for (auto& c : u) c *= sigma;
    out.push_back({detail::embed(u, d), 1});
    return out;
}

/// Protocol decoder: reads the reduced dimension from the examples'
/// common trailing zeros, the sign from the negative example, and
/// maximizes |w_d| subject to the positive example's constraint.
inline Halfspace decode_homogeneous(const std::vector<SignedExample>& examples, std::size_t d) {
    if (examples.empty() || examples.size() > 2)
        throw decode_error("homogeneous sample must have 1 or 2 examples");
    std::vector<const SignedExample*> neg, pos;
    for (const auto& ex : examples) {
        if (ex.x.size() != d) throw decode_error("example has wrong dimension");
        if (is_zero(ex.x)) throw decode_error("zero vector is not a homogeneous example");
        (ex.label == -1 ? neg : pos).push_back(&ex);
    }
    if (neg.size() != 1 || pos.size() > 1)
        throw decode_error("expected one negative example and at most one positive");

    std::size_t s = trailing_zeros(neg.front()->x);
    if (pos.size() == 1) s = std::min(s, trailing_zeros(pos.front()->x));
    std::size_t dr = d - s;

    // the negative example must be -sigma * e_dr
    const QVec& nx = neg.front()->x;
    for (std::size_t i = 0; i + 1 < dr; ++i)
        if (nx[i] != 0) throw decode_error("negative example must lie on the e_d axis");
    if (nx[dr - 1] != 1 && nx[dr - 1] != -1)
        throw decode_error("negative example must be a signed unit vector");
    int sigma = nx[dr - 1] == -1 ? 1 : -1;

    QVec w;
    if (pos.empty()) {
        w = detail::axis(dr, dr - 1, Rational(sigma));
    } else {
        QVec u(pos.front()->x.begin(), pos.front()->x.begin() + dr);
        for (auto& c : u) c *= sigma;
        QVec m = wd_argmax_direction(u);
        if (is_zero(m)) throw decode_error("degenerate positive example");
        for (auto& c : m) c *= sigma;
        w = m;
    }
    Halfspace h{detail::embed(w, d), 0};
    for (const auto& ex : examples)
        if (hs_label(h, ex.x) != ex.label) throw decode_error("sample is not protocol-shaped");
    return canonical(h);
}

/// The Lemma 3-examples anchors: (0,b*), a2 = -(2b*/w_d)e_d with label
/// -b*, a3 = -(b*/w_d)e_d with label +1.
inline std::vector<SignedExample> three_anchor_examples(const QVec& wstar, int bstar) {
    std::size_t d = wstar.size();
    if (bstar != 1 && bstar != -1) throw argument_error("bias must be +1 or -1");
    if (d == 0 || wstar[d - 1] == 0) throw argument_error("w_d must be non-zero");
    const Rational& wd = wstar[d - 1];
    return {
        {QVec(d, 0), bstar},
        {detail::axis(d, d - 1, Rational(-2 * bstar) / wd), -bstar},
        {detail::axis(d, d - 1, Rational(-bstar) / wd), 1},
    };
}

/// Full teacher, stages 1-5: homogeneous delegation for b* = 0, else
/// anchors + embedded homogeneous examples for the head direction +
/// the L1-norm example a6. At most 6 examples.
inline std::vector<SignedExample> teach_general(const QVec& wstar, int bstar) {
    std::size_t d = wstar.size();
    if (d == 0 || is_zero(wstar)) throw argument_error("teach_general: w must be non-zero");
    if (bstar == 0) return teach_homogeneous(wstar);
    if (bstar != 1 && bstar != -1) throw argument_error("bias must be 0, +1 or -1");

    std::size_t s = trailing_zeros(wstar);
    std::size_t dr = d - s;
    QVec wr(wstar.begin(), wstar.begin() + dr);
    const Rational& wd = wr[dr - 1];

    std::vector<SignedExample> out;
    for (auto& ex : three_anchor_examples(wr, bstar))
        out.push_back({detail::embed(ex.x, d), ex.label});

    QVec head(wr.begin(), wr.begin() + (dr - 1));
    if (dr == 1 || is_zero(head)) return out;  // Rule 4 closes the gap

    Rational ad = Rational(-bstar) / wd;  // cancels the bias in stage-4 inner products
    for (const auto& ex : teach_homogeneous(head)) {
        QVec x = ex.x;
        x.push_back(ad);
        out.push_back({detail::embed(x, d), ex.label});
    }

    // a6 = (beta_1,...,beta_{dr-1}, -(L+b*)/w_d) with L = |head|_1
    Rational l1 = 0;
    QVec a6;
    for (const auto& c : head) {
        a6.push_back(Rational(sgn(c)));
        l1 += abs(c);
    }
    a6.push_back(-(l1 + bstar) / wd);
    out.push_back({detail::embed(a6, d), 1});
    return out;
}

/// Per-stage state of the general decoder, for inspection in tests.
struct DecodeTrace {
    bool homogeneous = false;
    std::size_t reduced_dim = 0;
    Rational b = 0;
    Rational w_d = 0;       // decoded last nonzero coordinate
    bool head_zero = true;  // Rule 4 fired
    Rational l1 = 0;        // L read from a6
};

/// Stage-wise decoder implementing Rules 1-6 on protocol-shaped
/// samples. Rule 3 / Rule 6 equality selection makes the decoded pair
/// exactly the taught one (up to positive scaling).
inline Halfspace decode_general(const std::vector<SignedExample>& examples, std::size_t d,
                                DecodeTrace* trace_out = nullptr) {
    DecodeTrace trace;
    auto finish = [&](const Halfspace& h) {
        Halfspace c = canonical(h);
        for (const auto& ex : examples)
            if (hs_label(c, ex.x) != ex.label) throw decode_error("sample is not protocol-shaped");
        if (trace_out) *trace_out = trace;
        return c;
    };

    auto zero_it = std::find_if(examples.begin(), examples.end(),
                                [](const SignedExample& e) { return is_zero(e.x); });
    if (zero_it == examples.end()) {
        trace.homogeneous = true;
        Halfspace h = decode_homogeneous(examples, d);
        trace.reduced_dim = d - trailing_zeros(h.w);
        trace.w_d = h.w[trace.reduced_dim - 1];
        if (trace_out) *trace_out = trace;
        return h;
    }

    // stage 2: bias from the zero anchor
    trace.b = zero_it->label;
    Rational b = trace.b;

    std::size_t s = d;
    for (const auto& ex : examples)
        if (!is_zero(ex.x)) s = std::min(s, trailing_zeros(ex.x));
    std::size_t dr = d - s;
    trace.reduced_dim = dr;
    for (const auto& ex : examples)
        if (ex.x.size() != d) throw decode_error("example has wrong dimension");

    // classify the non-anchor structure
    auto on_axis = [&](const QVec& x) {
        for (std::size_t i = 0; i + 1 < dr; ++i)
            if (x[i] != 0) return false;
        return x[dr - 1] != 0;
    };
    std::vector<SignedExample> axis_ex, other_ex;
    for (const auto& ex : examples) {
        if (is_zero(ex.x)) continue;
        (on_axis(ex.x) ? axis_ex : other_ex).push_back(ex);
    }
    if (axis_ex.size() != 2) throw decode_error("expected the two axis anchors a2, a3");
    // a2 has twice the magnitude of a3 and label -b; a3 has label +1
    const SignedExample* a2 = &axis_ex[0];
    const SignedExample* a3 = &axis_ex[1];
    if (abs(a2->x[dr - 1]) != 2 * abs(a3->x[dr - 1])) std::swap(a2, a3);
    if (abs(a2->x[dr - 1]) != 2 * abs(a3->x[dr - 1]) ||
        Rational(a2->label) != -b || a3->label != 1)
        throw decode_error("axis anchors do not match the protocol");
    // Rule 3 equality: w_d from a3 = -(b/w_d) e_d
    Rational wd = -b / a3->x[dr - 1];
    trace.w_d = wd;

    // split stage-4 examples (last reduced coordinate -b/w_d) from a6
    Rational ad = -b / wd;
    std::vector<SignedExample> stage4;
    const SignedExample* a6 = nullptr;
    for (const auto& ex : other_ex) {
        if (ex.x[dr - 1] == ad) {
            stage4.push_back(ex);
        } else if (a6 == nullptr) {
            a6 = &ex;
        } else {
            throw decode_error("more than one L1-norm example");
        }
    }

    QVec w(dr, 0);
    w[dr - 1] = wd;
    if (stage4.empty()) {
        if (a6 != nullptr) throw decode_error("L1 example without direction examples");
        // Rule 4: head stays zero
        return finish({detail::embed(w, d), b});
    }
    trace.head_zero = false;
    if (a6 == nullptr) throw decode_error("missing L1-norm example");

    // Rule 5: homogeneous decode of the projected head examples
    std::vector<SignedExample> projected;
    for (const auto& ex : stage4)
        projected.push_back({QVec(ex.x.begin(), ex.x.begin() + (dr - 1)), ex.label});
    Halfspace dir = decode_homogeneous(projected, dr - 1);

    // Rule 6 equality: scale the head to the L1 norm taught by a6,
    // whose last reduced coordinate is -(L+b)/w_d
    Rational l = -a6->x[dr - 1] * wd - b;
    trace.l1 = l;
    if (l <= 0) throw decode_error("non-positive L1 norm");
    Rational dir_l1 = 0;
    for (const auto& c : dir.w) dir_l1 += abs(c);
    for (std::size_t i = 0; i + 1 < dr; ++i) w[i] = dir.w[i] * l / dir_l1;
    // a6's sign pattern must match the decoded head
    for (std::size_t i = 0; i + 1 < dr; ++i)
        if (Rational(sgn(w[i])) != a6->x[i])
            throw decode_error("sign pattern of the L1 example does not match");
    return finish({detail::embed(w, d), b});
}

// --- classical teaching of the e1 ray --------------------------------------

/// T = {(e_i,+) : 2 <= i <= d} + {(-sum_{i>=2} e_i, +), (e_1, +)}.
inline std::vector<SignedExample> e1_teaching_set(std::size_t d) {
    if (d < 2) throw argument_error("e1_teaching_set: d >= 2 required");
    std::vector<SignedExample> out;
    for (std::size_t i = 1; i < d; ++i) out.push_back({detail::axis(d, i, 1), 1});
    QVec u(d, -1);
    u[0] = 0;
    out.push_back({u, 1});
    out.push_back({detail::axis(d, 0, 1), 1});
    return out;
}

namespace detail {

/// One linear constraint a.w >= c (or > c when strict).
struct LinCon {
    QVec a;
    Rational c = 0;
    bool strict = false;
};

/// Exact Fourier-Motzkin feasibility over the rationals.
inline bool feasible(std::vector<LinCon> cons, std::size_t d) {
    for (std::size_t var = 0; var < d; ++var) {
        std::vector<LinCon> lower, upper, rest;
        for (auto& c : cons) {
            if (c.a[var] > 0)
                lower.push_back(std::move(c));
            else if (c.a[var] < 0)
                upper.push_back(std::move(c));
            else
                rest.push_back(std::move(c));
        }
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                LinCon combined;
                combined.a.resize(d, 0);
                Rational s1 = -up.a[var], s2 = lo.a[var];  // both positive
                for (std::size_t i = 0; i < d; ++i)
                    combined.a[i] = s1 * lo.a[i] + s2 * up.a[i];
                combined.c = s1 * lo.c + s2 * up.c;
                combined.strict = lo.strict || up.strict;
                rest.push_back(std::move(combined));
            }
        cons = std::move(rest);
    }
    for (const auto& c : cons) {
        if (c.strict ? !(0 > c.c) : !(0 >= c.c)) return false;
    }
    return true;
}

}  // namespace detail

/// Decides whether the halfspaces consistent with t are exactly those
/// with w on the ray of e1: e1 itself must be consistent, and each of
/// w_1 < 0, w_i > 0, w_i < 0 (i >= 2) must be infeasible.
inline bool verify_unique_cone(const std::vector<SignedExample>& t, std::size_t d) {
    std::vector<detail::LinCon> base;
    QVec e1(d, 0);
    e1[0] = 1;
    for (const auto& ex : t) {
        if (ex.x.size() != d) throw argument_error("example has wrong dimension");
        detail::LinCon c;
        c.a = ex.x;
        if (ex.label == -1) {
            for (auto& v : c.a) v = -v;
            c.strict = true;  // w.x < 0  <=>  (-x).w > 0
        }
        base.push_back(std::move(c));
        if (hs_label({e1, 0}, ex.x) != ex.label) return false;  // e1 must be consistent
    }
    auto with_bound = [&](std::size_t var, int dir) {
        auto cons = base;
        detail::LinCon c;
        c.a.resize(d, 0);
        c.a[var] = dir;
        c.c = 1;  // homogeneous system: w_var > 0 feasible iff w_var >= 1 feasible
        cons.push_back(std::move(c));
        return detail::feasible(std::move(cons), d);
    };
    if (with_bound(0, -1)) return false;
    for (std::size_t i = 1; i < d; ++i)
        if (with_bound(i, 1) || with_bound(i, -1)) return false;
    return true;
}

// --- the finite sign class F -----------------------------------------------

/// The 8 halfspaces H_w, w in {-1,0,1}^2 \ {0}, evaluated over the 8
/// points {-1,0,1}^2 \ {0} as a finite concept class.
inline FiniteClass f_signclass() {
    std::vector<std::pair<int, int>> grid;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y)
            if (x != 0 || y != 0) grid.emplace_back(x, y);
    auto name = [](int x, int y) {
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    };
    std::vector<std::string> labels;
    for (auto [x, y] : grid) labels.push_back(name(x, y));
    FiniteClass cls{Universe(labels), {}};
    for (auto [wx, wy] : grid) {
        std::vector<bool> bits;
        for (auto [px, py] : grid) bits.push_back(wx * px + wy * py >= 0);
        cls.add("H" + name(wx, wy), Concept(std::move(bits)));
    }
    return cls;
}

// --- extension by R^d and the empty set ------------------------------------

enum class ExtConcept { halfspace, full_space, empty_set };

struct ExtTarget {
    ExtConcept kind = ExtConcept::halfspace;
    QVec w;  // used only for kind == halfspace
    int b = 0;
};

/// R^d and the empty set get single-example samples with top
/// preference. Halfspace samples consisting of a single negative
/// example would collide with the empty set's sample, so the teacher
/// adds one positive example in that case.
inline std::vector<SignedExample> teach_extended(const ExtTarget& t, std::size_t d) {
    switch (t.kind) {
        case ExtConcept::full_space:
            return {{QVec(d, 0), 1}};
        case ExtConcept::empty_set:
            return {{QVec(d, 0), -1}};
        case ExtConcept::halfspace:
            break;
    }
    auto out = teach_general(t.w, t.b);
    if (out.size() == 1) {
        // sign-only homogeneous case: disambiguate from the empty set
        QVec x = out.front().x;
        for (auto& c : x) c = -c;
        out.push_back({x, 1});
    }
    return out;
}

struct ExtDecoded {
    ExtConcept kind = ExtConcept::halfspace;
    Halfspace h;
};

inline ExtDecoded teach_extended_decode(const std::vector<SignedExample>& examples,
                                        std::size_t d) {
    if (examples.size() == 1 && is_zero(examples.front().x)) {
        return {examples.front().label == 1 ? ExtConcept::full_space : ExtConcept::empty_set,
                {}};
    }
    return {ExtConcept::halfspace, decode_general(examples, d)};
}

}  // namespace pbt::hs
