#pragma once

// Closure operators, spanning / weak spanning sets, and teaching by
// spanning sets. Four concrete instances: linear spans over the
// naturals, axis-parallel boxes in R^d, 2D convex hulls, and 2D
// convex cones — all in exact rational arithmetic.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "pbt/errors.hpp"
#include "pbt/numsg.hpp"

namespace pbt::closure {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using QVec = std::vector<Rational>;

inline std::string rational_str(const Rational& r) {
    return r.str();  // "p/q" or "p"
}

inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw parse_error("bad rational: " + s);
    }
}

/// Requirements on a closure instance: a canonical closed-set rep with
/// closure, membership and equality. Everything else is generic.
template <class I>
concept ClosureInstance = requires(const typename I::Rep& rep, const typename I::Point& p,
                                   const std::vector<typename I::Point>& pts) {
    { I::closure(pts) } -> std::same_as<typename I::Rep>;
    { I::member(rep, p) } -> std::same_as<bool>;
    { I::equal(rep, rep) } -> std::same_as<bool>;
    { I::min_spanning_set(rep) } -> std::same_as<std::vector<typename I::Point>>;
};

// --- instance: linear spans over N0 ----------------------------------------

/// Closed sets are <G> for finite G; canonical rep is the unique
/// independent generator set (empty for the minimal set {0}).
struct NatSpan {
    using Point = numsg::Int;
    using Rep = std::vector<numsg::Int>;  // independent, sorted; empty = {0}

    static Rep closure(const std::vector<Point>& pts) {
        std::vector<numsg::Int> gens;
        for (auto v : pts) {
            if (v < 0) throw argument_error("span points must be non-negative");
            if (v > 0) gens.push_back(v);
        }
        if (gens.empty()) return {};
        return numsg::reduce_prefix(numsg::GeneratorSet(gens)).first.values();
    }

    static bool member(const Rep& rep, const Point& p) {
        if (p < 0) return false;
        if (rep.empty()) return p == 0;
        return numsg::LinearSetRep::linset(numsg::GeneratorSet(rep)).member(p);
    }

    static bool equal(const Rep& a, const Rep& b) { return a == b; }

    static std::vector<Point> min_spanning_set(const Rep& rep) { return rep; }
};

// --- instance: axis-parallel boxes in R^d ----------------------------------

struct BoxRep {
    // empty box <=> !corners
    std::optional<std::pair<QVec, QVec>> corners;  // (lo, hi), lo <= hi pointwise
    bool operator==(const BoxRep&) const = default;
};

template <std::size_t D>
struct BoxRd {
    using Point = QVec;
    using Rep = BoxRep;

    static void check(const Point& p) {
        if (p.size() != D) throw argument_error("box point has wrong dimension");
    }

    static Rep closure(const std::vector<Point>& pts) {
        if (pts.empty()) return {};
        QVec lo = pts.front(), hi = pts.front();
        check(pts.front());
        for (const auto& p : pts) {
            check(p);
            for (std::size_t i = 0; i < D; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        }
        return {std::make_pair(lo, hi)};
    }

    static bool member(const Rep& rep, const Point& p) {
        if (!rep.corners) return false;
        check(p);
        for (std::size_t i = 0; i < D; ++i)
            if (p[i] < rep.corners->first[i] || p[i] > rep.corners->second[i]) return false;
        return true;
    }

    static bool equal(const Rep& a, const Rep& b) { return a == b; }

    static std::vector<Point> min_spanning_set(const Rep& rep) {
        if (!rep.corners) return {};
        if (rep.corners->first == rep.corners->second) return {rep.corners->first};
        return {rep.corners->first, rep.corners->second};
    }
};

// --- instance: convex hulls in the rational plane --------------------------

inline Rational cross(const QVec& o, const QVec& a, const QVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// True iff p lies on the closed segment [a,b].
inline bool on_segment(const QVec& a, const QVec& b, const QVec& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

struct Hull2 {
    using Point = QVec;
    // Counterclockwise vertex list starting at the lexicographically
    // smallest vertex; collinear boundary points are not vertices.
    // size 0 = empty, 1 = point, 2 = segment.
    using Rep = std::vector<QVec>;

    static void check(const Point& p) {
        if (p.size() != 2) throw argument_error("hull point has wrong dimension");
    }

    static Rep closure(const std::vector<Point>& pts_in) {
        std::vector<QVec> pts = pts_in;
        for (const auto& p : pts) check(p);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() <= 2) return pts;
        // monotone chain with strict turns (collinear points dropped)
        auto build = [&](auto begin, auto end) {
            std::vector<QVec> h;
            for (auto it = begin; it != end; ++it) {
                while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), *it) <= 0)
                    h.pop_back();
                h.push_back(*it);
            }
            return h;
        };
        auto lower = build(pts.begin(), pts.end());
        auto upper = build(pts.rbegin(), pts.rend());
        if (lower.size() == 2 && upper.size() == 2 && lower[1] == upper[0])
            return {lower[0], lower[1]};  // all points collinear: a segment
        lower.pop_back();
        upper.pop_back();
        lower.insert(lower.end(), upper.begin(), upper.end());
        return lower;  // starts at the lexicographic minimum by construction
    }

    static bool member(const Rep& rep, const Point& p) {
        check(p);
        if (rep.empty()) return false;
        if (rep.size() == 1) return rep[0] == p;
        if (rep.size() == 2) return on_segment(rep[0], rep[1], p);
        for (std::size_t i = 0; i < rep.size(); ++i)
            if (cross(rep[i], rep[(i + 1) % rep.size()], p) < 0) return false;
        return true;
    }

    static bool equal(const Rep& a, const Rep& b) { return a == b; }

    static std::vector<Point> min_spanning_set(const Rep& rep) { return rep; }
};

// --- instance: convex cones in the rational plane --------------------------

using IVec = std::pair<BigInt, BigInt>;

/// Scales a nonzero rational vector to its primitive integer direction.
inline IVec primitive_direction(const QVec& v) {
    BigInt nx = numerator(v[0]), dx = denominator(v[0]);
    BigInt ny = numerator(v[1]), dy = denominator(v[1]);
    BigInt a = nx * dy, b = ny * dx;
    if (a == 0 && b == 0) throw argument_error("zero vector has no direction");
    BigInt g = gcd(abs(a), abs(b));
    return {a / g, b / g};
}

inline BigInt icross(const IVec& a, const IVec& b) {
    return a.first * b.second - a.second * b.first;
}
inline BigInt idot(const IVec& a, const IVec& b) {
    return a.first * b.first + a.second * b.second;
}

struct ConeRep {
    enum class Kind { zero, ray, line, sector, halfplane, plane };
    Kind kind = Kind::zero;
    // ray: a; line: a (canonical sign: lexicographically larger of +-a);
    // sector: a = clockwise-most, b = counterclockwise-most boundary rays;
    // halfplane: a = boundary direction (canonical sign), b = inward normal.
    IVec a{0, 0}, b{0, 0};
    bool operator==(const ConeRep&) const = default;
};

struct Cone2 {
    using Point = QVec;
    using Rep = ConeRep;

    static void check(const Point& p) {
        if (p.size() != 2) throw argument_error("cone point has wrong dimension");
    }

    static IVec canonical_line_dir(IVec d) {
        IVec neg{-d.first, -d.second};
        return std::max(d, neg);
    }

    static Rep closure(const std::vector<Point>& pts) {
        std::vector<IVec> dirs;
        for (const auto& p : pts) {
            check(p);
            if (p[0] == 0 && p[1] == 0) continue;
            IVec d = primitive_direction(p);
            if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
        }
        Rep rep;
        if (dirs.empty()) return rep;  // {0}
        if (dirs.size() == 1) {
            rep.kind = Rep::Kind::ray;
            rep.a = dirs[0];
            return rep;
        }
        // clockwise-most boundary: everything on its counterclockwise side
        auto cw_most = [&]() -> std::optional<IVec> {
            for (const auto& d : dirs) {
                bool ok = true;
                for (const auto& x : dirs)
                    if (icross(d, x) < 0) {
                        ok = false;
                        break;
                    }
                if (ok) return d;
            }
            return std::nullopt;
        };
        auto ccw_most = [&]() -> std::optional<IVec> {
            for (const auto& d : dirs) {
                bool ok = true;
                for (const auto& x : dirs)
                    if (icross(d, x) > 0) {
                        ok = false;
                        break;
                    }
                if (ok) return d;
            }
            return std::nullopt;
        };
        auto lo = cw_most();
        auto hi = ccw_most();
        if (!lo || !hi) {
            rep.kind = Rep::Kind::plane;
            return rep;
        }
        if (*lo == *hi) {
            // every direction is collinear with lo, and there are at
            // least two distinct ones: lo and -lo
            rep.kind = Rep::Kind::line;
            rep.a = canonical_line_dir(*lo);
            return rep;
        }
        BigInt c = icross(*lo, *hi);
        if (c > 0) {
            rep.kind = Rep::Kind::sector;
            rep.a = *lo;
            rep.b = *hi;
            return rep;
        }
        if (idot(*lo, *hi) < 0) {
            // opposite boundary rays: a line, or a halfplane if some
            // direction leaves the line
            for (const auto& d : dirs)
                if (icross(*lo, d) != 0) {
                    rep.kind = Rep::Kind::halfplane;
                    rep.a = canonical_line_dir(*lo);
                    // inward normal: rotate the line direction toward d's side
                    IVec n{-rep.a.second, rep.a.first};
                    if (idot(n, d) < 0) n = {-n.first, -n.second};
                    rep.b = n;
                    return rep;
                }
            rep.kind = Rep::Kind::line;
            rep.a = canonical_line_dir(*lo);
            return rep;
        }
        // lo == hi can only happen via the size-1 case above; anything
        // else with cross <= 0 and dot >= 0 means the scan failed
        throw argument_error("cone closure: unreachable configuration");
    }

    static bool member(const Rep& rep, const Point& p) {
        check(p);
        if (p[0] == 0 && p[1] == 0) return true;
        if (rep.kind == Rep::Kind::zero) return false;
        if (rep.kind == Rep::Kind::plane) return true;
        IVec d = primitive_direction(p);
        switch (rep.kind) {
            case Rep::Kind::ray:
                return icross(rep.a, d) == 0 && idot(rep.a, d) > 0;
            case Rep::Kind::line:
                return icross(rep.a, d) == 0;
            case Rep::Kind::sector:
                return icross(rep.a, d) >= 0 && icross(rep.b, d) <= 0;
            case Rep::Kind::halfplane:
                return idot(rep.b, d) >= 0;
            default:
                return false;
        }
    }

    static bool equal(const Rep& a, const Rep& b) { return a == b; }

    static std::vector<Point> min_spanning_set(const Rep& rep) {
        auto q = [](const IVec& v) { return QVec{Rational(v.first), Rational(v.second)}; };
        switch (rep.kind) {
            case Rep::Kind::zero:
                return {};
            case Rep::Kind::ray:
                return {q(rep.a)};
            case Rep::Kind::line:
                return {q(rep.a), q({-rep.a.first, -rep.a.second})};
            case Rep::Kind::sector:
                return {q(rep.a), q(rep.b)};
            case Rep::Kind::halfplane:
                return {q(rep.a), q({-rep.a.first, -rep.a.second}), q(rep.b)};
            case Rep::Kind::plane:
                return {QVec{1, 0}, QVec{-1, 1}, QVec{-1, -1}};
        }
        return {};
    }
};

// --- generic operations ----------------------------------------------------

/// a is a subset of b iff every spanning point of a lies in the closed
/// set b (b closed, a = cl(S_a)).
template <ClosureInstance I>
bool subset(const typename I::Rep& a, const typename I::Rep& b) {
    for (const auto& p : I::min_spanning_set(a))
        if (!I::member(b, p)) return false;
    return true;
}

/// S spans L iff S is a subset of L with cl(S) = L.
template <ClosureInstance I>
bool is_spanning(const std::vector<typename I::Point>& s, const typename I::Rep& l) {
    for (const auto& p : s)
        if (!I::member(l, p)) return false;
    return I::equal(I::closure(s), l);
}

/// S weakly spans L w.r.t. the listed class iff S is a subset of L not
/// contained in any proper subset of L occurring in the class.
template <ClosureInstance I>
bool is_weak_spanning(const std::vector<typename I::Point>& s, const typename I::Rep& l,
                      const std::vector<typename I::Rep>& cls) {
    for (const auto& p : s)
        if (!I::member(l, p)) return false;
    for (const auto& other : cls) {
        if (I::equal(other, l)) continue;
        if (!subset<I>(other, l)) continue;
        bool contains_all = true;
        for (const auto& p : s)
            if (!I::member(other, p)) {
                contains_all = false;
                break;
            }
        if (contains_all) return false;
    }
    return true;
}

/// Minimum spanning set, emitted as positive examples.
template <ClosureInstance I>
std::vector<typename I::Point> teach_by_spanning(const typename I::Rep& l) {
    return I::min_spanning_set(l);
}

/// The subset-most-preferred consistent concept: cl of the positives.
template <ClosureInstance I>
typename I::Rep student_closure(const std::vector<typename I::Point>& positives) {
    return I::closure(positives);
}

// --- persistence -----------------------------------------------------------

using json = nlohmann::json;

inline json qvec_json(const QVec& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rational_str(r));
    return a;
}

inline json save_closed_set(const NatSpan::Rep& rep) {
    return {{"instance", "linear_span_N0"}, {"generators", rep}};
}

inline json save_closed_set(const BoxRep& rep, std::size_t d) {
    json j{{"instance", "box_Rd"}, {"d", d}};
    if (rep.corners) {
        j["min"] = qvec_json(rep.corners->first);
        j["max"] = qvec_json(rep.corners->second);
    } else {
        j["empty"] = true;
    }
    return j;
}

inline json save_closed_set(const Hull2::Rep& rep) {
    json verts = json::array();
    for (const auto& v : rep) verts.push_back(qvec_json(v));
    return {{"instance", "convex_hull_2d"}, {"vertices", verts}};
}

inline json save_closed_set(const ConeRep& rep) {
    static const char* names[] = {"zero", "ray", "line", "sector", "halfplane", "plane"};
    json j{{"instance", "cone_2d"}, {"kind", names[(int)rep.kind]}};
    json gens = json::array();
    for (const auto& p : Cone2::min_spanning_set(rep)) gens.push_back(qvec_json(p));
    j["generators"] = gens;
    return j;
}

}  // namespace pbt::closure
