#pragma once

// The paper-reproduction suite: fourteen self-contained checks, each
// re-deriving a claimed quantity with the library and comparing against
// the published value or an independently computed oracle. Shared by
// the `verify-paper` subcommand and the standalone acceptance runner.

#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pbt/closure.hpp"
#include "pbt/finite_dims.hpp"
#include "pbt/halfspaces.hpp"
#include "pbt/linset_teach.hpp"
#include "pbt/numsg.hpp"
#include "pbt/pbtd_one.hpp"

namespace pbt::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long long millis = 0;
};

namespace detail {

inline FiniteClass random_class(std::mt19937& rng, std::size_t u, std::size_t m) {
    FiniteClass cls(Universe::numeric(u), {});
    std::set<std::vector<bool>> seen;
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<bool> b(u);
        for (auto&& x : b) x = rng() & 1;
        if (seen.insert(b).second) cls.add("c" + std::to_string(c), Concept(b));
    }
    return cls;
}

inline Concept concept_from_mask(std::size_t u, unsigned mask) {
    std::vector<bool> b(u);
    for (std::size_t i = 0; i < u; ++i) b[i] = mask >> i & 1;
    return Concept(std::move(b));
}

template <typename Fn>
void for_each_class_over(std::size_t u, Fn fn) {
    const unsigned m = 1u << u;
    for (unsigned pick = 1; pick < (1u << m); ++pick) {
        FiniteClass cls(Universe::numeric(u), {});
        for (unsigned c = 0; c < m; ++c)
            if (pick >> c & 1) cls.add("c" + std::to_string(c), concept_from_mask(u, c));
        fn(cls);
    }
}

inline hs::Rational random_rational(std::mt19937& rng, int span = 6) {
    return hs::Rational((int)(rng() % (2 * span + 1)) - span, 1 + (int)(rng() % 4));
}

inline hs::QVec random_weights(std::mt19937& rng, std::size_t d) {
    while (true) {
        hs::QVec w(d);
        std::size_t zeros = rng() % d;
        for (std::size_t i = 0; i < d; ++i)
            w[i] = i + zeros >= d ? hs::Rational(0) : random_rational(rng);
        if (!hs::is_zero(w)) return w;
    }
}

template <typename Body>
CheckResult timed(int id, const std::string& name, Body body) {
    CheckResult r;
    r.id = id;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.pass = true;
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
}

inline void require(CheckResult& r, bool cond, const std::string& what) {
    if (!cond && r.pass) {
        r.pass = false;
        r.detail = what;
    }
}

}  // namespace detail

inline CheckResult check_powerset_slice() {
    return detail::timed(1, "powerset and slice best-case dimensions", [](CheckResult& r) {
        for (std::size_t k = 1; k <= 5; ++k) {
            detail::require(r, td_min(powerset_class(k)) == k,
                            "td_min(2^[" + std::to_string(k) + "]) != " + std::to_string(k));
            for (std::size_t l = 0; l <= k; ++l)
                detail::require(r, td_min(k_choose_l_class(k, l)) == std::min(l, k - l),
                                "td_min([" + std::to_string(k) + "] choose " +
                                    std::to_string(l) + ") wrong");
        }
    });
}

inline CheckResult check_window_floor() {
    return detail::timed(2, "window gadget floor td_min = k-1", [](CheckResult& r) {
        for (std::size_t k = 2; k <= 5; ++k)
            detail::require(r, td_min(lk_window_class(k)) == k - 1,
                            "td_min(window(" + std::to_string(k) + ")) != k-1");
    });
}

inline CheckResult check_sign_class() {
    return detail::timed(3, "sign class: every concept has TD 2", [](CheckResult& r) {
        auto f = hs::f_signclass();
        detail::require(r, f.size() == 8, "expected 8 concepts");
        for (std::size_t i = 0; i < f.size(); ++i)
            detail::require(r, teaching_dimension(f.concept_at(i), f) == 2,
                            "TD(" + f.name_at(i) + ") != 2");
        detail::require(r, td_min(f) == 2, "td_min floor is not 2");
        detail::require(r, pbtd_bruteforce(f).value == Dim(2), "preference-based floor is not 2");
    });
}

inline CheckResult check_pbtd_equals_rtd(unsigned seed) {
    return detail::timed(4, "order search equals greedy sequence on finite classes",
                         [seed](CheckResult& r) {
        detail::for_each_class_over(3, [&](const FiniteClass& cls) {
            detail::require(r, pbtd_bruteforce(cls).value == rtd(cls).value,
                            "exhaustive sweep mismatch");
        });
        std::mt19937 rng(seed);
        for (int it = 0; it < 100; ++it) {
            auto cls = detail::random_class(rng, 2 + rng() % 4, 2 + rng() % 7);
            detail::require(r, pbtd_bruteforce(cls).value == rtd(cls).value,
                            "random class mismatch at iteration " + std::to_string(it));
        }
    });
}

inline CheckResult check_nelinset_protocol() {
    return detail::timed(5, "non-erasing span protocol round trips", [](CheckResult& r) {
        using namespace pbt::linset;
        std::vector<numsg::Int> current;
        std::function<void(numsg::Int)> gen = [&](numsg::Int next) {
            if (!current.empty()) {
                GeneratorSet g(current);
                auto sample = teach_nelinset(g);
                detail::require(r, sample.size() <= g.size(), "sample larger than |G|");
                detail::require(r, student_nelinset(sample, 4) == LinearSetRep::nelinset(g),
                                "round trip failed");
            }
            if (current.size() == 4 || !r.pass) return;
            for (numsg::Int v = next; v <= 12; ++v) {
                current.push_back(v);
                gen(v + 1);
                current.pop_back();
            }
        };
        gen(1);
    });
}

inline CheckResult check_shift_protocol(unsigned seed) {
    return detail::timed(6, "shift protocol adds one example and stays correct",
                         [seed](CheckResult& r) {
        using namespace pbt::linset;
        std::mt19937 rng(seed + 1);
        for (int it = 0; it < 100; ++it) {
            std::vector<numsg::Int> gens;
            std::size_t k = 1 + rng() % 3;
            for (std::size_t i = 0; i < k; ++i) gens.push_back(1 + rng() % 10);
            GeneratorSet g(gens);
            numsg::Int c = rng() % 12;
            auto base = teach_linset(g, 3);
            auto shifted = teach_shifted_linset(g, c, 3);
            detail::require(r, shifted.size() == base.size() + 1,
                            "shifted sample did not add exactly one example");
            detail::require(r, student_shifted_linset(shifted, 3) == LinearSetRep::linset(g, c),
                            "shifted erasing round trip failed");
            auto ne = teach_shifted_nelinset(g, c, 3);
            detail::require(r,
                            student_shifted_nelinset(ne, 3) == LinearSetRep::nelinset(g, c),
                            "shifted non-erasing round trip failed");
        }
    });
}

inline CheckResult check_frobenius() {
    return detail::timed(7, "Frobenius numbers of coprime pairs", [](CheckResult& r) {
        for (numsg::Int p = 2; p <= 30; ++p)
            for (numsg::Int q = p + 1; q <= 30; ++q) {
                if (std::gcd(p, q) != 1) continue;
                detail::require(r, numsg::frobenius(numsg::GeneratorSet({p, q})) ==
                                       p * q - p - q,
                                "pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
            }
    });
}

inline CheckResult check_special_floor() {
    return detail::timed(8, "special-set certificate and weak-spanning floor",
                         [](CheckResult& r) {
        using namespace pbt::numsg;
        auto cert = is_special(2, 10, GeneratorSet({2, 3}));
        detail::require(r, cert.passed, "certificate for (2,10,{2,3}) failed: " + cert.failure);
        auto cls = enumerate_class(ClassVariant::NECFLINSET,
                                   {.k = 2, .bound = 10, .fixed_shift = 10});
        auto l = LinearSetRep::linset(GeneratorSet({2, 3}), 10);
        detail::require(r, weak_spanning_floor(l, cls, 1, 40),
                        "a single example weakly spans 10+<2,3>");
    });
}

inline CheckResult check_sandwich_gadget() {
    return detail::timed(9, "k=3 gadget: <5,7>+ sits strictly between", [](CheckResult& r) {
        using namespace pbt::numsg;
        auto l = LinearSetRep::nelinset(GeneratorSet({3, 4, 5}));
        auto mid = LinearSetRep::nelinset(GeneratorSet({5, 7}));
        detail::require(r, mid.member(12), "12 not in <5,7>+");
        bool subset = true, proper = false;
        for (Int x = 0; x <= 200; ++x) {
            if (mid.member(x) && !l.member(x)) subset = false;
            if (l.member(x) && !mid.member(x)) proper = true;
        }
        detail::require(r, subset && proper, "<5,7>+ is not a proper subset of <3,4,5>+");
        detail::require(r, linset_subset(mid, l) && !linset_equal(mid, l),
                        "canonical comparison disagrees");
    });
}

inline CheckResult check_homogeneous_halfspaces(unsigned seed) {
    return detail::timed(10, "homogeneous halfspace protocol, 200 random targets",
                         [seed](CheckResult& r) {
        using namespace pbt::hs;
        std::mt19937 rng(seed + 2);
        for (int it = 0; it < 200; ++it) {
            std::size_t d = 1 + rng() % 5;
            QVec w = detail::random_weights(rng, d);
            auto sample = teach_homogeneous(w);
            detail::require(r, sample.size() <= 2, "more than 2 examples");
            detail::require(r, same_halfspace(decode_homogeneous(sample, d), {w, 0}),
                            "round trip failed at iteration " + std::to_string(it));
            std::size_t dr = d - trailing_zeros(w);
            bool head_zero = true;
            for (std::size_t i = 0; i + 1 < dr; ++i)
                if (w[i] != 0) head_zero = false;
            if (!head_zero) {
                QVec v(w.begin(), w.begin() + dr);
                int sigma = sgn(v[dr - 1]);
                for (auto& c : v) c *= sigma;
                detail::require(r, verify_good_choice(v, tangent_vector(v)),
                                "tangent is not a good choice");
            }
        }
    });
}

inline CheckResult check_general_halfspaces(unsigned seed) {
    return detail::timed(11, "general halfspace protocol, 200 random targets",
                         [seed](CheckResult& r) {
        using namespace pbt::hs;
        std::mt19937 rng(seed + 3);
        for (int it = 0; it < 200; ++it) {
            std::size_t d = 1 + rng() % 5;
            QVec w = detail::random_weights(rng, d);
            int b = (int)(rng() % 3) - 1;
            auto sample = teach_general(w, b);
            detail::require(r, sample.size() <= 6, "more than 6 examples");
            detail::require(r, same_halfspace(decode_general(sample, d), {w, b}),
                            "round trip failed at iteration " + std::to_string(it));
        }
    });
}

inline CheckResult check_e1_teaching_set() {
    return detail::timed(12, "classical d+1 teaching set and its minimality",
                         [](CheckResult& r) {
        using namespace pbt::hs;
        for (std::size_t d : {2, 3, 4}) {
            auto t = e1_teaching_set(d);
            detail::require(r, t.size() == d + 1, "wrong size");
            detail::require(r, verify_unique_cone(t, d), "full set not unique");
            for (std::size_t drop = 0; drop < t.size(); ++drop) {
                std::vector<SignedExample> rest;
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (i != drop) rest.push_back(t[i]);
                detail::require(r, !verify_unique_cone(rest, d),
                                "a proper subset already determines the cone");
            }
        }
    });
}

inline CheckResult check_pbtd1_characterization() {
    return detail::timed(13, "single-example decision matches the order search",
                         [](CheckResult& r) {
        detail::for_each_class_over(3, [&](const FiniteClass& cls) {
            bool expect = pbtd_bruteforce(cls).value <= Dim(1);
            detail::require(r, decide_pbtd_1(cls).has_value() == expect, "sweep mismatch");
        });
        // constructed singleton extensions, positives and negatives
        const std::size_t u = 4;
        auto singletons = [&]() {
            FiniteClass cls(Universe::numeric(u), {});
            for (std::size_t x = 0; x < u; ++x) {
                std::vector<bool> b(u, false);
                b[x] = true;
                cls.add("s" + std::to_string(x), Concept(std::move(b)));
            }
            return cls;
        };
        auto expect_kind = [&](FiniteClass cls, SingletonExtension want, bool yes) {
            detail::require(r, classify_singleton_extension(cls).kind == want,
                            "classification mismatch");
            detail::require(r, decide_pbtd_1(cls).has_value() == yes, "decision mismatch");
        };
        expect_kind(singletons(), SingletonExtension::pure_singletons, true);
        auto a = singletons();
        a.add("empty", Concept::empty(u));
        expect_kind(a, SingletonExtension::plus_empty, true);
        auto b = singletons();
        b.add("pair", Concept::of(u, {0, 1}));
        expect_kind(b, SingletonExtension::plus_pair, true);
        auto c = singletons();
        c.add("triple", Concept::of(u, {0, 1, 2}));
        expect_kind(c, SingletonExtension::not_pbtd1, false);
        auto d = singletons();
        d.add("empty", Concept::empty(u));
        d.add("pair", Concept::of(u, {0, 1}));
        expect_kind(d, SingletonExtension::not_pbtd1, false);
    });
}

inline CheckResult check_property_suite(unsigned seed) {
    return detail::timed(14, "admissibility and closure-instance properties",
                         [seed](CheckResult& r) {
        // protocol-induced maps on the window classes are admissible and
        // every concept's sample re-verifies under the induced preference
        for (std::size_t k = 2; k <= 4; ++k) {
            auto cls = lk_window_class(k);
            auto rep = pbtd_bruteforce(cls);
            const auto& w = std::get<OrderWitness>(rep.witness);
            auto adm = check_admissible(w.map, cls);
            detail::require(r, adm.admissible, "witness map rejected");
            auto pref = induced_preference(w.map, cls);
            for (std::size_t i = 0; i < cls.size(); ++i)
                detail::require(r,
                                verify_teaching_set(cls.concept_at(i), cls, pref, w.map.at(i)),
                                "sample fails under the induced preference");
            // planting a duplicate sample forces a rejected cycle
            TeachingMap bad = w.map;
            bad.set(1, bad.at(0));
            auto cyc = check_admissible(bad, cls);
            detail::require(r, !cyc.admissible && (!cyc.cycle.empty() ||
                                                   cyc.self_inconsistency.has_value()),
                            "planted cycle was accepted");
        }
        // closure round trips succeed at the spanning size and fail below it
        using namespace pbt::closure;
        std::mt19937 rng(seed + 4);
        for (int it = 0; it < 60; ++it) {
            std::vector<QVec> pts;
            for (int i = 0; i < 1 + (int)(rng() % 5); ++i)
                pts.push_back({detail::random_rational(rng), detail::random_rational(rng)});
            auto cl = Cone2::closure(pts);
            auto span = Cone2::min_spanning_set(cl);
            detail::require(r, Cone2::equal(student_closure<Cone2>(span), cl),
                            "cone round trip failed");
            for (std::size_t drop = 0; drop < span.size(); ++drop) {
                std::vector<QVec> rest;
                for (std::size_t i = 0; i < span.size(); ++i)
                    if (i != drop) rest.push_back(span[i]);
                detail::require(r, !Cone2::equal(Cone2::closure(rest), cl),
                                "dropping a spanning point kept the cone");
            }
        }
        for (int it = 0; it < 40; ++it) {
            std::vector<numsg::Int> pts;
            for (int i = 0; i < 1 + (int)(rng() % 4); ++i) pts.push_back(1 + rng() % 12);
            auto cl = NatSpan::closure(pts);
            auto span = NatSpan::min_spanning_set(cl);
            detail::require(r, NatSpan::equal(student_closure<NatSpan>(span), cl),
                            "span round trip failed");
            for (std::size_t drop = 0; drop < span.size(); ++drop) {
                std::vector<numsg::Int> rest;
                for (std::size_t i = 0; i < span.size(); ++i)
                    if (i != drop) rest.push_back(span[i]);
                detail::require(r, !NatSpan::equal(NatSpan::closure(rest), cl),
                                "dropping a generator kept the span");
            }
        }
    });
}

inline std::vector<CheckResult> run_paper_checks(unsigned seed = 0) {
    return {
        check_powerset_slice(),
        check_window_floor(),
        check_sign_class(),
        check_pbtd_equals_rtd(seed),
        check_nelinset_protocol(),
        check_shift_protocol(seed),
        check_frobenius(),
        check_special_floor(),
        check_sandwich_gadget(),
        check_homogeneous_halfspaces(seed),
        check_general_halfspaces(seed),
        check_e1_teaching_set(),
        check_pbtd1_characterization(),
        check_property_suite(seed),
    };
}

}  // namespace pbt::verify
