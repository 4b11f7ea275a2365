#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pbt/finite_dims.hpp"
#include "pbt/halfspaces.hpp"

using namespace pbt;
using namespace pbt::hs;

namespace {

Rational rr(std::mt19937& rng, int span = 6) {
    return Rational((int)(rng() % (2 * span + 1)) - span, 1 + (int)(rng() % 4));
}

// random non-zero target with a random number of trailing zeros
QVec random_w(std::mt19937& rng, std::size_t d) {
    while (true) {
        QVec w(d);
        std::size_t zeros = rng() % d;
        for (std::size_t i = 0; i < d; ++i) w[i] = i + zeros >= d ? Rational(0) : rr(rng);
        if (!is_zero(w)) return w;
    }
}

}  // namespace

TEST_CASE("canonical forms and scale invariance") {
    Halfspace h{{Rational(2, 3), Rational(-4, 3)}, Rational(2)};
    auto c = canonical(h);
    CHECK(c.w == QVec{1, -2});
    CHECK(c.b == 3);
    CHECK(same_halfspace(h, {{2, -4}, 6}));
    CHECK_FALSE(same_halfspace(h, {{-2, 4}, -6}));  // negation flips the halfspace
    CHECK_THROWS_AS(canonical({{0, 0}, 1}), argument_error);
    // boundary points are labeled +1
    CHECK(hs_label({{1, 0}, 0}, {0, 5}) == 1);
    CHECK(hs_label({{1, 0}, 0}, {-1, 0}) == -1);
}

TEST_CASE("tangent vectors are orthogonal and select the target direction") {
    CHECK(positively_proportional(tangent_vector({3, 4}), {4, -3}));
    CHECK(tangent_vector({1, 2, 2}) == QVec{2, 4, -5});
    CHECK_THROWS_AS(tangent_vector({0, 1}), argument_error);  // parallel to e_d
    CHECK_THROWS_AS(tangent_vector({5}), argument_error);

    std::mt19937 rng(51);
    for (int it = 0; it < 200; ++it) {
        std::size_t d = 2 + rng() % 4;
        QVec w(d);
        for (auto& c : w) c = rr(rng);
        bool head_zero = true;
        for (std::size_t i = 0; i + 1 < d; ++i)
            if (w[i] != 0) head_zero = false;
        if (head_zero) continue;
        if (w[d - 1] <= 0) w[d - 1] = abs(w[d - 1]) + 1;
        QVec u = tangent_vector(w);
        CHECK(dot(u, w) == 0);
        CHECK(verify_good_choice(w, u));
        // a perturbed constraint no longer isolates w
        QVec u2 = u;
        u2[0] += 1;
        if (dot(u2, w) != 0) CHECK_FALSE(verify_good_choice(w, u2));
    }
}

TEST_CASE("homogeneous halfspaces round-trip in at most two examples") {
    std::mt19937 rng(52);
    for (int it = 0; it < 300; ++it) {
        std::size_t d = 1 + rng() % 5;
        QVec w = random_w(rng, d);
        auto sample = teach_homogeneous(w);
        REQUIRE(sample.size() <= 2);
        Halfspace target{w, 0};
        for (const auto& ex : sample) CHECK(hs_label(target, ex.x) == ex.label);
        CHECK(same_halfspace(decode_homogeneous(sample, d), target));
    }
    // a single example suffices exactly when the target is an axis direction
    CHECK(teach_homogeneous({0, -3, 0}).size() == 1);
    CHECK(teach_homogeneous({2, 1}).size() == 2);
    CHECK_THROWS_AS(teach_homogeneous({0, 0}), argument_error);
    CHECK_THROWS_AS(decode_homogeneous({}, 2), decode_error);
    CHECK_THROWS_AS(decode_homogeneous({{{1, 1}, -1}}, 2), decode_error);
    CHECK_THROWS_AS(decode_homogeneous({{{0, 0}, -1}}, 2), decode_error);
}

TEST_CASE("the three anchors of a general halfspace") {
    auto anchors = three_anchor_examples({1, 2}, 1);
    REQUIRE(anchors.size() == 3);
    CHECK(anchors[0] == SignedExample{{0, 0}, 1});
    CHECK(anchors[1] == SignedExample{{0, -1}, -1});
    CHECK(anchors[2] == SignedExample{{0, Rational(-1, 2)}, 1});
    // a3 lies exactly on the boundary
    CHECK(dot({1, 2}, anchors[2].x) + 1 == 0);
    auto neg = three_anchor_examples({1, 2}, -1);
    CHECK(neg[0].label == -1);
    CHECK(neg[1] == SignedExample{{0, 1}, 1});
    CHECK_THROWS_AS(three_anchor_examples({1, 0}, 1), argument_error);
    CHECK_THROWS_AS(three_anchor_examples({1, 2}, 2), argument_error);
}

TEST_CASE("general halfspaces round-trip in at most six examples") {
    std::mt19937 rng(53);
    for (int it = 0; it < 300; ++it) {
        std::size_t d = 1 + rng() % 5;
        QVec w = random_w(rng, d);
        int b = (int)(rng() % 3) - 1;
        auto sample = teach_general(w, b);
        REQUIRE(sample.size() <= 6);
        Halfspace target{w, b};
        for (const auto& ex : sample) CHECK(hs_label(target, ex.x) == ex.label);
        DecodeTrace trace;
        auto decoded = decode_general(sample, d, &trace);
        CHECK(same_halfspace(decoded, target));
        CHECK(trace.homogeneous == (b == 0));
        if (b != 0) CHECK(trace.b == b);

        // scaled weights round-trip to the scaled concept (which equals
        // the original exactly when the bias is zero)
        QVec w3 = w;
        for (auto& c : w3) c *= Rational(7, 2);
        Halfspace target3{w3, b};
        CHECK(same_halfspace(decode_general(teach_general(w3, b), d), target3));
        if (b == 0) CHECK(same_halfspace(target3, target));
    }
}

TEST_CASE("the L1 example lies on the boundary") {
    std::mt19937 rng(54);
    for (int it = 0; it < 100; ++it) {
        std::size_t d = 2 + rng() % 4;
        QVec w = random_w(rng, d);
        std::size_t dr = d - trailing_zeros(w);
        bool head_zero = true;
        for (std::size_t i = 0; i + 1 < dr; ++i)
            if (w[i] != 0) head_zero = false;
        if (head_zero) continue;
        int b = rng() & 1 ? 1 : -1;
        auto sample = teach_general(w, b);
        REQUIRE(sample.size() >= 5);  // anchors + at least one direction example + a6
        const auto& a6 = sample.back();
        CHECK(a6.label == 1);
        CHECK(dot(w, a6.x) + b == 0);
    }
}

TEST_CASE("the decoder rejects non-protocol samples") {
    auto good = teach_general({1, 2}, 1);
    REQUIRE(good.size() == 5);  // anchors, one direction example, a6
    // flipping the a3 label breaks the anchors
    auto bad = good;
    bad[2].label = -1;
    CHECK_THROWS_AS(decode_general(bad, 2), decode_error);
    // dropping the L1 example leaves direction examples unexplained
    auto partial = std::vector<SignedExample>(good.begin(), good.end() - 1);
    CHECK_THROWS_AS(decode_general(partial, 2), decode_error);
    // flipping the sign pattern of the L1 example contradicts the head
    auto flipped = good;
    flipped.back().x[0] = -flipped.back().x[0];
    CHECK_THROWS_AS(decode_general(flipped, 2), decode_error);
    // a sample with no anchors and three examples is not homogeneous-shaped
    CHECK_THROWS_AS(
        decode_general({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -1}}, 2), decode_error);
}

TEST_CASE("decode traces expose the stage structure") {
    DecodeTrace t;
    decode_general(teach_general({3, 4}, 1), 2, &t);
    CHECK_FALSE(t.homogeneous);
    CHECK(t.reduced_dim == 2);
    CHECK(t.b == 1);
    CHECK(t.w_d / t.l1 == Rational(4, 3));  // scale-free ratio: w_d = 4, L = |3| = 3
    CHECK_FALSE(t.head_zero);

    decode_general(teach_general({0, 5, 0}, -1), 3, &t);
    CHECK(t.reduced_dim == 2);
    CHECK(t.head_zero);

    decode_general(teach_general({1, 1}, 0), 2, &t);
    CHECK(t.homogeneous);
}

TEST_CASE("the classical d+1 teaching set for the e1 ray") {
    for (std::size_t d : {2, 3, 4}) {
        auto t = e1_teaching_set(d);
        REQUIRE(t.size() == d + 1);
        for (const auto& ex : t) CHECK(ex.label == 1);
        CHECK(verify_unique_cone(t, d));
        // minimality: dropping any example admits another direction
        for (std::size_t drop = 0; drop < t.size(); ++drop) {
            std::vector<SignedExample> rest;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (i != drop) rest.push_back(t[i]);
            CHECK_FALSE(verify_unique_cone(rest, d));
        }
    }
    // d = 3 example set: e2, e3, (0,-1,-1), e1
    auto t3 = e1_teaching_set(3);
    CHECK(t3[0].x == QVec{0, 1, 0});
    CHECK(t3[1].x == QVec{0, 0, 1});
    CHECK(t3[2].x == QVec{0, -1, -1});
    CHECK(t3[3].x == QVec{1, 0, 0});
    CHECK_THROWS_AS(e1_teaching_set(1), argument_error);
}

TEST_CASE("the finite sign class has teaching dimension 2 everywhere") {
    auto f = f_signclass();
    REQUIRE(f.size() == 8);
    REQUIRE(f.universe().size() == 8);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(teaching_dimension(f.concept_at(i), f) == 2);
    CHECK(td_min(f) == 2);
    CHECK(rtd(f).value == Dim(2));
    CHECK(pbtd_bruteforce(f).value == Dim(2));
}

TEST_CASE("the extension by the full space and the empty set") {
    std::mt19937 rng(55);
    for (std::size_t d : {1, 2, 3, 4}) {
        auto full = teach_extended({ExtConcept::full_space, {}, 0}, d);
        auto empty = teach_extended({ExtConcept::empty_set, {}, 0}, d);
        CHECK(teach_extended_decode(full, d).kind == ExtConcept::full_space);
        CHECK(teach_extended_decode(empty, d).kind == ExtConcept::empty_set);
        for (int it = 0; it < 50; ++it) {
            QVec w = random_w(rng, d);
            int b = (int)(rng() % 3) - 1;
            auto sample = teach_extended({ExtConcept::halfspace, w, b}, d);
            CHECK(sample.size() <= 6);
            CHECK(sample != full);
            CHECK(sample != empty);
            auto decoded = teach_extended_decode(sample, d);
            REQUIRE(decoded.kind == ExtConcept::halfspace);
            CHECK(same_halfspace(decoded.h, {w, b}));
        }
    }
}
