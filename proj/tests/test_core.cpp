#include <catch2/catch_amalgamated.hpp>

#include "pbt/core.hpp"

using namespace pbt;

TEST_CASE("universe rejects duplicate labels") {
    CHECK_THROWS_AS(Universe({"a", "b", "a"}), argument_error);
    CHECK(Universe::numeric(3).labels() == std::vector<std::string>{"1", "2", "3"});
    CHECK(Universe::numeric(2, 5).labels() == std::vector<std::string>{"5", "6"});
}

TEST_CASE("concept membership and subset") {
    Concept c = Concept::of(4, {1, 3});
    CHECK(c.cardinality() == 2);
    CHECK(c.members() == std::vector<std::size_t>{1, 3});
    CHECK(c.subset_of(Concept::of(4, {0, 1, 3})));
    CHECK_FALSE(Concept::of(4, {0}).subset_of(c));
    CHECK(Concept::empty(4).subset_of(c));
}

TEST_CASE("sample canonicalization and sign conflicts") {
    Sample s({{2, Sign::positive}, {0, Sign::negative}, {2, Sign::positive}});
    CHECK(s.size() == 2);
    CHECK(s.positives() == std::vector<std::size_t>{2});
    CHECK(s.negatives() == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(Sample({{1, Sign::positive}, {1, Sign::negative}}), argument_error);
}

TEST_CASE("consistency and difference witnesses") {
    Concept l = Concept::of(3, {0, 1});
    Concept l2 = Concept::of(3, {1, 2});
    Sample t({{0, Sign::positive}, {2, Sign::negative}});
    CHECK(is_consistent(l, t));
    CHECK_FALSE(is_consistent(l2, t));
    CHECK(distinguishes(t, l, l2));
    auto w = difference_witnesses(l, l2);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == LabeledExample{0, Sign::positive});
    CHECK(w[1] == LabeledExample{2, Sign::negative});
    // every distinguishing sample must hit a difference witness
    CHECK_THROWS_AS(difference_witnesses(l, l), argument_error);
}

TEST_CASE("finite class rejects duplicates") {
    FiniteClass cls(Universe::numeric(2), {});
    cls.add("a", Concept::of(2, {0}));
    CHECK_THROWS_AS(cls.add("a", Concept::of(2, {1})), argument_error);
    CHECK_THROWS_AS(cls.add("b", Concept::of(2, {0})), argument_error);
    CHECK_THROWS_AS(cls.add("c", Concept::of(3, {0})), argument_error);
    CHECK(cls.index_of(Concept::of(2, {0})) == 0);
    CHECK_FALSE(cls.index_of(Concept::of(2, {1})).has_value());
}

TEST_CASE("class json round trip") {
    FiniteClass cls(Universe({"x", "y", "z"}), {});
    cls.add("lo", Concept::of(3, {0}));
    cls.add("hi", Concept::of(3, {0, 1, 2}));
    auto back = load_class(save_class(cls));
    // JSON objects do not preserve insertion order, so compare by name
    REQUIRE(back.universe() == cls.universe());
    REQUIRE(back.size() == cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
        auto idx = back.index_of(cls.concept_at(i));
        REQUIRE(idx.has_value());
        CHECK(back.name_at(*idx) == cls.name_at(i));
    }
}

TEST_CASE("class json rejects malformed documents") {
    CHECK_THROWS_AS(load_class(json::parse(R"({"universe": ["a"]})")), parse_error);
    CHECK_THROWS_AS(load_class(json::parse(R"({"universe": ["a"], "concepts": {"c": [2]}})")),
                    parse_error);
    CHECK_THROWS_AS(load_class(json::parse(R"({"universe": ["a"], "concepts": {"c": [0, 1]}})")),
                    parse_error);
    CHECK_THROWS_AS(
        load_class(json::parse(R"({"universe": ["a", "a"], "concepts": {}})")), parse_error);
}
