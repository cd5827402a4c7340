// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bwc/errors.hpp"
#include "bwc/rational.hpp"

using namespace bwc;

TEST_CASE("parsing and rendering round trip") {
    CHECK(rat_str(rat_parse("5")) == "5");
    CHECK(rat_str(rat_parse("-2/1")) == "-2");
    CHECK(rat_str(rat_parse("6/4")) == "3/2");
    CHECK(rat_str(rat_parse(" -57/32 ")) == "-57/32");
    CHECK(rat_parse("+3") == 3);
}

TEST_CASE("decimal and malformed literals are rejected") {
    CHECK_THROWS_AS(rat_parse("0.5"), InvalidInput);
    CHECK_THROWS_AS(rat_parse("1e3"), InvalidInput);
    CHECK_THROWS_AS(rat_parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(rat_parse("2/"), InvalidInput);
    CHECK_THROWS_AS(rat_parse("/3"), InvalidInput);
    CHECK_THROWS_AS(rat_parse(""), InvalidInput);
    CHECK_THROWS_AS(rat_parse("1 / 2"), InvalidInput);
}

TEST_CASE("exact square roots") {
    CHECK(*exact_sqrt(rat(9, 4)) == rat(3, 2));
    CHECK(*exact_sqrt(rat(0)) == 0);
    CHECK(*exact_sqrt(rat(1, 4)) == rat(1, 2));
    CHECK(!exact_sqrt(rat(2)).has_value());
    CHECK(!exact_sqrt(rat(-1)).has_value());
    CHECK(!exact_sqrt(rat(9, 5)).has_value());
}

TEST_CASE("arithmetic stays exact on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    for (int i = 0; i < 2000; ++i) {
        Rat a = rat(num(rng), den(rng));
        Rat b = rat(num(rng), den(rng));
        CHECK(a + b - b == a);
        if (b != 0) CHECK(a / b * b == a);
        CHECK(rat_parse(rat_str(a)) == a);
    }
}
