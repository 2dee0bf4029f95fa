#include <cordal/braid.hpp>
#include <cordal/errors.hpp>

#include <doctest.h>

using namespace cordal;

TEST_CASE("parsing and formatting") {
    const Braid b = parse_braid("a0 a1^-1  a2", 0);
    CHECK(b.strands == 3);
    REQUIRE(b.word.size() == 3);
    CHECK(b.word[1] == Letter{1, -1});
    CHECK(format_braid(b) == "a0 a1^-1 a2");

    const Braid empty = parse_braid("   ", 0);
    CHECK(empty.strands == 1);
    CHECK(empty.word.empty());

    CHECK(parse_braid("a3", 0).strands == 4);
    CHECK(parse_braid("a0", 5).strands == 5);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_braid("b0", 0), UsageError);
    CHECK_THROWS_AS(parse_braid("a", 0), UsageError);
    CHECK_THROWS_AS(parse_braid("a1^2", 0), UsageError);
    CHECK_THROWS_AS(parse_braid("a1^-", 0), UsageError);
    CHECK_THROWS_AS(parse_braid("a2", 2), UsageError);
}

TEST_CASE("group operations") {
    const Braid b = parse_braid("a0 a1^-1", 2);
    const Braid binv = inverse(b);
    CHECK(format_braid(binv) == "a1 a0^-1");
    CHECK(free_reduce(Braid{2, {{1, 1}, {0, 1}, {0, -1}, {1, -1}}}).word.empty());
    const Braid conj = conjugate(b, {{1, 1}});
    CHECK(format_braid(conj) == "a1^-1 a0 a1^-1 a1");
}

TEST_CASE("torus family") {
    const Braid b = torus_braid(3, 2);
    CHECK(b.strands == 3);
    CHECK(format_braid(b) == "a0 a1 a2 a0 a1 a2");
    CHECK(torus_braid(1, 4).word.size() == 4);
}

TEST_CASE("strand permutation") {
    // the axis letter holds its strand at position 1
    const auto id = permutation(parse_braid("a0", 1));
    CHECK(id[1] == 1);
    const auto p = permutation(torus_braid(3, 1));
    CHECK(p[1] == 3);
    CHECK(p[2] == 1);
    CHECK(p[3] == 2);
    const auto two = permutation(parse_braid("a1 a1", 2));
    CHECK(two[1] == 1);
    CHECK(two[2] == 2);
}

TEST_CASE("reflection") {
    const Braid a1 = reflect(Braid{3, {{1, 1}}});
    REQUIRE(a1.word.size() == 1);
    CHECK(a1.word[0] == Letter{2, 1});

    const Braid a0 = reflect(Braid{3, {{0, 1}}});
    const BraidWord want{{2, -1}, {1, -1}, {0, -1}, {1, -1}, {2, -1}};
    CHECK(a0.word == want);

    // involution on a mixed word
    const Braid w{3, {{0, 1}, {2, -1}, {1, 1}}};
    CHECK(free_reduce(reflect(reflect(w))) == free_reduce(w));
}

TEST_CASE("strand-doubling embeddings") {
    const Braid b{2, {{0, 1}, {1, -1}}};
    const Braid lo = eps_minus(b);
    CHECK(lo.strands == 3);
    CHECK(lo.word == b.word);

    const Braid hi = eps_plus(b);
    CHECK(hi.strands == 3);
    const BraidWord want{{1, 1}, {0, 1}, {1, 1}, {2, -1}};
    CHECK(hi.word == want);
}

TEST_CASE("stabilizations") {
    const Braid b{2, {{1, 1}}};
    const Braid sm = stabilize_minus(b, 1);
    CHECK(sm.strands == 3);
    CHECK(sm.word.back() == Letter{2, 1});
    const Braid sp = stabilize_plus(b, -1);
    CHECK(sp.strands == 3);
    CHECK(sp.word.back() == Letter{1, -1});
    CHECK(sp.word.front() == Letter{2, 1});
}
