#include <cordal/augment.hpp>
#include <cordal/errors.hpp>
#include <cordal/torus.hpp>

#include <doctest.h>

using namespace cordal;

namespace {

std::int64_t count_torus(int p, int q, int f, std::int64_t d, std::int64_t l0,
                         std::int64_t m0, std::int64_t g0) {
    return count_augmentations(finite_presentation(p, q, f), {d, l0, m0, g0});
}

}  // namespace

TEST_CASE("regression counts for small torus knots") {
    CHECK(count_torus(1, 2, 0, 3, 1, 1, 2) == 2);
    CHECK(count_torus(1, 3, 0, 3, 1, 1, 2) == 2);
    CHECK(count_torus(1, 2, 0, 5, 1, 1, 3) == 2);
    CHECK(count_torus(1, 3, 0, 5, 1, 1, 3) == 2);
    CHECK(count_torus(2, 1, 0, 3, 1, 1, 2) == 1);
    CHECK(count_torus(3, 1, 0, 3, 1, 1, 2) == 1);
    CHECK(count_torus(4, 1, 0, 3, 1, 1, 2) == 1);
    CHECK(count_torus(3, 2, 0, 3, 1, 1, 2) == 2);
    CHECK(count_torus(3, 2, 0, 5, 1, 1, 3) == 2);
    CHECK(count_torus(2, 3, 0, 3, 1, 1, 2) == 2);
    CHECK(count_torus(2, 3, 0, 5, 1, 1, 3) == 2);
    CHECK(count_torus(3, 4, 0, 3, 1, 1, 2) == 4);
}

TEST_CASE("the constant assignment augments every torus presentation") {
    for (const auto& [p, q] : {std::pair{1, 2}, {1, 4}, {3, 2}, {2, 3}}) {
        const Presentation pres = finite_presentation(p, q, 0);
        CHECK(constant_augmentation_check(pres, 3, 1));
        CHECK(constant_augmentation_check(pres, 5, 2));
        CHECK(count_augmentations(pres, {5, 1, 1, 2}) >= 1);
    }
}

TEST_CASE("parallel and serial counters agree") {
    const Presentation pres = finite_presentation(1, 4, 0);
    for (const SpecParams spec :
         {SpecParams{3, 1, 1, 2}, {5, 2, 3, 4}, {4, 3, 1, 3}}) {
        const auto want = count_augmentations_serial(pres, spec);
        CHECK(count_augmentations(pres, spec, 1) == want);
        CHECK(count_augmentations(pres, spec, 4) == want);
        CHECK(count_augmentations(pres, spec, 0) == want);
    }
}

TEST_CASE("oversized searches are refused up front") {
    Presentation wide;
    wide.variables = 30;
    try {
        count_augmentations(wide, {2, 1, 1, 1});
        FAIL("expected a refusal");
    } catch (const RefusalError& e) {
        CHECK(e.kind == RefusalKind::SearchTooLarge);
    }
    // a custom cap tightens the bound
    CHECK_THROWS_AS(count_augmentations(finite_presentation(1, 3, 0),
                                        {5, 1, 1, 2}, 1, 20),
                    RefusalError);
}

TEST_CASE("non-unit evaluation points are rejected") {
    const Presentation pres = finite_presentation(1, 2, 0);
    CHECK_THROWS_AS(count_augmentations(pres, {4, 2, 1, 1}), UsageError);
    CHECK_THROWS_AS(count_augmentations(pres, {1, 1, 1, 1}), UsageError);
}

TEST_CASE("a presentation with no variables counts its truth value") {
    const Presentation p21 = finite_presentation(2, 1, 0);
    REQUIRE(p21.variables == 0);
    // mu = 1 satisfies the single scalar relation, mu = 2 mod 5 does not
    CHECK(count_augmentations(p21, {5, 1, 1, 1}) == 1);
    CHECK(count_augmentations(p21, {5, 1, 2, 1}) == 0);
}
