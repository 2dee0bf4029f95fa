#include <cordal/errors.hpp>
#include <cordal/poly.hpp>

#include <doctest.h>

using namespace cordal;

namespace {
const Context kMinus2{2, Variant::minus};  // sentinel 3
const Context kPlus2{2, Variant::plus};    // sentinel 0
}  // namespace

TEST_CASE("contexts and index ranges") {
    const Context core{3, Variant::core};
    CHECK(core.lo() == 1);
    CHECK(core.hi() == 3);
    CHECK(kPlus2.lo() == 0);
    CHECK(kPlus2.hi() == 2);
    CHECK(kMinus2.lo() == 1);
    CHECK(kMinus2.hi() == 3);
    CHECK(kPlus2.sentinel() == 0);
    CHECK(kMinus2.sentinel() == 3);
    CHECK_THROWS_AS(core.sentinel(), InternalError);
}

TEST_CASE("trivial diagonal generators fold into the coefficient") {
    CHECK(Poly::generator({1, 1, 0}) ==
          Poly::scalar(Scalar::gamma_one_plus_mu()));
    // interior occurrences fold as well
    const Poly p = Poly::term(Scalar::one(),
                              {{1, 2, 1}, {2, 2, 0}, {2, 1, -1}});
    const Poly want = Poly::term(Scalar::gamma_one_plus_mu(),
                                 {{1, 2, 1}, {2, 1, -1}});
    CHECK(p == want);
    // nonzero exponent does not fold
    CHECK(Poly::generator({1, 1, 2}).terms().size() == 1);
    CHECK(Poly::generator({1, 1, 2}).terms().begin()->first.size() == 1);
}

TEST_CASE("term order is word length then lexicographic") {
    Poly p;
    p += Poly::term(Scalar::one(), {{2, 1, 0}, {1, 1, 1}});
    p += Poly::generator({2, 2, 5});
    p += Poly::generator({1, 2, -3});
    const auto& terms = p.terms();
    REQUIRE(terms.size() == 3);
    auto it = terms.begin();
    CHECK(it->first == Word{{1, 2, -3}});
    ++it;
    CHECK(it->first == Word{{2, 2, 5}});
    ++it;
    CHECK(it->first.size() == 2);
}

TEST_CASE("products concatenate words without commuting") {
    const Poly a = Poly::generator({1, 2, 1});
    const Poly b = Poly::generator({2, 1, 0});
    CHECK(!(a * b == b * a));
    CHECK((a * b).terms().begin()->first == Word{{1, 2, 1}, {2, 1, 0}});
    CHECK(a * Poly::scalar(Scalar::mu(1)) == a.scaled(Scalar::mu(1)));
    CHECK((a - a).terms().empty());
}

TEST_CASE("connect splices matching sentinel generators") {
    // a_{1,3}^2 * a_{3,1}^{-1} -> a_{1,1}^{1} in the minus algebra
    const Poly left = Poly::generator({1, 3, 2});
    const Poly right = Poly::generator({3, 1, -1});
    CHECK(connect(kMinus2, left, right) == Poly::generator({1, 1, 1}));

    // interior factors ride along on both sides
    const Poly wl = Poly::term(Scalar::mu(1), {{1, 2, 1}, {2, 3, 0}});
    const Poly wr = Poly::term(Scalar::lambda(1), {{3, 1, 2}, {1, 2, -1}});
    const Poly got = connect(kMinus2, wl, wr);
    const Poly want = Poly::term(Scalar::unit(1, 1, 1, 0),
                                 {{1, 2, 1}, {2, 1, 2}, {1, 2, -1}});
    CHECK(got == want);

    // plus algebra splices through sentinel 0
    CHECK(connect(kPlus2, Poly::generator({2, 0, 1}),
                  Poly::generator({0, 2, 1})) == Poly::generator({2, 2, 2}));

    // the spliced a_ii^0 collapses to (1+mu)Gamma
    CHECK(connect(kMinus2, Poly::generator({1, 3, 0}),
                  Poly::generator({3, 1, 0})) ==
          Poly::scalar(Scalar::gamma_one_plus_mu()));
}

TEST_CASE("connect is additive in both slots") {
    const Poly l1 = Poly::generator({1, 3, 1});
    const Poly l2 = Poly::term(Scalar::mu(-1), {{2, 2, 1}, {2, 3, 0}});
    const Poly r = Poly::generator({3, 2, 2});
    CHECK(connect(kMinus2, l1 + l2, r) ==
          connect(kMinus2, l1, r) + connect(kMinus2, l2, r));
}

TEST_CASE("connect rejects malformed operands") {
    // left word must end in the sentinel column
    CHECK_THROWS_AS(connect(kMinus2, Poly::generator({1, 2, 0}),
                            Poly::generator({3, 1, 0})),
                    InternalError);
    // sentinel may not appear in the interior
    const Poly bad = Poly::term(Scalar::one(), {{1, 3, 0}, {3, 2, 1}, {2, 3, 0}});
    CHECK_THROWS_AS(connect(kMinus2, bad, Poly::generator({3, 1, 0})),
                    InternalError);
}

TEST_CASE("term budgets cap growth and restore on scope exit") {
    auto spread = [](int lo, int hi) {
        Poly p;
        for (int x = lo; x <= hi; ++x) p += Poly::generator({1, 2, x});
        return p;
    };
    CHECK(TermBudget::active() == 0);
    {
        TermBudget guard(4);
        CHECK(TermBudget::active() == 4);
        CHECK(spread(1, 4).size() == 4);
        CHECK_THROWS_AS(spread(1, 5), BudgetExceeded);
        // cancellation back under the cap is not a violation
        Poly p = spread(1, 4);
        p += -spread(1, 2);
        CHECK(p.size() == 2);
        {
            TermBudget inner(2);
            CHECK_THROWS_AS(spread(1, 3), BudgetExceeded);
        }
        CHECK(TermBudget::active() == 4);
    }
    CHECK(TermBudget::active() == 0);
    CHECK(spread(1, 50).size() == 50);
}
