#include <cordal/scalar.hpp>

#include <doctest.h>

using namespace cordal;

TEST_CASE("laurent arithmetic basics") {
    const Scalar mu = Scalar::mu(1);
    const Scalar one = Scalar::one();
    CHECK((one + mu) * (one - mu) == one - Scalar::mu(2));
    CHECK(Scalar::lambda(1) * Scalar::lambda(-1) == one);
    CHECK(Scalar::unit(2, 1, 0, -1) + Scalar::unit(-2, 1, 0, -1) ==
          Scalar());
    CHECK(Scalar::gamma_one_plus_mu() ==
          Scalar::gamma(1) + Scalar::unit(1, 0, 1, 1));
    CHECK((-(one + mu)) == Scalar::unit(-1) - mu);
}

TEST_CASE("unit recognition") {
    int s = 0;
    CHECK(Scalar::mu(-3).is_mu_power(s));
    CHECK(s == -3);
    CHECK(Scalar::one().is_mu_power(s));
    CHECK(s == 0);
    CHECK(!Scalar::unit(2, 0, 1, 0).is_mu_power(s));
    CHECK(!Scalar::lambda(1).is_mu_power(s));
    CHECK(!(Scalar::mu(1) + Scalar::mu(2)).is_mu_power(s));

    CHECK(Scalar::unit(-1, 2, -1, 3).is_ring_unit());
    CHECK(!Scalar::unit(2, 1, 0, 0).is_ring_unit());
    CHECK(!(Scalar::one() + Scalar::mu(1)).is_ring_unit());
    CHECK(!Scalar().is_ring_unit());
}

TEST_CASE("powers of units") {
    const Scalar u = Scalar::unit(-1, 1, -2, 0);
    CHECK(Scalar::pow(u, 0) == Scalar::one());
    CHECK(Scalar::pow(u, 3) == Scalar::unit(-1, 3, -6, 0));
    CHECK(Scalar::pow(u, -2) == Scalar::unit(1, -2, 4, 0));
    CHECK(Scalar::pow(Scalar::one() + Scalar::mu(1), 2) ==
          Scalar::one() + Scalar::mu(1) * Scalar::unit(2) + Scalar::mu(2));
}

TEST_CASE("rendering") {
    CHECK(Scalar().str() == "0");
    CHECK(Scalar::one().str() == "1");
    CHECK(Scalar::unit(-1).str() == "-1");
    CHECK(Scalar::unit(2, 1, -1, 2).str() == "2lm^-1g^2");
    CHECK((Scalar::one() - Scalar::unit(1, 1, -2, 0)).str() == "1 - lm^-2");
}

TEST_CASE("modular powers") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(3, -1, 5) == 2);
    CHECK(mod_pow(-1, 3, 5) == 4);
    CHECK(mod_pow(7, 0, 5) == 1);
}

TEST_CASE("specialization is a ring homomorphism on fixtures") {
    const Scalar a = Scalar::unit(3, 1, 0, -1) + Scalar::unit(-2, 0, 2, 0);
    const Scalar b = Scalar::one() + Scalar::unit(1, -1, 1, 1);
    const SpecParams sp{5, 2, 3, 4};
    REQUIRE(sp.valid());
    const auto ea = specialize(a, sp), eb = specialize(b, sp);
    CHECK(specialize(a * b, sp) == ea * eb % 5);
    CHECK(specialize(a + b, sp) == (ea + eb) % 5);
    CHECK(specialize(Scalar(), sp) == 0);
    CHECK(specialize(Scalar::one(), sp) == 1);
}

TEST_CASE("specialization parameter validation") {
    CHECK(SpecParams{2, 1, 1, 1}.valid());
    CHECK(SpecParams{4, 3, 1, 3}.valid());
    CHECK(!SpecParams{4, 2, 1, 1}.valid());  // 2 is not a unit mod 4
    CHECK(!SpecParams{1, 1, 1, 1}.valid());
    CHECK(!SpecParams{6, 1, 3, 1}.valid());
}
