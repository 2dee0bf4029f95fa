// Exact Laurent scalars over Z in the three framing variables
// (lambda, mu, Gamma), plus specialization into Z_d.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cordal {

using Int = boost::multiprecision::cpp_int;

// Exponent triple of a unit monomial lambda^l mu^m Gamma^g.
struct Expo {
    int l = 0;
    int m = 0;
    int g = 0;
    auto operator<=>(const Expo&) const = default;
};

// A scalar of the coefficient ring: a finite Z-linear combination of
// monomials lambda^l mu^m Gamma^g, kept sorted with nonzero coefficients.
class Scalar {
  public:
    Scalar() = default;
    static Scalar unit(Int c, int l = 0, int m = 0, int g = 0);
    static Scalar one() { return unit(1); }
    static Scalar lambda(int e) { return unit(1, e, 0, 0); }
    static Scalar mu(int e) { return unit(1, 0, e, 0); }
    static Scalar gamma(int e) { return unit(1, 0, 0, e); }
    // (1 + mu) * Gamma, the value of any a_ii^0
    static Scalar gamma_one_plus_mu();

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<std::pair<Expo, Int>>& terms() const { return terms_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    bool operator==(const Scalar& o) const = default;

    // True when the scalar is a single monomial mu^s with coefficient 1;
    // stores s.
    bool is_mu_power(int& s) const;
    // True when the scalar is +-lambda^l mu^m Gamma^g (a unit of the ring).
    bool is_ring_unit() const;

    // integer power of a unit-like scalar (e >= 0 for non-units)
    static Scalar pow(const Scalar& base, long e);

    std::string str() const;

  private:
    // invariant: sorted by Expo, no zero coefficients
    std::vector<std::pair<Expo, Int>> terms_;
    void prune();
    friend struct ScalarBuilder;
};

// Specialization parameters: evaluate at lambda=l0, mu=m0, Gamma=g0 in Z_d.
// All three bases must be units mod d (required by negative exponents).
struct SpecParams {
    std::int64_t d = 2;
    std::int64_t l0 = 1;
    std::int64_t m0 = 1;
    std::int64_t g0 = 1;
    bool valid() const;
};

// b^e mod d, e may be negative (b must then be a unit mod d)
std::int64_t mod_pow(std::int64_t b, long e, std::int64_t d);

// Evaluate into Z_d; result in [0, d).
std::int64_t specialize(const Scalar& s, const SpecParams& p);

}  // namespace cordal
