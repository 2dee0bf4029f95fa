#include <cordal/errors.hpp>
#include <cordal/torus.hpp>

#include <doctest.h>

using namespace cordal;

namespace {

Scalar S(int c, int l, int m, int g) { return Scalar::unit(c, l, m, g); }

bool refuses(RefusalKind kind, void (*fn)()) {
    try {
        fn();
    } catch (const RefusalError& e) {
        return e.kind == kind;
    }
    return false;
}

}  // namespace

TEST_CASE("closure data for small torus braids") {
    const ClosureData one = detect_closure(torus_braid(1, 1));
    CHECK(one.n == 1);
    CHECK(one.period == 1);
    CHECK(one.mu_total == 1);
    CHECK(one.left[1] == OrbitStep{1, 1, 1});
    CHECK(one.right[1] == OrbitStep{1, 1, 1});

    const ClosureData tref = detect_closure(torus_braid(3, 2));
    CHECK(tref.period == 2);
    CHECK(tref.mu_total == 2);
    CHECK(tref.left[1] == OrbitStep{3, 0, 0});
    CHECK(tref.left[2] == OrbitStep{1, 1, 1});
    CHECK(tref.left[3] == OrbitStep{2, 1, 1});
    CHECK(tref.right[1] == OrbitStep{3, 0, 0});
}

TEST_CASE("closure detection refuses the degenerate cases") {
    // period 0: no finite generator window exists
    CHECK(refuses(RefusalKind::Unstable,
                  [] { detect_closure(Braid{1, {}}); }));
    CHECK(refuses(RefusalKind::Unstable,
                  [] { detect_closure(Braid{1, {{0, 1}, {0, -1}}}); }));
    // identity orbit on two strands is already not a knot
    CHECK(refuses(RefusalKind::NotKnot,
                  [] { detect_closure(Braid{2, {}}); }));
    CHECK(refuses(RefusalKind::NotKnot,
                  [] { detect_closure(torus_braid(2, 2)); }));
    // plain strand crossings leave multi-term sentinel images
    CHECK(refuses(RefusalKind::NotMonomial,
                  [] { detect_closure(Braid{2, {{1, 1}}}); }));
    CHECK(refuses(RefusalKind::NotMonomial,
                  [] { detect_closure(Braid{2, {{0, 1}}}); }));
}

TEST_CASE("orbit bookkeeping functions") {
    CHECK(g_h(0, 0, 3, 2) == std::pair<int, int>{0, 0});
    CHECK(g_h(0, 1, 3, 2) == std::pair<int, int>{0, 1});
    CHECK(g_h(0, 2, 3, 2) == std::pair<int, int>{1, 1});
    CHECK(g_h(1, 2, 3, 2) == std::pair<int, int>{1, 1});
    CHECK(g_h(0, 3, 1, 1) == std::pair<int, int>{3, 3});
}

TEST_CASE("closed-form rewrite fixture for the trefoil pattern") {
    // b_{1,0}^0 in beta(3,2) rewrites to lambda^{-1} mu^{-1} v_1
    const CoreImage img = rewrite_bgen(3, 2, 0, 1, 0, 0);
    CHECK(img.r == 1);
    CHECK(img.coeff == S(1, -1, -1, 0));
}

TEST_CASE("closed-form rewrite refuses shared factors") {
    CHECK_THROWS_AS(rewrite_bgen(2, 4, 0, 1, 0, 0), RefusalError);
    try {
        rewrite_bgen(2, 4, 0, 1, 0, 0);
    } catch (const RefusalError& e) {
        CHECK(e.kind == RefusalKind::NotKnot);
        CHECK(std::string(e.what()).find("no solution") != std::string::npos);
    }
}

TEST_CASE("detected and closed-form rewrites agree") {
    const ClosureData data = detect_closure(torus_braid(3, 2));
    for (int f : {-1, 0, 2})
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int x = -3; x <= 4; ++x) {
                    const CoreImage a = rewrite_to_core(data, f, {i, j, x});
                    const CoreImage b = rewrite_bgen(3, 2, f, i - 1, j - 1, x);
                    CHECK(a.r == b.r);
                    CHECK(a.coeff == b.coeff);
                }
}

TEST_CASE("rewriting folds the trivial symbol") {
    // v_0 = (1+mu)Gamma: any generator landing on r = 0 becomes a scalar
    const ClosureData data = detect_closure(torus_braid(1, 2));
    const Poly p = Poly::generator({1, 1, 2});  // exponent 2 reduces to r=0
    const VPoly vp = rewrite_poly(data, 0, p);
    REQUIRE(vp.size() == 1);
    CHECK(vp.begin()->first.empty());
    const Scalar per = S(1, 1, 2, 0);  // lambda mu^{2-f} at f=0
    CHECK(vp.begin()->second == per * Scalar::gamma_one_plus_mu());
}

TEST_CASE("unit-canonical form of v-polynomials") {
    VPoly p;
    p[{1}] = S(2, 2, -1, 0);
    p[{1, 1}] = S(-3, 3, 0, 1);
    const VPoly c = canonical_vpoly(p);
    REQUIRE(c.size() == 2);
    CHECK(c.at({1}) == S(2, 0, 0, 0));
    CHECK(c.at({1, 1}) == S(-3, 1, 1, 1));

    // sign anchors on the first term of the shortest word
    VPoly neg;
    neg[{2}] = S(-1, 0, 0, 0);
    neg[{1, 2}] = S(5, 1, 0, 0);
    const VPoly cn = canonical_vpoly(neg);
    CHECK(cn.at({2}) == S(1, 0, 0, 0));
    CHECK(cn.at({1, 2}) == S(-5, 1, 0, 0));

    CHECK(canonical_vpoly(VPoly{}).empty());
}

TEST_CASE("presentation sizes for the small torus family") {
    const Presentation p12 = finite_presentation(1, 2, 0);
    CHECK(p12.variables == 1);
    CHECK(p12.relations.size() == 5);

    const Presentation p13 = finite_presentation(1, 3, 0);
    CHECK(p13.variables == 2);
    CHECK(p13.relations.size() == 16);

    for (int p = 1; p <= 4; ++p) {
        const Presentation pp = finite_presentation(p, 1, 0);
        CHECK(pp.variables == 0);
        CHECK(pp.relations.size() == 1);
    }
}

TEST_CASE("braid and closed-form presentations coincide") {
    for (const auto& [p, q] : {std::pair{1, 2}, {1, 3}, {3, 2}}) {
        const Presentation a = braid_presentation(torus_braid(p, q), 1);
        const Presentation b = finite_presentation(p, q, 1);
        CHECK(a.variables == b.variables);
        CHECK(a.relations == b.relations);
    }
}

TEST_CASE("presentation argument validation") {
    CHECK_THROWS_AS(finite_presentation(0, 2, 0), UsageError);
    CHECK_THROWS_AS(finite_presentation(2, 0, 0), UsageError);
    CHECK_THROWS_AS(finite_presentation(2, 2, 0), RefusalError);
    CHECK_THROWS_AS(finite_presentation(4, 6, 0), RefusalError);
}
