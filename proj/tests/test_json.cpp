#include <cordal/errors.hpp>
#include <cordal/json_io.hpp>

#include <doctest.h>

using namespace cordal;

TEST_CASE("scalar and polynomial encodings") {
    const Scalar s = Scalar::unit(-2, 1, 0, -1) + Scalar::one();
    const Json js = scalar_to_json(s);
    REQUIRE(js.size() == 2);
    CHECK(js[0]["c"] == "1");
    CHECK(js[1]["c"] == "-2");
    CHECK(js[1]["l"] == 1);
    CHECK(js[1]["g"] == -1);

    const Context core{2, Variant::core};
    const Poly p = Poly::term(Scalar::mu(1), {{1, 2, 0}, {2, 1, -1}});
    const Json jp = poly_to_json(core, p);
    CHECK(jp["ctx"]["n"] == 2);
    CHECK(jp["ctx"]["variant"] == "core");
    REQUIRE(jp["terms"].size() == 1);
    CHECK(jp["terms"][0]["word"] == Json::array({{1, 2, 0}, {2, 1, -1}}));
}

TEST_CASE("serialization is byte-stable") {
    const RelationSet rs =
        windowed_relations_serial(parse_braid("a0 a0", 1), 0, 2);
    const std::string a = dump_json(relations_to_json(rs));
    const std::string b = dump_json(relations_to_json(rs));
    CHECK(a == b);
    CHECK(a.back() == '\n');
}

TEST_CASE("presentation documents round-trip") {
    const Presentation pres = finite_presentation(1, 3, 1);
    const Json doc = presentation_to_json(pres, 1, 3);
    const Presentation back = presentation_from_json(doc);
    CHECK(back.strands == 1);
    CHECK(back.period == 3);
    CHECK(back.framing == pres.framing);
    CHECK(back.variables == pres.variables);
    CHECK(back.relations == pres.relations);
}

TEST_CASE("large coefficients survive the decimal encoding") {
    Presentation pres;
    pres.strands = 1;
    pres.period = 2;
    pres.variables = 1;
    VPoly vp;
    vp[{1}] = Scalar::unit(Int("123456789012345678901234567890"), 0, -3, 2);
    pres.relations.push_back(vp);
    const Presentation back =
        presentation_from_json(presentation_to_json(pres, 1, 2));
    CHECK(back.relations == pres.relations);
}

TEST_CASE("malformed presentation documents are rejected") {
    Json bad;
    bad["p"] = 1;
    bad["q"] = 2;
    // missing f/variables/relations
    CHECK_THROWS_AS(presentation_from_json(bad), UsageError);

    const Presentation pres = finite_presentation(1, 2, 0);
    Json doc = presentation_to_json(pres, 1, 2);
    doc["relations"][0]["terms"][0]["word"] = Json::array({7});
    CHECK_THROWS_AS(presentation_from_json(doc), UsageError);

    Json neg = presentation_to_json(pres, 1, 2);
    neg["variables"] = -1;
    CHECK_THROWS_AS(presentation_from_json(neg), UsageError);
}

TEST_CASE("text renderings") {
    CHECK(vpoly_to_text(VPoly{}) == "0");
    VPoly vp;
    vp[{1, 2}] = Scalar::mu(1);
    vp[{}] = Scalar::unit(-1);
    CHECK(vpoly_to_text(vp) == "(-1) + (m) v1 v2");
    CHECK(poly_to_text(Poly::generator({1, 2, -1})) == "(1) a[1,2]^-1");
}
