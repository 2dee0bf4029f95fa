#include <cordal/json_io.hpp>

#include <cordal/braid.hpp>
#include <cordal/errors.hpp>

#include <sstream>

namespace cordal {

namespace {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::core: return "core";
        case Variant::plus: return "plus";
        case Variant::minus: return "minus";
    }
    return "?";
}

Json vpoly_to_json(const VPoly& p) {
    Json terms = Json::array();
    for (const auto& [w, c] : p) {
        Json t;
        t["coeff"] = scalar_to_json(c);
        t["word"] = w;
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    Json arr = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json t;
        t["l"] = e.l;
        t["m"] = e.m;
        t["g"] = e.g;
        t["c"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

Json poly_to_json(const Context& ctx, const Poly& p) {
    Json j;
    j["ctx"] = {{"n", ctx.n}, {"variant", variant_name(ctx.v)}};
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms()) {
        Json t;
        t["coeff"] = scalar_to_json(c);
        Json word = Json::array();
        for (const Gen& g : w) word.push_back({g.i, g.j, g.x});
        t["word"] = std::move(word);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json relations_to_json(const RelationSet& rs) {
    Json j;
    j["braid"] = format_braid(rs.braid);
    j["strands"] = rs.braid.strands;
    j["framing"] = rs.framing;
    j["window"] = rs.window;
    const Context core{rs.braid.strands, Variant::core};
    Json rels = Json::array();
    for (const auto& [key, poly] : rs.items) {
        Json r;
        r["family"] = key.family;
        r["i"] = key.i;
        r["j"] = key.j;
        r["x"] = key.x;
        r["y"] = key.y;
        r["poly"] = poly_to_json(core, poly);
        rels.push_back(std::move(r));
    }
    j["relations"] = std::move(rels);
    return j;
}

Json presentation_to_json(const Presentation& pres, int p, int q) {
    Json j;
    j["p"] = p;
    j["q"] = q;
    j["f"] = pres.framing;
    j["variables"] = pres.variables;
    Json rels = Json::array();
    for (const VPoly& vp : pres.relations) rels.push_back(vpoly_to_json(vp));
    j["relations"] = std::move(rels);
    return j;
}

Presentation presentation_from_json(const Json& j) {
    try {
        Presentation pres;
        pres.strands = j.at("p").get<int>();
        pres.period = j.at("q").get<int>();
        pres.framing = j.at("f").get<int>();
        pres.variables = j.at("variables").get<int>();
        if (pres.strands < 1 || pres.period < 1 || pres.variables < 0)
            throw UsageError("presentation header out of range");
        for (const Json& rel : j.at("relations")) {
            VPoly vp;
            for (const Json& t : rel.at("terms")) {
                Scalar c;
                for (const Json& mono : t.at("coeff"))
                    c += Scalar::unit(Int(mono.at("c").get<std::string>()),
                                      mono.at("l").get<int>(),
                                      mono.at("m").get<int>(),
                                      mono.at("g").get<int>());
                VWord w;
                for (const Json& r : t.at("word")) {
                    const int v = r.get<int>();
                    if (v < 1 || v > pres.variables)
                        throw UsageError(
                            "presentation references an unknown variable");
                    w.push_back(v);
                }
                vp[w] += c;
                if (vp[w].is_zero()) vp.erase(w);
            }
            pres.relations.push_back(std::move(vp));
        }
        return pres;
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed presentation file: ") +
                         e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string scalar_to_text(const Scalar& s) { return s.str(); }

std::string poly_to_text(const Poly& p) { return p.str(); }

std::string vpoly_to_text(const VPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int r : w) os << " v" << r;
    }
    return os.str();
}

}  // namespace cordal
