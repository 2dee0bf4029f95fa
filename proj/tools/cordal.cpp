// cordal: relation export, finite presentations, augmentation counts,
// self-checks, and the independent-oracle diff for the framed invariant.
#include <cordal/action.hpp>
#include <cordal/augment.hpp>
#include <cordal/braid.hpp>
#include <cordal/checks.hpp>
#include <cordal/errors.hpp>
#include <cordal/json_io.hpp>
#include <cordal/oracle.hpp>
#include <cordal/relations.hpp>
#include <cordal/torus.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace cordal;

struct CommonFlags {
    std::string format = "text";
    std::string out_path;
    int jobs = 0;  // 0 = library default (all logical cores)
};

void add_common(CLI::App* cmd, CommonFlags& fl, bool with_jobs) {
    cmd->add_option("--format", fl.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", fl.out_path, "write output to FILE instead of stdout");
    if (with_jobs)
        cmd->add_option("--jobs", fl.jobs,
                        "worker threads (default: CORDAL_JOBS or all cores)");
}

int resolve_jobs(const CommonFlags& fl) {
    if (fl.jobs > 0) return fl.jobs;
    if (const char* env = std::getenv("CORDAL_JOBS")) {
        try {
            const int j = std::stoi(env);
            if (j > 0) return j;
        } catch (const std::exception&) {
            throw UsageError("CORDAL_JOBS is not a positive integer");
        }
    }
    return 0;
}

void emit(const CommonFlags& fl, const std::string& payload) {
    if (fl.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(fl.out_path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file " + fl.out_path);
    os << payload;
}

std::pair<int, int> parse_torus(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("--torus expects p,q");
    try {
        std::size_t used = 0;
        const int p = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw UsageError("--torus expects p,q");
        const std::string rest = text.substr(comma + 1);
        const int q = std::stoi(rest, &used);
        if (used != rest.size()) throw UsageError("--torus expects p,q");
        return {p, q};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("--torus expects p,q");
    }
}

void warn_if_not_knot(const Braid& b) {
    const auto perm = permutation(b);
    int seen = 0, at = 1;
    do {
        ++seen;
        at = perm[static_cast<std::size_t>(at)];
    } while (at != 1 && seen <= b.strands);
    if (seen != b.strands)
        std::cerr << "warning: the braid closure is a link with more than "
                     "one component; the relation set is still emitted\n";
}

std::string relations_text(const RelationSet& rs) {
    std::ostringstream os;
    os << "braid: " << format_braid(rs.braid) << "\n"
       << "strands: " << rs.braid.strands << "\n"
       << "framing: " << rs.framing << "\n"
       << "window: " << rs.window << "\n";
    for (const auto& [key, poly] : rs.items)
        os << "fam" << key.family << " i=" << key.i << " j=" << key.j
           << " x=" << key.x << " y=" << key.y << ": " << poly_to_text(poly)
           << "\n";
    return os.str();
}

std::string presentation_text(const Presentation& pres, int p, int q) {
    std::ostringstream os;
    os << "torus: " << p << "," << q << "\n"
       << "framing: " << pres.framing << "\n"
       << "variables: " << pres.variables << " (v1 .. v"
       << pres.variables << ")\n"
       << "relations: " << pres.relations.size() << "\n";
    for (const VPoly& vp : pres.relations) os << vpoly_to_text(vp) << "\n";
    return os.str();
}

int run_relations(const std::string& braid_text, int strands, int framing,
                  int window, const CommonFlags& fl) {
    if (window < 0) throw UsageError("--window must be >= 0");
    const Braid b = parse_braid(braid_text, strands);
    warn_if_not_knot(b);
    const RelationSet rs =
        windowed_relations(b, framing, window, resolve_jobs(fl));
    emit(fl, fl.format == "json" ? dump_json(relations_to_json(rs))
                                 : relations_text(rs));
    return 0;
}

int run_presentation(const std::string& torus, int framing,
                     const CommonFlags& fl) {
    const auto [p, q] = parse_torus(torus);
    const Presentation pres = finite_presentation(p, q, framing);
    emit(fl, fl.format == "json" ? dump_json(presentation_to_json(pres, p, q))
                                 : presentation_text(pres, p, q));
    return 0;
}

int run_aug(const std::string& torus, const std::string& braid_text,
            int strands, const std::string& pres_path, int framing,
            std::int64_t mod, std::int64_t l0, std::int64_t m0,
            std::int64_t g0, const CommonFlags& fl) {
    const int sources = (torus.empty() ? 0 : 1) + (braid_text.empty() ? 0 : 1) +
                        (pres_path.empty() ? 0 : 1);
    if (sources != 1)
        throw UsageError(
            "aug needs exactly one of --torus, --braid, --presentation");
    Presentation pres;
    if (!torus.empty()) {
        const auto [p, q] = parse_torus(torus);
        pres = finite_presentation(p, q, framing);
    } else if (!braid_text.empty()) {
        pres = braid_presentation(parse_braid(braid_text, strands), framing);
    } else {
        std::ifstream is(pres_path, std::ios::binary);
        if (!is) throw UsageError("cannot open presentation file " + pres_path);
        Json doc;
        try {
            is >> doc;
        } catch (const Json::exception& e) {
            throw UsageError(std::string("presentation file is not JSON: ") +
                             e.what());
        }
        pres = presentation_from_json(doc);
    }
    const SpecParams spec{mod, l0, m0, g0};
    if (!spec.valid())
        throw UsageError(
            "--mod must be >= 2 and lambda/mu/gamma must be units mod d");
    const std::int64_t count =
        count_augmentations(pres, spec, resolve_jobs(fl));
    emit(fl, std::to_string(count) + "\n");
    return 0;
}

int run_check(const std::string& suite, unsigned seed, int trials,
              const CommonFlags& fl) {
    if (trials < 1) throw UsageError("--trials must be >= 1");
    const auto results = run_check_suite(suite, seed, trials);
    bool all_ok = true;
    if (fl.format == "json") {
        Json arr = Json::array();
        for (const CheckResult& r : results) {
            Json j;
            j["name"] = r.name;
            j["passed"] = r.passed;
            j["detail"] = r.detail;
            arr.push_back(std::move(j));
            all_ok = all_ok && r.passed;
        }
        emit(fl, dump_json(arr));
    } else {
        std::ostringstream os;
        for (const CheckResult& r : results) {
            os << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.passed) os << " [" << r.detail << "]";
            os << "\n";
            all_ok = all_ok && r.passed;
        }
        os << (all_ok ? "all checks passed" : "CHECK FAILURES") << " ("
           << results.size() << " checks)\n";
        emit(fl, os.str());
    }
    if (!all_ok) {
        std::cerr << "E3: check suite reported failures\n";
        return 3;
    }
    return 0;
}

int run_oracle_diff(const std::string& braid_text, int strands, int window,
                    const CommonFlags& fl) {
    if (window < 0) throw UsageError("--window must be >= 0");
    const Braid b = parse_braid(braid_text, strands);
    Json mismatches = Json::array();
    std::ostringstream text;
    for (Variant v : {Variant::core, Variant::plus, Variant::minus}) {
        const Context ctx{b.strands, v};
        for (int i = ctx.lo(); i <= ctx.hi(); ++i)
            for (int j = ctx.lo(); j <= ctx.hi(); ++j)
                for (int x = -window; x <= window; ++x) {
                    const Poly engine =
                        phi_word(ctx, b.word, Poly::generator({i, j, x}));
                    const Poly witness =
                        oracle::oracle_phi(ctx, b.word, {i, j, x});
                    if (engine == witness) continue;
                    Json m;
                    m["variant"] = (v == Variant::core)   ? "core"
                                   : (v == Variant::plus) ? "plus"
                                                          : "minus";
                    m["i"] = i;
                    m["j"] = j;
                    m["x"] = x;
                    m["engine"] = poly_to_json(ctx, engine);
                    m["oracle"] = poly_to_json(ctx, witness);
                    mismatches.push_back(std::move(m));
                    text << "mismatch variant=" << m["variant"].get<std::string>()
                         << " i=" << i << " j=" << j << " x=" << x
                         << "\n  engine: " << poly_to_text(engine)
                         << "\n  oracle: " << poly_to_text(witness) << "\n";
                }
    }
    emit(fl, fl.format == "json" ? dump_json(mismatches) : text.str());
    if (!mismatches.empty()) {
        std::cerr << "E3: the oracle disagrees with the action on "
                  << mismatches.size() << " generators\n";
        return 3;
    }
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{
        "cordal: the framed cord invariant of braid closures in the solid "
        "torus"};
    app.require_subcommand(1);

    // relations
    auto* rel = app.add_subcommand(
        "relations", "emit the windowed defining relations of a braid");
    std::string rel_braid;
    int rel_strands = 0, rel_framing = 0, rel_window = 3;
    CommonFlags rel_fl;
    rel->add_option("--braid", rel_braid, "braid word, e.g. \"a0 a1^-1\"")
        ->required();
    rel->add_option("--strands", rel_strands,
                    "strand count (default: max index + 1)");
    rel->add_option("--framing", rel_framing, "framing integer f")
        ->capture_default_str();
    rel->add_option("--window", rel_window, "exponent window |x|,|y| <= X")
        ->capture_default_str();
    add_common(rel, rel_fl, true);

    // presentation
    auto* pre = app.add_subcommand(
        "presentation", "finite presentation for a torus braid closure");
    std::string pre_torus;
    int pre_framing = 0;
    CommonFlags pre_fl;
    pre->add_option("--torus", pre_torus, "torus parameters p,q")->required();
    pre->add_option("--framing", pre_framing, "framing integer f")
        ->capture_default_str();
    add_common(pre, pre_fl, false);

    // aug
    auto* aug = app.add_subcommand(
        "aug", "count augmentations of a presentation into Z_d");
    std::string aug_torus, aug_braid, aug_pres;
    int aug_strands = 0, aug_framing = 0;
    std::int64_t aug_mod = 0, aug_l = 1, aug_m = 1, aug_g = 1;
    CommonFlags aug_fl;
    aug->add_option("--torus", aug_torus, "torus parameters p,q");
    aug->add_option("--braid", aug_braid, "braid word (closure must be a knot)");
    aug->add_option("--strands", aug_strands,
                    "strand count (default: max index + 1)");
    aug->add_option("--presentation", aug_pres,
                    "JSON presentation file (as emitted by `presentation`)");
    aug->add_option("--framing", aug_framing, "framing integer f")
        ->capture_default_str();
    aug->add_option("--mod", aug_mod, "coefficient modulus d")->required();
    aug->add_option("--lambda", aug_l, "value of lambda mod d")
        ->capture_default_str();
    aug->add_option("--mu", aug_m, "value of mu mod d")->capture_default_str();
    aug->add_option("--gamma", aug_g, "value of Gamma mod d")
        ->capture_default_str();
    add_common(aug, aug_fl, true);

    // check
    auto* chk = app.add_subcommand("check", "run the self-check suites");
    std::string chk_suite = "all";
    unsigned chk_seed = 20260817;
    int chk_trials = 200;
    CommonFlags chk_fl;
    chk->add_option("--suite", chk_suite, "suite name or \"all\"")
        ->check(CLI::IsMember(check_suite_names()))
        ->capture_default_str();
    chk->add_option("--seed", chk_seed, "seed for the randomized checks")
        ->capture_default_str();
    chk->add_option("--trials", chk_trials, "randomized trial count")
        ->capture_default_str();
    add_common(chk, chk_fl, false);

    // oracle-diff
    auto* odf = app.add_subcommand(
        "oracle-diff",
        "compare the braid action against the loop-collapse oracle");
    std::string odf_braid;
    int odf_strands = 0, odf_window = 2;
    CommonFlags odf_fl;
    odf->add_option("--braid", odf_braid, "braid word")->required();
    odf->add_option("--strands", odf_strands,
                    "strand count (default: max index + 1)");
    odf->add_option("--window", odf_window, "generator exponent window")
        ->capture_default_str();
    add_common(odf, odf_fl, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "E1: " << e.what() << "\n";
        return 1;
    }

    if (rel->parsed())
        return run_relations(rel_braid, rel_strands, rel_framing, rel_window,
                             rel_fl);
    if (pre->parsed()) return run_presentation(pre_torus, pre_framing, pre_fl);
    if (aug->parsed())
        return run_aug(aug_torus, aug_braid, aug_strands, aug_pres,
                       aug_framing, aug_mod, aug_l, aug_m, aug_g, aug_fl);
    if (chk->parsed()) return run_check(chk_suite, chk_seed, chk_trials, chk_fl);
    if (odf->parsed())
        return run_oracle_diff(odf_braid, odf_strands, odf_window, odf_fl);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const cordal::UsageError& e) {
        std::cerr << "E1: " << e.what() << "\n";
        return 1;
    } catch (const cordal::RefusalError& e) {
        std::cerr << "E2:" << e.what() << "\n";
        return 2;
    } catch (const cordal::InternalError& e) {
        std::cerr << "E3: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "E3: " << e.what() << "\n";
        return 3;
    }
}
